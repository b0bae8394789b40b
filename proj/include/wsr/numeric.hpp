#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace wsr {

// All lattice arithmetic is exact: BigInt is an arbitrary-precision integer,
// Fraction an always-reduced rational with positive denominator.  Expression
// templates are disabled so that abs(x), x + y etc. are plain values.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Fraction =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct index_out_of_range : error {
    using error::error;
};

struct degenerate_matrix : error {
    using error::error;
};

struct not_full_rank : error {
    using error::error;
};

struct generation_failed : error {
    using error::error;
};

struct no_smooth_vertex : error {
    using error::error;
};

struct not_in_standard_position : error {
    using error::error;
};

// Raised when a structural identity the library relies on fails to hold for
// a concrete input; indicates a bug, not bad user data.
struct internal_check_failure : error {
    using error::error;
};

struct XgcdResult {
    BigInt g; // gcd(a, b) >= 0
    BigInt s; // g == s*a + t*b
    BigInt t;
};

inline XgcdResult xgcd(BigInt a, BigInt b) {
    BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        BigInt q = a / b; // truncated division is fine here
        BigInt r = a - q * b;
        a = b;
        b = r;
        BigInt s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        BigInt t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

// Floor division (rounds towards -inf), b != 0.  Used to reduce entries into
// the half-open interval [0, pivot) during normal-form computations.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// boost's two-argument rational constructor rejects negative denominators
// instead of normalizing, so route every num/den construction through here.
inline Fraction make_fraction(BigInt num, BigInt den) {
    if (den == 0)
        throw error("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Fraction(num, den);
}

inline std::string to_decimal(const BigInt& v) {
    return v.str();
}

inline BigInt bigint_from_decimal(const std::string& s) {
    if (s.empty())
        throw error("empty string is not an integer");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size())
        throw error("'" + s + "' is not an integer");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw error("'" + s + "' is not an integer");
    return BigInt(s);
}

namespace detail {

// std::uniform_int_distribution is implementation-defined; this rejection
// sampler gives the same stream on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    std::uint64_t r;
    do {
        r = rng();
    } while (r < threshold);
    return r % n;
}

inline long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(
                    uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

} // namespace detail

} // namespace wsr
