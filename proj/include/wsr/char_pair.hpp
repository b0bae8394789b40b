#pragma once

#include "wsr/lattice.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wsr {

struct CharVector {
    BigInt a;
    BigInt b;
    bool operator==(const CharVector&) const = default;
};

inline BigInt det2(const CharVector& u, const CharVector& v) {
    return u.a * v.b - v.a * u.b;
}

inline bool is_primitive(const CharVector& v) {
    return gcd(abs(v.a), abs(v.b)) == 1;
}

enum class ViolationKind {
    too_few_vectors,
    zero_vector,
    not_primitive,
    degenerate_vertex,
};

struct Violation {
    ViolationKind kind;
    std::size_t index; // 1-based position; 0 for whole-input violations
    bool operator==(const Violation&) const = default;
};

inline const char* kind_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::too_few_vectors:
        return "TooFewVectors";
    case ViolationKind::zero_vector:
        return "ZeroVector";
    case ViolationKind::not_primitive:
        return "NotPrimitive";
    case ViolationKind::degenerate_vertex:
        return "DegenerateVertex";
    }
    return "?";
}

inline std::string to_string(const Violation& v) {
    std::string s = kind_string(v.kind);
    if (v.index > 0)
        s += "(" + std::to_string(v.index) + ")";
    return s;
}

// An m-gon (m >= 3) whose edges carry primitive vectors lambda_i = (a_i, b_i)
// with det(lambda_i, lambda_{i+1}) != 0 cyclically.  Indices are 1-based and
// wrap: lambda_{m+1} = lambda_1.  Construction goes through validate(), so a
// live CharacteristicPair always satisfies the invariants.
class CharacteristicPair {
  public:
    std::size_t size() const { return lambdas_.size(); }

    // 1-based cyclic access: lambda(m + 1) == lambda(1).
    const CharVector& lambda(std::size_t i) const {
        if (i == 0)
            throw index_out_of_range("lambda indices are 1-based");
        return lambdas_[(i - 1) % lambdas_.size()];
    }

    // det(lambda_i, lambda_{i+1}), the vertex determinant at v_i.
    BigInt vertex_det(std::size_t i) const {
        return det2(lambda(i), lambda(i + 1));
    }

    IntVec a_coords() const {
        IntVec v(size());
        for (std::size_t i = 0; i < size(); ++i)
            v[i] = lambdas_[i].a;
        return v;
    }

    IntVec b_coords() const {
        IntVec v(size());
        for (std::size_t i = 0; i < size(); ++i)
            v[i] = lambdas_[i].b;
        return v;
    }

    // The 2 x m matrix [lambda_1 ... lambda_m].
    IntMatrix char_matrix() const {
        IntMatrix m(2, size());
        for (std::size_t i = 0; i < size(); ++i) {
            m(0, i) = lambdas_[i].a;
            m(1, i) = lambdas_[i].b;
        }
        return m;
    }

    const std::vector<CharVector>& lambdas() const { return lambdas_; }

    bool operator==(const CharacteristicPair&) const = default;

    struct Validation;
    static Validation validate(const std::vector<CharVector>& raw);

    // For code paths that produce already-valid data (unimodular transforms,
    // the generator).  Revalidates; the cost is negligible at these sizes.
    static CharacteristicPair unchecked(std::vector<CharVector> lambdas);

  private:
    explicit CharacteristicPair(std::vector<CharVector> l) : lambdas_(std::move(l)) {}
    std::vector<CharVector> lambdas_;
};

struct CharacteristicPair::Validation {
    std::optional<CharacteristicPair> pair; // engaged iff violations empty
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

inline CharacteristicPair::Validation
CharacteristicPair::validate(const std::vector<CharVector>& raw) {
    Validation result;
    std::size_t m = raw.size();
    if (m < 3)
        result.violations.push_back({ViolationKind::too_few_vectors, 0});
    for (std::size_t i = 0; i < m; ++i) {
        if (raw[i].a == 0 && raw[i].b == 0)
            result.violations.push_back({ViolationKind::zero_vector, i + 1});
        else if (!is_primitive(raw[i]))
            result.violations.push_back({ViolationKind::not_primitive, i + 1});
    }
    if (m >= 3) // vertex determinants only make sense on an actual polygon
        for (std::size_t i = 0; i < m; ++i)
            if (det2(raw[i], raw[(i + 1) % m]) == 0)
                result.violations.push_back({ViolationKind::degenerate_vertex, i + 1});
    if (result.violations.empty())
        result.pair = CharacteristicPair(raw);
    return result;
}

inline CharacteristicPair CharacteristicPair::unchecked(std::vector<CharVector> lambdas) {
    Validation v = validate(lambdas);
    if (!v.ok())
        throw internal_check_failure("constructed an invalid pair: " +
                                     to_string(v.violations.front()));
    return *std::move(v.pair);
}

struct TopologyReport {
    BigInt minor_gcd;             // gcd over i<j of |det(lambda_i, lambda_j)|
    std::vector<BigInt> h3_invariants; // elementary divisors of Lambda exceeding 1
    bool even_cohomology;         // minor_gcd == 1, equivalently h3 empty
};

// Cohomology is concentrated in even degrees exactly when the 2x2 minors of
// Lambda are globally coprime; the odd part that survives otherwise is the
// torsion of Z^2 / span{lambda_i}, read off the Smith normal form.
inline TopologyReport even_cohomology_check(const CharacteristicPair& pair) {
    TopologyReport rep;
    std::size_t m = pair.size();
    rep.minor_gcd = 0;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
            rep.minor_gcd = gcd(rep.minor_gcd, abs(det2(pair.lambda(i), pair.lambda(j))));
    for (const BigInt& d : snf(pair.char_matrix()).diagonal())
        if (d > 1)
            rep.h3_invariants.push_back(d);
    rep.even_cohomology = (rep.minor_gcd == 1);
    return rep;
}

struct VertexChart {
    std::size_t index; // 1..m
    IntMatrix A;       // 2x2, columns lambda_i, lambda_{i+1}
    BigInt det;
};

inline VertexChart vertex_chart(const CharacteristicPair& pair, std::size_t i) {
    if (i < 1 || i > pair.size())
        throw index_out_of_range("vertex index " + std::to_string(i) +
                                 " not in 1.." + std::to_string(pair.size()));
    const CharVector& u = pair.lambda(i);
    const CharVector& v = pair.lambda(i + 1);
    IntMatrix a(2, 2);
    a(0, 0) = u.a;
    a(0, 1) = v.a;
    a(1, 0) = u.b;
    a(1, 1) = v.b;
    return {i, a, det2(u, v)};
}

inline std::vector<VertexChart> vertex_charts(const CharacteristicPair& pair) {
    std::vector<VertexChart> out;
    out.reserve(pair.size());
    for (std::size_t i = 1; i <= pair.size(); ++i)
        out.push_back(vertex_chart(pair, i));
    return out;
}

struct SmoothNormalization {
    CharacteristicPair pair; // lambda'_{m-1} = (1,0), lambda'_m = (0,1)
    IntMatrix g;             // unimodular 2x2 applied to every vector
    std::size_t rotation;    // cyclic shift applied before g
};

// Rotate the first vertex with |det| = 1 into the last two slots and change
// torus coordinates so that it becomes the standard basis.  The rotation r
// sends lambda_k to slot k - r (cyclically), i.e. lambda'_k = lambda_{k+r}.
inline SmoothNormalization normalize_smooth(const CharacteristicPair& pair) {
    std::size_t m = pair.size();
    std::size_t smooth = 0;
    for (std::size_t i = 1; i <= m; ++i)
        if (abs(pair.vertex_det(i)) == 1) {
            smooth = i;
            break;
        }
    if (smooth == 0)
        throw no_smooth_vertex("every vertex determinant has |det| > 1");
    std::size_t rotation = (smooth + 1) % m;

    std::vector<CharVector> rotated(m);
    for (std::size_t k = 1; k <= m; ++k)
        rotated[k - 1] = pair.lambda(k + rotation);

    // g = B^{-1} for B = [lambda'_{m-1} lambda'_m]; integral since |det B| = 1
    const CharVector& p = rotated[m - 2];
    const CharVector& q = rotated[m - 1];
    BigInt d = det2(p, q);
    IntMatrix g(2, 2);
    g(0, 0) = q.b / d;
    g(0, 1) = -q.a / d;
    g(1, 0) = -p.b / d;
    g(1, 1) = p.a / d;

    std::vector<CharVector> mapped(m);
    for (std::size_t k = 0; k < m; ++k)
        mapped[k] = {g(0, 0) * rotated[k].a + g(0, 1) * rotated[k].b,
                     g(1, 0) * rotated[k].a + g(1, 1) * rotated[k].b};
    return {CharacteristicPair::unchecked(std::move(mapped)), g, rotation};
}

inline bool in_standard_position(const CharacteristicPair& pair) {
    std::size_t m = pair.size();
    return pair.lambda(m - 1) == CharVector{1, 0} && pair.lambda(m) == CharVector{0, 1};
}

// Deterministic generator of valid pairs: entries uniform in [-bound, bound],
// rejection-sampled per slot until primitive with nonzero neighbouring
// determinants.  Same (m, bound, seed) always yields the same pair.
inline CharacteristicPair random_pair(std::size_t m, long long bound, std::uint64_t seed) {
    if (m < 3)
        throw error("random_pair needs m >= 3");
    if (bound < 1)
        throw error("random_pair needs bound >= 1");
    constexpr int retry_cap = 10000;
    // seed_seq keeps only 32 bits per value: feed the 64-bit seed in halves
    std::seed_seq seq{static_cast<std::uint32_t>(m),
                      static_cast<std::uint32_t>(bound),
                      static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<CharVector> v;
    v.reserve(m);
    for (std::size_t slot = 0; slot < m; ++slot) {
        bool placed = false;
        for (int tries = 0; tries < retry_cap && !placed; ++tries) {
            CharVector c{BigInt(detail::uniform_int(rng, -bound, bound)),
                         BigInt(detail::uniform_int(rng, -bound, bound))};
            if (!is_primitive(c))
                continue;
            if (slot > 0 && det2(v[slot - 1], c) == 0)
                continue;
            if (slot + 1 == m && det2(c, v[0]) == 0)
                continue;
            v.push_back(c);
            placed = true;
        }
        if (!placed)
            throw generation_failed("slot " + std::to_string(slot + 1) +
                                    " exhausted " + std::to_string(retry_cap) + " draws");
    }
    return CharacteristicPair::unchecked(std::move(v));
}

} // namespace wsr
