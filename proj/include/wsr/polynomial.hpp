#pragma once

#include "wsr/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace wsr {

// Polynomial in x_1..x_m with BigInt coefficients, stored as an exponent-map
// with no zero coefficients.  std::map keys give a canonical term order
// (lexicographic on exponent vectors), which serialization relies on.
class SRPolynomial {
  public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, BigInt>;

    explicit SRPolynomial(std::size_t nvars) : nvars_(nvars) {}

    static SRPolynomial linear(const IntVec& coeffs) {
        SRPolynomial p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        return p;
    }

    static SRPolynomial monomial(std::size_t nvars, const Exponents& exp,
                                 const BigInt& coeff = 1) {
        SRPolynomial p(nvars);
        p.add_term(exp, coeff);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& exp, const BigInt& coeff) {
        if (exp.size() != nvars_)
            throw dimension_mismatch("term has " + std::to_string(exp.size()) +
                                     " exponents, polynomial has " +
                                     std::to_string(nvars_) + " variables");
        if (coeff == 0)
            return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SRPolynomial operator+(const SRPolynomial& o) const {
        if (nvars_ != o.nvars_)
            throw dimension_mismatch("adding polynomials in different variable counts");
        SRPolynomial r = *this;
        for (const auto& [e, c] : o.terms_)
            r.add_term(e, c);
        return r;
    }

    SRPolynomial operator*(const SRPolynomial& o) const {
        if (nvars_ != o.nvars_)
            throw dimension_mismatch("multiplying polynomials in different variable counts");
        SRPolynomial r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i)
                    e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    bool operator==(const SRPolynomial&) const = default;

  private:
    std::size_t nvars_;
    TermMap terms_;
};

// Polynomial in the two chart coordinates u_1, u_2 with Fraction coefficients;
// the value type of vertex substitutions.
class RatPoly2 {
  public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;
    using TermMap = std::map<Key, Fraction>;

    RatPoly2() = default;

    static RatPoly2 constant(const Fraction& c) {
        RatPoly2 p;
        p.add_term({0, 0}, c);
        return p;
    }

    // c1*u_1 + c2*u_2
    static RatPoly2 linear(const Fraction& c1, const Fraction& c2) {
        RatPoly2 p;
        p.add_term({1, 0}, c1);
        p.add_term({0, 1}, c2);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Key& k, const Fraction& c) {
        if (c == 0)
            return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    RatPoly2 operator+(const RatPoly2& o) const {
        RatPoly2 r = *this;
        for (const auto& [k, c] : o.terms_)
            r.add_term(k, c);
        return r;
    }

    RatPoly2 operator*(const RatPoly2& o) const {
        RatPoly2 r;
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_)
                r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
        return r;
    }

    RatPoly2 pow(std::uint32_t e) const {
        RatPoly2 r = constant(1);
        for (std::uint32_t i = 0; i < e; ++i)
            r = r * (*this);
        return r;
    }

    bool is_integral() const {
        for (const auto& [k, c] : terms_)
            if (denominator(c) != 1)
                return false;
        return true;
    }

    // First (in term order) coefficient with a nontrivial denominator.
    std::optional<std::pair<Key, Fraction>> first_non_integral() const {
        for (const auto& [k, c] : terms_)
            if (denominator(c) != 1)
                return std::make_pair(k, c);
        return std::nullopt;
    }

    bool operator==(const RatPoly2&) const = default;

  private:
    TermMap terms_;
};

inline std::string to_string(const Fraction& f) {
    if (denominator(f) == 1)
        return numerator(f).str();
    return numerator(f).str() + "/" + denominator(f).str();
}

} // namespace wsr
