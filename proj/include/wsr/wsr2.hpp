#pragma once

#include "wsr/char_pair.hpp"
#include "wsr/polynomial.hpp"

#include <optional>
#include <set>
#include <vector>

namespace wsr {

// L_i: the row lattice of the m x m matrix that is the identity outside the
// vertex block, with rows (a_i, a_{i+1}) and (b_i, b_{i+1}) in columns
// i, i+1.  At i = m the block wraps around to the four matrix corners.
inline Lattice lattice_Li(const CharacteristicPair& pair, std::size_t i) {
    std::size_t m = pair.size();
    if (i < 1 || i > m)
        throw index_out_of_range("L_i index " + std::to_string(i) +
                                 " not in 1.." + std::to_string(m));
    const CharVector& u = pair.lambda(i);
    const CharVector& v = pair.lambda(i + 1);
    IntMatrix gen = IntMatrix::identity(m);
    if (i < m) {
        gen(i - 1, i - 1) = u.a;
        gen(i - 1, i) = v.a;
        gen(i, i - 1) = u.b;
        gen(i, i) = v.b;
    } else { // rows 1 and m carry the wrap-around block
        gen(0, m - 1) = u.a;
        gen(0, 0) = v.a;
        gen(m - 1, m - 1) = u.b;
        gen(m - 1, 0) = v.b;
    }
    return Lattice::from_matrix(gen);
}

// Saturated kernel K of Lambda = [lambda_1 ... lambda_m]; always rank m-2
// because some 2x2 minor is nonzero.
inline IntMatrix relation_lattice_K(const CharacteristicPair& pair) {
    return kernel_basis(pair.char_matrix());
}

// w = phi(t): w_1 = 0, w_i = sum_{j<i} det(lambda_j, lambda_i) t_j.
inline IntVec phi(const CharacteristicPair& pair, const IntVec& t) {
    std::size_t m = pair.size();
    if (t.size() != m)
        throw dimension_mismatch("phi input has length " + std::to_string(t.size()) +
                                 ", pair has m = " + std::to_string(m));
    IntVec w(m);
    for (std::size_t i = 2; i <= m; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 1; j < i; ++j)
            acc += det2(pair.lambda(j), pair.lambda(i)) * t[j - 1];
        w[i - 1] = acc;
    }
    return w;
}

// The degree-two basis {a, b, phi(kappa_1), ..., phi(kappa_{m-2})} of
// wSR^2(P, lambda), together with the kernel generators it came from.
// even_cohomology gates only the cohomological reading of the lattice.
struct Wsr2Basis {
    LinearForm a_form;
    LinearForm b_form;
    std::vector<IntVec> kernel;          // kappa_j, rows of relation_lattice_K
    std::vector<LinearForm> phi_images;  // phi(kappa_j)
    bool even_cohomology;

    std::vector<LinearForm> basis_vectors() const {
        std::vector<LinearForm> v;
        v.reserve(2 + phi_images.size());
        v.push_back(a_form);
        v.push_back(b_form);
        for (const auto& w : phi_images)
            v.push_back(w);
        return v;
    }

    Lattice lattice() const {
        return Lattice::from_rows(basis_vectors(), a_form.size());
    }
};

inline Wsr2Basis wsr2_basis(const CharacteristicPair& pair) {
    Wsr2Basis out;
    out.a_form = pair.a_coords();
    out.b_form = pair.b_coords();
    IntMatrix k = relation_lattice_K(pair);
    for (std::size_t j = 0; j < k.rows(); ++j) {
        out.kernel.push_back(k.row(j));
        out.phi_images.push_back(phi(pair, k.row(j)));
    }
    out.even_cohomology = even_cohomology_check(pair).even_cohomology;
    return out;
}

// Brute-force counterpart of wsr2_basis: fold the pairwise lattice
// intersection over L_1..L_m.  Kept free of phi and the kernel machinery so
// the two can check each other.
inline Lattice intersection_oracle(const CharacteristicPair& pair) {
    Lattice acc = lattice_Li(pair, 1);
    for (std::size_t i = 2; i <= pair.size(); ++i)
        acc = lattice_intersect(acc, lattice_Li(pair, i));
    return acc;
}

// Chart coordinates at vertex i: z_j = 0 for j outside {i, i+1}, and
// (z_i, z_{i+1}) = A_i^{-1} (u_1, u_2).
inline std::vector<RatPoly2> vertex_substitution(const CharacteristicPair& pair,
                                                 std::size_t i) {
    std::size_t m = pair.size();
    VertexChart chart = vertex_chart(pair, i); // validates i
    FracMat2 inv = invert_2x2(chart.A);
    std::vector<RatPoly2> z(m);
    std::size_t succ = i % m; // 0-based position of lambda_{i+1}
    z[i - 1] = RatPoly2::linear(inv[0][0], inv[0][1]);
    z[succ] = RatPoly2::linear(inv[1][0], inv[1][1]);
    return z;
}

struct IntegralityWitness {
    std::size_t vertex;       // first failing vertex, 1-based
    RatPoly2::Key monomial;   // (e_1, e_2) exponents of u_1, u_2
    Fraction coefficient;     // the offending non-integer coefficient
};

struct IntegralityResult {
    bool pass;
    std::optional<IntegralityWitness> witness;
};

inline RatPoly2 substitute_at_vertex(const CharacteristicPair& pair,
                                     const SRPolynomial& f, std::size_t i) {
    std::vector<RatPoly2> z = vertex_substitution(pair, i);
    RatPoly2 acc;
    for (const auto& [exp, coeff] : f.terms()) {
        RatPoly2 term = RatPoly2::constant(Fraction(coeff));
        bool vanishes = false;
        for (std::size_t j = 0; j < exp.size() && !vanishes; ++j) {
            if (exp[j] == 0)
                continue;
            if (z[j].is_zero())
                vanishes = true;
            else
                term = term * z[j].pow(exp[j]);
        }
        if (!vanishes)
            acc = acc + term;
    }
    return acc;
}

// Definition of membership in the weighted Stanley-Reisner ring: after
// substituting the chart coordinates, every vertex must yield a polynomial
// with integer coefficients.  Cancellation happens before the scan, so only
// genuinely surviving coefficients count.
inline IntegralityResult integrality_check(const CharacteristicPair& pair,
                                           const SRPolynomial& f) {
    if (f.nvars() != pair.size())
        throw dimension_mismatch("polynomial in " + std::to_string(f.nvars()) +
                                 " variables against an m = " +
                                 std::to_string(pair.size()) + " pair");
    for (std::size_t i = 1; i <= pair.size(); ++i) {
        RatPoly2 sub = substitute_at_vertex(pair, f, i);
        if (auto bad = sub.first_non_integral())
            return {false, IntegralityWitness{i, bad->first, bad->second}};
    }
    return {true, std::nullopt};
}

// Degree-two shortcut for the same membership question: c is in wSR^2 iff at
// every vertex the 2x2 system (c_i, c_{i+1}) = A_i^T (p, q) has an integer
// solution, i.e. the vertex determinant divides both Cramer numerators.
inline bool wsr2_member(const CharacteristicPair& pair, const LinearForm& c) {
    std::size_t m = pair.size();
    if (c.size() != m)
        throw dimension_mismatch("form of length " + std::to_string(c.size()) +
                                 " against an m = " + std::to_string(m) + " pair");
    for (std::size_t i = 1; i <= m; ++i) {
        const CharVector& u = pair.lambda(i);
        const CharVector& v = pair.lambda(i + 1);
        const BigInt& ci = c[i - 1];
        const BigInt& cn = c[i % m];
        BigInt d = det2(u, v);
        BigInt p_num = ci * v.b - u.b * cn;
        BigInt q_num = u.a * cn - ci * v.a;
        if (p_num % d != 0 || q_num % d != 0)
            return false;
    }
    return true;
}

// Faces of the boundary complex of an m-gon: the empty set, single edges,
// and adjacent edge pairs.  A monomial lies in the Stanley-Reisner ideal
// exactly when its support is not a face.
inline bool is_face(const CharacteristicPair& pair, const std::set<std::size_t>& s) {
    std::size_t m = pair.size();
    for (std::size_t i : s)
        if (i < 1 || i > m)
            throw index_out_of_range("edge index " + std::to_string(i) +
                                     " not in 1.." + std::to_string(m));
    if (s.size() <= 1)
        return true;
    if (s.size() > 2)
        return false;
    std::size_t lo = *s.begin(), hi = *std::next(s.begin());
    return hi == lo + 1 || (lo == 1 && hi == m);
}

} // namespace wsr
