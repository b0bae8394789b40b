#pragma once

#include "wsr/wsr2.hpp"

#include <optional>
#include <vector>

namespace wsr {

// Generators of the linear ideal J: Psi(a) = sum a_i x_i, Psi(b) = sum b_i x_i.
// Quotienting wSR(P, lambda) by J passes from equivariant to ordinary
// cohomology.
inline std::pair<LinearForm, LinearForm> ideal_J_generators(const CharacteristicPair& pair) {
    return {pair.a_coords(), pair.b_coords()};
}

struct CosetClass {
    LinearForm canonical_rep;
    // Representative supported on x_1..x_{m-2}; present only when the pair is
    // in standard position (lambda_{m-1} = (1,0), lambda_m = (0,1)).
    std::optional<LinearForm> chart_rep;

    // Classes agree iff the canonical representatives do: the canonical rep
    // is the unique reduced residue mod span{a, b}.
    bool operator==(const CosetClass& o) const {
        return canonical_rep == o.canonical_rep;
    }
};

// Residue of c modulo the ideal J, reduced against the 2-row HNF of
// span{a, b} by pivot division.  The chart form instead eliminates
// x_{m-1} and x_m outright via the two generators, which in standard
// position read sum a_k x_k + x_{m-1} and sum b_k x_k + x_m.
inline CosetClass reduce_mod_J(const CharacteristicPair& pair, const LinearForm& c) {
    std::size_t m = pair.size();
    if (c.size() != m)
        throw dimension_mismatch("form of length " + std::to_string(c.size()) +
                                 " against an m = " + std::to_string(m) + " pair");
    auto [af, bf] = ideal_J_generators(pair);
    IntMatrix h = Lattice::from_rows({af, bf}, m).basis();
    CosetClass out;
    out.canonical_rep = c;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t p = 0;
        while (p < m && h(i, p) == 0)
            ++p;
        BigInt q = floor_div(out.canonical_rep[p], h(i, p));
        if (q != 0)
            for (std::size_t j = p; j < m; ++j)
                out.canonical_rep[j] -= q * h(i, j);
    }
    if (in_standard_position(pair)) {
        LinearForm r(m, BigInt(0));
        for (std::size_t k = 0; k + 2 < m; ++k)
            r[k] = c[k] - c[m - 2] * pair.lambda(k + 1).a - c[m - 1] * pair.lambda(k + 1).b;
        out.chart_rep = r;
    }
    return out;
}

// The distinguished basis of reduced ordinary cohomology in standard
// position: degree-two chart representatives u_1..u_{m-2} plus the
// degree-four monomial x_{m-1} x_m.
struct CellularBasis {
    std::vector<LinearForm> u;  // u_i, supported on x_1..x_{m-2}
    std::vector<IntVec> xi;     // xi_i = e_i - (0,...,0,a_i,b_i), a basis of K
    SRPolynomial v;             // x_{m-1} x_m

    CellularBasis() : v(0) {}
};

inline CellularBasis cellular_basis(const CharacteristicPair& pair) {
    std::size_t m = pair.size();
    if (!in_standard_position(pair))
        throw not_in_standard_position(
            "cellular basis needs lambda_{m-1} = (1,0) and lambda_m = (0,1); "
            "normalize first");
    CellularBasis out;
    for (std::size_t i = 1; i + 2 <= m; ++i) {
        LinearForm ui(m, BigInt(0));
        const BigInt& ai = pair.lambda(i).a;
        const BigInt& bi = pair.lambda(i).b;
        for (std::size_t k = 1; k <= i; ++k)
            ui[k - 1] = pair.lambda(k).a * bi;
        for (std::size_t k = i + 1; k + 2 <= m; ++k)
            ui[k - 1] = ai * pair.lambda(k).b;
        out.u.push_back(ui);

        IntVec x(m, BigInt(0));
        x[i - 1] += 1;
        x[m - 2] -= ai;
        x[m - 1] -= bi;
        out.xi.push_back(x);
    }
    SRPolynomial::Exponents e(m, 0);
    e[m - 2] = 1;
    e[m - 1] = 1;
    out.v = SRPolynomial::monomial(m, e);

    // Structural guarantees of the construction; a failure here is a bug.
    auto [af, bf] = ideal_J_generators(pair);
    Lattice j = Lattice::from_rows({af, bf}, m);
    for (std::size_t i = 0; i < out.u.size(); ++i) {
        if (!j.contains(out.u[i] - phi(pair, out.xi[i])))
            throw internal_check_failure("u_" + std::to_string(i + 1) +
                                         " does not reduce to phi(xi) mod J");
        if (!integrality_check(pair, SRPolynomial::linear(out.u[i])).pass)
            throw internal_check_failure("u_" + std::to_string(i + 1) +
                                         " fails the integrality condition");
    }
    if (!integrality_check(pair, out.v).pass)
        throw internal_check_failure("x_{m-1} x_m fails the integrality condition");
    return out;
}

// Divisor-class data: Cartier divisors correspond to wSR^2, the Picard group
// to phi(K), and the class group to the cokernel of u -> (<u, lambda_i>)_i.
// The index [Cl : Pic] is the determinant of the degree-two basis.
struct PicardReport {
    std::vector<LinearForm> cartier_basis; // m vectors: a, b, phi(kappa_j)
    std::vector<LinearForm> picard_basis;  // the m-2 phi-images
    std::size_t class_free_rank;           // m - 2
    std::vector<BigInt> class_torsion;     // elementary divisors of Lambda > 1
    BigInt index;                          // |det[a b phi(kappa_1) ...]|
    bool hypothesis_satisfied;             // even-cohomology condition
};

inline PicardReport picard_report(const CharacteristicPair& pair) {
    std::size_t m = pair.size();
    Wsr2Basis basis = wsr2_basis(pair);
    PicardReport rep;
    rep.cartier_basis = basis.basis_vectors();
    rep.picard_basis = basis.phi_images;
    rep.class_free_rank = m - 2;
    rep.class_torsion = even_cohomology_check(pair).h3_invariants;
    rep.index = abs(IntMatrix::from_rows(rep.cartier_basis, m).determinant());
    rep.hypothesis_satisfied = basis.even_cohomology;
    return rep;
}

} // namespace wsr
