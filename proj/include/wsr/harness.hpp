#pragma once

#include "wsr/applications.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace wsr {

struct PropertyIssue {
    std::string property; // short identifier of the violated invariant
    std::string detail;
    bool operator==(const PropertyIssue&) const = default;
};

struct InvariantOptions {
    std::uint64_t seed = 0;            // drives the negative-sample draws
    std::size_t negative_samples = 10; // non-member vectors to cross-check
    bool check_cellular = true;        // include the standard-position block
};

namespace detail {

inline std::multiset<BigInt> abs_vertex_dets(const CharacteristicPair& pair) {
    std::multiset<BigInt> s;
    for (std::size_t i = 1; i <= pair.size(); ++i)
        s.insert(abs(pair.vertex_det(i)));
    return s;
}

inline std::string join_vec(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return s + ")";
}

} // namespace detail

// Every machine-checkable invariant of the library, evaluated on one pair.
// Returns one issue per violated property; empty means all hold.  Shared by
// the fuzz subcommand, the oracle harness, and the acceptance battery.
inline std::vector<PropertyIssue> check_pair_invariants(const CharacteristicPair& pair,
                                                        const InvariantOptions& opt = {}) {
    std::vector<PropertyIssue> issues;
    auto fail = [&](const std::string& prop, const std::string& detail) {
        issues.push_back({prop, detail});
    };
    std::size_t m = pair.size();

    // Normal-form witnesses on the characteristic matrix.
    IntMatrix cm = pair.char_matrix();
    SnfResult d = snf(cm);
    if (d.u * cm * d.v != d.s)
        fail("snf-identity", "U*Lambda*V != S");
    if (abs(d.u.determinant()) != 1 || abs(d.v.determinant()) != 1)
        fail("snf-unimodular", "witness determinant not +-1");
    IntVec diag = d.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        if (diag[i] < 0 || (diag[i] != 0 && diag[i + 1] % diag[i] != 0))
            fail("snf-divisibility", "diagonal chain broken");
    HnfResult hr = hnf_rows(cm);
    if (hr.u * cm != hr.h)
        fail("hnf-identity", "U*Lambda != H");

    // Even-cohomology equivalence: minor gcd 1 iff SNF diagonal is (1,1).
    TopologyReport topo = even_cohomology_check(pair);
    bool snf_unit = diag.size() == 2 && diag[0] == 1 && diag[1] == 1;
    if ((topo.minor_gcd == 1) != snf_unit)
        fail("minor-gcd-snf", "gcd " + topo.minor_gcd.str() + " vs diagonal (" +
                                  diag[0].str() + "," + diag[1].str() + ")");
    if (topo.even_cohomology != topo.h3_invariants.empty())
        fail("even-flag", "flag disagrees with torsion list");

    // Kernel of Lambda: rank m-2, genuinely annihilated, phi-injective with
    // vanishing first and last coordinates.
    IntMatrix k = relation_lattice_K(pair);
    if (k.rows() != m - 2)
        fail("kernel-rank", "rank " + std::to_string(k.rows()));
    for (std::size_t j = 0; j < k.rows(); ++j) {
        IntVec prod = cm.apply(k.row(j));
        if (!is_zero(prod))
            fail("kernel-annihilation", "Lambda*kappa != 0 at row " + std::to_string(j + 1));
    }
    Wsr2Basis basis = wsr2_basis(pair);
    for (std::size_t j = 0; j < basis.phi_images.size(); ++j) {
        const IntVec& w = basis.phi_images[j];
        if (w.front() != 0 || w.back() != 0)
            fail("phi-ends-zero", "phi(kappa_" + std::to_string(j + 1) + ") = " +
                                      detail::join_vec(w));
    }
    if (Lattice::from_rows(basis.phi_images, m).rank() != m - 2)
        fail("phi-injective", "phi images do not have rank m-2");

    // The headline equality: closed-form basis lattice vs generic fold.
    Lattice closed = basis.lattice();
    Lattice fold = intersection_oracle(pair);
    if (closed != fold)
        fail("closed-form-vs-intersection",
             "basis lattice " + to_string(closed.basis()) + " vs fold " +
                 to_string(fold.basis()));

    // Direct sum: the m basis vectors are independent, and the index is the
    // same through the determinant and the HNF pivot product.
    IntMatrix bm = IntMatrix::from_rows(basis.basis_vectors(), m);
    BigInt det = bm.determinant();
    if (det == 0)
        fail("basis-independent", "determinant vanished");
    bool full_rank = closed.rank() == m;
    if (full_rank) {
        BigInt pivot_product = 1;
        for (std::size_t i = 0; i < m; ++i)
            pivot_product *= closed.basis()(i, i);
        if (abs(det) != pivot_product || pivot_product != lattice_index(closed))
            fail("index-consistency", "|det| " + abs(det).str() + " vs pivots " +
                                          pivot_product.str());
        if (picard_report(pair).index != abs(det))
            fail("index-report", "report disagrees with determinant");
    } else {
        fail("basis-full-rank", "wsr2 lattice rank " + std::to_string(closed.rank()));
    }

    // Membership triangle on the basis vectors (all three checkers accept).
    for (const LinearForm& c : basis.basis_vectors()) {
        if (!closed.contains(c))
            fail("member-basis", detail::join_vec(c) + " not a lattice member");
        if (!wsr2_member(pair, c))
            fail("member-basis", detail::join_vec(c) + " rejected by vertex systems");
        if (!integrality_check(pair, SRPolynomial::linear(c)).pass)
            fail("member-basis", detail::join_vec(c) + " rejected by integrality");
    }

    // ... and on sampled non-members (all three reject, with a witness).
    if (full_rank && lattice_index(closed) > 1 && opt.negative_samples > 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed),
                          static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(m)};
        std::mt19937_64 rng(seq);
        std::size_t found = 0, budget = 200 * opt.negative_samples;
        while (found < opt.negative_samples && budget-- > 0) {
            IntVec c(m);
            for (auto& x : c)
                x = detail::uniform_int(rng, -40, 40);
            if (closed.contains(c))
                continue;
            ++found;
            if (wsr2_member(pair, c))
                fail("non-member-accepted", detail::join_vec(c) + " passed vertex systems");
            IntegralityResult r = integrality_check(pair, SRPolynomial::linear(c));
            if (r.pass)
                fail("non-member-accepted", detail::join_vec(c) + " passed integrality");
            else if (!r.witness)
                fail("witness-missing", detail::join_vec(c));
        }
        if (found < opt.negative_samples)
            fail("non-member-sampling", "could not draw enough non-members");
    }

    // Substituting the ideal generators must give exactly u_1 and u_2.
    for (std::size_t i = 1; i <= m; ++i) {
        RatPoly2 ua = substitute_at_vertex(pair, SRPolynomial::linear(basis.a_form), i);
        RatPoly2 ub = substitute_at_vertex(pair, SRPolynomial::linear(basis.b_form), i);
        if (ua != RatPoly2::linear(1, 0) || ub != RatPoly2::linear(0, 1))
            fail("substitution-sanity", "vertex " + std::to_string(i));
    }

    // Ring closure: sums and products of members stay members.
    {
        SRPolynomial f = SRPolynomial::linear(basis.a_form);
        SRPolynomial g = SRPolynomial::linear(basis.phi_images.empty()
                                                  ? basis.b_form
                                                  : basis.phi_images.front());
        if (!integrality_check(pair, f + g).pass || !integrality_check(pair, f * g).pass)
            fail("ring-closure", "sum or product of members failed");
    }

    // Smooth pairs degenerate to the full lattice.
    bool all_unimodular = true;
    for (std::size_t i = 1; i <= m; ++i)
        if (abs(pair.vertex_det(i)) != 1)
            all_unimodular = false;
    if (all_unimodular && closed != Lattice::full(m))
        fail("smooth-degeneration", "unimodular pair has a proper wsr2 lattice");

    // Coset reduction: idempotent, kills the ideal generators.
    for (const LinearForm& c : basis.basis_vectors()) {
        CosetClass red = reduce_mod_J(pair, c);
        if (reduce_mod_J(pair, red.canonical_rep).canonical_rep != red.canonical_rep)
            fail("reduce-idempotent", detail::join_vec(c));
    }
    if (!is_zero(reduce_mod_J(pair, basis.a_form).canonical_rep) ||
        !is_zero(reduce_mod_J(pair, basis.b_form).canonical_rep))
        fail("reduce-generators", "generator of J has nonzero residue");

    // Normalization block: transport to standard position and compare the
    // invariants that a coordinate change must preserve.
    if (opt.check_cellular) {
        try {
            SmoothNormalization norm = normalize_smooth(pair);
            if (abs(norm.g.determinant()) != 1)
                fail("normalize-unimodular", "det g = " + norm.g.determinant().str());
            if (!in_standard_position(norm.pair))
                fail("normalize-position", "result not in standard position");
            if (detail::abs_vertex_dets(norm.pair) != detail::abs_vertex_dets(pair))
                fail("normalize-dets", "vertex determinant multiset changed");
            TopologyReport t2 = even_cohomology_check(norm.pair);
            if (t2.even_cohomology != topo.even_cohomology ||
                t2.h3_invariants != topo.h3_invariants)
                fail("normalize-topology", "even/torsion changed under normalization");
            if (picard_report(norm.pair).index != picard_report(pair).index)
                fail("normalize-index", "index changed under normalization");

            CellularBasis cell = cellular_basis(norm.pair); // self-checking
            IntMatrix chart(cell.u.size(), m - 2);
            for (std::size_t i = 0; i < cell.u.size(); ++i)
                for (std::size_t j = 0; j + 2 < m; ++j)
                    chart(i, j) = cell.u[i][j];
            if (Lattice::from_matrix(chart).rank() != m - 2)
                fail("cellular-rank", "chart representatives are dependent");
            for (std::size_t i = 0; i < cell.u.size(); ++i) {
                CosetClass red = reduce_mod_J(norm.pair, phi(norm.pair, cell.xi[i]));
                if (!red.chart_rep || *red.chart_rep != cell.u[i])
                    fail("cellular-chart-rep",
                         "phi(xi_" + std::to_string(i + 1) + ") does not reduce to u");
            }
        } catch (const no_smooth_vertex&) {
            // nothing to normalize; the block is vacuous for this pair
        } catch (const internal_check_failure& e) {
            fail("cellular-identity", e.what());
        }
    }

    return issues;
}

// Deterministic instance stream for fuzzing: trial k uses m (or cycles 3..8
// when m = 0) and a per-trial seed derived from the base seed.
inline CharacteristicPair fuzz_pair(std::size_t trial, std::size_t m, long long bound,
                                    std::uint64_t seed) {
    std::size_t mm = m ? m : 3 + trial % 6;
    std::uint64_t trial_seed = seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1));
    return random_pair(mm, bound, trial_seed);
}

} // namespace wsr
