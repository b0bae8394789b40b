#include "wsr/lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wsr;

namespace {

Lattice random_lattice(std::mt19937_64& rng, std::size_t n) {
    std::size_t r = 1 + detail::uniform_below(rng, n);
    IntMatrix m(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = detail::uniform_int(rng, -6, 6);
    return Lattice::from_matrix(m);
}

} // namespace

TEST_CASE("canonical basis makes equality a representation equality") {
    Lattice a = Lattice::from_rows({IntVec{2, 0}, IntVec{0, 1}, IntVec{2, 1}}, 2);
    Lattice b = Lattice::from_rows({IntVec{0, 1}, IntVec{2, 0}}, 2);
    CHECK(a == b);
    CHECK(a.rank() == 2);
    CHECK(Lattice::from_rows({IntVec{1, 1}, IntVec{2, 2}}, 2).rank() == 1);
    CHECK(Lattice::zero(3).rank() == 0);
    CHECK(Lattice::full(3).basis() == IntMatrix::identity(3));
}

TEST_CASE("membership by back-substitution") {
    Lattice k = Lattice::from_rows({IntVec{5, 4, 3, 0}, IntVec{7, 5, 5, -1}}, 4);
    CHECK(k.contains(IntVec{1, 2, -1, 2})); // 3*g1 - 2*g2
    CHECK_FALSE(k.contains(IntVec{1, 0, 0, 0}));
    CHECK(k.contains(IntVec{0, 0, 0, 0}));
    CHECK(k.contains(IntVec{5, 4, 3, 0}));
    CHECK_THROWS_AS(k.contains(IntVec{1, 2}), dimension_mismatch);
    CHECK(lattice_member(k, IntVec{7, 5, 5, -1}));

    // zero lattice contains only zero
    CHECK(Lattice::zero(2).contains(IntVec{0, 0}));
    CHECK_FALSE(Lattice::zero(2).contains(IntVec{0, 1}));
}

TEST_CASE("lattice index") {
    Lattice w = Lattice::from_rows({IntVec{-2, 1, 2, 1}, IntVec{1, -2, 1, 2},
                                    IntVec{0, 15, 0, 0}, IntVec{0, 21, -3, 0}},
                                   4);
    CHECK(lattice_index(w) == 225);
    CHECK(lattice_index(Lattice::full(5)) == 1);
    CHECK(lattice_index(Lattice::from_rows({IntVec{2, 0}, IntVec{0, 3}}, 2)) == 6);
    CHECK_THROWS_AS(lattice_index(Lattice::from_rows({IntVec{1, 1}}, 2)), not_full_rank);

    // index equals |det| of any generating square matrix
    IntMatrix gens{{-2, 1, 2, 1}, {1, -2, 1, 2}, {0, 15, 0, 0}, {0, 21, -3, 0}};
    CHECK(abs(gens.determinant()) == 225);
}

TEST_CASE("intersection agrees with brute-force membership") {
    Lattice l1 = Lattice::from_rows({IntVec{2, 0}, IntVec{0, 1}}, 2);
    Lattice l2 = Lattice::from_rows({IntVec{1, 0}, IntVec{0, 3}}, 2);
    Lattice meet = lattice_intersect(l1, l2);
    CHECK(meet == Lattice::from_rows({IntVec{2, 0}, IntVec{0, 3}}, 2));
    for (long long x = -6; x <= 6; ++x)
        for (long long y = -6; y <= 6; ++y) {
            IntVec v{x, y};
            CHECK(meet.contains(v) == (l1.contains(v) && l2.contains(v)));
        }

    Lattice three = Lattice::from_rows({IntVec{3, 0}, IntVec{0, 3}}, 2);
    Lattice five = Lattice::from_rows({IntVec{5, 0}, IntVec{0, 5}}, 2);
    Lattice fifteen = lattice_intersect(three, five);
    CHECK(fifteen == Lattice::from_rows({IntVec{15, 0}, IntVec{0, 15}}, 2));
    for (long long x = -30; x <= 30; ++x)
        for (long long y = -30; y <= 30; ++y) {
            IntVec v{x, y};
            CHECK(fifteen.contains(v) == (three.contains(v) && five.contains(v)));
        }
}

TEST_CASE("intersection algebra") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 80; ++t) {
        std::size_t n = 2 + t % 4;
        Lattice l1 = random_lattice(rng, n);
        Lattice l2 = random_lattice(rng, n);
        Lattice meet = lattice_intersect(l1, l2);
        CHECK(meet == lattice_intersect(l2, l1));
        CHECK(lattice_intersect(l1, l1) == l1);
        for (std::size_t i = 0; i < meet.rank(); ++i) {
            CHECK(l1.contains(meet.basis().row(i)));
            CHECK(l2.contains(meet.basis().row(i)));
        }
        // intersecting with the full lattice is the identity
        CHECK(lattice_intersect(l1, Lattice::full(n)) == l1);
        // ... and with the zero lattice gives the zero lattice
        CHECK(lattice_intersect(l1, Lattice::zero(n)) == Lattice::zero(n));
    }
    CHECK_THROWS_AS(lattice_intersect(Lattice::full(2), Lattice::full(3)),
                    dimension_mismatch);
}
