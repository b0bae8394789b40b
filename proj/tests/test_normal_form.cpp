#include "wsr/lattice.hpp"
#include "wsr/normal_form.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wsr;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                        long long bound) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = detail::uniform_int(rng, -bound, bound);
    return m;
}

// The canonical-form contract: echelon with strictly increasing positive
// pivots, entries above each pivot in [0, pivot), zero rows last.
void check_hnf_shape(const IntMatrix& h) {
    long long last_pivot_col = -1;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        if (h.row_is_zero(i)) {
            seen_zero_row = true;
            continue;
        }
        REQUIRE(!seen_zero_row); // nonzero row after a zero row
        std::size_t p = 0;
        while (h(i, p) == 0)
            ++p;
        REQUIRE(static_cast<long long>(p) > last_pivot_col);
        last_pivot_col = static_cast<long long>(p);
        REQUIRE(h(i, p) > 0);
        for (std::size_t k = 0; k < i; ++k) {
            REQUIRE(h(k, p) >= 0);
            REQUIRE(h(k, p) < h(i, p));
        }
    }
}

void check_snf_contract(const IntMatrix& m, const SnfResult& d) {
    REQUIRE(d.u * m * d.v == d.s);
    REQUIRE(abs(d.u.determinant()) == 1);
    REQUIRE(abs(d.v.determinant()) == 1);
    std::size_t n = std::min(d.s.rows(), d.s.cols());
    for (std::size_t i = 0; i < d.s.rows(); ++i)
        for (std::size_t j = 0; j < d.s.cols(); ++j)
            if (i != j)
                REQUIRE(d.s(i, j) == 0);
    for (std::size_t i = 0; i < n; ++i)
        REQUIRE(d.s(i, i) >= 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d.s(i, i) == 0)
            REQUIRE(d.s(i + 1, i + 1) == 0);
        else
            REQUIRE(d.s(i + 1, i + 1) % d.s(i, i) == 0);
    }
}

} // namespace

TEST_CASE("hnf of known lattice bases") {
    IntMatrix k{{5, 4, 3, 0}, {7, 5, 5, -1}};
    CHECK(hnf_rows(k).h == IntMatrix{{1, 2, -1, 2}, {0, 3, -4, 5}});

    IntMatrix phi_k{{0, 15, 0, 0}, {0, 21, -3, 0}};
    CHECK(hnf_rows(phi_k).h == IntMatrix{{0, 3, 6, 0}, {0, 0, 15, 0}});

    IntMatrix single{{0, 0, -7}};
    CHECK(hnf_rows(single).h == IntMatrix{{0, 0, 7}});
}

TEST_CASE("hnf satisfies its witness identity and canonical shape") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 6;
        IntMatrix m = random_matrix(rng, r, c, 12);
        HnfResult res = hnf_rows(m);
        CHECK(res.u * m == res.h);
        CHECK(abs(res.u.determinant()) == 1);
        check_hnf_shape(res.h);
        // canonical: reducing again changes nothing
        CHECK(hnf_rows(res.h).h == res.h);
        // row span is preserved in both directions
        CHECK(Lattice::from_matrix(m) == Lattice::from_matrix(res.h));
    }
}

TEST_CASE("snf of known matrices") {
    IntMatrix lambda{{-2, 1, 2, 1}, {1, -2, 1, 2}};
    SnfResult d = snf(lambda);
    CHECK(d.s == IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}});
    check_snf_contract(lambda, d);

    SnfResult e = snf(IntMatrix{{2, 4}, {6, 8}});
    CHECK(e.diagonal() == IntVec{2, 4});
    check_snf_contract(IntMatrix{{2, 4}, {6, 8}}, e);

    CHECK(snf(IntMatrix::identity(4)).s == IntMatrix::identity(4));
    CHECK(snf(IntMatrix(2, 3)).diagonal() == IntVec{0, 0});
    CHECK(snf(IntMatrix{{0, 0}, {0, 3}}).diagonal() == IntVec{3, 0});
}

TEST_CASE("snf contract on random matrices") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 6;
        IntMatrix m = random_matrix(rng, r, c, 12);
        check_snf_contract(m, snf(m));
    }
    // divisibility fix is exercised by matrices with coprime-looking pivots
    IntMatrix tricky{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}};
    SnfResult d = snf(tricky);
    CHECK(d.diagonal() == IntVec{1, 1, 30});
    check_snf_contract(tricky, d);
}

TEST_CASE("kernel of known maps") {
    CHECK(kernel_basis(IntMatrix{{1, 2, 3}}) == IntMatrix{{1, 1, -1}, {0, 3, -2}});
    CHECK(kernel_basis(IntMatrix::identity(2)).rows() == 0);
    IntMatrix lambda{{-2, 1, 2, 1}, {1, -2, 1, 2}};
    IntMatrix k = kernel_basis(lambda);
    CHECK(k == IntMatrix{{1, 2, -1, 2}, {0, 3, -4, 5}});
    // ... and that lattice is exactly the span of the reference generators
    CHECK(Lattice::from_matrix(k) ==
          Lattice::from_rows({IntVec{5, 4, 3, 0}, IntVec{7, 5, 5, -1}}, 4));
}

TEST_CASE("kernel rows annihilate and saturate") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + t % 3, c = 2 + (t / 3) % 3; // up to 3x4
        IntMatrix m = random_matrix(rng, r, c, 6);
        IntMatrix k = kernel_basis(m);
        CHECK(k.rows() == c - snf(m).rank());
        for (std::size_t i = 0; i < k.rows(); ++i)
            CHECK(is_zero(m.apply(k.row(i))));
        check_hnf_shape(k);
    }
}

TEST_CASE("kernel saturation by exhaustive enumeration") {
    // every integer solution in the box must already lie in the kernel
    // lattice; a non-saturated basis would miss some of them
    auto enumerate_check = [](const IntMatrix& m, long long bound) {
        Lattice k = Lattice::from_matrix(kernel_basis(m));
        std::size_t c = m.cols();
        IntVec x(c, BigInt(-bound));
        while (true) {
            if (is_zero(m.apply(x)))
                REQUIRE(k.contains(x));
            std::size_t i = 0;
            while (i < c && x[i] == bound)
                x[i++] = -bound;
            if (i == c)
                break;
            x[i] += 1;
        }
    };
    enumerate_check(IntMatrix{{1, 2, 3}}, 10);
    enumerate_check(IntMatrix{{-2, 1, 2, 1}, {1, -2, 1, 2}}, 10);
    enumerate_check(IntMatrix{{2, 4, 6, 2}, {3, 5, 1, 0}}, 6);
    enumerate_check(IntMatrix{{6, 10, 15, 4}}, 6);
}
