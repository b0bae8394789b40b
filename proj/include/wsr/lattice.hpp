#pragma once

#include "wsr/normal_form.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wsr {

// A sublattice of Z^n, stored by its canonical basis: the row Hermite normal
// form with zero rows dropped.  Two Lattice values compare equal exactly when
// they describe the same sublattice.
class Lattice {
  public:
    Lattice() = default;

    static Lattice from_matrix(const IntMatrix& gens) {
        Lattice l;
        l.ambient_ = gens.cols();
        IntMatrix h = hnf_rows(gens).h;
        std::size_t rank = 0;
        while (rank < h.rows() && !h.row_is_zero(rank))
            ++rank;
        IntMatrix b(rank, l.ambient_);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < l.ambient_; ++j)
                b(i, j) = h(i, j);
        l.basis_ = b;
        return l;
    }

    static Lattice from_rows(const std::vector<IntVec>& gens, std::size_t ambient) {
        return from_matrix(IntMatrix::from_rows(gens, ambient));
    }

    static Lattice full(std::size_t ambient) {
        return from_matrix(IntMatrix::identity(ambient));
    }

    static Lattice zero(std::size_t ambient) {
        return from_matrix(IntMatrix(0, ambient));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    // Membership by back-substitution along the echelon basis.
    bool contains(const IntVec& x) const {
        if (x.size() != ambient_)
            throw dimension_mismatch("lattice membership: vector length " +
                                     std::to_string(x.size()) + " in Z^" +
                                     std::to_string(ambient_));
        IntVec y = x;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = 0;
            while (p < ambient_ && basis_(i, p) == 0)
                ++p;
            if (y[p] % basis_(i, p) != 0)
                return false;
            BigInt c = y[p] / basis_(i, p);
            if (c != 0)
                for (std::size_t j = p; j < ambient_; ++j)
                    y[j] -= c * basis_(i, j);
        }
        return is_zero(y);
    }

    bool operator==(const Lattice&) const = default;

  private:
    std::size_t ambient_ = 0;
    IntMatrix basis_; // rank x ambient, canonical HNF

    friend Lattice lattice_intersect(const Lattice&, const Lattice&);
};

inline bool lattice_member(const Lattice& l, const IntVec& x) {
    return l.contains(x);
}

// Index [Z^n : L] for a finite-index sublattice; the product of the HNF
// pivots.  Throws when the rank falls short of the ambient dimension.
inline BigInt lattice_index(const Lattice& l) {
    if (l.rank() != l.ambient_dim())
        throw not_full_rank("lattice of rank " + std::to_string(l.rank()) +
                            " in Z^" + std::to_string(l.ambient_dim()) +
                            " has infinite index");
    BigInt idx = 1;
    for (std::size_t i = 0; i < l.rank(); ++i)
        idx *= l.basis()(i, i);
    return idx;
}

// Intersection via the left kernel of the stacked basis matrix: a vector lies
// in both lattices iff it is u*B1 with (u, v) satisfying u*B1 - v*B2 = 0.
inline Lattice lattice_intersect(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient_dim() != l2.ambient_dim())
        throw dimension_mismatch("intersecting lattices of different ambient rank");
    std::size_t n = l1.ambient_dim();
    std::size_t r1 = l1.rank(), r2 = l2.rank();
    IntMatrix stacked(r1 + r2, n);
    for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t j = 0; j < n; ++j)
            stacked(i, j) = l1.basis()(i, j);
    for (std::size_t i = 0; i < r2; ++i)
        for (std::size_t j = 0; j < n; ++j)
            stacked(r1 + i, j) = -l2.basis()(i, j);
    IntMatrix left = kernel_basis(stacked.transpose()); // rows (u, v)
    IntMatrix gens(left.rows(), n);
    for (std::size_t k = 0; k < left.rows(); ++k)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt acc = 0;
            for (std::size_t i = 0; i < r1; ++i)
                acc += left(k, i) * l1.basis()(i, j);
            gens(k, j) = acc;
        }
    return Lattice::from_matrix(gens);
}

} // namespace wsr
