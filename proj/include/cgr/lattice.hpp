#pragma once

#include "cgr/matrix.hpp"

#include <optional>

namespace cgr {

/// Row-style Hermite normal form: echelon rows, positive pivots, entries
/// above a pivot reduced into [0, pivot). Zero rows are dropped, so the
/// result is the canonical basis of the row span.
IntMat hnf(IntMat m);

/// HNF basis of the integer kernel {v : M v = 0}.
IntMat kernel_basis(const IntMat& m);

/// Sublattice of Z^ambient given by an HNF row basis. Lattice equality is
/// basis equality, which is what makes every module-valued answer in the
/// library directly comparable.
class Lattice {
public:
    Lattice() : ambient_(0) {}
    explicit Lattice(int ambient) : ambient_(ambient), basis_(0, ambient) {}
    Lattice(int ambient, IntMat rows) : ambient_(ambient), basis_(hnf(std::move(rows))) {
        if (basis_.cols() != ambient_) throw Error("Lattice: ambient mismatch");
    }

    static Lattice full(int ambient) { return Lattice(ambient, IntMat::identity(ambient)); }
    static Lattice zero(int ambient) { return Lattice(ambient); }
    static Lattice kernel(const IntMat& m) { return Lattice(m.cols(), kernel_basis(m)); }

    int ambient_rank() const { return ambient_; }
    int rank() const { return basis_.rows(); }
    const IntMat& basis() const { return basis_; }
    bool is_zero() const { return basis_.rows() == 0; }

    bool contains(const Vec& v) const;
    bool contains(const Lattice& other) const;

    Lattice intersect(const Lattice& other) const;

    /// Smallest lattice containing both (basis rows stacked, re-canonicalized).
    Lattice sum(const Lattice& other) const;

    bool operator==(const Lattice& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    int ambient_;
    IntMat basis_;
};

}  // namespace cgr
