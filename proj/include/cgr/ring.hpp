#pragma once

#include "cgr/lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cgr {

struct RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

/// A base domain D presented as a free Z-module with structure constants.
/// Shipped kinds: the rational integers and cyclotomic rings Z[zeta_n] in
/// the power basis of the n-th cyclotomic polynomial.
struct RingSpec {
    enum class Kind { integers, cyclotomic };

    Kind kind = Kind::integers;
    int conductor = 0;  // n for cyclotomic, 0 otherwise
    int rank = 1;
    std::vector<std::vector<Vec>> mul;  // mul[i][j] = coords of e_i * e_j
    std::vector<std::string> basis_names;
    Vec one;

    static RingPtr integers();
    static RingPtr cyclotomic(int n);

    std::string name() const;

    /// Coords of z^m in the power basis (cyclotomic; m may exceed the rank).
    Vec power_coords(long m) const;

    Vec mul_coords(const Vec& a, const Vec& b) const;
    /// Matrix of multiplication by a (columns are a*e_j).
    IntMat mul_matrix(const Vec& a) const;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Checks commutativity/associativity of the structure constants, the unit,
/// and spot-checks the no-zero-divisor property on deterministic pseudo-random
/// pairs. Returns a description of the first violation, if any.
std::optional<std::string> validate_ring_spec(const RingSpec& spec);

/// Element of D in exact coordinates. Equality is coordinate equality.
class RingElement {
public:
    RingElement(RingPtr ring, Vec coords);

    static RingElement zero(const RingPtr& ring);
    static RingElement one(const RingPtr& ring);
    static RingElement basis(const RingPtr& ring, int k);
    static RingElement from_int(const RingPtr& ring, const Int& n);

    const RingPtr& ring() const { return ring_; }
    const Vec& coords() const { return coords_; }
    bool is_zero() const { return cgr::is_zero(coords_); }
    bool is_one() const { return coords_ == ring_->one; }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement operator-() const;
    friend RingElement operator*(const Int& s, const RingElement& a);

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    Vec coords_;
};

/// Value in the fraction field K = D tensor Q, kept as num/den with integer
/// denominator, reduced, den > 0. Canonical, so equality is field equality.
class FracScalar {
public:
    FracScalar(RingElement num, Int den);
    static FracScalar from_ring(RingElement r) { return FracScalar(std::move(r), 1); }
    static FracScalar one(const RingPtr& ring) { return from_ring(RingElement::one(ring)); }

    const RingElement& num() const { return num_; }
    const Int& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == 1 && num_.is_one(); }
    bool is_integral() const { return den_ == 1; }

    FracScalar inverse() const;  // throws on zero

    friend FracScalar operator+(const FracScalar& a, const FracScalar& b);
    friend FracScalar operator-(const FracScalar& a, const FracScalar& b);
    friend FracScalar operator*(const FracScalar& a, const FracScalar& b);
    friend FracScalar operator*(const RingElement& a, const FracScalar& b);
    FracScalar operator-() const;

    bool operator==(const FracScalar& o) const;
    bool operator!=(const FracScalar& o) const { return !(*this == o); }

private:
    RingElement num_;
    Int den_;
};

/// Exact division a/b in K, via the adjugate of the multiplication matrix of
/// b over the field norm. frac_div(a,b)*b == a always.
FracScalar frac_div(const RingElement& a, const RingElement& b);

/// Ring automorphism of D as an invertible integer matrix on coordinates.
class RingAut {
public:
    RingAut(RingPtr ring, IntMat matrix);  // validates

    static RingAut identity(const RingPtr& ring);
    /// Named automorphisms: "identity"; for cyclotomic rings also "conj" and
    /// "galois(k)" with gcd(k, n) = 1.
    static RingAut named(const RingPtr& ring, const std::string& spec);

    const RingPtr& ring() const { return ring_; }
    const IntMat& matrix() const { return m_; }
    bool is_identity() const;

    Vec apply(const Vec& coords) const { return m_.mul_vec(coords); }
    RingElement apply(const RingElement& r) const;
    FracScalar apply(const FracScalar& f) const;
    RingAut compose(const RingAut& inner) const;  // this o inner

    bool operator==(const RingAut& o) const { return m_ == o.m_; }
    bool operator!=(const RingAut& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    IntMat m_;
};

/// Simultaneous fixed lattice of a nonempty family of automorphisms.
Lattice invariant_sublattice(const std::vector<RingAut>& auts);

/// {d in D : aut(d) = c*d} for a nonzero K-scalar c, as an integer kernel
/// after clearing den(c).
Lattice eigenlattice(const RingAut& aut, const FracScalar& c);

std::string to_string(const RingElement& r);
std::string to_string(const FracScalar& f);

/// Parses literals like "1+i", "-2w", "z^3-1", "5" against the ring basis.
RingElement parse_ring_literal(const RingPtr& ring, const std::string& text);

/// The roots of unity of D; the fixed unit set used by mutation tests.
std::vector<RingElement> unit_set(const RingPtr& ring);

}  // namespace cgr
