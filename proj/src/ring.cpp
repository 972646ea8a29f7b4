#include "cgr/ring.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace cgr {

namespace {

// Polynomials over Z, little-endian coefficients, for cyclotomic setup.
using Poly = std::vector<Int>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Exact division (remainder must vanish, which holds for cyclotomic factors).
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size() && !num.empty()) {
        Int c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    if (!num.empty()) throw Error("cyclotomic polynomial division not exact");
    return q;
}

Poly cyclotomic_poly(int n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly num(static_cast<size_t>(n) + 1, Int(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

std::string cyclotomic_symbol(int n) {
    if (n == 3) return "w";
    if (n == 4) return "i";
    return "z";
}

}  // namespace

RingPtr RingSpec::integers() {
    auto s = std::make_shared<RingSpec>();
    s->kind = Kind::integers;
    s->conductor = 0;
    s->rank = 1;
    s->mul = {{Vec{1}}};
    s->basis_names = {"1"};
    s->one = Vec{1};
    if (auto err = validate_ring_spec(*s)) throw Error("integers ring: " + *err);
    return s;
}

RingPtr RingSpec::cyclotomic(int n) {
    if (n < 3) throw Error("cyclotomic conductor must be >= 3");
    Poly phi = cyclotomic_poly(n);
    const int d = static_cast<int>(phi.size()) - 1;
    auto s = std::make_shared<RingSpec>();
    s->kind = Kind::cyclotomic;
    s->conductor = n;
    s->rank = d;
    s->one = Vec(d, Int(0));
    s->one[0] = 1;

    // Coords of z^m for m = 0 .. 2d-2 by reduction mod Phi_n.
    std::vector<Vec> pow(2 * d - 1, Vec(d, Int(0)));
    for (int m = 0; m < d; ++m) pow[m][m] = 1;
    for (int m = d; m <= 2 * d - 2; ++m) {
        // z^m = z * z^(m-1); reduce the overflow coefficient with
        // z^d = -(phi_0 + phi_1 z + ... + phi_{d-1} z^{d-1}).
        const Vec& prev = pow[m - 1];
        Vec cur(d, Int(0));
        for (int i = 0; i + 1 < d; ++i) cur[i + 1] = prev[i];
        const Int& top = prev[d - 1];
        if (top != 0)
            for (int i = 0; i < d; ++i) cur[i] -= top * phi[i];
        pow[m] = cur;
    }
    s->mul.assign(d, std::vector<Vec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s->mul[i][j] = pow[i + j];

    const std::string sym = cyclotomic_symbol(n);
    s->basis_names.resize(d);
    s->basis_names[0] = "1";
    if (d > 1) s->basis_names[1] = sym;
    for (int k = 2; k < d; ++k) s->basis_names[k] = sym + "^" + std::to_string(k);

    if (auto err = validate_ring_spec(*s)) throw Error("cyclotomic(" + std::to_string(n) + "): " + *err);
    return s;
}

std::string RingSpec::name() const {
    if (kind == Kind::integers) return "Z";
    if (conductor == 3) return "Z[w]";
    if (conductor == 4) return "Z[i]";
    return "Z[zeta" + std::to_string(conductor) + "]";
}

Vec RingSpec::power_coords(long m) const {
    if (kind == Kind::integers) return one;
    if (m < 0) throw Error("power_coords: negative power");
    m %= conductor;  // z^n = 1
    Vec acc = one;
    Vec z(rank, Int(0));
    if (rank > 1) z[1] = 1; else return one;
    for (long i = 0; i < m; ++i) acc = mul_coords(acc, z);
    return acc;
}

Vec RingSpec::mul_coords(const Vec& a, const Vec& b) const {
    Vec c(rank, Int(0));
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j) {
            if (b[j] == 0) continue;
            const Int s = a[i] * b[j];
            const Vec& t = mul[i][j];
            for (int k = 0; k < rank; ++k)
                if (t[k] != 0) c[k] += s * t[k];
        }
    }
    return c;
}

IntMat RingSpec::mul_matrix(const Vec& a) const {
    IntMat m(rank, rank);
    for (int j = 0; j < rank; ++j) {
        Vec col(rank, Int(0));
        for (int i = 0; i < rank; ++i) {
            if (a[i] == 0) continue;
            const Vec& t = mul[i][j];
            for (int k = 0; k < rank; ++k)
                if (t[k] != 0) col[k] += a[i] * t[k];
        }
        for (int k = 0; k < rank; ++k) m.at(k, j) = col[k];
    }
    return m;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a && b && a->kind == b->kind && a->conductor == b->conductor && a->rank == b->rank;
}

std::optional<std::string> validate_ring_spec(const RingSpec& s) {
    if (s.rank <= 0) return "rank must be positive";
    if (static_cast<int>(s.mul.size()) != s.rank) return "mul table has wrong size";
    for (const auto& row : s.mul) {
        if (static_cast<int>(row.size()) != s.rank) return "mul table has wrong size";
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != s.rank) return "mul table entry has wrong size";
    }
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j)
            if (s.mul[i][j] != s.mul[j][i])
                return "basis product not commutative at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    // Associativity (e_i e_j) e_k = e_i (e_j e_k) over all basis triples.
    auto basis_vec = [&](int k) {
        Vec v(s.rank, Int(0));
        v[k] = 1;
        return v;
    };
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j)
            for (int k = 0; k < s.rank; ++k) {
                Vec lhs = s.mul_coords(s.mul[i][j], basis_vec(k));
                Vec rhs = s.mul_coords(basis_vec(i), s.mul[j][k]);
                if (lhs != rhs)
                    return "basis product not associative at (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")";
            }
    if (static_cast<int>(s.one.size()) != s.rank || is_zero(s.one)) return "missing unit element";
    for (int k = 0; k < s.rank; ++k)
        if (s.mul_coords(s.one, basis_vec(k)) != basis_vec(k)) return "unit element fails 1*e_k = e_k";
    // No zero divisors, spot-checked on deterministic pseudo-random pairs.
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 64; ++trial) {
        Vec a(s.rank), b(s.rank);
        for (int k = 0; k < s.rank; ++k) { a[k] = coef(rng); b[k] = coef(rng); }
        if (is_zero(a) || is_zero(b)) continue;
        if (is_zero(s.mul_coords(a, b))) return "zero divisor found in spot check";
    }
    return std::nullopt;
}

RingElement::RingElement(RingPtr ring, Vec coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
    if (!ring_) throw Error("RingElement: null ring");
    if (static_cast<int>(coords_.size()) != ring_->rank) throw Error("RingElement: wrong coordinate count");
}

RingElement RingElement::zero(const RingPtr& ring) { return RingElement(ring, Vec(ring->rank, Int(0))); }
RingElement RingElement::one(const RingPtr& ring) { return RingElement(ring, ring->one); }
RingElement RingElement::basis(const RingPtr& ring, int k) {
    Vec v(ring->rank, Int(0));
    v.at(k) = 1;
    return RingElement(ring, std::move(v));
}
RingElement RingElement::from_int(const RingPtr& ring, const Int& n) {
    Vec v(ring->rank, Int(0));
    for (int k = 0; k < ring->rank; ++k) v[k] = n * ring->one[k];
    return RingElement(ring, std::move(v));
}

namespace {
void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw Error("ring mismatch: " + a->name() + " vs " + b->name());
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring_, b.ring_);
    Vec c = a.coords_;
    for (int k = 0; k < a.ring_->rank; ++k) c[k] += b.coords_[k];
    return RingElement(a.ring_, std::move(c));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring_, b.ring_);
    Vec c = a.coords_;
    for (int k = 0; k < a.ring_->rank; ++k) c[k] -= b.coords_[k];
    return RingElement(a.ring_, std::move(c));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring_, b.ring_);
    return RingElement(a.ring_, a.ring_->mul_coords(a.coords_, b.coords_));
}

RingElement RingElement::operator-() const {
    Vec c = coords_;
    for (Int& x : c) x = -x;
    return RingElement(ring_, std::move(c));
}

RingElement operator*(const Int& s, const RingElement& a) {
    Vec c = a.coords_;
    for (Int& x : c) x *= s;
    return RingElement(a.ring_, std::move(c));
}

bool RingElement::operator==(const RingElement& o) const {
    require_same_ring(ring_, o.ring_);
    return coords_ == o.coords_;
}

FracScalar::FracScalar(RingElement num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error("FracScalar: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Int g = gcd(content(num_.coords()), den_);
    if (g > 1) {
        Vec c = num_.coords();
        for (Int& x : c) x /= g;
        num_ = RingElement(num_.ring(), std::move(c));
        den_ /= g;
    }
    if (num_.is_zero()) den_ = 1;
}

FracScalar FracScalar::inverse() const {
    if (is_zero()) throw Error("FracScalar: inverse of zero");
    return frac_div(RingElement::from_int(ring(), den_), num_);
}

FracScalar operator+(const FracScalar& a, const FracScalar& b) {
    return FracScalar(b.den_ * a.num_ + a.den_ * b.num_, a.den_ * b.den_);
}
FracScalar operator-(const FracScalar& a, const FracScalar& b) {
    return FracScalar(b.den_ * a.num_ - a.den_ * b.num_, a.den_ * b.den_);
}
FracScalar operator*(const FracScalar& a, const FracScalar& b) {
    return FracScalar(a.num_ * b.num_, a.den_ * b.den_);
}
FracScalar operator*(const RingElement& a, const FracScalar& b) {
    return FracScalar(a * b.num_, b.den_);
}
FracScalar FracScalar::operator-() const { return FracScalar(-num_, den_); }

bool FracScalar::operator==(const FracScalar& o) const { return den_ == o.den_ && num_ == o.num_; }

FracScalar frac_div(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw Error("frac_div: division by zero");
    const RingPtr& ring = a.ring();
    const int n = ring->rank;
    IntMat m = ring->mul_matrix(b.coords());
    Int det = m.det();
    if (det == 0) throw Error("frac_div: multiplication matrix singular (zero divisor?)");
    // Cramer: (adj(M) a)_i = det of M with column i replaced by a.
    Vec x(n);
    for (int i = 0; i < n; ++i) {
        IntMat mi = m;
        for (int r = 0; r < n; ++r) mi.at(r, i) = a.coords()[r];
        x[i] = mi.det();
    }
    return FracScalar(RingElement(ring, std::move(x)), det);
}

RingAut::RingAut(RingPtr ring, IntMat matrix) : ring_(std::move(ring)), m_(std::move(matrix)) {
    const int n = ring_->rank;
    if (m_.rows() != n || m_.cols() != n) throw Error("RingAut: matrix must be rank x rank");
    Int d = m_.det();
    if (d != 1 && d != -1) throw Error("RingAut: matrix not invertible over Z (det " + d.str() + ")");
    if (m_.mul_vec(ring_->one) != ring_->one) throw Error("RingAut: does not fix 1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei(n, Int(0)), ej(n, Int(0));
            ei[i] = 1;
            ej[j] = 1;
            Vec lhs = m_.mul_vec(ring_->mul[i][j]);
            Vec rhs = ring_->mul_coords(m_.mul_vec(ei), m_.mul_vec(ej));
            if (lhs != rhs)
                throw Error("RingAut: not multiplicative on basis pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        }
}

RingAut RingAut::identity(const RingPtr& ring) { return RingAut(ring, IntMat::identity(ring->rank)); }

RingAut RingAut::named(const RingPtr& ring, const std::string& spec) {
    if (spec == "identity" || spec == "id") return identity(ring);
    if (ring->kind != RingSpec::Kind::cyclotomic)
        throw Error("automorphism '" + spec + "' requires a cyclotomic ring");
    const int n = ring->conductor;
    long k = -1;
    if (spec == "conj") {
        k = n - 1;
    } else if (spec.rfind("galois(", 0) == 0 && spec.back() == ')') {
        k = std::stol(spec.substr(7, spec.size() - 8));
    } else {
        throw Error("unknown automorphism '" + spec + "'");
    }
    k %= n;
    if (k < 0) k += n;
    if (gcd(Int(k), Int(n)) != 1) throw Error("galois(" + std::to_string(k) + "): exponent not coprime to " + std::to_string(n));
    IntMat m(ring->rank, ring->rank);
    for (int j = 0; j < ring->rank; ++j) {
        Vec img = ring->power_coords(static_cast<long>(j) * k);
        for (int i = 0; i < ring->rank; ++i) m.at(i, j) = img[i];
    }
    return RingAut(ring, std::move(m));
}

bool RingAut::is_identity() const { return m_ == IntMat::identity(ring_->rank); }

RingElement RingAut::apply(const RingElement& r) const {
    require_same_ring(ring_, r.ring());
    return RingElement(ring_, m_.mul_vec(r.coords()));
}

FracScalar RingAut::apply(const FracScalar& f) const {
    return FracScalar(apply(f.num()), f.den());
}

RingAut RingAut::compose(const RingAut& inner) const {
    require_same_ring(ring_, inner.ring_);
    return RingAut(ring_, m_ * inner.m_);
}

Lattice invariant_sublattice(const std::vector<RingAut>& auts) {
    if (auts.empty()) throw Error("invariant_sublattice: empty automorphism list");
    const int n = auts.front().ring()->rank;
    IntMat sys(static_cast<int>(auts.size()) * n, n);
    IntMat id = IntMat::identity(n);
    for (size_t t = 0; t < auts.size(); ++t) {
        IntMat d = auts[t].matrix() - id;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sys.at(static_cast<int>(t) * n + i, j) = d.at(i, j);
    }
    return Lattice::kernel(sys);
}

Lattice eigenlattice(const RingAut& aut, const FracScalar& c) {
    if (c.is_zero()) throw Error("eigenlattice: zero eigenvalue");
    require_same_ring(aut.ring(), c.ring());
    // den(c) * aut(d) - num(c) * d = 0, an integer condition on d.
    IntMat sys = c.den() * aut.matrix() - aut.ring()->mul_matrix(c.num().coords());
    return Lattice::kernel(sys);
}

std::string to_string(const RingElement& r) {
    const RingSpec& s = *r.ring();
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < s.rank; ++k) {
        const Int& c = r.coords()[k];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (k == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str();
            out << s.basis_names[k];
        }
    }
    if (first) return "0";
    return out.str();
}

std::string to_string(const FracScalar& f) {
    std::string n = to_string(f.num());
    if (f.den() == 1) return n;
    bool multi = false;
    for (size_t i = 1; i < n.size(); ++i)
        if (n[i] == '+' || n[i] == '-') multi = true;
    if (multi) n = "(" + n + ")";
    return n + "/" + f.den().str();
}

RingElement parse_ring_literal(const RingPtr& ring, const std::string& text) {
    const RingSpec& s = *ring;
    Vec acc(s.rank, Int(0));
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) -> Error {
        return Error("cannot parse ring element '" + text + "': " + why);
    };
    skip_ws();
    if (i >= text.size()) throw fail("empty");
    bool any = false;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw fail("expected '+' or '-' between terms");
        }
        // optional integer part
        bool have_int = false;
        Int coef = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            coef = Int(text.substr(i, j - i));
            i = j;
            have_int = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        // optional symbol with optional power
        int basis_index = 0;
        bool have_sym = false;
        if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
            if (s.kind != RingSpec::Kind::cyclotomic) throw fail("no basis symbols in " + s.name());
            std::string sym = cyclotomic_symbol(s.conductor);
            if (text.compare(i, sym.size(), sym) != 0) throw fail("unknown symbol, expected '" + sym + "'");
            i += sym.size();
            long power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw fail("missing exponent after '^'");
                power = std::stol(text.substr(i, j - i));
                i = j;
            }
            Vec p = s.power_coords(power);
            for (int k = 0; k < s.rank; ++k) acc[k] += sign * coef * p[k];
            have_sym = true;
        }
        if (!have_sym) {
            if (!have_int) throw fail("expected a term");
            acc[0] += sign * coef;
        }
        any = true;
        skip_ws();
    }
    if (!any) throw fail("empty");
    return RingElement(ring, std::move(acc));
}

std::vector<RingElement> unit_set(const RingPtr& ring) {
    std::vector<RingElement> units;
    auto push_unique = [&](RingElement u) {
        for (const auto& v : units)
            if (v == u) return;
        units.push_back(std::move(u));
    };
    push_unique(RingElement::one(ring));
    push_unique(-RingElement::one(ring));
    if (ring->kind == RingSpec::Kind::cyclotomic) {
        for (int m = 1; m < ring->conductor; ++m) {
            RingElement z(ring, ring->power_coords(m));
            push_unique(z);
            push_unique(-z);
        }
    }
    return units;
}

}  // namespace cgr
