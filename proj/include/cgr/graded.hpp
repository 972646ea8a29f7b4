#pragma once

#include "cgr/algebra.hpp"

#include <map>

namespace cgr {

/// Finitely supported map degree -> coefficient; zero coefficients are never
/// stored, so equality is map equality. Iteration order is group input order.
template <class Coef>
class GradedBase {
public:
    explicit GradedBase(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const { return ring_; }
    const std::map<int, Coef>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void set(int degree, Coef value) {
        if (value.is_zero())
            c_.erase(degree);
        else
            c_.insert_or_assign(degree, std::move(value));
    }
    void add(int degree, const Coef& value) {
        auto it = c_.find(degree);
        if (it == c_.end()) {
            set(degree, value);
        } else {
            Coef s = it->second + value;
            if (s.is_zero())
                c_.erase(it);
            else
                it->second = std::move(s);
        }
    }
    const Coef* at(int degree) const {
        auto it = c_.find(degree);
        return it == c_.end() ? nullptr : &it->second;
    }

    bool operator==(const GradedBase& o) const { return c_ == o.c_; }
    bool operator!=(const GradedBase& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::map<int, Coef> c_;
};

using GradedElement = GradedBase<RingElement>;     // coefficients in D
using KGradedElement = GradedBase<FracScalar>;     // coefficients in K

GradedElement unit_element(const Algebra& a, int g);                    // u_g
GradedElement scalar_element(const Algebra& a, const RingElement& r);   // r * u_e
KGradedElement to_k(const GradedElement& z);

GradedElement multiply(const Algebra& a, const GradedElement& x, const GradedElement& y);
KGradedElement multiply(const Algebra& a, const KGradedElement& x, const KGradedElement& y);

GradedElement add(const GradedElement& x, const GradedElement& y);
KGradedElement add(const KGradedElement& x, const KGradedElement& y);

/// u_x^-1 = alpha^-1(x^-1, x) u_{x^-1} in K <> G.
KGradedElement u_inverse(const Algebra& a, int x);

/// u_x z u_x^-1, computed both by generic multiplication and by the closed
/// form sigma_x(r_s) f(x,s) u_{x s x^-1}; the two are asserted equal.
KGradedElement conjugate(const Algebra& a, int x, const GradedElement& z);

/// Conjugation class (within W) of an f-regular element of W.
struct RayClass {
    std::vector<int> elements;
    int representative;  // first element in input order
};

/// Ray classes of W in representative order. Requires the URC for alpha on W;
/// otherwise the ray-class-sum basis of Z(B) is not available and this throws.
std::vector<RayClass> ray_classes(const Algebra& a);

GradedElement ray_class_sum(const Algebra& a, const RayClass& c);

/// u_x v_C u_x^-1 by the closed form sum f(x,g) u_{x g x^-1}; asserted equal
/// to generic conjugation of the class sum.
KGradedElement conjugate_class_sum(const Algebra& a, int x, const RayClass& c);

/// The base-element product identity printed in the source material carries a
/// transcription slip; both the displayed orientation
///   alpha(gx, x) sigma_{xgx^-1}(alpha^-1(x, x^-1)) = alpha^-1(xgx^-1, x)
/// and the orientation derived from the cocycle identity at (xg, x^-1, x)
///   alpha(xg, x^-1) sigma_{xgx^-1}(alpha^-1(x, x^-1)) = alpha^-1(xgx^-1, x)
/// are evaluated exhaustively and reported.
struct InverseIdentityReport {
    bool displayed_holds = true;
    std::optional<std::array<int, 2>> displayed_witness;  // (g, x)
    bool derived_holds = true;
    std::optional<std::array<int, 2>> derived_witness;
};
InverseIdentityReport check_inverse_product_identity(const Algebra& a);

/// Canonical printing: terms in group input order, "coeff*u[name]" with the
/// coefficient parenthesized when it has more than one basis monomial.
std::string to_string(const Algebra& a, const GradedElement& z);
std::string to_string(const Algebra& a, const KGradedElement& z);

}  // namespace cgr
