#include "cgr/graded.hpp"

#include <sstream>

namespace cgr {

GradedElement unit_element(const Algebra& a, int g) {
    GradedElement z(a.ring());
    z.set(g, RingElement::one(a.ring()));
    return z;
}

GradedElement scalar_element(const Algebra& a, const RingElement& r) {
    GradedElement z(a.ring());
    z.set(a.group().identity(), r);
    return z;
}

KGradedElement to_k(const GradedElement& z) {
    KGradedElement k(z.ring());
    for (const auto& [g, r] : z.coeffs()) k.set(g, FracScalar::from_ring(r));
    return k;
}

namespace {

// (r u_g)(s u_h) = r sigma_g(s) alpha(g,h) u_{gh}, summed over support pairs.
template <class Coef>
GradedBase<Coef> multiply_impl(const Algebra& a, const GradedBase<Coef>& x, const GradedBase<Coef>& y) {
    GradedBase<Coef> out(x.ring());
    for (const auto& [g, r] : x.coeffs())
        for (const auto& [h, s] : y.coeffs()) {
            Coef term = r * a.sigma(g).apply(s);
            term = a.alpha(g, h) * term;
            out.add(a.group().mul(g, h), term);
        }
    return out;
}

template <class Coef>
GradedBase<Coef> add_impl(const GradedBase<Coef>& x, const GradedBase<Coef>& y) {
    GradedBase<Coef> out = x;
    for (const auto& [g, r] : y.coeffs()) out.add(g, r);
    return out;
}

}  // namespace

GradedElement multiply(const Algebra& a, const GradedElement& x, const GradedElement& y) {
    return multiply_impl(a, x, y);
}
KGradedElement multiply(const Algebra& a, const KGradedElement& x, const KGradedElement& y) {
    return multiply_impl(a, x, y);
}
GradedElement add(const GradedElement& x, const GradedElement& y) { return add_impl(x, y); }
KGradedElement add(const KGradedElement& x, const KGradedElement& y) { return add_impl(x, y); }

KGradedElement u_inverse(const Algebra& a, int x) {
    int xi = a.group().inv(x);
    KGradedElement z(a.ring());
    z.set(xi, frac_div(RingElement::one(a.ring()), a.alpha(xi, x)));
    return z;
}

KGradedElement conjugate(const Algebra& a, int x, const GradedElement& z) {
    KGradedElement generic = multiply(a, multiply(a, to_k(unit_element(a, x)), to_k(z)), u_inverse(a, x));
    KGradedElement closed(a.ring());
    for (const auto& [s, r] : z.coeffs())
        closed.add(a.group().conj(x, s), a.sigma(x).apply(r) * a.f(x, s));
    if (generic != closed)
        throw Error("conjugation closed form disagrees with generic product at x = " +
                    a.group().name_of(x) + " (formula transcription bug)");
    return closed;
}

std::vector<RayClass> ray_classes(const Algebra& a) {
    UrcResult urc = check_urc(a.group(), a.cocycle(), a.W());
    if (!urc.holds) {
        const auto& [x, s] = *urc.witness;
        throw Error("URC fails for alpha on W (f(" + a.group().name_of(x) + "," + a.group().name_of(s) +
                    ") != 1); ray class sums do not form a basis of Z(B)");
    }
    std::vector<int> reg = f_regular(a.group(), a.cocycle(), a.W());
    std::vector<bool> seen(a.group().order(), false);
    std::vector<RayClass> classes;
    for (int s : reg) {
        if (seen[s]) continue;
        RayClass c;
        c.elements = a.group().conjugacy_class_in(s, a.W());
        c.representative = c.elements.front();
        for (int g : c.elements) seen[g] = true;
        classes.push_back(std::move(c));
    }
    return classes;
}

GradedElement ray_class_sum(const Algebra& a, const RayClass& c) {
    GradedElement v(a.ring());
    for (int g : c.elements) v.set(g, RingElement::one(a.ring()));
    return v;
}

KGradedElement conjugate_class_sum(const Algebra& a, int x, const RayClass& c) {
    KGradedElement closed(a.ring());
    for (int g : c.elements) closed.add(a.group().conj(x, g), a.f(x, g));
    KGradedElement generic = conjugate(a, x, ray_class_sum(a, c));
    if (generic != closed)
        throw Error("class-sum conjugation closed form disagrees with generic product at x = " +
                    a.group().name_of(x));
    return closed;
}

InverseIdentityReport check_inverse_product_identity(const Algebra& a) {
    InverseIdentityReport rep;
    const GroupTable& G = a.group();
    for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < G.order(); ++x) {
            int xi = G.inv(x);
            int gxgi = G.conj(x, g);
            FracScalar inv_x_xi = frac_div(RingElement::one(a.ring()), a.alpha(x, xi));
            FracScalar rhs = frac_div(RingElement::one(a.ring()), a.alpha(gxgi, x));
            FracScalar displayed = FracScalar::from_ring(a.alpha(G.mul(g, x), x)) *
                                   a.sigma(gxgi).apply(inv_x_xi);
            if (rep.displayed_holds && displayed != rhs) {
                rep.displayed_holds = false;
                rep.displayed_witness = std::array<int, 2>{g, x};
            }
            FracScalar derived = FracScalar::from_ring(a.alpha(G.mul(x, g), xi)) *
                                 a.sigma(gxgi).apply(inv_x_xi);
            if (rep.derived_holds && derived != rhs) {
                rep.derived_holds = false;
                rep.derived_witness = std::array<int, 2>{g, x};
            }
        }
    return rep;
}

namespace {

// One printed term: parenthesize multi-monomial ring coefficients, drop a
// bare "1", keep "-" for "-1".
std::string render_term(const std::string& coeff, const std::string& name) {
    if (coeff == "1") return "u[" + name + "]";
    if (coeff == "-1") return "-u[" + name + "]";
    bool multi = false;
    for (size_t i = 1; i < coeff.size(); ++i)
        if (coeff[i] == '+' || coeff[i] == '-') multi = true;
    // a reduced fraction like (1-i)/2 arrives already parenthesized
    if (multi && coeff.find('/') == std::string::npos)
        return "(" + coeff + ")*u[" + name + "]";
    return coeff + "*u[" + name + "]";
}

template <class Coef>
std::string to_string_impl(const Algebra& a, const GradedBase<Coef>& z) {
    if (z.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : z.coeffs()) {
        std::string term = render_term(to_string(c), a.group().name_of(g));
        if (first) {
            out << term;
            first = false;
        } else if (term[0] == '-') {
            out << " - " << term.substr(1);
        } else {
            out << " + " << term;
        }
    }
    return out.str();
}

}  // namespace

std::string to_string(const Algebra& a, const GradedElement& z) { return to_string_impl(a, z); }
std::string to_string(const Algebra& a, const KGradedElement& z) { return to_string_impl(a, z); }

}  // namespace cgr
