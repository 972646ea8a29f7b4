#include "cgr/cocycle.hpp"

#include <algorithm>

namespace cgr {

std::optional<CocycleViolation> validate_twist(const GroupTable& g, const Twist& twist) {
    const int n = g.order();
    if (static_cast<int>(twist.auts.size()) != n)
        return CocycleViolation{"twist_size", {}, "need one automorphism per group element"};
    if (!twist[g.identity()].is_identity())
        return CocycleViolation{"twist_identity", {g.identity()}, "sigma_e is not the identity"};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (twist[a].matrix() * twist[b].matrix() != twist[g.mul(a, b)].matrix())
                return CocycleViolation{"twist_homomorphism", {a, b},
                                        "sigma_" + g.name_of(a) + " o sigma_" + g.name_of(b) +
                                            " != sigma_" + g.name_of(g.mul(a, b))};
    return std::nullopt;
}

std::optional<CocycleViolation> validate_cocycle(const GroupTable& g, const Twist& twist,
                                                 const CocycleTable& alpha) {
    const int n = g.order();
    if (auto v = validate_twist(g, twist)) return v;
    if (static_cast<int>(alpha.alpha.size()) != n)
        return CocycleViolation{"alpha_shape", {}, "alpha table must be |G| x |G|"};
    for (int a = 0; a < n; ++a)
        if (static_cast<int>(alpha.alpha[a].size()) != n)
            return CocycleViolation{"alpha_shape", {a}, "alpha row has wrong length"};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (alpha(a, b).is_zero())
                return CocycleViolation{"alpha_zero", {a, b},
                                        "alpha(" + g.name_of(a) + "," + g.name_of(b) + ") = 0"};
    const int e = g.identity();
    for (int a = 0; a < n; ++a) {
        if (!alpha(a, e).is_one())
            return CocycleViolation{"normalization", {a, e},
                                    "alpha(" + g.name_of(a) + ",e) = " + to_string(alpha(a, e)) + " != 1"};
        if (!alpha(e, a).is_one())
            return CocycleViolation{"normalization", {e, a},
                                    "alpha(e," + g.name_of(a) + ") = " + to_string(alpha(e, a)) + " != 1"};
    }
    for (int a = 0; a < n; ++a) {
        int ai = g.inv(a);
        if (alpha(a, ai) != twist[a].apply(alpha(ai, a)))
            return CocycleViolation{"inverse_normalization", {a, ai},
                                    "alpha(" + g.name_of(a) + "," + g.name_of(ai) +
                                        ") != sigma_" + g.name_of(a) + "(alpha(" + g.name_of(ai) + "," +
                                        g.name_of(a) + "))"};
    }
    // alpha(g,h) alpha(gh,t) = sigma_g(alpha(h,t)) alpha(g,ht), all triples.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                RingElement lhs = alpha(a, b) * alpha(g.mul(a, b), c);
                RingElement rhs = twist[a].apply(alpha(b, c)) * alpha(a, g.mul(b, c));
                if (lhs != rhs)
                    return CocycleViolation{"cocycle_identity", {a, b, c},
                                            "cocycle identity fails at (" + g.name_of(a) + "," +
                                                g.name_of(b) + "," + g.name_of(c) + "): " + to_string(lhs) +
                                                " != " + to_string(rhs)};
            }
    // sigma_g(sigma_h(r)) alpha(g,h) = alpha(g,h) sigma_gh(r), all pairs and basis r.
    const RingPtr& ring = alpha(0, 0).ring();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < ring->rank; ++k) {
                RingElement r = RingElement::basis(ring, k);
                RingElement lhs = twist[a].apply(twist[b].apply(r)) * alpha(a, b);
                RingElement rhs = alpha(a, b) * twist[g.mul(a, b)].apply(r);
                if (lhs != rhs)
                    return CocycleViolation{"twisted_commutation", {a, b, k},
                                            "twisted commutation fails at (" + g.name_of(a) + "," +
                                                g.name_of(b) + ") on basis " + ring->basis_names[k]};
            }
    return std::nullopt;
}

FracScalar f_alpha(const GroupTable& g, const CocycleTable& alpha, int x, int s) {
    return frac_div(alpha(x, s), alpha(g.conj(x, s), x));
}

std::vector<int> twist_kernel(const GroupTable& g, const Twist& twist) {
    std::vector<int> w;
    for (int a = 0; a < g.order(); ++a)
        if (twist[a].is_identity()) w.push_back(a);
    return w;
}

std::vector<int> alpha_commuting_regular(const GroupTable& g, const CocycleTable& alpha,
                                         const std::vector<int>& scope) {
    std::vector<bool> in_scope(g.order(), false);
    for (int s : scope) in_scope[s] = true;
    std::vector<int> out;
    for (int x : scope) {
        bool reg = true;
        for (int c : g.centralizer(x)) {
            if (!in_scope[c]) continue;
            if (alpha(x, c) != alpha(c, x)) { reg = false; break; }
        }
        if (reg) out.push_back(x);
    }
    return out;
}

std::vector<int> f_regular(const GroupTable& g, const CocycleTable& alpha,
                           const std::vector<int>& scope) {
    std::vector<int> out;
    for (int s : scope) {
        bool reg = true;
        for (int x : scope)
            if (!f_alpha(g, alpha, x, s).is_one()) { reg = false; break; }
        if (reg) out.push_back(s);
    }
    return out;
}

RegularityReport regularity(const GroupTable& g, const Twist& twist, const CocycleTable& alpha) {
    RegularityReport r;
    r.W = twist_kernel(g, twist);
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    r.w_reg = f_regular(g, alpha, r.W);
    r.g_reg = f_regular(g, alpha, all);
    r.commuting_reg_in_w = alpha_commuting_regular(g, alpha, r.W);
    r.commuting_reg_in_g = alpha_commuting_regular(g, alpha, all);
    UrcResult u = check_urc(g, alpha, r.W);
    r.urc_holds = u.holds;
    r.urc_witness = u.witness;
    return r;
}

UrcResult check_urc(const GroupTable& g, const CocycleTable& alpha, const std::vector<int>& w) {
    for (int s : alpha_commuting_regular(g, alpha, w))
        for (int x : w)
            if (!f_alpha(g, alpha, x, s).is_one()) return {false, std::array<int, 2>{x, s}};
    return {true, std::nullopt};
}

CrossedHomResult crossed_hom_check(const GroupTable& g, const Twist& twist, const CocycleTable& alpha,
                                   int degree) {
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
            FracScalar lhs = f_alpha(g, alpha, degree, g.mul(x, y));
            FracScalar rhs = f_alpha(g, alpha, degree, x) * twist[x].apply(f_alpha(g, alpha, degree, y));
            if (lhs != rhs) return {false, std::array<int, 2>{x, y}};
        }
    return {true, std::nullopt};
}

ShiftLemmaResult check_shift_lemma(const GroupTable& g, const CocycleTable& alpha,
                                   const std::vector<int>& w) {
    for (int k : w)
        for (int x = 0; x < g.order(); ++x)
            for (int gg : w) {
                FracScalar lhs = f_alpha(g, alpha, g.mul(k, x), gg);
                FracScalar rhs = f_alpha(g, alpha, x, gg) * f_alpha(g, alpha, k, g.conj(x, gg));
                if (lhs != rhs) return {false, std::array<int, 3>{k, x, gg}};
            }
    return {true, std::nullopt};
}

}  // namespace cgr
