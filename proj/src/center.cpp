#include "cgr/center.hpp"

#include <algorithm>
#include <sstream>

namespace cgr {

namespace {

std::vector<int> support_of(const Algebra& a, const Lattice& lat) {
    const int rank = a.ring()->rank;
    std::vector<bool> hit(a.group().order(), false);
    for (int i = 0; i < lat.basis().rows(); ++i)
        for (int s = 0; s < a.group().order(); ++s)
            for (int k = 0; k < rank; ++k)
                if (lat.basis().at(i, s * rank + k) != 0) hit[s] = true;
    std::vector<int> out;
    for (int s = 0; s < a.group().order(); ++s)
        if (hit[s]) out.push_back(s);
    return out;
}

CenterLattice make_center_lattice(const Algebra& a, Lattice lat) {
    CenterLattice c;
    c.ambient = a.group().order() * a.ring()->rank;
    c.support = support_of(a, lat);
    c.lattice = std::move(lat);
    return c;
}

}  // namespace

GradedElement decode_center_vector(const Algebra& a, const Vec& v) {
    const int rank = a.ring()->rank;
    GradedElement z(a.ring());
    for (int s = 0; s < a.group().order(); ++s) {
        Vec block(v.begin() + static_cast<long>(s) * rank, v.begin() + static_cast<long>(s + 1) * rank);
        z.set(s, RingElement(a.ring(), std::move(block)));
    }
    return z;
}

Vec encode_graded(const Algebra& a, const GradedElement& z) {
    const int rank = a.ring()->rank;
    Vec v(static_cast<size_t>(a.group().order()) * rank, Int(0));
    for (const auto& [s, r] : z.coeffs())
        for (int k = 0; k < rank; ++k) v[static_cast<size_t>(s) * rank + k] = r.coords()[k];
    return v;
}

Lattice embed_at_degree(const Algebra& a, int degree, const Lattice& module) {
    const int rank = a.ring()->rank;
    const int ambient = a.group().order() * rank;
    IntMat rows(module.rank(), ambient);
    for (int i = 0; i < module.rank(); ++i)
        for (int k = 0; k < rank; ++k) rows.at(i, degree * rank + k) = module.basis().at(i, k);
    return Lattice(ambient, std::move(rows));
}

Lattice embed_on_class(const Algebra& a, const std::vector<int>& degrees, const Lattice& module) {
    const int rank = a.ring()->rank;
    const int ambient = a.group().order() * rank;
    IntMat rows(module.rank(), ambient);
    for (int i = 0; i < module.rank(); ++i)
        for (int g : degrees)
            for (int k = 0; k < rank; ++k) rows.at(i, g * rank + k) = module.basis().at(i, k);
    return Lattice(ambient, std::move(rows));
}

CenterLattice center_oracle(const Algebra& a) {
    const GroupTable& G = a.group();
    const RingSpec& D = *a.ring();
    const int n = G.order(), rank = D.rank;
    const int ambient = n * rank;

    std::vector<Vec> rows;
    auto add_block_row = [&](const std::vector<std::pair<int, IntMat>>& blocks) {
        // blocks: (degree, rank x rank matrix applied to r_degree); one row per i
        for (int i = 0; i < rank; ++i) {
            Vec row(ambient, Int(0));
            bool nonzero = false;
            for (const auto& [deg, m] : blocks)
                for (int j = 0; j < rank; ++j) {
                    if (m.at(i, j) == 0) continue;
                    row[static_cast<size_t>(deg) * rank + j] += m.at(i, j);
                    nonzero = true;
                }
            if (nonzero) rows.push_back(std::move(row));
        }
    };

    // z d = d z for each basis element d = e_k:  (Mul(sigma_s(e_k)) - Mul(e_k)) r_s = 0.
    for (int s = 0; s < n; ++s) {
        if (a.sigma(s).is_identity()) continue;
        for (int k = 0; k < rank; ++k) {
            Vec ek = RingElement::basis(a.ring(), k).coords();
            Vec img = a.sigma(s).apply(ek);
            IntMat diff = D.mul_matrix(img) - D.mul_matrix(ek);
            add_block_row({{s, diff}});
        }
    }

    // z u_x = u_x z: coefficient at degree t gives
    //   Mul(alpha(t x^-1, x)) r_{t x^-1} - Mul(alpha(x, x^-1 t)) M_sigma_x r_{x^-1 t} = 0.
    for (int x = 0; x < n; ++x)
        for (int t = 0; t < n; ++t) {
            int left = G.mul(t, G.inv(x));   // s with s x = t
            int right = G.mul(G.inv(x), t);  // s with x s = t
            IntMat pos = D.mul_matrix(a.alpha(left, x).coords());
            IntMat neg = D.mul_matrix(a.alpha(x, right).coords()) * a.sigma(x).matrix();
            if (left == right) {
                add_block_row({{left, pos - neg}});
            } else {
                add_block_row({{left, pos}, {right, Int(-1) * neg}});
            }
        }

    IntMat sys(static_cast<int>(rows.size()), ambient);
    for (size_t i = 0; i < rows.size(); ++i) sys.set_row(static_cast<int>(i), rows[i]);
    return make_center_lattice(a, Lattice::kernel(sys));
}

std::optional<std::string> verify_center_lattice(const Algebra& a, const CenterLattice& c) {
    const GroupTable& G = a.group();
    for (int i = 0; i < c.lattice.basis().rows(); ++i) {
        GradedElement z = decode_center_vector(a, c.lattice.basis().row(i));
        for (const auto& [s, r] : z.coeffs())
            if (!a.in_W(s))
                return "basis vector " + std::to_string(i) + " has support at " + G.name_of(s) +
                       " outside W";
        for (int k = 0; k < a.ring()->rank; ++k) {
            GradedElement d = scalar_element(a, RingElement::basis(a.ring(), k));
            if (multiply(a, z, d) != multiply(a, d, z))
                return "basis vector " + std::to_string(i) + " fails to commute with basis element " +
                       a.ring()->basis_names[k];
        }
        for (int x = 0; x < G.order(); ++x) {
            GradedElement ux = unit_element(a, x);
            if (multiply(a, z, ux) != multiply(a, ux, z))
                return "basis vector " + std::to_string(i) + " fails to commute with u[" + G.name_of(x) +
                       "]";
        }
    }
    return std::nullopt;
}

Lattice invariant_ring_lattice(const Algebra& a) {
    return invariant_sublattice(a.twist().auts);
}

namespace {

// Solution lattice of sigma_x(d) = d * f over one x: integer kernel after
// clearing the denominator of f.
Lattice coefficient_condition(const Algebra& a, int x, const FracScalar& f) {
    return eigenlattice(a.sigma(x), f);
}

RingElement lattice_row_element(const Algebra& a, const Lattice& l, int i) {
    return RingElement(a.ring(), l.basis().row(i));
}

}  // namespace

AbelianCenterReport center_abelian(const Algebra& a) {
    const GroupTable& G = a.group();
    if (!G.is_abelian())
        throw MethodUnavailable("center_abelian requires an Abelian grading group; use the oracle or "
                                "the saturation-class method");
    const int rank = a.ring()->rank;
    AbelianCenterReport rep;
    rep.W = a.W();
    std::vector<int> all(G.order());
    for (int i = 0; i < G.order(); ++i) all[i] = i;
    rep.w_reg = f_regular(G, a.cocycle(), rep.W);
    rep.g_reg = f_regular(G, a.cocycle(), all);
    rep.d_g = invariant_ring_lattice(a);
    rep.pid_dg = (rep.d_g.rank() == 1);

    std::vector<bool> in_greg(G.order(), false);
    for (int s : rep.g_reg) in_greg[s] = true;

    std::vector<Lattice> embedded;
    for (int s : rep.w_reg) {
        AbelianComponent comp{s, in_greg[s], Lattice(rank), Lattice(rank), std::nullopt};
        // Full coefficient condition sigma_x(d) = d f(s,x) over every x in G.
        Lattice full = Lattice::full(rank);
        for (int x = 0; x < G.order(); ++x) full = full.intersect(coefficient_condition(a, x, a.f(s, x)));
        comp.full_condition = full;
        if (in_greg[s]) {
            comp.module = rep.d_g;
        } else {
            // I_s: intersection over the x with f(s,x) != 1 only.
            Lattice is = Lattice::full(rank);
            for (int x = 0; x < G.order(); ++x)
                if (!a.f(s, x).is_one()) is = is.intersect(coefficient_condition(a, x, a.f(s, x)));
            comp.module = is;
        }
        if (comp.module.is_zero()) continue;
        if (rep.pid_dg) {
            if (comp.module.rank() != 1)
                throw Error("rank-1 component expected over D^G ~ Z at degree " + G.name_of(s));
            comp.generator = lattice_row_element(a, comp.module, 0);
        }
        embedded.push_back(embed_at_degree(a, s, comp.module));
        rep.components.push_back(std::move(comp));
    }

    Lattice assembled = Lattice::zero(G.order() * rank);
    for (const Lattice& l : embedded) assembled = assembled.sum(l);
    rep.assembled = make_center_lattice(a, std::move(assembled));

    // Trivial-center conditions.
    const int e = G.identity();
    if (rep.W == std::vector<int>{e}) rep.trivial.holding_conditions.push_back("W = {e}");
    if (rep.w_reg == std::vector<int>{e}) rep.trivial.holding_conditions.push_back("W_reg = {e}");
    {
        std::vector<int> w_greg;
        for (int s : rep.W)
            if (in_greg[s]) w_greg.push_back(s);
        bool all_is_zero = true;
        for (const auto& c : rep.components)
            if (!c.g_regular && !c.module.is_zero()) all_is_zero = false;
        if (w_greg == std::vector<int>{e} && all_is_zero)
            rep.trivial.holding_conditions.push_back(
                "W n G_reg = {e} and I_s = {0} for all s in W_reg \\ G_reg");
    }
    rep.trivial.structural_trivial = (rep.assembled.support == std::vector<int>{e});
    rep.trivial.verdict = rep.trivial.structural_trivial
                              ? (rep.trivial.holding_conditions.empty() ? "trivial"
                                                                        : rep.trivial.holding_conditions.front())
                              : "nontrivial";

    // PID layer: the center is itself crystalline graded over D^G when D^G ~ Z.
    if (rep.pid_dg && !rep.components.empty()) {
        bool ok = true;
        std::vector<bool> in_support(G.order(), false);
        for (const auto& c : rep.components) in_support[c.degree] = true;
        auto find_component = [&](int s) -> const AbelianComponent* {
            for (const auto& c : rep.components)
                if (c.degree == s) return &c;
            return nullptr;
        };
        for (const auto& cs : rep.components) {
            if (!in_support[G.inv(cs.degree)]) ok = false;
            for (const auto& ct : rep.components) {
                int st = G.mul(cs.degree, ct.degree);
                const AbelianComponent* target = find_component(st);
                if (!target) { ok = false; continue; }
                RingElement prod =
                    *cs.generator * a.sigma(cs.degree).apply(*ct.generator) * a.alpha(cs.degree, ct.degree);
                FracScalar m = frac_div(prod, *target->generator);
                bool integral_invariant = m.is_integral() && rep.d_g.contains(m.num().coords());
                if (!integral_invariant || m.is_zero()) {
                    ok = false;
                    continue;
                }
                rep.graded_product_table.push_back(
                    "v[" + G.name_of(cs.degree) + "] * v[" + G.name_of(ct.degree) + "] = " +
                    to_string(m.num()) + " * v[" + G.name_of(st) + "]");
            }
        }
        rep.crystalline_over_dg = ok;
    }
    return rep;
}

NonAbelianCenterReport center_nonabelian(const Algebra& a) {
    const GroupTable& G = a.group();
    if (G.is_abelian())
        throw MethodUnavailable("center_nonabelian requires a non-Abelian grading group; use "
                                "center_abelian");
    UrcResult urc = check_urc(G, a.cocycle(), a.W());
    if (!urc.holds) {
        const auto& [x, s] = *urc.witness;
        throw MethodUnavailable("URC fails for alpha on W at (x = " + G.name_of(x) + ", s = " +
                                G.name_of(s) + "); the saturation-class formula does not apply -- use "
                                "the oracle");
    }
    const int rank = a.ring()->rank;
    NonAbelianCenterReport rep;
    rep.W = a.W();
    rep.w_reg = f_regular(G, a.cocycle(), rep.W);
    rep.d_g = invariant_ring_lattice(a);
    rep.pid_dg = (rep.d_g.rank() == 1);

    std::vector<RayClass> classes = ray_classes(a);
    std::vector<int> class_of(G.order(), -1);
    for (size_t i = 0; i < classes.size(); ++i)
        for (int g : classes[i].elements) class_of[g] = static_cast<int>(i);

    for (const RayClass& c : classes) {
        RayClassInfo info;
        info.cls = c;
        info.normalizer = G.normalizer_of_set(c.elements);
        info.full_normalizer = (static_cast<int>(info.normalizer.size()) == G.order());
        info.in_delta = true;
        for (int x = 0; x < G.order() && info.in_delta; ++x)
            for (int g : c.elements)
                if (a.f(x, g) != a.f(x, c.representative)) { info.in_delta = false; break; }
        if (info.in_delta) {
            info.g_regular = true;
            for (int x = 0; x < G.order(); ++x)
                if (!a.f(x, c.representative).is_one()) { info.g_regular = false; break; }
        }
        if (info.in_delta && !info.g_regular) {
            Lattice primary = Lattice::full(rank);
            Lattice alt = Lattice::full(rank);
            for (int x = 0; x < G.order(); ++x) {
                const FracScalar& f = a.f(x, c.representative);
                primary = primary.intersect(coefficient_condition(a, x, f.inverse()));
                alt = alt.intersect(coefficient_condition(a, x, f));
            }
            info.i_c = primary;
            info.i_c_alt = alt;
        }
        rep.ray_classes.push_back(std::move(info));
    }

    // Saturation classes: orbits of the G-conjugation action on ray classes.
    const int t = static_cast<int>(classes.size());
    std::vector<int> gamma_of(t, -1);
    for (int i = 0; i < t; ++i) {
        if (gamma_of[i] >= 0) continue;
        int gamma = static_cast<int>(rep.saturation.size());
        std::vector<int> stack{i};
        gamma_of[i] = gamma;
        std::vector<int> members{i};
        while (!stack.empty()) {
            int ci = stack.back();
            stack.pop_back();
            for (int x = 0; x < G.order(); ++x) {
                int img = G.conj(x, classes[ci].representative);
                int cj = class_of[img];
                if (cj < 0)
                    throw Error("conjugation left the regular set: " + G.name_of(img) +
                                " (regular-set closure violated)");
                if (gamma_of[cj] < 0) {
                    gamma_of[cj] = gamma;
                    members.push_back(cj);
                    stack.push_back(cj);
                }
            }
        }
        std::sort(members.begin(), members.end());
        rep.saturation.push_back(SaturationClass{members, Lattice(0)});
    }

    // Coefficient system per saturation class:
    //   Mul(num f(x,g)) M_sigma_x d_C - den f(x,g) d_C' = 0, C' the class of x g x^-1.
    std::vector<Lattice> embedded;
    for (SaturationClass& gamma : rep.saturation) {
        const int m = static_cast<int>(gamma.class_indices.size());
        const int cols = m * rank;
        std::vector<int> pos_of(t, -1);
        for (int p = 0; p < m; ++p) pos_of[gamma.class_indices[p]] = p;
        std::vector<Vec> rows;
        for (int p = 0; p < m; ++p) {
            const RayClass& c = classes[gamma.class_indices[p]];
            for (int x = 0; x < G.order(); ++x)
                for (int g : c.elements) {
                    const FracScalar& f = a.f(x, g);
                    int cq = class_of[G.conj(x, g)];
                    int q = pos_of[cq];
                    if (q < 0) throw Error("saturation class not closed under conjugation");
                    IntMat lhs = a.ring()->mul_matrix(f.num().coords()) * a.sigma(x).matrix();
                    for (int i = 0; i < rank; ++i) {
                        Vec row(cols, Int(0));
                        for (int j = 0; j < rank; ++j) row[static_cast<size_t>(p) * rank + j] += lhs.at(i, j);
                        row[static_cast<size_t>(q) * rank + i] -= f.den();
                        if (!is_zero(row)) rows.push_back(std::move(row));
                    }
                }
        }
        IntMat sys(static_cast<int>(rows.size()), cols);
        for (size_t i = 0; i < rows.size(); ++i) sys.set_row(static_cast<int>(i), rows[i]);
        gamma.solutions = Lattice::kernel(sys);

        // Embed: coefficient block of class C is copied to every degree in C.
        const int ambient = G.order() * rank;
        IntMat emb(gamma.solutions.rank(), ambient);
        for (int r = 0; r < gamma.solutions.rank(); ++r)
            for (int p = 0; p < m; ++p)
                for (int g : classes[gamma.class_indices[p]].elements)
                    for (int k = 0; k < rank; ++k)
                        emb.at(r, g * rank + k) = gamma.solutions.basis().at(r, p * rank + k);
        embedded.push_back(Lattice(ambient, std::move(emb)));
    }
    Lattice assembled = Lattice::zero(G.order() * rank);
    for (const Lattice& l : embedded) assembled = assembled.sum(l);
    rep.assembled = make_center_lattice(a, std::move(assembled));

    // Single-class layer: components d_C v_C with x C x^-1 = C for all x.
    Lattice single = Lattice::zero(G.order() * rank);
    for (const RayClassInfo& info : rep.ray_classes) {
        if (!info.full_normalizer || !info.in_delta) continue;
        const Lattice& module = info.g_regular ? rep.d_g : *info.i_c;
        if (module.is_zero()) continue;
        single = single.sum(embed_on_class(a, info.cls.elements, module));
    }
    rep.single_class = make_center_lattice(a, std::move(single));

    // Trivial-center conditions of the single-class analysis.
    const int e = G.identity();
    {
        bool only_e_full = true, delta_only_e = true, greg_only_e = true, ic_all_zero = true;
        for (const RayClassInfo& info : rep.ray_classes) {
            bool is_e = (info.cls.representative == e);
            if (info.full_normalizer && !is_e) only_e_full = false;
            if (info.in_delta && !is_e) delta_only_e = false;
            if (info.g_regular && !is_e) greg_only_e = false;
            if (info.i_c && !info.i_c->is_zero()) ic_all_zero = false;
        }
        if (only_e_full) rep.trivial.holding_conditions.push_back("N_G(C) = G only for C = {e}");
        if (delta_only_e) rep.trivial.holding_conditions.push_back("Delta = {C_e}");
        if (greg_only_e && ic_all_zero)
            rep.trivial.holding_conditions.push_back(
                "G_reg = {C_e} and I_C = {0} for all C in Delta \\ G_reg");
    }
    rep.trivial.structural_trivial = (rep.assembled.support == std::vector<int>{e});
    rep.trivial.verdict = rep.trivial.structural_trivial
                              ? (rep.trivial.holding_conditions.empty() ? "trivial"
                                                                        : rep.trivial.holding_conditions.front())
                              : "nontrivial";
    return rep;
}

CrossCheck cross_check(const CenterLattice& structural, const CenterLattice& oracle) {
    CrossCheck c;
    c.structural_rank = structural.lattice.rank();
    c.oracle_rank = oracle.lattice.rank();
    c.equal = (structural.lattice == oracle.lattice);
    if (!c.equal) {
        for (int i = 0; i < structural.lattice.basis().rows(); ++i) {
            Vec v = structural.lattice.basis().row(i);
            if (!oracle.lattice.contains(v)) {
                c.first_diff = v;
                c.first_diff_side = "structural";
                return c;
            }
        }
        for (int i = 0; i < oracle.lattice.basis().rows(); ++i) {
            Vec v = oracle.lattice.basis().row(i);
            if (!structural.lattice.contains(v)) {
                c.first_diff = v;
                c.first_diff_side = "oracle";
                return c;
            }
        }
    }
    return c;
}

RankOneCheck rank_one_check(const Algebra& a, const Lattice& module, const Lattice& d_g,
                            bool f_nontrivial) {
    RankOneCheck r;
    r.module_rank = module.rank();
    r.dg_rank = d_g.rank();
    r.rank_equal = (r.module_rank == r.dg_rank);
    if (f_nontrivial && module.rank() > 0) {
        RingElement u = RingElement(a.ring(), module.basis().row(0));
        RingElement v = u;
        RingElement uv = u * v;
        r.product_checked = true;
        r.product_escapes = !module.contains(uv.coords());
        r.u = to_string(u);
        r.v = to_string(v);
        r.uv = to_string(uv);
    }
    return r;
}

OrientationRecord check_ic_orientation(const Algebra& a, const NonAbelianCenterReport& rep,
                                       const CenterLattice& oracle) {
    OrientationRecord rec;
    bool any = false;
    for (const RayClassInfo& info : rep.ray_classes) {
        if (!info.i_c) continue;
        any = true;
        std::string cls = "{" + a.group().name_of(info.cls.representative) + "}";
        bool primary_ok = !info.i_c->is_zero() &&
                          oracle.lattice.contains(embed_on_class(a, info.cls.elements, *info.i_c));
        bool alt_ok = !info.i_c_alt->is_zero() &&
                      oracle.lattice.contains(embed_on_class(a, info.cls.elements, *info.i_c_alt));
        if (!info.full_normalizer) {
            rec.per_class.push_back("class " + cls + ": N_G(C) != G, no single-class contribution to "
                                    "discriminate the orientation");
            continue;
        }
        std::string verdict;
        if (primary_ok && alt_ok)
            verdict = "both orientations match the oracle (f has order <= 2)";
        else if (primary_ok)
            verdict = "f^-1(x,C) orientation matches the oracle";
        else if (alt_ok)
            verdict = "f(x,C) orientation matches the oracle";
        else
            verdict = "neither orientation embeds into the oracle center";
        rec.per_class.push_back("class " + cls + ": " + verdict);
        if (rec.summary.empty()) rec.summary = verdict;
    }
    if (!any) rec.summary = "no class with a non-G-regular component; orientations not exercised";
    else if (rec.summary.empty()) rec.summary = "no G-stable class discriminates the orientation";
    return rec;
}

}  // namespace cgr
