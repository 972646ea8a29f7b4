#include "cgr/catalog.hpp"

#include "cgr/specfile.hpp"

#include <functional>

namespace cgr {

namespace {

Twist make_twist(const GroupTable& g, const RingPtr& ring, const std::vector<std::string>& names) {
    Twist t;
    for (int i = 0; i < g.order(); ++i) t.auts.push_back(RingAut::named(ring, names[i]));
    return t;
}

Twist trivial_twist(const GroupTable& g, const RingPtr& ring) {
    Twist t;
    for (int i = 0; i < g.order(); ++i) t.auts.push_back(RingAut::identity(ring));
    return t;
}

CocycleTable trivial_alpha(const GroupTable& g, const RingPtr& ring) {
    CocycleTable a;
    a.alpha.assign(g.order(), std::vector<RingElement>(g.order(), RingElement::one(ring)));
    return a;
}

// alpha(g,h) = beta_g sigma_g(beta_h) beta_{gh}^-1 for a unit-valued beta.
// Always a cocycle for a homomorphic twist; entries must land in D.
CocycleTable coboundary_alpha(const GroupTable& g, const RingPtr& ring, const Twist& twist,
                              const std::vector<RingElement>& beta) {
    CocycleTable a;
    for (int x = 0; x < g.order(); ++x) {
        std::vector<RingElement> row;
        for (int y = 0; y < g.order(); ++y) {
            FracScalar v = FracScalar::from_ring(beta[x] * twist.auts[x].apply(beta[y])) *
                           FracScalar::from_ring(beta[g.mul(x, y)]).inverse();
            if (!v.is_integral())
                throw Error("coboundary value escapes D at (" + g.name_of(x) + "," + g.name_of(y) + ")");
            row.push_back(v.num());
        }
        a.alpha.push_back(std::move(row));
    }
    return a;
}

Algebra build_quaternion() {
    GroupTable g = make_klein4();
    RingPtr ring = RingSpec::integers();
    CocycleTable alpha = trivial_alpha(g, ring);
    auto set = [&](const char* x, const char* y, int v) {
        alpha.alpha[*g.index_of(x)][*g.index_of(y)] = RingElement::from_int(ring, v);
    };
    set("a", "a", -1);
    set("b", "b", -1);
    set("c", "c", -1);
    set("a", "b", 1);
    set("b", "a", -1);
    set("b", "c", 1);
    set("c", "b", -1);
    set("c", "a", 1);
    set("a", "c", -1);
    Twist t = trivial_twist(g, ring);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "quaternion",
                   "quaternion order over Z graded by V4 (u_a, u_b, u_c as i, j, k)");
}

Algebra build_z_s3() {
    GroupTable g = make_s3();
    RingPtr ring = RingSpec::integers();
    Twist t = trivial_twist(g, ring);
    CocycleTable alpha = trivial_alpha(g, ring);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "z_s3",
                   "group ring Z[S3]: trivial twist and cocycle");
}

Algebra build_z_q8() {
    GroupTable g = make_q8();
    RingPtr ring = RingSpec::integers();
    Twist t = trivial_twist(g, ring);
    CocycleTable alpha = trivial_alpha(g, ring);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "z_q8",
                   "group ring Z[Q8]: trivial twist and cocycle");
}

Algebra build_z_d4_twisted() {
    GroupTable g = make_d4();
    RingPtr ring = RingSpec::integers();
    CocycleTable alpha = trivial_alpha(g, ring);
    // alpha(r^i s^j, r^k s^l) = (-1)^(j k); a sign cocycle that violates the
    // URC on W = D4, so only the oracle applies.
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            if ((x / 4) * (y % 4) % 2 == 1) alpha.alpha[x][y] = RingElement::from_int(ring, -1);
    Twist t = trivial_twist(g, ring);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "z_d4_twisted",
                   "sign-twisted group ring of D4 over Z; URC fails, structural formulas refused");
}

Algebra build_gauss_c2() {
    GroupTable g = make_cyclic(2);
    RingPtr ring = RingSpec::cyclotomic(4);
    Twist t = make_twist(g, ring, {"identity", "conj"});
    CocycleTable alpha = trivial_alpha(g, ring);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "gauss_c2",
                   "Z[i] twisted by C2 acting by conjugation, trivial cocycle");
}

Algebra build_gauss_c4(bool twisted) {
    GroupTable g = make_cyclic(4);
    RingPtr ring = RingSpec::cyclotomic(4);
    Twist t = make_twist(g, ring, {"identity", "conj", "identity", "conj"});
    if (!twisted) {
        CocycleTable alpha = trivial_alpha(g, ring);
        return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "gauss_c4",
                       "Z[i] twisted by C4 (x acts by conjugation), trivial cocycle");
    }
    std::vector<RingElement> beta(4, RingElement::one(ring));
    beta[2] = parse_ring_literal(ring, "i");  // beta_{x2} = i
    CocycleTable alpha = coboundary_alpha(g, ring, t, beta);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "gauss_c4_twisted",
                   "Z[i] twisted by C4 with the coboundary cocycle of beta_{x2} = i");
}

Algebra build_gauss_s3_twisted() {
    GroupTable g = make_s3();
    RingPtr ring = RingSpec::cyclotomic(4);
    Twist t = make_twist(g, ring, {"identity", "identity", "identity", "conj", "conj", "conj"});
    std::vector<RingElement> beta(6, RingElement::one(ring));
    beta[*g.index_of("g")] = parse_ring_literal(ring, "i");
    beta[*g.index_of("g2")] = parse_ring_literal(ring, "-1");
    CocycleTable alpha = coboundary_alpha(g, ring, t, beta);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "gauss_s3_twisted",
                   "Z[i] twisted by S3 (odd elements conjugate) with the coboundary of beta_g = i, "
                   "beta_g2 = -1");
}

Algebra build_eisenstein_s3() {
    GroupTable g = make_s3();
    RingPtr ring = RingSpec::cyclotomic(3);
    Twist t = make_twist(g, ring, {"identity", "identity", "identity", "conj", "conj", "conj"});
    CocycleTable alpha = trivial_alpha(g, ring);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "eisenstein_s3",
                   "Z[w] twisted by S3 through the sign character (transpositions conjugate), "
                   "trivial cocycle");
}

Algebra build_zeta8_v4(bool twisted) {
    GroupTable g = make_klein4();
    RingPtr ring = RingSpec::cyclotomic(8);
    Twist t = make_twist(g, ring, {"identity", "galois(5)", "galois(5)", "identity"});
    if (!twisted) {
        CocycleTable alpha = trivial_alpha(g, ring);
        return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "zeta8_v4",
                       "Z[zeta8] twisted by V4 with kernel {e,c} (a, b act by zeta -> zeta^5), "
                       "trivial cocycle");
    }
    std::vector<RingElement> beta(4, RingElement::one(ring));
    beta[*g.index_of("c")] = parse_ring_literal(ring, "z");
    CocycleTable alpha = coboundary_alpha(g, ring, t, beta);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "zeta8_v4_twisted",
                   "Z[zeta8] twisted by V4 with kernel {e,c} and the coboundary cocycle of "
                   "beta_c = zeta");
}

Algebra build_zeta8_q8_twisted() {
    GroupTable g = make_q8();
    RingPtr ring = RingSpec::cyclotomic(8);
    Twist t = make_twist(g, ring, {"identity", "identity", "identity", "identity",
                                   "galois(3)", "galois(3)", "galois(3)", "galois(3)"});
    std::vector<RingElement> beta(8, RingElement::one(ring));
    beta[*g.index_of("a2")] = parse_ring_literal(ring, "z");
    CocycleTable alpha = coboundary_alpha(g, ring, t, beta);
    return Algebra(std::move(g), ring, std::move(t), std::move(alpha), "zeta8_q8_twisted",
                   "Z[zeta8] twisted by Q8 with kernel <a> (b-coset acts by zeta -> zeta^3) and the "
                   "coboundary cocycle of beta_{a2} = zeta");
}

struct CatalogItem {
    CatalogEntry entry;
    std::function<Algebra()> build;
};

const std::vector<CatalogItem>& items() {
    static const std::vector<CatalogItem> v = [] {
        std::vector<CatalogItem> out;
        auto add = [&](std::function<Algebra()> b) {
            Algebra a = b();
            out.push_back(CatalogItem{CatalogEntry{a.name(), a.description()}, std::move(b)});
        };
        add(build_quaternion);
        add(build_z_s3);
        add(build_z_q8);
        add(build_z_d4_twisted);
        add(build_gauss_c2);
        add([] { return build_gauss_c4(false); });
        add([] { return build_gauss_c4(true); });
        add(build_gauss_s3_twisted);
        add(build_eisenstein_s3);
        add([] { return build_zeta8_v4(false); });
        add([] { return build_zeta8_v4(true); });
        add(build_zeta8_q8_twisted);
        return out;
    }();
    return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> v = [] {
        std::vector<CatalogEntry> out;
        for (const auto& item : items()) out.push_back(item.entry);
        return out;
    }();
    return v;
}

Algebra catalog_build(const std::string& name) {
    for (const auto& item : items())
        if (item.entry.name == name) return item.build();
    throw Error("unknown catalog example '" + name + "'");
}

std::string catalog_emit(const std::string& name) {
    return serialize_spec(catalog_build(name));
}

}  // namespace cgr
