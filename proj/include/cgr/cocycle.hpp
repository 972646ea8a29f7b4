#pragma once

#include "cgr/group.hpp"
#include "cgr/ring.hpp"

#include <array>

namespace cgr {

/// The twist: one ring automorphism per group element, indexed in group
/// element order.
struct Twist {
    std::vector<RingAut> auts;
    const RingAut& operator[](int g) const { return auts[g]; }
};

/// The 2-cocycle: a |G| x |G| table of nonzero ring elements,
/// alpha[g][h] = alpha(g, h).
struct CocycleTable {
    std::vector<std::vector<RingElement>> alpha;
    const RingElement& operator()(int g, int h) const { return alpha[g][h]; }
};

/// Witness for a failed twist/cocycle identity. `check` is one of
/// "twist_size", "twist_identity", "twist_homomorphism", "alpha_shape",
/// "alpha_zero", "normalization", "inverse_normalization", "cocycle_identity", "twisted_commutation";
/// `where` holds the offending element indices.
struct CocycleViolation {
    std::string check;
    std::vector<int> where;
    std::string detail;
};

std::optional<CocycleViolation> validate_twist(const GroupTable& g, const Twist& twist);

/// Exhaustive validation: every triple for the cocycle identity, every pair
/// and ring basis element for the twisted-commutation identity, all
/// normalizations. Stops at the first violation.
std::optional<CocycleViolation> validate_cocycle(const GroupTable& g, const Twist& twist,
                                                 const CocycleTable& alpha);

/// f_alpha(x, s) = alpha(x, s) / alpha(x s x^-1, x), a value in K.
FracScalar f_alpha(const GroupTable& g, const CocycleTable& alpha, int x, int s);

/// Elements of the twist kernel W = {g : sigma_g = id}, in input order.
std::vector<int> twist_kernel(const GroupTable& g, const Twist& twist);

/// Regular elements in the sense of alpha-commutation on the centralizer
/// (within the given scope): {x in scope : alpha(x,g) = alpha(g,x) for all
/// g in C_scope(x)}.
std::vector<int> alpha_commuting_regular(const GroupTable& g, const CocycleTable& alpha,
                                         const std::vector<int>& scope);

/// Regular elements in the f sense: {s in scope : f(x,s) = 1 for all x in
/// scope}.
std::vector<int> f_regular(const GroupTable& g, const CocycleTable& alpha,
                           const std::vector<int>& scope);

/// Both regularity notions plus the universal regularity condition, reported
/// together. W_reg/G_reg use the f-based definition; the alpha-commutation
/// variants are carried alongside since the two notions only provably agree
/// under the URC.
struct RegularityReport {
    std::vector<int> W;
    std::vector<int> w_reg;                 // f-regular within W
    std::vector<int> g_reg;                 // f-regular within G
    std::vector<int> commuting_reg_in_w;    // alpha-commuting regular within W
    std::vector<int> commuting_reg_in_g;    // alpha-commuting regular within G
    bool urc_holds = false;
    std::optional<std::array<int, 2>> urc_witness;  // (x, s) with f(x,s) != 1
};

RegularityReport regularity(const GroupTable& g, const Twist& twist, const CocycleTable& alpha);

/// URC for alpha on W: f(x, s) = 1 for every alpha-commuting regular s of W
/// and every x in W. Returns the first witness pair on failure.
struct UrcResult {
    bool holds = true;
    std::optional<std::array<int, 2>> witness;
};
UrcResult check_urc(const GroupTable& g, const CocycleTable& alpha, const std::vector<int>& w);

/// f(g, xy) = f(g, x) * sigma_x(f(g, y)) over all x, y for a fixed degree g.
struct CrossedHomResult {
    bool holds = true;
    std::optional<std::array<int, 2>> witness;  // (x, y)
};
CrossedHomResult crossed_hom_check(const GroupTable& g, const Twist& twist, const CocycleTable& alpha,
                                   int degree);

/// f(kx, g) = f(x, g) * f(k, x g x^-1) for all k, g in W, x in G.
struct ShiftLemmaResult {
    bool holds = true;
    std::optional<std::array<int, 3>> witness;  // (k, x, g)
};
ShiftLemmaResult check_shift_lemma(const GroupTable& g, const CocycleTable& alpha,
                                   const std::vector<int>& w);

}  // namespace cgr
