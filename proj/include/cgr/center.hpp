#pragma once

#include "cgr/graded.hpp"

namespace cgr {

/// Thrown when a structural method does not apply to the input (non-Abelian
/// group for the Abelian formula, URC failure for the saturation system).
/// The CLI maps it to its own exit code.
class MethodUnavailable : public Error {
public:
    using Error::Error;
};

/// Z(A) as a sublattice of Z^{|G| * rank(D)}: the coordinates of a general
/// element sum_s r_s u_s, degree-major.
struct CenterLattice {
    int ambient = 0;
    Lattice lattice;
    std::vector<int> support;  // degrees with a nonzero block in some basis vector
};

inline int ambient_index(const Algebra& a, int degree, int coord) {
    return degree * a.ring()->rank + coord;
}

GradedElement decode_center_vector(const Algebra& a, const Vec& v);
Vec encode_graded(const Algebra& a, const GradedElement& z);

/// Embeds a coefficient module (lattice in Z^rank) at one degree, or spread
/// with equal coefficient across a class of degrees.
Lattice embed_at_degree(const Algebra& a, int degree, const Lattice& module);
Lattice embed_on_class(const Algebra& a, const std::vector<int>& degrees, const Lattice& module);

/// Brute-force center: the HNF kernel of the integer system expressing
/// z d = d z for every ring basis element and z u_x = u_x z for every x.
/// Independent of every structural formula.
CenterLattice center_oracle(const Algebra& a);

/// Re-multiplies every basis vector against all generators of A and checks
/// the support condition (coefficients vanish off W). Returns a description
/// of the first failure, if any.
std::optional<std::string> verify_center_lattice(const Algebra& a, const CenterLattice& c);

/// D^G = simultaneous fixed lattice of the whole twist.
Lattice invariant_ring_lattice(const Algebra& a);

struct AbelianComponent {
    int degree;
    bool g_regular;               // degree in G_reg: coefficient module is D^G
    Lattice module;               // D^G, or I_s for the non-G-regular degrees
    /// Solution lattice of the full coefficient equation sigma_x(d) = d f(s,x)
    /// over every x in G. Coincides with `module` unless the published
    /// restriction of I_s to the x with f(s,x) != 1 loses a constraint.
    Lattice full_condition;
    std::optional<RingElement> generator;  // single generator when D^G ~ Z
};

struct TrivialVerdict {
    std::vector<std::string> holding_conditions;
    bool structural_trivial = false;  // the formula collapses to D^G u_e
    std::string verdict;              // first holding condition, or "nontrivial"
};

struct AbelianCenterReport {
    std::vector<int> W, w_reg, g_reg;
    Lattice d_g;                           // in Z^rank
    std::vector<AbelianComponent> components;  // nonzero ones, input order
    CenterLattice assembled;
    TrivialVerdict trivial;
    bool pid_dg = false;                   // D^G ~ Z
    bool crystalline_over_dg = false;      // support subgroup + products stay in components
    std::vector<std::string> graded_product_table;  // "v_s * v_t = m * v_st" lines (PID case)
};

AbelianCenterReport center_abelian(const Algebra& a);

struct RayClassInfo {
    RayClass cls;
    std::vector<int> normalizer;   // N_G(C)
    bool full_normalizer = false;
    bool in_delta = false;         // f(x, .) constant on C for every x
    bool g_regular = false;        // in Delta with f(x, C) = 1 for all x
    std::optional<Lattice> i_c;        // intersection with f^{-1}(x, C) (the derived orientation)
    std::optional<Lattice> i_c_alt;    // same with f(x, C), kept for the empirical comparison
};

struct SaturationClass {
    std::vector<int> class_indices;    // indices into the ray-class list
    Lattice solutions;                 // kernel of the coefficient system, ambient |Gamma| * rank
};

struct NonAbelianCenterReport {
    std::vector<int> W, w_reg;
    std::vector<RayClassInfo> ray_classes;
    std::vector<SaturationClass> saturation;
    Lattice d_g;
    CenterLattice assembled;           // from the saturation-class systems (authoritative)
    CenterLattice single_class;        // the restricted single-class layer (diagnostic)
    TrivialVerdict trivial;            // conditions of the single-class analysis
    bool pid_dg = false;
};

/// Structural center for non-Abelian G. Requires the URC for alpha on W;
/// throws MethodUnavailable otherwise (the oracle still applies).
NonAbelianCenterReport center_nonabelian(const Algebra& a);

struct CrossCheck {
    bool equal = false;
    int structural_rank = 0, oracle_rank = 0;
    std::optional<Vec> first_diff;     // first basis vector present on one side only
    std::string first_diff_side;       // "structural" | "oracle"
};
CrossCheck cross_check(const CenterLattice& structural, const CenterLattice& oracle);

/// Rank-1-module property of a nonzero component: Q-dimension equals that of
/// D^G, and (when the defining f value is not 1) the product of two nonzero
/// members escapes the module.
struct RankOneCheck {
    bool rank_equal = false;
    int module_rank = 0, dg_rank = 0;
    bool product_checked = false;
    bool product_escapes = false;
    std::string u, v, uv;              // printed witnesses
};
RankOneCheck rank_one_check(const Algebra& a, const Lattice& module, const Lattice& d_g,
                            bool f_nontrivial);

/// Which I_C orientation is consistent with the oracle, per class where the
/// single-class layer contributes a non-G-regular component.
struct OrientationRecord {
    std::vector<std::string> per_class;  // "class {g}: f^-1 orientation matches oracle" etc
    std::string summary;
};
OrientationRecord check_ic_orientation(const Algebra& a, const NonAbelianCenterReport& rep,
                                       const CenterLattice& oracle);

}  // namespace cgr
