#pragma once

#include "cgr/center.hpp"

namespace cgr {

/// Everything the `center` command reports, for one input and method.
struct CenterReportDocument {
    std::string example, description, method;
    RegularityReport reg;
    InverseIdentityReport inverse_identity;
    Lattice d_g;

    std::optional<CenterLattice> oracle;
    bool oracle_verified = false;

    std::optional<AbelianCenterReport> abelian;
    std::optional<NonAbelianCenterReport> nonabelian;
    std::optional<std::string> structural_unavailable;

    std::optional<CrossCheck> check;              // structural (authoritative) vs oracle
    std::optional<CrossCheck> single_class_check; // restricted single-class layer vs oracle
    bool documented_finding = false;              // single-class layer under-reports, as analyzed
    std::optional<OrientationRecord> orientation;
    /// Oracle view of triviality (Z(A) = D^G u_e as a lattice) and its
    /// agreement with the structural verdict.
    std::optional<bool> oracle_trivial;
    std::optional<bool> trivial_verdict_consistent;
};

/// Runs the requested computations. method is "structural", "oracle" or
/// "both". Throws MethodUnavailable when a structural method is requested
/// but does not apply.
CenterReportDocument build_center_report(const Algebra& a, const std::string& method);

/// 0 when everything requested agrees (a single-class under-report is the
/// documented finding, not a failure); 1 when the authoritative cross-check
/// found a discrepancy or the oracle failed re-verification.
int report_exit_code(const CenterReportDocument& doc);

/// Machine-readable form. Deterministic; every integer is serialized as a
/// string; re-parsing reproduces the lattices exactly.
std::string report_to_json(const Algebra& a, const CenterReportDocument& doc);

/// Lattices recovered from the machine form, for round-trip checking.
struct ParsedReportLattices {
    std::optional<Lattice> oracle;
    std::optional<Lattice> structural;
    std::optional<Lattice> single_class;
    Lattice d_g;
};
ParsedReportLattices parse_report_json(const std::string& text);

/// Human-readable rendering.
std::string report_to_text(const Algebra& a, const CenterReportDocument& doc);

}  // namespace cgr
