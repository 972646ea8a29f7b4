#include "cgr/cli.hpp"

#include "cgr/catalog.hpp"
#include "cgr/report.hpp"
#include "cgr/specfile.hpp"

#include <functional>
#include <sstream>

namespace cgr {

namespace {

// Loads a spec and maps the failure kinds onto exit codes; on success runs fn.
CmdResult with_algebra(const std::string& path, const std::function<CmdResult(const Algebra&)>& fn) {
    SpecLoadResult r = load_spec_file(path);
    if (r.parse_error) return {2, "", "parse error: " + *r.parse_error + "\n"};
    if (r.validation_error) return {1, "", "validation failure: " + *r.validation_error + "\n"};
    return fn(*r.algebra);
}

}  // namespace

CmdResult cmd_validate(const std::string& path) {
    return with_algebra(path, [&](const Algebra& a) {
        std::ostringstream out;
        out << "ok: " << (a.name().empty() ? path : a.name()) << "\n";
        out << "  ring " << a.ring()->name() << ", group order " << a.group().order()
            << (a.group().is_abelian() ? " (abelian)" : " (non-abelian)") << "\n";
        out << "  all cocycle and twist identities verified exhaustively\n";
        return CmdResult{0, out.str(), ""};
    });
}

CmdResult cmd_center(const std::string& path, const std::string& method, bool json) {
    return with_algebra(path, [&](const Algebra& a) {
        try {
            CenterReportDocument doc = build_center_report(a, method);
            std::string text = json ? report_to_json(a, doc) : report_to_text(a, doc);
            return CmdResult{report_exit_code(doc), text, ""};
        } catch (const MethodUnavailable& e) {
            return CmdResult{3, "", std::string("method inapplicable: ") + e.what() + "\n"};
        }
    });
}

CmdResult cmd_mul(const std::string& path, const std::string& lhs, const std::string& rhs) {
    return with_algebra(path, [&](const Algebra& a) {
        try {
            GradedElement x = parse_graded_expression(a, lhs);
            GradedElement y = parse_graded_expression(a, rhs);
            return CmdResult{0, to_string(a, multiply(a, x, y)) + "\n", ""};
        } catch (const Error& e) {
            return CmdResult{2, "", std::string("parse error: ") + e.what() + "\n"};
        }
    });
}

CmdResult cmd_catalog_list() {
    std::ostringstream out;
    for (const CatalogEntry& e : catalog_list()) out << e.name << "  --  " << e.description << "\n";
    return {0, out.str(), ""};
}

CmdResult cmd_catalog_emit(const std::string& name) {
    try {
        return {0, catalog_emit(name), ""};
    } catch (const Error& e) {
        return {2, "", std::string(e.what()) + "\n"};
    }
}

}  // namespace cgr
