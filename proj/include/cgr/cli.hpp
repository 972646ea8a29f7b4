#pragma once

#include <string>

namespace cgr {

/// CLI commands as pure functions so they can be tested without a process
/// boundary. Exit codes: 0 ok, 1 validation failure or center discrepancy,
/// 2 parse error, 3 method inapplicable.
struct CmdResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CmdResult cmd_validate(const std::string& path);
CmdResult cmd_center(const std::string& path, const std::string& method, bool json);
CmdResult cmd_mul(const std::string& path, const std::string& lhs, const std::string& rhs);
CmdResult cmd_catalog_list();
CmdResult cmd_catalog_emit(const std::string& name);

}  // namespace cgr
