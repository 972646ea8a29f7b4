#include "cgr/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"cgr -- exact arithmetic and center computation for crystalline graded rings"};
    app.require_subcommand(1);

    std::string path, method = "both", lhs, rhs, name;
    bool json = false;

    auto* validate = app.add_subcommand("validate", "validate a ring-spec file (group, twist, cocycle)");
    validate->add_option("path", path, "spec file")->required();

    auto* center = app.add_subcommand("center", "compute Z(A) and cross-check structural vs oracle");
    center->add_option("path", path, "spec file")->required();
    center->add_option("--method", method, "structural | oracle | both")->default_val("both");
    center->add_flag("--json", json, "emit the machine-readable report");

    auto* mul = app.add_subcommand("mul", "multiply two elements given as 'coeff*u[name] + ...'");
    mul->add_option("path", path, "spec file")->required();
    mul->add_option("lhs", lhs, "left factor")->required();
    mul->add_option("rhs", rhs, "right factor")->required();

    auto* catalog = app.add_subcommand("catalog", "list or emit the shipped examples");
    auto* list = catalog->add_subcommand("list", "list example names");
    auto* emit = catalog->add_subcommand("emit", "print an example spec file");
    emit->add_option("name", name, "example name")->required();
    catalog->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    cgr::CmdResult r;
    if (*validate)
        r = cgr::cmd_validate(path);
    else if (*center)
        r = cgr::cmd_center(path, method, json);
    else if (*mul)
        r = cgr::cmd_mul(path, lhs, rhs);
    else if (*list)
        r = cgr::cmd_catalog_list();
    else if (*emit)
        r = cgr::cmd_catalog_emit(name);

    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
