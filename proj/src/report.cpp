#include "cgr/report.hpp"

#include <json.hpp>

#include <sstream>

namespace cgr {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json lattice_json(const Lattice& l) {
    ordered_json basis = ordered_json::array();
    for (int i = 0; i < l.basis().rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < l.basis().cols(); ++j) row.push_back(l.basis().at(i, j).str());
        basis.push_back(std::move(row));
    }
    return ordered_json{{"ambient", l.ambient_rank()}, {"rank", l.rank()}, {"basis", std::move(basis)}};
}

Lattice lattice_from_json(const nlohmann::json& j) {
    int ambient = j.at("ambient").get<int>();
    const auto& basis = j.at("basis");
    IntMat rows(static_cast<int>(basis.size()), ambient);
    for (size_t i = 0; i < basis.size(); ++i)
        for (int c = 0; c < ambient; ++c) rows.at(static_cast<int>(i), c) = Int(basis[i][c].get<std::string>());
    return Lattice(ambient, std::move(rows));
}

ordered_json names_json(const Algebra& a, const std::vector<int>& elems) {
    ordered_json out = ordered_json::array();
    for (int g : elems) out.push_back(a.group().name_of(g));
    return out;
}

ordered_json center_lattice_json(const Algebra& a, const CenterLattice& c) {
    ordered_json j;
    j["lattice"] = lattice_json(c.lattice);
    j["support"] = names_json(a, c.support);
    ordered_json printed = ordered_json::array();
    for (int i = 0; i < c.lattice.basis().rows(); ++i)
        printed.push_back(to_string(a, decode_center_vector(a, c.lattice.basis().row(i))));
    j["basis_elements"] = std::move(printed);
    return j;
}

ordered_json cross_check_json(const CrossCheck& c) {
    ordered_json j;
    j["status"] = c.equal ? "equal" : "discrepancy";
    j["structural_rank"] = c.structural_rank;
    j["oracle_rank"] = c.oracle_rank;
    if (c.first_diff) {
        ordered_json v = ordered_json::array();
        for (const Int& x : *c.first_diff) v.push_back(x.str());
        j["first_diff"] = {{"side", c.first_diff_side}, {"vector", std::move(v)}};
    }
    return j;
}

}  // namespace

CenterReportDocument build_center_report(const Algebra& a, const std::string& method) {
    if (method != "structural" && method != "oracle" && method != "both")
        throw MethodUnavailable("unknown method '" + method + "' (expected structural, oracle or both)");
    CenterReportDocument doc;
    doc.example = a.name();
    doc.description = a.description();
    doc.method = method;
    doc.reg = regularity(a.group(), a.twist(), a.cocycle());
    doc.inverse_identity = check_inverse_product_identity(a);
    doc.d_g = invariant_ring_lattice(a);

    const bool want_oracle = (method != "structural");
    const bool want_structural = (method != "oracle");

    if (want_oracle) {
        doc.oracle = center_oracle(a);
        if (auto bad = verify_center_lattice(a, *doc.oracle))
            throw Error("oracle center failed re-verification: " + *bad);
        doc.oracle_verified = true;
    }
    if (want_structural) {
        if (a.group().is_abelian()) {
            doc.abelian = center_abelian(a);
        } else {
            // Propagates MethodUnavailable when the URC fails and the caller
            // asked for structural only; with method=both the report records
            // the reason and the oracle result stands alone.
            try {
                doc.nonabelian = center_nonabelian(a);
            } catch (const MethodUnavailable& e) {
                if (!want_oracle) throw;
                doc.structural_unavailable = e.what();
            }
        }
    }
    if (doc.oracle) {
        doc.oracle_trivial =
            (doc.oracle->lattice == embed_at_degree(a, a.group().identity(), doc.d_g));
    }
    if (doc.oracle && (doc.abelian || doc.nonabelian)) {
        const CenterLattice& structural = doc.abelian ? doc.abelian->assembled : doc.nonabelian->assembled;
        doc.check = cross_check(structural, *doc.oracle);
        const TrivialVerdict& tv = doc.abelian ? doc.abelian->trivial : doc.nonabelian->trivial;
        doc.trivial_verdict_consistent = (tv.structural_trivial == *doc.oracle_trivial);
        if (doc.nonabelian) {
            doc.single_class_check = cross_check(doc.nonabelian->single_class, *doc.oracle);
            doc.documented_finding = !doc.single_class_check->equal;
            doc.orientation = check_ic_orientation(a, *doc.nonabelian, *doc.oracle);
        }
    }
    return doc;
}

int report_exit_code(const CenterReportDocument& doc) {
    if (doc.oracle && !doc.oracle_verified) return 1;
    if (doc.check && !doc.check->equal) return 1;
    if (doc.trivial_verdict_consistent && !*doc.trivial_verdict_consistent) return 1;
    return 0;
}

std::string report_to_json(const Algebra& a, const CenterReportDocument& doc) {
    const GroupTable& G = a.group();
    ordered_json j;
    j["schema"] = "cgr-center-report/1";
    j["example"] = doc.example;
    j["description"] = doc.description;
    j["method"] = doc.method;
    j["ring"] = {{"name", a.ring()->name()},
                 {"kind", a.ring()->kind == RingSpec::Kind::integers ? "integers" : "cyclotomic"},
                 {"conductor", a.ring()->conductor},
                 {"rank", a.ring()->rank}};
    ordered_json gnames = ordered_json::array();
    for (const auto& nm : G.names()) gnames.push_back(nm);
    j["group"] = {{"order", G.order()}, {"abelian", G.is_abelian()}, {"names", std::move(gnames)}};

    ordered_json reg;
    reg["W"] = names_json(a, doc.reg.W);
    reg["w_reg"] = names_json(a, doc.reg.w_reg);
    reg["g_reg"] = names_json(a, doc.reg.g_reg);
    reg["alpha_commuting_regular_in_W"] = names_json(a, doc.reg.commuting_reg_in_w);
    reg["alpha_commuting_regular_in_G"] = names_json(a, doc.reg.commuting_reg_in_g);
    reg["urc_holds"] = doc.reg.urc_holds;
    if (doc.reg.urc_witness)
        reg["urc_witness"] = {G.name_of((*doc.reg.urc_witness)[0]), G.name_of((*doc.reg.urc_witness)[1])};
    j["regularity"] = std::move(reg);

    j["inverse_product_identity"] = {{"displayed_orientation_holds", doc.inverse_identity.displayed_holds},
                                     {"derived_orientation_holds", doc.inverse_identity.derived_holds}};
    j["d_g"] = lattice_json(doc.d_g);

    if (doc.oracle) {
        ordered_json o = center_lattice_json(a, *doc.oracle);
        o["verified"] = doc.oracle_verified;
        j["oracle"] = std::move(o);
    }

    if (doc.abelian) {
        const AbelianCenterReport& r = *doc.abelian;
        ordered_json s;
        s["method"] = "abelian";
        ordered_json comps = ordered_json::array();
        for (const auto& c : r.components) {
            ordered_json cj;
            cj["degree"] = G.name_of(c.degree);
            cj["kind"] = c.g_regular ? "D^G" : "I_s";
            cj["module"] = lattice_json(c.module);
            cj["full_condition_equal"] = (c.full_condition == c.module);
            if (c.generator) cj["generator"] = to_string(*c.generator);
            comps.push_back(std::move(cj));
        }
        s["components"] = std::move(comps);
        s["center"] = center_lattice_json(a, r.assembled);
        s["trivial"] = {{"verdict", r.trivial.verdict}, {"conditions", r.trivial.holding_conditions}};
        ordered_json pid;
        pid["dg_is_Z"] = r.pid_dg;
        pid["crystalline_graded_over_DG"] = r.crystalline_over_dg;
        pid["products"] = r.graded_product_table;
        s["pid"] = std::move(pid);
        j["structural"] = std::move(s);
    } else if (doc.nonabelian) {
        const NonAbelianCenterReport& r = *doc.nonabelian;
        ordered_json s;
        s["method"] = "saturation";
        ordered_json classes = ordered_json::array();
        for (const auto& info : r.ray_classes) {
            ordered_json cj;
            cj["representative"] = G.name_of(info.cls.representative);
            cj["elements"] = names_json(a, info.cls.elements);
            cj["normalizer"] = names_json(a, info.normalizer);
            cj["full_normalizer"] = info.full_normalizer;
            cj["in_delta"] = info.in_delta;
            cj["g_regular"] = info.g_regular;
            if (info.i_c) cj["I_C"] = lattice_json(*info.i_c);
            if (info.i_c_alt) cj["I_C_alt_orientation"] = lattice_json(*info.i_c_alt);
            classes.push_back(std::move(cj));
        }
        s["ray_classes"] = std::move(classes);
        ordered_json gammas = ordered_json::array();
        for (const auto& gamma : r.saturation) {
            ordered_json gj;
            ordered_json reps = ordered_json::array();
            for (int ci : gamma.class_indices) reps.push_back(G.name_of(r.ray_classes[ci].cls.representative));
            gj["classes"] = std::move(reps);
            gj["solutions"] = lattice_json(gamma.solutions);
            gammas.push_back(std::move(gj));
        }
        s["saturation_classes"] = std::move(gammas);
        s["center"] = center_lattice_json(a, r.assembled);
        s["trivial"] = {{"verdict", r.trivial.verdict}, {"conditions", r.trivial.holding_conditions}};
        s["single_class_layer"] = center_lattice_json(a, r.single_class);
        j["structural"] = std::move(s);
    } else if (doc.structural_unavailable) {
        j["structural"] = {{"method", "unavailable"}, {"reason", *doc.structural_unavailable}};
    }

    if (doc.check) {
        ordered_json c = cross_check_json(*doc.check);
        if (doc.oracle_trivial) c["oracle_trivial"] = *doc.oracle_trivial;
        if (doc.trivial_verdict_consistent)
            c["trivial_verdict_consistent"] = *doc.trivial_verdict_consistent;
        j["cross_check"] = std::move(c);
    }
    if (doc.single_class_check) {
        ordered_json d = cross_check_json(*doc.single_class_check);
        d["documented_finding"] = doc.documented_finding;
        if (doc.documented_finding)
            d["note"] = "the restricted single-class analysis under-reports the center; the "
                        "saturation-class system is the authoritative structural answer";
        if (doc.orientation) {
            d["orientation"] = {{"summary", doc.orientation->summary},
                                {"per_class", doc.orientation->per_class}};
        }
        j["single_class_diagnostic"] = std::move(d);
    }
    return j.dump(2) + "\n";
}

ParsedReportLattices parse_report_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ParsedReportLattices out;
    out.d_g = lattice_from_json(j.at("d_g"));
    if (j.contains("oracle")) out.oracle = lattice_from_json(j.at("oracle").at("lattice"));
    if (j.contains("structural") && j.at("structural").contains("center"))
        out.structural = lattice_from_json(j.at("structural").at("center").at("lattice"));
    if (j.contains("structural") && j.at("structural").contains("single_class_layer"))
        out.single_class = lattice_from_json(j.at("structural").at("single_class_layer").at("lattice"));
    return out;
}

std::string report_to_text(const Algebra& a, const CenterReportDocument& doc) {
    const GroupTable& G = a.group();
    std::ostringstream out;
    auto name_list = [&](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + G.name_of(v[i]);
        return s + "}";
    };
    out << "example: " << doc.example;
    if (!doc.description.empty()) out << " -- " << doc.description;
    out << "\n";
    out << "ring: " << a.ring()->name() << " (rank " << a.ring()->rank << "), group order " << G.order()
        << (G.is_abelian() ? ", abelian" : ", non-abelian") << "\n";
    out << "W = Ker sigma = " << name_list(doc.reg.W) << "\n";
    out << "W_reg = " << name_list(doc.reg.w_reg) << ", G_reg = " << name_list(doc.reg.g_reg) << "\n";
    out << "URC on W: " << (doc.reg.urc_holds ? "holds" : "fails") << "\n";
    if (doc.oracle) {
        out << "oracle center: rank " << doc.oracle->lattice.rank() << ", support "
            << name_list(doc.oracle->support) << (doc.oracle_verified ? " (re-verified)" : "") << "\n";
        for (int i = 0; i < doc.oracle->lattice.basis().rows(); ++i)
            out << "  z" << i + 1 << " = "
                << to_string(a, decode_center_vector(a, doc.oracle->lattice.basis().row(i))) << "\n";
    }
    if (doc.abelian) {
        const auto& r = *doc.abelian;
        out << "structural center (abelian formula): rank " << r.assembled.lattice.rank() << "\n";
        for (const auto& c : r.components) {
            out << "  degree " << G.name_of(c.degree) << ": " << (c.g_regular ? "D^G" : "I_s")
                << " of rank " << c.module.rank();
            if (c.generator) out << ", generator " << to_string(*c.generator);
            out << "\n";
        }
        out << "trivial-center verdict: " << r.trivial.verdict << "\n";
        if (r.pid_dg)
            out << "D^G ~ Z: center is crystalline graded over D^G: "
                << (r.crystalline_over_dg ? "yes" : "no") << "\n";
    } else if (doc.nonabelian) {
        const auto& r = *doc.nonabelian;
        out << "structural center (saturation-class system): rank " << r.assembled.lattice.rank() << "\n";
        for (const auto& gamma : r.saturation) {
            out << "  Gamma = {";
            for (size_t i = 0; i < gamma.class_indices.size(); ++i)
                out << (i ? ", " : "")
                    << "[" << G.name_of(r.ray_classes[gamma.class_indices[i]].cls.representative) << "]";
            out << "}: solution rank " << gamma.solutions.rank() << "\n";
        }
        out << "single-class layer rank " << r.single_class.lattice.rank() << "\n";
        out << "trivial-center verdict: " << r.trivial.verdict << "\n";
    } else if (doc.structural_unavailable) {
        out << "structural center: unavailable -- " << *doc.structural_unavailable << "\n";
    }
    if (doc.check) {
        out << "cross-check (structural vs oracle): " << (doc.check->equal ? "EQUAL" : "DISCREPANCY")
            << "\n";
        if (doc.trivial_verdict_consistent)
            out << "trivial-center verdict vs oracle: "
                << (*doc.trivial_verdict_consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    if (doc.single_class_check) {
        out << "single-class diagnostic vs oracle: "
            << (doc.single_class_check->equal ? "equal" : "under-reports (documented finding)") << "\n";
        if (doc.orientation) out << "I_C orientation: " << doc.orientation->summary << "\n";
    }
    return out.str();
}

}  // namespace cgr
