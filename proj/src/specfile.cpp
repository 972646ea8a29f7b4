#include "cgr/specfile.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace cgr {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct SchemaError {
    std::string path;
    std::string message;
};

const json& require(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw SchemaError{path, "expected an object"};
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError{path, "missing field '" + key + "'"};
    return *it;
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError{path, "expected a string"};
    return j.get<std::string>();
}

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError{path, "expected an integer"};
    return j.get<int>();
}

RingElement parse_element_json(const RingPtr& ring, const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_ring_literal(ring, j.get<std::string>());
        } catch (const Error& e) {
            throw SchemaError{path, e.what()};
        }
    }
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != ring->rank)
            throw SchemaError{path, "coordinate array must have length " + std::to_string(ring->rank)};
        Vec v(ring->rank);
        for (int k = 0; k < ring->rank; ++k) {
            const json& c = j[k];
            if (c.is_number_integer())
                v[k] = Int(c.get<long long>());
            else if (c.is_string())
                v[k] = Int(c.get<std::string>());
            else
                throw SchemaError{path + "[" + std::to_string(k) + "]", "expected integer or string"};
        }
        return RingElement(ring, std::move(v));
    }
    throw SchemaError{path, "expected a ring-element literal (string or coordinate array)"};
}

}  // namespace

SpecLoadResult load_spec_text(const std::string& text) {
    SpecLoadResult out;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        out.parse_error = std::string("invalid JSON: ") + e.what();
        return out;
    }
    try {
        const json& meta = require(j, "metadata", "");
        std::string name = require_string(require(meta, "name", "metadata"), "metadata.name");
        std::string desc = require_string(require(meta, "description", "metadata"), "metadata.description");

        const json& jring = require(j, "ring", "");
        std::string kind = require_string(require(jring, "kind", "ring"), "ring.kind");
        RingPtr ring;
        if (kind == "integers") {
            ring = RingSpec::integers();
        } else if (kind == "cyclotomic") {
            int n = require_int(require(jring, "conductor", "ring"), "ring.conductor");
            if (n < 3) throw SchemaError{"ring.conductor", "conductor must be >= 3"};
            ring = RingSpec::cyclotomic(n);
        } else {
            throw SchemaError{"ring.kind", "unknown ring kind '" + kind + "'"};
        }

        const json& jgroup = require(j, "group", "");
        const json& jnames = require(jgroup, "names", "group");
        if (!jnames.is_array() || jnames.empty()) throw SchemaError{"group.names", "expected a nonempty array"};
        std::vector<std::string> names;
        for (size_t i = 0; i < jnames.size(); ++i) {
            std::string nm = require_string(jnames[i], "group.names[" + std::to_string(i) + "]");
            if (nm.empty() || nm.find_first_of(" \t[]*+/") != std::string::npos)
                throw SchemaError{"group.names[" + std::to_string(i) + "]",
                                  "element names must be nonempty and free of whitespace, brackets, '*', "
                                  "'+' and '/'"};
            names.push_back(std::move(nm));
        }
        const int n = static_cast<int>(names.size());
        int order = require_int(require(jgroup, "order", "group"), "group.order");
        if (order != n) throw SchemaError{"group.order", "order does not match the number of names"};
        auto index_of_name = [&](const std::string& nm, const std::string& path) {
            for (int k = 0; k < n; ++k)
                if (names[k] == nm) return k;
            throw SchemaError{path, "unknown element name '" + nm + "'"};
        };
        const json& jtable = require(jgroup, "table", "group");
        if (!jtable.is_array() || static_cast<int>(jtable.size()) != n)
            throw SchemaError{"group.table", "expected " + std::to_string(n) + " rows"};
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int r = 0; r < n; ++r) {
            const json& row = jtable[r];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw SchemaError{"group.table[" + std::to_string(r) + "]",
                                  "expected " + std::to_string(n) + " entries"};
            for (int c = 0; c < n; ++c) {
                std::string cell = "group.table[" + std::to_string(r) + "][" + std::to_string(c) + "]";
                table[r][c] = index_of_name(require_string(row[c], cell), cell);
            }
        }
        if (auto v = GroupTable::validate(table, names)) {
            out.validation_error = describe(*v);
            return out;
        }
        GroupTable group(std::move(table), std::move(names));

        const json& jtwist = require(j, "twist", "");
        if (!jtwist.is_object()) throw SchemaError{"twist", "expected an object keyed by element name"};
        std::vector<std::optional<RingAut>> auts(n);
        for (auto it = jtwist.begin(); it != jtwist.end(); ++it) {
            std::string path = "twist." + it.key();
            auto idx = group.index_of(it.key());
            if (!idx) throw SchemaError{path, "unknown element name '" + it.key() + "'"};
            try {
                if (it->is_string()) {
                    try {
                        auts[*idx] = RingAut::named(ring, it->get<std::string>());
                    } catch (const Error& e) {
                        throw SchemaError{path, e.what()};  // bad automorphism name: malformed file
                    }
                } else if (it->is_array()) {
                    const json& jm = *it;
                    if (static_cast<int>(jm.size()) != ring->rank) throw SchemaError{path, "matrix must be rank x rank"};
                    IntMat m(ring->rank, ring->rank);
                    for (int r = 0; r < ring->rank; ++r) {
                        if (!jm[r].is_array() || static_cast<int>(jm[r].size()) != ring->rank)
                            throw SchemaError{path, "matrix must be rank x rank"};
                        for (int c2 = 0; c2 < ring->rank; ++c2)
                            m.at(r, c2) = Int(require_int(jm[r][c2], path));
                    }
                    auts[*idx] = RingAut(ring, std::move(m));
                } else {
                    throw SchemaError{path, "expected an automorphism name or matrix"};
                }
            } catch (const Error& e) {
                // A bad matrix is a validation failure, not a parse failure.
                out.validation_error = std::string("twist validation failed at ") + it.key() + ": " + e.what();
                return out;
            }
        }
        for (int g = 0; g < n; ++g)
            if (!auts[g]) throw SchemaError{"twist", "missing automorphism for element '" + group.name_of(g) + "'"};
        Twist twist;
        for (int g = 0; g < n; ++g) twist.auts.push_back(std::move(*auts[g]));

        const json& jalpha = require(j, "cocycle", "");
        if (!jalpha.is_array() || static_cast<int>(jalpha.size()) != n)
            throw SchemaError{"cocycle", "expected " + std::to_string(n) + " rows"};
        CocycleTable alpha;
        for (int r = 0; r < n; ++r) {
            const json& row = jalpha[r];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw SchemaError{"cocycle[" + std::to_string(r) + "]",
                                  "expected " + std::to_string(n) + " entries"};
            std::vector<RingElement> arow;
            for (int c = 0; c < n; ++c)
                arow.push_back(parse_element_json(ring, row[c],
                                                  "cocycle[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
            alpha.alpha.push_back(std::move(arow));
        }

        if (auto v = validate_cocycle(group, twist, alpha)) {
            out.validation_error = describe(*v);
            return out;
        }
        out.algebra.emplace(std::move(group), ring, std::move(twist), std::move(alpha), name, desc);
        return out;
    } catch (const SchemaError& e) {
        out.parse_error = (e.path.empty() ? "" : "at " + e.path + ": ") + e.message;
        return out;
    }
}

SpecLoadResult load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        SpecLoadResult out;
        out.parse_error = "cannot open '" + path + "'";
        return out;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_spec_text(ss.str());
}

std::string serialize_spec(const Algebra& a) {
    ordered_json j;
    j["metadata"] = {{"name", a.name()}, {"description", a.description()}};
    if (a.ring()->kind == RingSpec::Kind::integers) {
        j["ring"] = {{"kind", "integers"}};
    } else {
        j["ring"] = {{"kind", "cyclotomic"}, {"conductor", a.ring()->conductor}};
    }
    const GroupTable& g = a.group();
    ordered_json names = ordered_json::array();
    for (const auto& nm : g.names()) names.push_back(nm);
    ordered_json table = ordered_json::array();
    for (int r = 0; r < g.order(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < g.order(); ++c) row.push_back(g.name_of(g.mul(r, c)));
        table.push_back(std::move(row));
    }
    j["group"] = {{"order", g.order()}, {"names", names}, {"table", table}};

    // Prefer named automorphisms; fall back to an explicit matrix.
    auto aut_json = [&](const RingAut& aut) -> ordered_json {
        if (aut.is_identity()) return "identity";
        if (a.ring()->kind == RingSpec::Kind::cyclotomic) {
            const int n = a.ring()->conductor;
            if (aut == RingAut::named(a.ring(), "conj")) return "conj";
            for (int k = 2; k < n; ++k) {
                if (gcd(Int(k), Int(n)) != 1 || k == n - 1) continue;
                if (aut == RingAut::named(a.ring(), "galois(" + std::to_string(k) + ")"))
                    return "galois(" + std::to_string(k) + ")";
            }
        }
        ordered_json m = ordered_json::array();
        for (int r = 0; r < a.ring()->rank; ++r) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < a.ring()->rank; ++c)
                row.push_back(static_cast<long long>(aut.matrix().at(r, c)));
            m.push_back(std::move(row));
        }
        return m;
    };
    ordered_json twist = ordered_json::object();
    for (int g2 = 0; g2 < g.order(); ++g2) twist[g.name_of(g2)] = aut_json(a.sigma(g2));
    j["twist"] = std::move(twist);

    ordered_json alpha = ordered_json::array();
    for (int r = 0; r < g.order(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < g.order(); ++c) row.push_back(to_string(a.alpha(r, c)));
        alpha.push_back(std::move(row));
    }
    j["cocycle"] = std::move(alpha);
    return j.dump(2) + "\n";
}

GradedElement parse_graded_expression(const Algebra& a, const std::string& text) {
    GradedElement out(a.ring());
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) -> Error {
        return Error("cannot parse element expression '" + text + "': " + why);
    };
    skip_ws();
    if (i >= text.size()) throw fail("empty expression");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (!first) {
            if (i >= text.size()) break;
            if (text[i] == '+') {
                ++i;
            } else if (text[i] == '-') {
                sign = -1;
                ++i;
            } else {
                throw fail("expected '+' or '-' before next term");
            }
            skip_ws();
        } else if (i < text.size() && text[i] == '-') {
            sign = -1;
            ++i;
            skip_ws();
        }
        first = false;
        if (i < text.size() && (text[i] == '*' || text[i] == '+')) throw fail("unexpected operator");
        // coefficient: up to an unparenthesized 'u[' or '*'
        RingElement coeff = RingElement::one(a.ring());
        bool have_coeff = false;
        if (i < text.size() && text[i] == '(') {
            size_t close = text.find(')', i);
            if (close == std::string::npos) throw fail("unbalanced '('");
            coeff = parse_ring_literal(a.ring(), text.substr(i + 1, close - i - 1));
            have_coeff = true;
            i = close + 1;
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        } else if (i + 1 < text.size() ? !(text[i] == 'u' && text[i + 1] == '[') : true) {
            // bare literal until '*u[', '+', '-', or end
            size_t j = i;
            while (j < text.size() && text[j] != '*' && text[j] != '+' && text[j] != '-') ++j;
            // a '-' inside a literal like "1-i" only occurs after '(' handled above,
            // so a bare coefficient here is a single monomial
            if (j > i) {
                std::string lit = text.substr(i, j - i);
                // trim
                while (!lit.empty() && std::isspace(static_cast<unsigned char>(lit.back()))) lit.pop_back();
                if (!lit.empty()) {
                    coeff = parse_ring_literal(a.ring(), lit);
                    have_coeff = true;
                }
            }
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        }
        // unit u[name], optional when the term is a bare scalar
        int degree = a.group().identity();
        if (i < text.size() && text[i] == 'u' && i + 1 < text.size() && text[i + 1] == '[') {
            size_t close = text.find(']', i + 2);
            if (close == std::string::npos) throw fail("unbalanced 'u['");
            std::string nm = text.substr(i + 2, close - i - 2);
            auto idx = a.group().index_of(nm);
            if (!idx) throw fail("unknown element name '" + nm + "'");
            degree = *idx;
            i = close + 1;
        } else if (!have_coeff) {
            throw fail("expected a coefficient or u[...] term");
        }
        if (sign < 0) coeff = -coeff;
        out.add(degree, coeff);
        skip_ws();
    }
    return out;
}

}  // namespace cgr
