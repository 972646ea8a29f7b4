#pragma once

#include "cgr/int_types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgr {

/// Witness for a failed group-table check: which rule broke and where.
struct GroupViolation {
    std::string check;        // "shape", "latin_square", "associativity", "identity", "inverse"
    std::vector<int> where;   // offending indices (row/col or triple)
    std::string detail;
};

/// A finite group as a validated Cayley table. Element order is the input
/// order and every report or tie-break uses it.
class GroupTable {
public:
    /// Validates shape, Latin-square rows/columns, associativity over all
    /// triples, identity and two-sided inverses. Returns the table or the
    /// first violation.
    static std::optional<GroupViolation> validate(const std::vector<std::vector<int>>& table,
                                                  const std::vector<std::string>& names);
    GroupTable(std::vector<std::vector<int>> table, std::vector<std::string> names);  // throws on violation

    int order() const { return n_; }
    int mul(int g, int h) const { return table_[g][h]; }
    int inv(int g) const { return inv_[g]; }
    int identity() const { return e_; }
    int conj(int x, int g) const { return mul(mul(x, g), inv_[x]); }  // x g x^-1
    bool is_abelian() const { return abelian_; }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name_of(int g) const { return names_[g]; }
    std::optional<int> index_of(const std::string& name) const;
    const std::vector<std::vector<int>>& table() const { return table_; }

    std::vector<int> centralizer(int x) const;            // {g : gx = xg}
    std::vector<int> conjugacy_class(int x) const;        // {gxg^-1 : g in G}
    /// Conjugacy class of x under a subgroup H (element indices of H given).
    std::vector<int> conjugacy_class_in(int x, const std::vector<int>& h) const;
    std::vector<int> normalizer_of_set(const std::vector<int>& c) const;  // {x : xCx^-1 = C}

private:
    int n_;
    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    std::vector<int> inv_;
    int e_;
    bool abelian_;
};

/// Sorted element-index set that is checked to be a subgroup.
class SubgroupSet {
public:
    SubgroupSet() = default;
    SubgroupSet(const GroupTable& g, std::vector<int> elements);  // validates closure/identity/inverses

    const std::vector<int>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool contains(int g) const;
    bool is_normal_in(const GroupTable& g) const;
    /// Left cosets in input order of their minimal representative.
    std::vector<std::vector<int>> left_cosets(const GroupTable& g) const;

private:
    std::vector<int> elems_;
};

// Shipped group tables (names chosen so fixtures stay readable).
GroupTable make_cyclic(int n);      // e, x, x2, ...
GroupTable make_klein4();           // e, a, b, c
GroupTable make_c2xc4();            // e, r, r2, r3, t, rt, r2t, r3t
GroupTable make_s3();               // e, g, g2, t, gt, g2t
GroupTable make_d4();               // e, r, r2, r3, s, rs, r2s, r3s
GroupTable make_q8();               // e, a, a2, a3, b, ab, a2b, a3b

}  // namespace cgr
