#include "cgr/group.hpp"

#include <algorithm>

namespace cgr {

std::optional<GroupViolation> GroupTable::validate(const std::vector<std::vector<int>>& table,
                                                   const std::vector<std::string>& names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) return GroupViolation{"shape", {}, "empty table"};
    if (static_cast<int>(names.size()) != n) return GroupViolation{"shape", {}, "names/table size mismatch"};
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            return GroupViolation{"shape", {i}, "row " + std::to_string(i) + " has wrong length"};
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                return GroupViolation{"shape", {i, j}, "entry out of range"};
    }
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            if (seen_row[table[i][j]])
                return GroupViolation{"latin_square", {i, j},
                                      "row " + names[i] + " repeats " + names[table[i][j]]};
            seen_row[table[i][j]] = true;
            if (seen_col[table[j][i]])
                return GroupViolation{"latin_square", {j, i},
                                      "column " + names[i] + " repeats " + names[table[j][i]]};
            seen_col[table[j][i]] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    return GroupViolation{"associativity", {a, b, c},
                                          "(" + names[a] + "*" + names[b] + ")*" + names[c] +
                                              " != " + names[a] + "*(" + names[b] + "*" + names[c] + ")"};
    int e = -1;
    for (int g = 0; g < n; ++g) {
        bool ok = true;
        for (int h = 0; h < n && ok; ++h) ok = (table[g][h] == h && table[h][g] == h);
        if (ok) { e = g; break; }
    }
    if (e < 0) return GroupViolation{"identity", {}, "no identity element"};
    for (int g = 0; g < n; ++g) {
        bool has_inv = false;
        for (int h = 0; h < n && !has_inv; ++h) has_inv = (table[g][h] == e && table[h][g] == e);
        if (!has_inv) return GroupViolation{"inverse", {g}, names[g] + " has no two-sided inverse"};
    }
    return std::nullopt;
}

GroupTable::GroupTable(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
    if (auto v = validate(table_, names_))
        throw Error("invalid group table [" + v->check + "]: " + v->detail);
    n_ = static_cast<int>(table_.size());
    e_ = -1;
    for (int g = 0; g < n_ && e_ < 0; ++g) {
        bool ok = true;
        for (int h = 0; h < n_ && ok; ++h) ok = (table_[g][h] == h && table_[h][g] == h);
        if (ok) e_ = g;
    }
    inv_.assign(n_, -1);
    for (int g = 0; g < n_; ++g)
        for (int h = 0; h < n_; ++h)
            if (table_[g][h] == e_ && table_[h][g] == e_) inv_[g] = h;
    abelian_ = true;
    for (int g = 0; g < n_ && abelian_; ++g)
        for (int h = 0; h < n_ && abelian_; ++h) abelian_ = (table_[g][h] == table_[h][g]);
}

std::optional<int> GroupTable::index_of(const std::string& name) const {
    for (int g = 0; g < n_; ++g)
        if (names_[g] == name) return g;
    return std::nullopt;
}

std::vector<int> GroupTable::centralizer(int x) const {
    std::vector<int> out;
    for (int g = 0; g < n_; ++g)
        if (mul(g, x) == mul(x, g)) out.push_back(g);
    return out;
}

std::vector<int> GroupTable::conjugacy_class(int x) const {
    std::vector<bool> in(n_, false);
    for (int g = 0; g < n_; ++g) in[conj(g, x)] = true;
    std::vector<int> out;
    for (int g = 0; g < n_; ++g)
        if (in[g]) out.push_back(g);
    return out;
}

std::vector<int> GroupTable::conjugacy_class_in(int x, const std::vector<int>& h) const {
    std::vector<bool> in(n_, false);
    for (int w : h) in[conj(w, x)] = true;
    std::vector<int> out;
    for (int g = 0; g < n_; ++g)
        if (in[g]) out.push_back(g);
    return out;
}

std::vector<int> GroupTable::normalizer_of_set(const std::vector<int>& c) const {
    std::vector<bool> in(n_, false);
    for (int g : c) in[g] = true;
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
        bool ok = true;
        for (int g : c)
            if (!in[conj(x, g)]) { ok = false; break; }
        if (ok) out.push_back(x);
    }
    return out;
}

SubgroupSet::SubgroupSet(const GroupTable& g, std::vector<int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!contains(g.identity())) throw Error("SubgroupSet: missing identity");
    for (int a : elems_) {
        if (!contains(g.inv(a))) throw Error("SubgroupSet: not closed under inverse at " + g.name_of(a));
        for (int b : elems_)
            if (!contains(g.mul(a, b)))
                throw Error("SubgroupSet: not closed under product at " + g.name_of(a) + "*" + g.name_of(b));
    }
}

bool SubgroupSet::contains(int g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g);
}

bool SubgroupSet::is_normal_in(const GroupTable& g) const {
    for (int x = 0; x < g.order(); ++x)
        for (int w : elems_)
            if (!contains(g.conj(x, w))) return false;
    return true;
}

std::vector<std::vector<int>> SubgroupSet::left_cosets(const GroupTable& g) const {
    std::vector<bool> used(g.order(), false);
    std::vector<std::vector<int>> cosets;
    for (int x = 0; x < g.order(); ++x) {
        if (used[x]) continue;
        std::vector<int> coset;
        for (int w : elems_) coset.push_back(g.mul(x, w));
        std::sort(coset.begin(), coset.end());
        for (int y : coset) used[y] = true;
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

namespace {

GroupTable from_law(int n, const std::vector<std::string>& names, int (*law)(int, int)) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = law(i, j);
    return GroupTable(std::move(t), names);
}

}  // namespace

GroupTable make_cyclic(int n) {
    std::vector<std::string> names(n);
    names[0] = "e";
    for (int k = 1; k < n; ++k) names[k] = k == 1 ? "x" : "x" + std::to_string(k);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return GroupTable(std::move(t), names);
}

GroupTable make_klein4() {
    return from_law(4, {"e", "a", "b", "c"}, [](int i, int j) { return i ^ j; });
}

GroupTable make_c2xc4() {
    // index = k + 4*m for r^k t^m
    return from_law(8, {"e", "r", "r2", "r3", "t", "rt", "r2t", "r3t"}, [](int i, int j) {
        int k = (i % 4 + j % 4) % 4;
        int m = (i / 4 + j / 4) % 2;
        return k + 4 * m;
    });
}

GroupTable make_s3() {
    // index = k + 3*m for g^k t^m, with t g = g^2 t
    return from_law(6, {"e", "g", "g2", "t", "gt", "g2t"}, [](int i, int j) {
        int k1 = i % 3, m1 = i / 3, k2 = j % 3, m2 = j / 3;
        int k = ((m1 ? -k2 : k2) + k1) % 3;
        if (k < 0) k += 3;
        return k + 3 * ((m1 + m2) % 2);
    });
}

GroupTable make_d4() {
    // index = k + 4*m for r^k s^m, with s r = r^3 s
    return from_law(8, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"}, [](int i, int j) {
        int k1 = i % 4, m1 = i / 4, k2 = j % 4, m2 = j / 4;
        int k = ((m1 ? -k2 : k2) + k1) % 4;
        if (k < 0) k += 4;
        return k + 4 * ((m1 + m2) % 2);
    });
}

GroupTable make_q8() {
    // index = k + 4*m for a^k b^m, with b a = a^3 b and b^2 = a^2
    return from_law(8, {"e", "a", "a2", "a3", "b", "ab", "a2b", "a3b"}, [](int i, int j) {
        int k1 = i % 4, m1 = i / 4, k2 = j % 4, m2 = j / 4;
        int k = ((m1 ? -k2 : k2) + k1) % 4;
        if (k < 0) k += 4;
        int m = m1 + m2;
        if (m == 2) return (k + 2) % 4;  // b^2 = a^2
        return k + 4 * m;
    });
}

}  // namespace cgr
