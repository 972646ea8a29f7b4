#include <doctest.h>

#include "cgr/group.hpp"

#include <algorithm>

using namespace cgr;

TEST_CASE("shipped group tables validate") {
    for (const GroupTable& g : {make_cyclic(2), make_cyclic(4), make_klein4(), make_c2xc4(),
                                make_s3(), make_d4(), make_q8()}) {
        CHECK_FALSE(GroupTable::validate(g.table(), g.names()).has_value());
    }
    CHECK(make_klein4().is_abelian());
    CHECK(make_c2xc4().is_abelian());
    CHECK_FALSE(make_s3().is_abelian());
    CHECK_FALSE(make_d4().is_abelian());
    CHECK_FALSE(make_q8().is_abelian());
}

TEST_CASE("a transposed entry is caught with a located witness") {
    GroupTable v4 = make_klein4();
    auto table = v4.table();
    std::swap(table[1][2], table[1][3]);  // row 'a' now repeats an entry? no: c<->b swap keeps the row a permutation
    auto violation = GroupTable::validate(table, v4.names());
    REQUIRE(violation.has_value());
    // swapping two entries inside one row preserves the row permutation but
    // breaks columns or associativity; the validator must say which
    CHECK((violation->check == "latin_square" || violation->check == "associativity"));
    CHECK_FALSE(violation->where.empty());
}

TEST_CASE("an out-of-range or short row is a shape violation") {
    std::vector<std::vector<int>> t{{0, 1}, {1}};
    auto v = GroupTable::validate(t, {"e", "x"});
    REQUIRE(v.has_value());
    CHECK(v->check == "shape");
}

TEST_CASE("a constant table is rejected") {
    std::vector<std::vector<int>> t{{0, 0}, {0, 0}};
    auto v = GroupTable::validate(t, {"a", "b"});
    REQUIRE(v.has_value());
    CHECK(v->check == "latin_square");
}

TEST_CASE("centralizers") {
    GroupTable s3 = make_s3();
    int t = *s3.index_of("t");
    CHECK(s3.centralizer(s3.identity()) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(s3.centralizer(t) == std::vector<int>{s3.identity(), t});
    GroupTable v4 = make_klein4();
    for (int x = 0; x < 4; ++x) CHECK(v4.centralizer(x).size() == 4);
}

TEST_CASE("conjugacy classes partition the group and sizes divide the order") {
    for (const GroupTable& g : {make_s3(), make_d4(), make_q8(), make_c2xc4()}) {
        std::vector<bool> seen(g.order(), false);
        int covered = 0;
        for (int x = 0; x < g.order(); ++x) {
            if (seen[x]) continue;
            auto cls = g.conjugacy_class(x);
            CHECK(g.order() % static_cast<int>(cls.size()) == 0);
            for (int y : cls) {
                CHECK_FALSE(seen[y]);
                seen[y] = true;
                ++covered;
            }
        }
        CHECK(covered == g.order());
    }
}

TEST_CASE("conjugacy in S3: both 3-cycles are conjugate, class of e is {e}") {
    GroupTable s3 = make_s3();
    CHECK(s3.conjugacy_class(s3.identity()) == std::vector<int>{s3.identity()});
    auto cls = s3.conjugacy_class(*s3.index_of("g"));
    CHECK(cls == std::vector<int>{*s3.index_of("g"), *s3.index_of("g2")});
    GroupTable v4 = make_klein4();
    for (int x = 0; x < 4; ++x) CHECK(v4.conjugacy_class(x) == std::vector<int>{x});
}

TEST_CASE("conjugacy within a subgroup") {
    GroupTable s3 = make_s3();
    std::vector<int> a3{0, 1, 2};
    // A3 is abelian, so classes within it are singletons
    CHECK(s3.conjugacy_class_in(*s3.index_of("g"), a3) == std::vector<int>{*s3.index_of("g")});
    // but conjugating by the whole group merges g and g2
    CHECK(s3.conjugacy_class(*s3.index_of("g")).size() == 2);
}

TEST_CASE("normalizer of a set") {
    GroupTable s3 = make_s3();
    CHECK(s3.normalizer_of_set({s3.identity()}).size() == 6);
    CHECK(s3.normalizer_of_set({*s3.index_of("g")}) == std::vector<int>{0, 1, 2});
    CHECK(s3.normalizer_of_set({*s3.index_of("g"), *s3.index_of("g2")}).size() == 6);
}

TEST_CASE("subgroup sets validate closure and cosets partition") {
    GroupTable s3 = make_s3();
    SubgroupSet a3(s3, {0, 1, 2});
    CHECK(a3.is_normal_in(s3));
    auto cosets = a3.left_cosets(s3);
    CHECK(cosets.size() == 2);
    CHECK(cosets[0] == std::vector<int>{0, 1, 2});
    CHECK(cosets[1] == std::vector<int>{3, 4, 5});
    SubgroupSet t_sub(s3, {0, 3});
    CHECK_FALSE(t_sub.is_normal_in(s3));
    CHECK(t_sub.left_cosets(s3).size() == 3);
    CHECK_THROWS_AS(SubgroupSet(s3, {0, 1}), Error);   // not closed: g*g = g2 missing
    CHECK_THROWS_AS(SubgroupSet(s3, {1, 2}), Error);   // missing identity
}

TEST_CASE("q8 structure sanity") {
    GroupTable q8 = make_q8();
    int a = *q8.index_of("a"), b = *q8.index_of("b");
    CHECK(q8.mul(b, b) == *q8.index_of("a2"));             // b^2 = a^2
    CHECK(q8.conj(b, a) == *q8.index_of("a3"));            // b a b^-1 = a^3
    CHECK(q8.conjugacy_class(a) == std::vector<int>{a, *q8.index_of("a3")});
    CHECK(q8.centralizer(*q8.index_of("a2")).size() == 8);  // a2 central
}

TEST_CASE("centralizers are subgroups containing their element") {
    for (const GroupTable& g : {make_s3(), make_d4(), make_q8()}) {
        for (int x = 0; x < g.order(); ++x) {
            auto c = g.centralizer(x);
            CHECK(std::find(c.begin(), c.end(), x) != c.end());
            CHECK_NOTHROW(SubgroupSet(g, c));  // closure, identity, inverses
        }
    }
}
