#include <doctest.h>

#include "cgr/lattice.hpp"

#include <random>

using namespace cgr;

namespace {

// Independent oracle: enumerate integer vectors in a small coefficient box.
// Used to confirm kernels and intersections have not lost any solution.
template <class Pred>
std::vector<Vec> box_search(int dim, int radius, Pred pred) {
    std::vector<Vec> found;
    Vec v(dim, Int(-radius));
    while (true) {
        if (!is_zero(v) && pred(v)) found.push_back(v);
        int i = 0;
        while (i < dim) {
            v[i] += 1;
            if (v[i] <= radius) break;
            v[i] = -radius;
            ++i;
        }
        if (i == dim) break;
    }
    return found;
}

}  // namespace

TEST_CASE("hnf canonicalizes equal lattices to the same basis") {
    IntMat a = hnf(IntMat{{2, 0}, {0, 2}});
    IntMat b = hnf(IntMat{{2, 2}, {0, 2}});
    CHECK(a == b);
    CHECK(a == IntMat{{2, 0}, {0, 2}});
}

TEST_CASE("hnf is idempotent on pseudo-random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        IntMat m(4, 3);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = d(rng);
        IntMat h = hnf(m);
        CHECK(hnf(h) == h);
        // same row span: every reduced row lies in the original lattice
        Lattice l(3, m);
        for (int i = 0; i < h.rows(); ++i) CHECK(l.contains(h.row(i)));
    }
}

TEST_CASE("kernel of the zero and identity matrices") {
    CHECK(Lattice::kernel(IntMat(2, 2)) == Lattice::full(2));
    CHECK(Lattice::kernel(IntMat::identity(3)) == Lattice::zero(3));
}

TEST_CASE("kernel of [1 -1] is spanned by (1,1)") {
    Lattice k = Lattice::kernel(IntMat{{1, -1}});
    CHECK(k.rank() == 1);
    CHECK(k.basis() == IntMat{{1, 1}});
}

TEST_CASE("kernel agrees with brute-force box search") {
    IntMat m{{2, 4, -2}, {1, 2, -1}};
    Lattice k = Lattice::kernel(m);
    for (int i = 0; i < k.basis().rows(); ++i) CHECK(is_zero(m.mul_vec(k.basis().row(i))));
    for (const Vec& v : box_search(3, 3, [&](const Vec& v) { return is_zero(m.mul_vec(v)); }))
        CHECK(k.contains(v));
    CHECK(k.rank() == 2);
}

TEST_CASE("intersection of transverse rank-1 lattices is zero") {
    Lattice a(2, IntMat{{1, 1}});
    Lattice b(2, IntMat{{1, -1}});
    Lattice meet = a.intersect(b);
    CHECK(meet.is_zero());
    // box oracle: no nonzero vector lies in both
    auto both = box_search(2, 4, [&](const Vec& v) { return a.contains(v) && b.contains(v); });
    CHECK(both.empty());
}

TEST_CASE("intersection with the full lattice keeps sublattices") {
    CHECK(Lattice::full(2).intersect(Lattice::full(2)) == Lattice::full(2));
    Lattice even(2, IntMat{{2, 0}, {0, 2}});
    CHECK(Lattice::full(2).intersect(even) == even);
    // two bases of the same index-4 sublattice
    CHECK(Lattice(2, IntMat{{2, 2}, {0, 2}}) == even);
}

TEST_CASE("intersection agrees with box search on a skew pair") {
    Lattice a(3, IntMat{{1, 0, 1}, {0, 2, 0}});
    Lattice b(3, IntMat{{1, 1, 1}, {0, 0, 3}});
    Lattice meet = a.intersect(b);
    for (int i = 0; i < meet.basis().rows(); ++i) {
        CHECK(a.contains(meet.basis().row(i)));
        CHECK(b.contains(meet.basis().row(i)));
    }
    for (const Vec& v : box_search(3, 4, [&](const Vec& v) { return a.contains(v) && b.contains(v); }))
        CHECK(meet.contains(v));
}

TEST_CASE("membership handles non-pivot columns") {
    Lattice l(3, IntMat{{1, 0, 5}});
    CHECK(l.contains(Vec{2, 0, 10}));
    CHECK_FALSE(l.contains(Vec{2, 0, 9}));
    CHECK_FALSE(l.contains(Vec{0, 1, 0}));
}

TEST_CASE("sum of lattices is the smallest common over-lattice") {
    Lattice a(2, IntMat{{2, 0}});
    Lattice b(2, IntMat{{0, 3}});
    Lattice s = a.sum(b);
    CHECK(s.rank() == 2);
    CHECK(s.contains(a));
    CHECK(s.contains(b));
}

TEST_CASE("equality requires matching ambient rank") {
    CHECK(Lattice::zero(2) != Lattice::zero(3));
    CHECK_THROWS_AS((void)Lattice::zero(2).intersect(Lattice::zero(3)), Error);
}

TEST_CASE("bareiss determinant") {
    CHECK(IntMat{{3}}.det() == 3);
    CHECK(IntMat{{1, 2}, {3, 4}}.det() == -2);
    CHECK(IntMat{{2, 0, 1}, {1, 1, 0}, {0, 3, 1}}.det() == 5);
    CHECK(IntMat::identity(5).det() == 1);
    CHECK(IntMat(3, 3).det() == 0);
}
