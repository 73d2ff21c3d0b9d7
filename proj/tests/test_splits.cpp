#include "doctest.h"

#include <set>

#include "instances.hpp"
#include "splitlab/errors.hpp"
#include "splitlab/splits.hpp"

using namespace splitlab;
using namespace splitlab::splits;
using geom::Polyhedron;
using testsupport::ints;
using testsupport::rats;

namespace {

Split sp(std::initializer_list<long> pi, long pi0) {
    IntVec v;
    for (long x : pi) v.emplace_back(x);
    return Split::make(v, Int(pi0));
}

}  // namespace

TEST_CASE("split canonical form") {
    Split s = sp({-1, 0}, -1);
    CHECK(s.pi == IntVec{1, 0});
    CHECK(s.pi0 == 0);
    CHECK_THROWS_AS(sp({2, 4}, 1), InputError);
    CHECK_THROWS_AS(sp({0, 0}, 1), InputError);
}

TEST_CASE("apply_split") {
    auto q = instances::cks_triangle();
    CHECK(apply_split(q, sp({1, 0}, 0)) == q);  // integral vertices survive every split

    auto unit = geom::convex_hull({ints({0, 0}), ints({1, 0}), ints({0, 1}), ints({1, 1})});
    CHECK(apply_split(unit, sp({1, 0}, 0)) == unit);

    // Hull of the two strips, built directly from their corner lists.
    auto sq = geom::convex_hull({rats({"-1/2", "-1/2"}), rats({"3/2", "-1/2"}), rats({"-1/2", "3/2"}), rats({"3/2", "3/2"})});
    Matrix strips{rats({"-1/2", "-1/2"}), rats({"0", "-1/2"}), rats({"-1/2", "3/2"}), rats({"0", "3/2"}),
                  rats({"1", "-1/2"}),    rats({"3/2", "-1/2"}), rats({"1", "3/2"}),   rats({"3/2", "3/2"})};
    CHECK(apply_split(sq, sp({1, 0}, 0)) == geom::convex_hull(strips));

    Matrix pieces{ints({0, 0}), ints({1, 0}), ints({0, 1}), ints({2, 0}), ints({0, 2})};
    CHECK(apply_split(q, sp({1, 1}, 1)) == geom::convex_hull(pieces));

    // Inside the open slab: everything removed.
    auto thin = geom::convex_hull({rats({"1/4", "1/4"}), rats({"3/4", "1/4"}), rats({"1/4", "3/4"})});
    CHECK(apply_split(thin, sp({1, 0}, 0)).is_empty());
}

TEST_CASE("apply_split acts on x only in a lifted space") {
    auto q = geom::convex_hull({rats({"1/2", "1"}), ints({0, 0}), ints({1, 0})});
    auto r = apply_split(q, Split::make(IntVec{Int(1)}, Int(0)));
    CHECK(r == geom::convex_hull({ints({0, 0}), ints({1, 0})}));
}

TEST_CASE("classify_split") {
    auto q = instances::cks_triangle();
    auto c1 = classify_split(q, sp({1, 0}, 0));
    CHECK(c1.intersecting);
    CHECK_FALSE(c1.englobing);
    CHECK_FALSE(c1.chvatal);

    auto c2 = classify_split(q, sp({1, 1}, 2));
    CHECK(c2.chvatal);
    CHECK(c2.empty_side == EmptySide::upper);
    CHECK_FALSE(c2.englobing);  // the triangle reaches x1 + x2 = 0, below the slab

    auto unit = geom::convex_hull({ints({0, 0}), ints({1, 0}), ints({0, 1}), ints({1, 1})});
    auto c3 = classify_split(unit, sp({1, 0}, 0));
    CHECK(c3.intersecting);
    CHECK(c3.englobing);

    CHECK_THROWS_AS(classify_split(Polyhedron::empty(2), sp({1, 0}, 0)), PreconditionError);
}

TEST_CASE("facet_split") {
    auto q = instances::cks_triangle();
    const auto& ineqs = q.inequalities();
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        auto fs = facet_split(q, i);
        if (ineqs[i].a == ints({1, 1})) {
            CHECK(fs.near_plane == geom::Hyperplane::make(ints({1, 1}), 2));
            CHECK(fs.far_plane == geom::Hyperplane::make(ints({1, 1}), 1));
            CHECK(fs.split == sp({1, 1}, 1));
        }
        if (ineqs[i].a == ints({-1, 0})) {
            CHECK(fs.near_plane == geom::Hyperplane::make(ints({1, 0}), 0));
            CHECK(fs.far_plane == geom::Hyperplane::make(ints({1, 0}), 1));
            CHECK(fs.split == sp({1, 0}, 0));
        }
    }

    auto small = geom::convex_hull({ints({0, 0}), rats({"1/2", "0"}), rats({"0", "1/2"})});
    for (std::size_t i = 0; i < small.inequalities().size(); ++i) {
        if (small.inequalities()[i].a != ints({2, 2})) continue;
        auto fs = facet_split(small, i);
        CHECK(fs.near_plane == geom::Hyperplane::make(ints({1, 1}), 1));
        CHECK(fs.far_plane == geom::Hyperplane::make(ints({1, 1}), 0));
        CHECK(fs.width_sq == Rat(1, 8));
    }

    CHECK_THROWS_AS(facet_split(geom::convex_hull({ints({0, 0}), ints({1, 0})}), 0), PreconditionError);
}

TEST_CASE("round_of_splits") {
    auto unit = geom::convex_hull({ints({0, 0}), ints({1, 0}), ints({0, 1}), ints({1, 1})});
    auto r = round_of_splits(unit, unit);
    CHECK(r.result == unit);
    CHECK(r.width.square == 1);
    CHECK(r.width.lower_decimal() == "1.000000000000");

    auto small = geom::convex_hull({ints({0, 0}), rats({"1/2", "0"}), rats({"0", "1/2"})});
    auto rs = round_of_splits(small, small);
    // Distance between x1 + x2 = 1/2 and x1 + x2 = 0 is (1/2)/sqrt(2).
    CHECK(rs.width.square == Rat(1, 8));
    CHECK(rs.width.lower() * rs.width.lower() <= Rat(1, 8));
    CHECK(rs.width.upper() * rs.width.upper() >= Rat(1, 8));
    CHECK(rs.width.lower_decimal() == "0.353553390593");
    CHECK(rs.width.upper_decimal() == "0.353553390594");
}

TEST_CASE("enumerate_splits") {
    Vec lo = ints({0, 0}), hi = ints({2, 2});
    auto all = enumerate_splits(2, 1, lo, hi);
    // Oracle: every (pi, pi0) with entries in [-1,1] and |pi0| <= 10 whose open slab meets (0,4) range,
    // deduplicated through canonicalization.
    std::set<Split> oracle;
    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b) {
            if (a == 0 && b == 0) continue;
            long mn = std::min(0L, 2 * a) + std::min(0L, 2 * b), mx = std::max(0L, 2 * a) + std::max(0L, 2 * b);
            for (long p0 = -10; p0 <= 10; ++p0)
                if (p0 < mx && p0 + 1 > mn) oracle.insert(sp({a, b}, p0));
        }
    CHECK(std::set<Split>(all.begin(), all.end()) == oracle);
    CHECK(all.size() == 12);
    CHECK(std::find(all.begin(), all.end(), sp({1, 0}, 0)) != all.end());
    CHECK(std::find(all.begin(), all.end(), sp({1, 0}, 1)) != all.end());
    CHECK(std::find(all.begin(), all.end(), sp({1, -1}, 0)) != all.end());
    CHECK(enumerate_splits(2, 0, lo, hi).empty());
}

namespace {

// Vertex-wise containment in conv(p, a, b) by explicit orientation tests.
bool in_triangle(const Vec& x, const Vec& a, const Vec& b, const Vec& c) {
    auto orient = [](const Vec& p, const Vec& q, const Vec& r) {
        return sgn((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]));
    };
    int s = orient(a, b, c);
    return orient(a, b, x) * s >= 0 && orient(b, c, x) * s >= 0 && orient(c, a, x) * s >= 0;
}

}  // namespace

TEST_CASE("sweep_sequence_2d: two-split configuration") {
    auto q = geom::convex_hull({ints({0, 0}), ints({2, 0}), rats({"-1/4", "1/2"})});
    Vec p = rats({"1/4", "1/2"});
    auto res = sweep_sequence_2d(q, sp({0, 1}, 0), p);
    REQUIRE(res.sequence.size() == 2);
    CHECK(res.sequence[0].split == sp({1, 1}, 0));
    CHECK(res.sequence[1].split == sp({1, 0}, 0));
    CHECK(res.contained);
    for (const auto& v : res.swept.vertices())
        if (v[1] >= 0) CHECK(in_triangle(v, ints({0, 0}), ints({2, 0}), p));
    for (const auto& e : res.sequence) CHECK(classify_split(geom::convex_hull({ints({0, 0}), ints({2, 0})}), e.split).intersecting);
}

TEST_CASE("sweep_sequence_2d: edge along a lattice direction") {
    auto q = geom::convex_hull({ints({0, 0}), ints({2, 0}), rats({"0", "1/2"})});
    Vec p = rats({"3/4", "1/2"});
    auto res = sweep_sequence_2d(q, sp({0, 1}, 0), p);
    CHECK(res.contained);
    for (const auto& v : res.swept.vertices()) CHECK(in_triangle(v, ints({0, 0}), ints({2, 0}), p));
}

TEST_CASE("sweep_sequence_2d: nothing beyond H^A") {
    auto q = geom::convex_hull({ints({0, 0}), ints({2, 0}), rats({"1", "-1/2"})});
    auto res = sweep_sequence_2d(q, sp({0, 1}, 0), rats({"1", "1/2"}));
    CHECK(res.sequence.empty());
    CHECK(res.contained);
}

TEST_CASE("sweep_sequence_2d: diamond straddling H^A") {
    auto q = geom::convex_hull({ints({0, 0}), ints({1, 0}), rats({"1/2", "1/2"}), rats({"1/2", "-1/2"})});
    Vec p = rats({"1/2", "1/4"});
    auto res = sweep_sequence_2d(q, sp({0, 1}, 0), p);
    CHECK(res.contained);
    for (const auto& v : res.swept.vertices())
        if (v[1] >= 0) CHECK(in_triangle(v, ints({0, 0}), ints({1, 0}), p));
}

TEST_CASE("sweep_sequence_2d: hypotheses") {
    auto q = geom::convex_hull({ints({0, 0}), ints({2, 0}), rats({"0", "1/2"})});
    CHECK_THROWS_AS(sweep_sequence_2d(q, sp({1, 0}, 0), rats({"1", "1/2"})), PreconditionError);
    CHECK_THROWS_AS(sweep_sequence_2d(q, sp({0, 1}, 0), rats({"1", "1"})), PreconditionError);
    auto frac = geom::convex_hull({rats({"-1/2", "0"}), ints({2, 0}), rats({"0", "1/2"})});
    CHECK_THROWS_AS(sweep_sequence_2d(frac, sp({0, 1}, 0), rats({"1", "1/2"})), PreconditionError);
}
