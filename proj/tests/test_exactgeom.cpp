#include "doctest.h"

#include "splitlab/errors.hpp"
#include "splitlab/lattice.hpp"
#include "splitlab/polyhedron.hpp"
#include "support.hpp"

using namespace splitlab;
using namespace splitlab::geom;
using testsupport::ints;
using testsupport::rats;

namespace {

Polyhedron triangle02() { return convex_hull({ints({0, 0}), ints({2, 0}), ints({0, 2})}); }

Inequality le(Vec a, long b) { return Inequality::make(std::move(a), b); }
Inequality ge(Vec a, long b) { return Inequality::make(scale(a, -1), -b); }

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-4") == Rat(-4));
    CHECK(to_string(parse_rat("-6/4")) == "-3/2");
    CHECK(to_string(Rat(0)) == "0");
    CHECK(to_decimal(Rat(2, 3), 4) == "0.6667");
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("abc"), InputError);
}

TEST_CASE("convex_hull of the 0-2 triangle") {
    Polyhedron t = triangle02();
    CHECK(t.vertices() == Matrix{ints({0, 0}), ints({0, 2}), ints({2, 0})});
    CHECK(t.rays().empty());
    CHECK(t.equalities().empty());
    std::vector<Inequality> expect{le(ints({-1, 0}), 0), le(ints({0, -1}), 0), le(ints({1, 1}), 2)};
    std::sort(expect.begin(), expect.end());
    CHECK(t.inequalities() == expect);
    CHECK(t.affine_dimension() == 2);
}

TEST_CASE("convex_hull of a singleton and of redundant points") {
    Polyhedron p = convex_hull({rats({"1/3", "2"})});
    CHECK(p.affine_dimension() == 0);
    CHECK(p.vertices().size() == 1);
    CHECK(p.inequalities().empty());
    CHECK(p.equalities().size() == 2);

    Polyhedron six = convex_hull({ints({0, 0}), ints({1, 0}), ints({2, 0}), ints({0, 1}), ints({1, 1}),
                                  ints({0, 2})});
    CHECK(six == triangle02());
}

TEST_CASE("convex_hull errors and empty input") {
    CHECK(convex_hull(2, {}).is_empty());
    CHECK_THROWS_AS(convex_hull({ints({0, 0}), ints({1, 0, 0})}), InputError);
    CHECK_THROWS_AS(convex_hull({ints({0, 0, 0, 0, 0})}), InputError);
}

TEST_CASE("enumerate_vertices") {
    auto t = enumerate_vertices({ge(ints({1, 0}), 0), ge(ints({0, 1}), 0), le(ints({1, 1}), 2)}, 2);
    CHECK(t == triangle02());

    CHECK(enumerate_vertices({le(ints({1}), 0), ge(ints({1}), 1)}, 1).is_empty());

    std::vector<Inequality> cube;
    for (std::size_t i = 0; i < 3; ++i) {
        cube.push_back(ge(unit(3, i), 0));
        cube.push_back(le(unit(3, i), 1));
    }
    auto c = enumerate_vertices(cube, 3);
    // Oracle: all 0/1 sign patterns.
    Matrix expect;
    for (int m = 0; m < 8; ++m) expect.push_back(ints({(m >> 2) & 1, (m >> 1) & 1, m & 1}));
    CHECK(c.vertices() == expect);
    CHECK(c.inequalities().size() == 6);
}

TEST_CASE("unbounded polyhedra carry rays") {
    auto q = enumerate_vertices({ge(ints({1, 0}), 0), ge(ints({0, 1}), 0), ge(ints({1, 1}), 1)}, 2);
    CHECK(q.vertices() == Matrix{ints({0, 1}), ints({1, 0})});
    CHECK(q.rays() == Matrix{ints({0, 1}), ints({1, 0})});
    CHECK_FALSE(q.is_bounded());
    CHECK_THROWS_AS(lattice_points(q), PreconditionError);

    // A half-plane has a line.
    auto h = enumerate_vertices({ge(ints({1, 0}), 0)}, 2);
    CHECK(h.rays().size() == 3);
    CHECK(h.contains(ints({5, -100})));
    CHECK(h.inequalities() == std::vector<Inequality>{le(ints({-1, 0}), 0)});
}

TEST_CASE("lattice_points") {
    CHECK(lattice_points(triangle02()) ==
          std::vector<Point>{ints({0, 0}), ints({0, 1}), ints({0, 2}), ints({1, 0}), ints({1, 1}), ints({2, 0})});
    CHECK(lattice_points(convex_hull({rats({"1/4", "1/4"}), rats({"3/4", "1/4"}), rats({"1/4", "3/4"})})).empty());

    Vec p = rats({"1/4", "1/4", "3/2"});
    Polyhedron lp = convex_hull({p, rats({"-1/2", "-1/2", "0"}), rats({"5/2", "-1/2", "0"}), rats({"-1/2", "5/2", "0"})});
    auto pts = lattice_points(lp);
    // Oracle: box scan against brute-force facets.
    auto facets = testsupport::brute_facets(lp.vertices());
    auto scan = testsupport::box_scan(3, -2, 4, [&](const Vec& x) { return testsupport::in_hull_brute(facets, x); });
    CHECK(pts == scan);
    REQUIRE(pts.size() == 9);
    int low = 0, high = 0;
    for (const auto& x : pts) (x[2] == 0 ? low : high)++;
    CHECK(low == 6);
    CHECK(high == 3);
}

TEST_CASE("affine_hull") {
    auto seg = convex_hull({ints({0, 0, 1}), ints({0, 1, 1})});
    auto ah = affine_hull(seg);
    CHECK(ah.dimension == 1);
    CHECK(ah.equalities == std::vector<Hyperplane>{Hyperplane::make(ints({1, 0, 0}), 0),
                                                    Hyperplane::make(ints({0, 0, 1}), 1)});
    CHECK(affine_hull(triangle02()).dimension == 2);
    CHECK(affine_hull(triangle02()).equalities.empty());

    auto t1 = convex_hull({ints({0, 0, 1}), ints({1, 0, 1}), ints({0, 1, 1})});
    CHECK(affine_hull(t1).dimension == 2);
    CHECK(affine_hull(t1).equalities == std::vector<Hyperplane>{Hyperplane::make(ints({0, 0, 1}), 1)});
    CHECK_THROWS_AS(affine_hull(Polyhedron::empty(2)), PreconditionError);
}

TEST_CASE("integer_solve") {
    auto row = [](std::initializer_list<long> a, long b) {
        IntVec v;
        for (long x : a) v.emplace_back(x);
        return IntegerRow{v, Int(b)};
    };
    CHECK_FALSE(integer_solve({row({2}, 1)}, 1).has_value());

    auto x = integer_solve({row({1, 1}, 1)}, 2);
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] == 1);

    // pi.s = c on S1 = {(0,0,1),(0,1,1)}, pi.s = c+1 on S2 = {(1,0,1)}, unknowns (pi, c).
    auto sys = integer_solve({row({0, 0, 1, -1}, 0), row({0, 1, 1, -1}, 0), row({1, 0, 1, -1}, 1)}, 4);
    REQUIRE(sys);
    const auto& s = *sys;
    CHECK(s[1] == 0);
    CHECK(s[0] == 1);
    CHECK(s[2] - s[3] == 0);

    CHECK_FALSE(integer_solve({row({2, 4}, 3)}, 2).has_value());
    CHECK(integer_solve({}, 3).has_value());
}

TEST_CASE("facet_hyperplane_has_integer_point") {
    CHECK_FALSE(facet_hyperplane_has_integer_point(Hyperplane::make(ints({2, 2}), 1)));
    CHECK(facet_hyperplane_has_integer_point(Hyperplane::make(ints({1, 1}), 2)));
    CHECK(facet_hyperplane_has_integer_point(Hyperplane::make(ints({3, 6}), 9)));
    CHECK_FALSE(facet_hyperplane_has_integer_point(Hyperplane::make(rats({"1/2", "0"}), Rat(1, 3))));
}

TEST_CASE("integer lattice in Hermite form") {
    auto lat = IntegerLattice::generated_by({{Int(2), Int(0)}, {Int(1), Int(3)}}, {Int(5), Int(7)});
    CHECK(lat.basis[0][1] == 0);
    CHECK(lat.basis[0][0] > 0);
    CHECK(lat.basis[1][1] > 0);
    CHECK(lat.contains({Int(7), Int(8)}));
    CHECK(lat.contains({Int(5), Int(10)}));
    CHECK_FALSE(lat.contains({Int(0), Int(0)}));
}

TEST_CASE("apply_unimodular") {
    Polyhedron sq = convex_hull({ints({0, 0}), ints({1, 0}), ints({0, 1}), ints({1, 1})});
    Matrix id{ints({1, 0}), ints({0, 1})};
    CHECK(apply_unimodular(sq, id, ints({0, 0})) == sq);

    Matrix shear{ints({1, 1}), ints({0, 1})};
    Polyhedron par = apply_unimodular(sq, shear, ints({0, 0}));
    CHECK(par.vertices() == Matrix{ints({0, 0}), ints({1, 0}), ints({1, 1}), ints({2, 1})});
    CHECK(lattice_points(par).size() == 4);

    CHECK_THROWS_AS(apply_unimodular(sq, Matrix{ints({2, 0}), ints({0, 1})}, ints({0, 0})), InputError);
}

TEST_CASE("clip keeps the generator form consistent") {
    Polyhedron t = triangle02();
    auto g = clip(t, le(ints({1, 1}), 1));
    Polyhedron piece = convex_hull(2, g.points, g.rays);
    CHECK(piece == convex_hull({ints({0, 0}), ints({1, 0}), ints({0, 1})}));
    CHECK(clip(t, le(ints({1, 1}), -1)).points.empty());

    auto q = enumerate_vertices({ge(ints({1, 0}), 0), ge(ints({0, 1}), 0)}, 2);
    auto g2 = clip(q, le(ints({1, 0}), 3));
    CHECK(convex_hull(2, g2.points, g2.rays) == intersect(q, {le(ints({1, 0}), 3)}));
}
