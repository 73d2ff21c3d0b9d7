#include "doctest.h"

#include "instances.hpp"
#include "splitlab/cutgen.hpp"
#include "splitlab/errors.hpp"

using namespace splitlab;
using namespace splitlab::cutgen;
using testsupport::ints;
using testsupport::rats;

namespace {

// Exit parameter against an explicitly listed facet system, independent of the kernel.
Rat oracle_gauge(const std::vector<std::pair<Vec, Rat>>& facets, const Vec& f, const Vec& r) {
    std::optional<Rat> best;
    for (const auto& [a, b] : facets) {
        Rat ar = dot(a, r);
        if (sgn(ar) <= 0) continue;
        Rat lam = (b - dot(a, f)) / ar;
        if (!best || lam < *best) best = lam;
    }
    return 1 / *best;
}

const std::vector<std::pair<Vec, Rat>> kTriangleFacets{
    {ints({-1, 0}), 0}, {ints({0, -1}), 0}, {ints({1, 1}), 2}};

}  // namespace

TEST_CASE("gauge on the 0-2 triangle") {
    auto l = instances::cks_triangle();
    Vec f = rats({"1/2", "1/2"});
    CHECK(gauge(l, f, ints({1, 0})) == oracle_gauge(kTriangleFacets, f, ints({1, 0})));
    CHECK(gauge(l, f, ints({1, 0})) == 1);
    CHECK(gauge(l, f, ints({-1, 0})) == 2);
    CHECK(gauge(l, f, ints({2, 0})) == 2);
    CHECK_THROWS_AS(gauge(l, f, ints({0, 0})), InputError);
    CHECK_THROWS_AS(gauge(l, ints({0, 0}), ints({1, 0})), PreconditionError);
    CHECK_THROWS_AS(gauge(geom::enumerate_vertices({geom::Inequality::make(ints({-1, 0}), 0)}, 2), f, ints({1, 0})),
                    PreconditionError);
}

TEST_CASE("boundary_point") {
    auto l = instances::cks_triangle();
    Vec f = rats({"1/2", "1/2"});
    CHECK(boundary_point(l, f, ints({1, 0})) == rats({"3/2", "1/2"}));
    CHECK(boundary_point(l, f, rats({"-1/2", "-1/2"})) == ints({0, 0}));
    CHECK(boundary_point(l, f, rats({"3/2", "-1/2"})) == ints({2, 0}));
}

TEST_CASE("intersection_cut") {
    auto cut = intersection_cut(instances::cks_model(), instances::cks_triangle());
    CHECK(cut.psi == Vec{1, 1, 1});

    auto slab = intersection_cut(CornerModel::make(rats({"1/2", "1/2"}), {ints({1, 0})}), instances::slab_box());
    CHECK(slab.psi == Vec{2});

    auto big = geom::convex_hull({ints({-1, -1}), ints({2, -1}), ints({-1, 2}), ints({2, 2})});
    try {
        intersection_cut(instances::cks_model(), big);
        FAIL("expected LatticeFreeError");
    } catch (const LatticeFreeError& e) {
        CHECK(big.interior_contains(e.witness()));
        CHECK(is_integral(e.witness()));
    }
}

TEST_CASE("corner model validation") {
    CHECK_THROWS_AS(CornerModel::make(ints({0, 1}), {ints({1, 0})}), InputError);
    CHECK_THROWS_AS(CornerModel::make(rats({"1/2", "0"}), {ints({0, 0})}), InputError);
    CHECK_THROWS_AS(CornerModel::make(rats({"1/2", "0"}), {ints({1, 0, 0})}), InputError);
}

TEST_CASE("rays_into_corners") {
    auto l = instances::cks_triangle();
    CHECK(rays_into_corners(instances::cks_model(), l));
    auto m = instances::cks_model();
    m.rays.erase(m.rays.begin());
    CHECK_FALSE(rays_into_corners(m, l));
    auto extra = instances::cks_model();
    extra.rays.push_back(ints({1, 0}));
    extra.rays.push_back(ints({0, -1}));
    CHECK(rays_into_corners(extra, l));
}

TEST_CASE("boundary_hull") {
    auto l = instances::cks_triangle();
    CHECK(boundary_hull(instances::cks_model(), l) == l);
    auto mid = CornerModel::make(rats({"1/2", "1/2"}), {rats({"1/2", "-1/2"}), rats({"1/2", "1/2"}), rats({"-1/2", "1/2"})});
    CHECK(boundary_hull(mid, l) == geom::convex_hull({ints({1, 0}), ints({1, 1}), ints({0, 1})}));
    auto single = CornerModel::make(rats({"1/2", "1/2"}), {ints({1, 0})});
    auto pt = boundary_hull(single, l);
    CHECK(pt.affine_dimension() == 0);
    CHECK(pt.vertices() == Matrix{rats({"3/2", "1/2"})});
}

TEST_CASE("positive spanning") {
    CHECK(rays_positively_span(instances::cks_model()));
    CHECK(rays_positively_span(instances::cks_model_missing_corner()));
    auto m = instances::cks_model();
    m.rays.erase(m.rays.begin());
    CHECK_FALSE(rays_positively_span(m));
}
