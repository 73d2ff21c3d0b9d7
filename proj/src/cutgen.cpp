#include "splitlab/cutgen.hpp"

#include <algorithm>

#include "splitlab/errors.hpp"

namespace splitlab::cutgen {

CornerModel CornerModel::make(Point f, Matrix rays) {
    if (f.empty()) throw InputError("corner model: f is empty");
    if (is_integral(f)) throw InputError("corner model: f must not be integral");
    for (const auto& r : rays) {
        if (r.size() != f.size()) throw InputError("corner model: ray dimension mismatch");
        if (is_zero(r)) throw InputError("corner model: zero ray");
    }
    return CornerModel{std::move(f), std::move(rays)};
}

std::optional<Point> interior_integer_point(const Polyhedron& l) {
    if (l.is_empty()) return std::nullopt;
    for (const auto& x : geom::lattice_points(l))
        if (l.relative_interior_contains(x)) return x;
    return std::nullopt;
}

void require_lattice_free(const Polyhedron& l) {
    if (auto w = interior_integer_point(l))
        throw LatticeFreeError("set is not lattice-free: integer point " + to_string(*w) + " in its interior", *w);
}

namespace {

void check_gauge_args(const Polyhedron& l, const Point& f, const Vec& r) {
    if (f.size() != l.dim() || r.size() != l.dim()) throw InputError("gauge: dimension mismatch");
    if (is_zero(r)) throw InputError("gauge: ray is zero");
    if (!l.is_bounded()) throw PreconditionError("gauge: L must be bounded");
    if (!l.interior_contains(f)) throw PreconditionError("gauge: f is not in the interior of L");
}

// max{lambda : f + lambda r in L} for bounded full-dimensional L with f interior.
Rat exit_parameter(const Polyhedron& l, const Point& f, const Vec& r) {
    std::optional<Rat> best;
    for (const auto& q : l.inequalities()) {
        Rat ar = dot(q.a, r);
        if (sgn(ar) <= 0) continue;
        Rat lambda = q.slack(f) / ar;
        if (!best || lambda < *best) best = lambda;
    }
    return *best;
}

}  // namespace

Rat gauge(const Polyhedron& l, const Point& f, const Vec& r) {
    check_gauge_args(l, f, r);
    return 1 / exit_parameter(l, f, r);
}

Point boundary_point(const Polyhedron& l, const Point& f, const Vec& r) {
    check_gauge_args(l, f, r);
    return add(f, scale(r, exit_parameter(l, f, r)));
}

CutCoefficients intersection_cut(const CornerModel& model, const Polyhedron& l) {
    if (model.dim() != l.dim()) throw InputError("intersection_cut: dimension mismatch");
    if (!l.is_bounded()) throw PreconditionError("intersection_cut: L must be bounded");
    require_lattice_free(l);
    CutCoefficients out;
    for (const auto& r : model.rays) out.psi.push_back(gauge(l, model.f, r));
    return out;
}

bool rays_into_corners(const CornerModel& model, const Polyhedron& l) {
    std::vector<Point> hits;
    for (const auto& r : model.rays) hits.push_back(boundary_point(l, model.f, r));
    std::sort(hits.begin(), hits.end());
    for (const auto& v : l.vertices())
        if (!std::binary_search(hits.begin(), hits.end(), v)) return false;
    return true;
}

Polyhedron boundary_hull(const CornerModel& model, const Polyhedron& l) {
    Matrix pts;
    for (const auto& r : model.rays) pts.push_back(boundary_point(l, model.f, r));
    return geom::convex_hull(l.dim(), pts);
}

bool rays_positively_span(const CornerModel& model) {
    if (model.rays.empty()) return false;
    Polyhedron hull = geom::convex_hull(model.dim(), model.rays);
    return hull.interior_contains(zeros(model.dim()));
}

}  // namespace splitlab::cutgen
