#pragma once

#include <optional>
#include <vector>

#include "splitlab/polyhedron.hpp"
#include "splitlab/rational.hpp"

namespace splitlab::cutgen {

using geom::Polyhedron;

/// x = f + sum_j r^j s_j with x integer and s >= 0.
struct CornerModel {
    Point f;
    Matrix rays;

    /// Validates f fractional and every ray nonzero, all of the same dimension.
    static CornerModel make(Point f, Matrix rays);
    std::size_t dim() const noexcept { return f.size(); }
};

/// psi[j] is the coefficient of s_j in the cut sum_j psi[j] s_j >= 1.
struct CutCoefficients {
    Vec psi;
};

/// An integer point in the relative interior of L, if any.
std::optional<Point> interior_integer_point(const Polyhedron& l);
/// Throws LatticeFreeError carrying the witness when L has an integer point in its relative interior.
void require_lattice_free(const Polyhedron& l);

/// psi(r) = 1 / max{lambda >= 0 : f + lambda r in L}.
Rat gauge(const Polyhedron& l, const Point& f, const Vec& r);
Point boundary_point(const Polyhedron& l, const Point& f, const Vec& r);

CutCoefficients intersection_cut(const CornerModel& model, const Polyhedron& l);

bool rays_into_corners(const CornerModel& model, const Polyhedron& l);
Polyhedron boundary_hull(const CornerModel& model, const Polyhedron& l);

/// Nonnegative combinations of the rays span the whole space.
bool rays_positively_span(const CornerModel& model);

}  // namespace splitlab::cutgen
