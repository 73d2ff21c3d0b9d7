#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "splitlab/linalg.hpp"
#include "splitlab/rational.hpp"

namespace splitlab::geom {

inline constexpr std::size_t kMaxDim = 4;

/// {x : normal . x = offset}, stored with (normal, offset) scaled to coprime integers and
/// the leading nonzero normal entry positive.
struct Hyperplane {
    Vec normal;
    Rat offset;

    static Hyperplane make(Vec normal, Rat offset);

    bool contains(const Vec& x) const { return dot(normal, x) == offset; }
    bool operator==(const Hyperplane&) const = default;
    friend bool operator<(const Hyperplane& x, const Hyperplane& y) {
        return x.normal != y.normal ? x.normal < y.normal : x.offset < y.offset;
    }
};

/// a . x <= b with (a, b) scaled to coprime integers.
struct Inequality {
    Vec a;
    Rat b;

    static Inequality make(Vec a, Rat b);

    Rat slack(const Vec& x) const { return b - dot(a, x); }
    bool satisfied_by(const Vec& x) const { return dot(a, x) <= b; }
    bool tight_at(const Vec& x) const { return dot(a, x) == b; }
    Hyperplane boundary() const { return Hyperplane::make(a, b); }
    bool operator==(const Inequality&) const = default;
    friend bool operator<(const Inequality& x, const Inequality& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

struct Generators {
    Matrix points;
    Matrix rays;
};

/// Rational polyhedron held in both representations at all times.
///
/// Vertices are sorted lexicographically, rays are primitive integral and sorted,
/// the affine hull is a reduced echelon system of equalities and facet inequalities
/// are reduced modulo that system, so two equal sets compare equal with `==`.
/// The empty set has no vertices, rays or inequalities.
class Polyhedron {
public:
    Polyhedron() = default;

    static Polyhedron empty(std::size_t dim);
    static Polyhedron from_generators(std::size_t dim, const Matrix& points, const Matrix& rays = {});
    static Polyhedron from_inequalities(std::size_t dim, const std::vector<Inequality>& ineqs,
                                        const std::vector<Hyperplane>& eqs = {});

    std::size_t dim() const noexcept { return dim_; }
    bool is_empty() const noexcept { return vertices_.empty(); }
    bool is_bounded() const noexcept { return rays_.empty(); }
    /// Dimension of the affine hull; -1 for the empty set.
    int affine_dimension() const noexcept;
    bool full_dimensional() const noexcept { return !is_empty() && eqs_.empty(); }

    const Matrix& vertices() const noexcept { return vertices_; }
    const Matrix& rays() const noexcept { return rays_; }
    const std::vector<Inequality>& inequalities() const noexcept { return ineqs_; }
    const std::vector<Hyperplane>& equalities() const noexcept { return eqs_; }

    /// Facets and equalities as a flat list of inequalities (each equality as two rows).
    std::vector<Inequality> all_rows() const;

    bool contains(const Vec& x) const;
    /// Every facet inequality strict and all equalities satisfied.
    bool relative_interior_contains(const Vec& x) const;
    /// Full-dimensional and every facet inequality strict.
    bool interior_contains(const Vec& x) const;
    bool contains(const Polyhedron& other) const;

    /// Min and max of `c . x` over the set; nullopt entries mean unbounded in that direction.
    std::pair<std::optional<Rat>, std::optional<Rat>> range(const Vec& c) const;

    Generators generators() const { return {vertices_, rays_}; }

    bool operator==(const Polyhedron& o) const = default;

private:
    std::size_t dim_ = 0;
    Matrix vertices_;
    Matrix rays_;
    std::vector<Inequality> ineqs_;
    std::vector<Hyperplane> eqs_;
};

/// Convex hull of points plus conic hull of rays. Empty input gives the empty polyhedron.
Polyhedron convex_hull(std::size_t dim, const Matrix& points, const Matrix& rays = {});
Polyhedron convex_hull(const Matrix& points, const Matrix& rays = {});

/// Vertices and rays of {x : ineqs} (with optional equalities).
Polyhedron enumerate_vertices(const std::vector<Inequality>& ineqs, std::size_t dim,
                              const std::vector<Hyperplane>& eqs = {});

/// Generators of P intersected with {a . x <= b}, obtained by clipping P's generators.
Generators clip(const Polyhedron& p, const Inequality& half);

Polyhedron intersect(const std::vector<Polyhedron>& parts);
Polyhedron intersect(const Polyhedron& p, const std::vector<Inequality>& extra,
                     const std::vector<Hyperplane>& extra_eqs = {});

/// Integer points of a bounded polyhedron, sorted lexicographically.
std::vector<Point> lattice_points(const Polyhedron& p);

struct AffineHull {
    int dimension;
    std::vector<Hyperplane> equalities;
};
AffineHull affine_hull(const Polyhedron& p);

/// Image of P under x -> U x + shift, with |det U| = 1.
Polyhedron apply_unimodular(const Polyhedron& p, const Matrix& u, const Vec& shift);

}  // namespace splitlab::geom
