#include "splitlab/polyhedron.hpp"

#include <algorithm>
#include <utility>

#include "double_description.hpp"
#include "splitlab/errors.hpp"

namespace splitlab::geom {

namespace {

void check_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) throw InputError("polyhedron dimension must be in 1..4");
}

void check_len(const Vec& v, std::size_t dim, const char* what) {
    if (v.size() != dim) throw InputError(std::string(what) + ": dimension mismatch");
}

// Jointly scales (a, b) to coprime integers by a positive factor.
std::pair<Vec, Rat> primitive_row(const Vec& a, const Rat& b) {
    Vec ab = a;
    ab.push_back(b);
    ab = primitive(ab);
    Rat off = ab.back();
    ab.pop_back();
    return {std::move(ab), off};
}

Vec homogenize_row(const Vec& a, const Rat& b) {
    Vec r = a;
    r.push_back(-b);
    return r;
}

Vec t_nonneg_row(std::size_t dim) {
    Vec r = zeros(dim + 1);
    r[dim] = -1;
    return r;
}

// Reduced echelon system of equalities in the form (normal | offset).
std::vector<Hyperplane> canonical_equalities(const Matrix& aug, std::size_t dim) {
    Echelon e = rref(aug, dim + 1);
    std::vector<Hyperplane> out;
    for (auto& row : e.rows) {
        Vec n(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(dim));
        if (is_zero(n)) throw std::logic_error("canonical_equalities: inconsistent system");
        out.push_back(Hyperplane::make(std::move(n), row[dim]));
    }
    return out;
}

// Inequality a.x <= b reduced modulo the pivots of the equality system.
Inequality reduce_modulo(Vec a, Rat b, const std::vector<Hyperplane>& eqs, std::size_t dim) {
    for (const auto& h : eqs) {
        std::size_t piv = 0;
        while (piv < dim && sgn(h.normal[piv]) == 0) ++piv;
        if (sgn(a[piv]) == 0) continue;
        Rat f = a[piv] / h.normal[piv];
        for (std::size_t j = 0; j < dim; ++j) a[j] -= f * h.normal[j];
        b -= f * h.offset;
    }
    return Inequality::make(std::move(a), std::move(b));
}

struct HRep {
    std::vector<Inequality> ineqs;
    std::vector<Hyperplane> eqs;
};

struct VRep {
    Matrix points;
    Matrix rays;
};

// Facets and affine hull of conv(points) + cone(rays). Points must be nonempty.
HRep facets_of(std::size_t dim, const Matrix& points, const Matrix& rays) {
    Matrix rows;
    for (const auto& p : points) rows.push_back(homogenize_row(p, 1));
    for (const auto& r : rays) rows.push_back(homogenize_row(r, 0));
    auto cone = detail::cone_generators(rows, dim + 1);

    HRep out;
    Matrix aug;
    for (const auto& l : cone.lineality) aug.push_back(l);
    out.eqs = canonical_equalities(aug, dim);

    for (const auto& y : cone.rays) {
        Vec a(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(dim));
        Inequality ineq = reduce_modulo(a, y[dim], out.eqs, dim);
        if (is_zero(ineq.a)) continue;  // 0 <= b, implied
        out.ineqs.push_back(std::move(ineq));
    }
    std::sort(out.ineqs.begin(), out.ineqs.end());
    out.ineqs.erase(std::unique(out.ineqs.begin(), out.ineqs.end()), out.ineqs.end());
    return out;
}

// Vertices and rays of {x : rows}; lines come back as opposite ray pairs.
VRep generators_of(std::size_t dim, const std::vector<Inequality>& ineqs,
                   const std::vector<Hyperplane>& eqs) {
    Matrix rows;
    for (const auto& q : ineqs) rows.push_back(homogenize_row(q.a, q.b));
    for (const auto& h : eqs) {
        rows.push_back(homogenize_row(h.normal, h.offset));
        rows.push_back(scale(rows.back(), -1));
    }
    rows.push_back(t_nonneg_row(dim));
    auto cone = detail::cone_generators(rows, dim + 1);

    VRep out;
    for (const auto& y : cone.rays) {
        Vec x(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(dim));
        if (sgn(y[dim]) > 0) out.points.push_back(scale(x, 1 / y[dim]));
        else out.rays.push_back(primitive(x));
    }
    if (out.points.empty()) return {};
    for (const auto& l : cone.lineality) {
        Vec x(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(dim));
        out.rays.push_back(primitive(x));
        out.rays.push_back(primitive(scale(x, -1)));
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

Vec homogenize_point(const Vec& p) {
    Vec y = p;
    y.push_back(1);
    return primitive(y);
}

Vec homogenize_ray(const Vec& r) {
    Vec y = r;
    y.push_back(0);
    return primitive(y);
}

}  // namespace

Hyperplane Hyperplane::make(Vec normal, Rat offset) {
    if (is_zero(normal)) throw InputError("hyperplane normal must be nonzero");
    auto [n, o] = primitive_row(normal, offset);
    std::size_t lead = 0;
    while (sgn(n[lead]) == 0) ++lead;
    if (sgn(n[lead]) < 0) {
        for (auto& x : n) x = -x;
        o = -o;
    }
    return Hyperplane{std::move(n), std::move(o)};
}

Inequality Inequality::make(Vec a, Rat b) {
    if (is_zero(a)) return Inequality{std::move(a), Rat(sgn(b))};
    auto [n, o] = primitive_row(a, b);
    return Inequality{std::move(n), std::move(o)};
}

Polyhedron Polyhedron::empty(std::size_t dim) {
    check_dim(dim);
    Polyhedron p;
    p.dim_ = dim;
    return p;
}

Polyhedron Polyhedron::from_generators(std::size_t dim, const Matrix& points, const Matrix& rays) {
    check_dim(dim);
    for (const auto& p : points) check_len(p, dim, "convex_hull point");
    for (const auto& r : rays) check_len(r, dim, "convex_hull ray");
    if (points.empty()) return empty(dim);

    HRep h = facets_of(dim, points, rays);
    VRep v = generators_of(dim, h.ineqs, h.eqs);
    Polyhedron p;
    p.dim_ = dim;
    p.vertices_ = std::move(v.points);
    p.rays_ = std::move(v.rays);
    p.ineqs_ = std::move(h.ineqs);
    p.eqs_ = std::move(h.eqs);
    return p;
}

Polyhedron Polyhedron::from_inequalities(std::size_t dim, const std::vector<Inequality>& ineqs,
                                         const std::vector<Hyperplane>& eqs) {
    check_dim(dim);
    std::vector<Inequality> rows;
    for (const auto& q : ineqs) {
        check_len(q.a, dim, "inequality");
        if (is_zero(q.a)) {
            if (sgn(q.b) < 0) return empty(dim);
            continue;
        }
        rows.push_back(q);
    }
    for (const auto& h : eqs) check_len(h.normal, dim, "equality");

    VRep v = generators_of(dim, rows, eqs);
    if (v.points.empty()) return empty(dim);
    return from_generators(dim, v.points, v.rays);
}

int Polyhedron::affine_dimension() const noexcept {
    if (is_empty()) return -1;
    return static_cast<int>(dim_) - static_cast<int>(eqs_.size());
}

std::vector<Inequality> Polyhedron::all_rows() const {
    std::vector<Inequality> out = ineqs_;
    for (const auto& h : eqs_) {
        out.push_back(Inequality{h.normal, h.offset});
        out.push_back(Inequality{scale(h.normal, -1), -h.offset});
    }
    if (is_empty()) out.push_back(Inequality{zeros(dim_), -1});
    return out;
}

bool Polyhedron::contains(const Vec& x) const {
    check_len(x, dim_, "contains");
    if (is_empty()) return false;
    for (const auto& h : eqs_)
        if (!h.contains(x)) return false;
    for (const auto& q : ineqs_)
        if (!q.satisfied_by(x)) return false;
    return true;
}

bool Polyhedron::relative_interior_contains(const Vec& x) const {
    check_len(x, dim_, "relative_interior_contains");
    if (is_empty()) return false;
    for (const auto& h : eqs_)
        if (!h.contains(x)) return false;
    for (const auto& q : ineqs_)
        if (sgn(q.slack(x)) <= 0) return false;
    return true;
}

bool Polyhedron::interior_contains(const Vec& x) const {
    return full_dimensional() && relative_interior_contains(x);
}

bool Polyhedron::contains(const Polyhedron& other) const {
    if (other.dim_ != dim_) throw InputError("contains: dimension mismatch");
    if (other.is_empty()) return true;
    if (is_empty()) return false;
    for (const auto& v : other.vertices_)
        if (!contains(v)) return false;
    for (const auto& r : other.rays_) {
        for (const auto& h : eqs_)
            if (sgn(dot(h.normal, r)) != 0) return false;
        for (const auto& q : ineqs_)
            if (sgn(dot(q.a, r)) > 0) return false;
    }
    return true;
}

std::pair<std::optional<Rat>, std::optional<Rat>> Polyhedron::range(const Vec& c) const {
    check_len(c, dim_, "range");
    std::optional<Rat> lo, hi;
    if (is_empty()) return {lo, hi};
    bool lo_unbounded = false, hi_unbounded = false;
    for (const auto& r : rays_) {
        int s = sgn(dot(c, r));
        if (s > 0) hi_unbounded = true;
        if (s < 0) lo_unbounded = true;
    }
    for (const auto& v : vertices_) {
        Rat val = dot(c, v);
        if (!lo || val < *lo) lo = val;
        if (!hi || val > *hi) hi = val;
    }
    if (lo_unbounded) lo.reset();
    if (hi_unbounded) hi.reset();
    return {lo, hi};
}

Polyhedron convex_hull(std::size_t dim, const Matrix& points, const Matrix& rays) {
    return Polyhedron::from_generators(dim, points, rays);
}

Polyhedron convex_hull(const Matrix& points, const Matrix& rays) {
    if (points.empty()) throw InputError("convex_hull: dimension unknown for empty input");
    return Polyhedron::from_generators(points.front().size(), points, rays);
}

Polyhedron enumerate_vertices(const std::vector<Inequality>& ineqs, std::size_t dim,
                              const std::vector<Hyperplane>& eqs) {
    return Polyhedron::from_inequalities(dim, ineqs, eqs);
}

Generators clip(const Polyhedron& p, const Inequality& half) {
    const std::size_t dim = p.dim();
    check_len(half.a, dim, "clip");
    if (p.is_empty()) return {};
    if (is_zero(half.a)) {
        if (sgn(half.b) < 0) return {};
        return p.generators();
    }

    bool has_line = false;
    for (const auto& r : p.rays()) {
        Vec neg = scale(r, -1);
        if (std::binary_search(p.rays().begin(), p.rays().end(), neg)) has_line = true;
    }
    if (has_line) return intersect(p, {half}).generators();

    Matrix rows;
    for (const auto& q : p.inequalities()) rows.push_back(homogenize_row(q.a, q.b));
    for (const auto& h : p.equalities()) {
        rows.push_back(homogenize_row(h.normal, h.offset));
        rows.push_back(scale(rows.back(), -1));
    }
    rows.push_back(t_nonneg_row(dim));

    Matrix rays;
    for (const auto& v : p.vertices()) rays.push_back(homogenize_point(v));
    for (const auto& r : p.rays()) rays.push_back(homogenize_ray(r));

    Generators out;
    for (const auto& y : detail::clip_cone(rays, rows, homogenize_row(half.a, half.b))) {
        Vec x(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(dim));
        if (sgn(y[dim]) > 0) out.points.push_back(scale(x, 1 / y[dim]));
        else out.rays.push_back(x);
    }
    if (out.points.empty()) return {};
    return out;
}

Polyhedron intersect(const std::vector<Polyhedron>& parts) {
    if (parts.empty()) throw InputError("intersect: no operands");
    const std::size_t dim = parts.front().dim();
    std::vector<Inequality> rows;
    std::vector<Hyperplane> eqs;
    for (const auto& p : parts) {
        if (p.dim() != dim) throw InputError("intersect: dimension mismatch");
        if (p.is_empty()) return Polyhedron::empty(dim);
        rows.insert(rows.end(), p.inequalities().begin(), p.inequalities().end());
        eqs.insert(eqs.end(), p.equalities().begin(), p.equalities().end());
    }
    return Polyhedron::from_inequalities(dim, rows, eqs);
}

Polyhedron intersect(const Polyhedron& p, const std::vector<Inequality>& extra,
                     const std::vector<Hyperplane>& extra_eqs) {
    if (p.is_empty()) return p;
    std::vector<Inequality> rows = p.inequalities();
    rows.insert(rows.end(), extra.begin(), extra.end());
    std::vector<Hyperplane> eqs = p.equalities();
    eqs.insert(eqs.end(), extra_eqs.begin(), extra_eqs.end());
    return Polyhedron::from_inequalities(p.dim(), rows, eqs);
}

namespace {

void scan(const std::vector<Inequality>& rows, const std::vector<Int>& lo, const std::vector<Int>& hi,
          Vec& x, std::size_t k, std::vector<Point>& out) {
    const std::size_t dim = x.size();
    if (k == dim) {
        out.push_back(x);
        return;
    }
    // Bound x_k using rows that involve no later coordinate.
    Int a = lo[k], b = hi[k];
    for (const auto& q : rows) {
        bool later = false;
        for (std::size_t j = k + 1; j < dim && !later; ++j) later = sgn(q.a[j]) != 0;
        if (later) continue;
        Rat rest = q.b;
        for (std::size_t j = 0; j < k; ++j) rest -= q.a[j] * x[j];
        int s = sgn(q.a[k]);
        if (s == 0) {
            if (sgn(rest) < 0) return;
            continue;
        }
        Rat bound = rest / q.a[k];
        if (s > 0) b = std::min(b, floor_rat(bound));
        else a = std::max(a, ceil_rat(bound));
    }
    for (Int v = a; v <= b; ++v) {
        x[k] = v;
        scan(rows, lo, hi, x, k + 1, out);
    }
    x[k] = 0;
}

}  // namespace

std::vector<Point> lattice_points(const Polyhedron& p) {
    if (!p.is_bounded()) throw PreconditionError("lattice_points: polyhedron is unbounded");
    std::vector<Point> out;
    if (p.is_empty()) return out;
    const std::size_t dim = p.dim();
    std::vector<Int> lo(dim), hi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto [mn, mx] = p.range(unit(dim, i));
        lo[i] = ceil_rat(*mn);
        hi[i] = floor_rat(*mx);
        if (lo[i] > hi[i]) return out;
    }
    Vec x = zeros(dim);
    scan(p.all_rows(), lo, hi, x, 0, out);
    return out;
}

AffineHull affine_hull(const Polyhedron& p) {
    if (p.is_empty()) throw PreconditionError("affine_hull: polyhedron is empty");
    return {p.affine_dimension(), p.equalities()};
}

Polyhedron apply_unimodular(const Polyhedron& p, const Matrix& u, const Vec& shift) {
    const std::size_t dim = p.dim();
    if (u.size() != dim) throw InputError("apply_unimodular: matrix size mismatch");
    for (const auto& row : u) {
        check_len(row, dim, "apply_unimodular row");
        if (!is_integral(row)) throw InputError("apply_unimodular: matrix must be integral");
    }
    check_len(shift, dim, "apply_unimodular shift");
    if (!is_integral(shift)) throw InputError("apply_unimodular: shift must be integral");
    Rat det = determinant(u);
    if (det != 1 && det != -1) throw InputError("apply_unimodular: |det U| != 1");
    if (p.is_empty()) return p;

    Matrix pts, rays;
    for (const auto& v : p.vertices()) pts.push_back(add(mat_vec(u, v), shift));
    for (const auto& r : p.rays()) rays.push_back(mat_vec(u, r));
    return Polyhedron::from_generators(dim, pts, rays);
}

}  // namespace splitlab::geom
