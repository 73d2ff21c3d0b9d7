#include "splitlab/splits.hpp"

#include <algorithm>
#include <functional>

#include "splitlab/cutgen.hpp"
#include "splitlab/errors.hpp"
#include "splitlab/lattice.hpp"

namespace splitlab::splits {

Split Split::make(const IntVec& pi, const Int& pi0) {
    Int g = geom::gcd_of(pi);
    if (sgn(g) == 0) throw InputError("split: pi must be nonzero");
    if (g != 1) throw InputError("split: pi must be primitive");
    std::size_t lead = 0;
    while (sgn(pi[lead]) == 0) ++lead;
    if (sgn(pi[lead]) > 0) return Split{pi, pi0};
    IntVec neg = pi;
    for (auto& x : neg) x = -x;
    return Split{std::move(neg), -pi0 - 1};
}

Split Split::make(const Vec& pi, const Rat& pi0) {
    if (!is_integral(pi) || !is_integer(pi0)) throw InputError("split: coefficients must be integers");
    return make(to_int(pi), pi0.get_num());
}

Hyperplane Split::lower_plane() const { return Hyperplane::make(pi_rat(), Rat(pi0)); }
Hyperplane Split::upper_plane() const { return Hyperplane::make(pi_rat(), Rat(pi0 + 1)); }

Vec Split::normal_in(std::size_t dim) const {
    if (pi.size() > dim) throw InputError("split acts on more coordinates than the polyhedron has");
    Vec n = zeros(dim);
    for (std::size_t i = 0; i < pi.size(); ++i) n[i] = pi[i];
    return n;
}

Polyhedron apply_split(const Polyhedron& q, const Split& s) {
    Vec n = s.normal_in(q.dim());
    if (q.is_empty()) return q;
    auto low = geom::clip(q, Inequality{n, Rat(s.pi0)});
    auto high = geom::clip(q, Inequality{scale(n, -1), Rat(-s.pi0 - 1)});
    Matrix pts = low.points, rays = low.rays;
    pts.insert(pts.end(), high.points.begin(), high.points.end());
    rays.insert(rays.end(), high.rays.begin(), high.rays.end());
    if (pts.empty()) return Polyhedron::empty(q.dim());
    return geom::convex_hull(q.dim(), pts, rays);
}

SplitClass classify_split(const Polyhedron& q, const Split& s) {
    if (q.is_empty()) throw PreconditionError("classify_split: Q is empty");
    auto [lo, hi] = q.range(s.normal_in(q.dim()));
    Rat a = s.pi0, b = s.pi0 + 1;
    auto meets = [&](const Rat& level) { return (!lo || *lo <= level) && (!hi || level <= *hi); };

    SplitClass c;
    c.intersecting = meets(a) && meets(b);
    c.englobing = lo && hi && a <= *lo && *hi <= b;
    bool upper_empty = hi && *hi < b;
    bool lower_empty = lo && *lo > a;
    c.chvatal = upper_empty || lower_empty;
    if (upper_empty && lower_empty) c.empty_side = EmptySide::both;
    else if (upper_empty) c.empty_side = EmptySide::upper;
    else if (lower_empty) c.empty_side = EmptySide::lower;
    return c;
}

FacetSplit facet_split(const Polyhedron& qx, std::size_t facet) {
    if (!qx.full_dimensional()) throw PreconditionError("facet_split: Qx must be full-dimensional");
    if (facet >= qx.inequalities().size()) throw InputError("facet_split: facet index out of range");
    const auto& f = qx.inequalities()[facet];
    Int g = geom::gcd_of(to_int(f.a));
    Vec n = scale(f.a, Rat(1) / g);
    Rat b = f.b / g;
    Int near = ceil_rat(b);

    FacetSplit out;
    out.split = Split::make(to_int(n), near - 1);
    out.near_plane = Hyperplane::make(n, Rat(near));
    out.far_plane = Hyperplane::make(n, Rat(near - 1));
    Rat gap = b - (near - 1);
    out.width_sq = gap * gap / norm_sq(n);
    return out;
}

RoundResult round_of_splits(const Polyhedron& q, const Polyhedron& qx) {
    if (!qx.is_bounded()) throw PreconditionError("round_of_splits: Qx must be bounded");
    if (qx.dim() > q.dim()) throw InputError("round_of_splits: Qx has more coordinates than Q");
    if (qx.inequalities().empty()) throw PreconditionError("round_of_splits: Qx must be full-dimensional");
    RoundResult out;
    std::vector<Polyhedron> parts;
    for (std::size_t i = 0; i < qx.inequalities().size(); ++i) {
        out.splits.push_back(facet_split(qx, i));
        parts.push_back(apply_split(q, out.splits.back().split));
        if (i == 0 || out.splits.back().width_sq < out.width.square) out.width.square = out.splits.back().width_sq;
    }
    out.result = geom::intersect(parts);
    return out;
}

std::vector<Split> enumerate_splits(std::size_t dim, long bound, const Vec& lo, const Vec& hi) {
    if (lo.size() != dim || hi.size() != dim) throw InputError("enumerate_splits: box dimension mismatch");
    std::vector<Split> out;
    if (bound < 1) return out;
    IntVec pi(dim);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == dim) {
            Int g = geom::gcd_of(pi);
            if (g != 1) return;
            std::size_t lead = 0;
            while (sgn(pi[lead]) == 0) ++lead;
            if (sgn(pi[lead]) < 0) return;
            Rat mn = 0, mx = 0;
            for (std::size_t i = 0; i < dim; ++i) {
                Rat a = pi[i] * lo[i], b = pi[i] * hi[i];
                mn += std::min(a, b);
                mx += std::max(a, b);
            }
            for (Int p0 = floor_rat(mn); p0 <= ceil_rat(mx) - 1; ++p0) out.push_back(Split{pi, p0});
            return;
        }
        for (long v = -bound; v <= bound; ++v) {
            pi[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Integer d with n . d = 1, smallest max-norm, then lexicographically smallest.
IntVec unit_step(const IntVec& n) {
    for (long r = 1;; ++r) {
        std::optional<IntVec> best;
        for (long x = -r; x <= r; ++x)
            for (long y = -r; y <= r; ++y) {
                if (n[0] * x + n[1] * y != 1) continue;
                IntVec d{Int(x), Int(y)};
                if (!best || d < *best) best = d;
            }
        if (best) return *best;
    }
}

}  // namespace

SweepResult sweep_sequence_2d(const Polyhedron& q, const Split& chv, const Point& p) {
    if (q.dim() != 2 || chv.pi.size() != 2 || p.size() != 2)
        throw PreconditionError("sweep_sequence_2d: hypothesis failed: dimension must be 2");
    if (!q.full_dimensional() || !q.is_bounded())
        throw PreconditionError("sweep_sequence_2d: hypothesis failed: Q must be a full-dimensional polytope");
    if (cutgen::interior_integer_point(q))
        throw PreconditionError("sweep_sequence_2d: hypothesis failed: Q is not lattice-free");
    SplitClass cls = classify_split(q, chv);
    if (!cls.chvatal || cls.empty_side == EmptySide::both)
        throw PreconditionError("sweep_sequence_2d: hypothesis failed: split is not a Chvatal split for Q");

    // Orient so that H^A: n x = a0 meets Q and H^B: n x = a0 + 1 misses it.
    IntVec n = chv.pi;
    Int a0 = chv.pi0;
    if (cls.empty_side == EmptySide::lower) {
        for (auto& x : n) x = -x;
        a0 = -chv.pi0 - 1;
    }
    Vec nr = to_rat(n);
    Polyhedron l = geom::intersect(q, {}, {Hyperplane::make(nr, Rat(a0))});
    if (l.affine_dimension() != 1)
        throw PreconditionError("sweep_sequence_2d: hypothesis failed: H^A and Q must meet in a segment");
    Rat np = dot(nr, p);
    if (!(Rat(a0) < np && np < Rat(a0 + 1)))
        throw PreconditionError("sweep_sequence_2d: hypothesis failed: p must lie strictly between H^A and H^B");

    const Matrix& ends = l.vertices();
    IntVec v = unit_step(n);
    Vec vr = to_rat(v);

    SweepResult out;
    Polyhedron cur = q;
    for (std::size_t e = 0; e < 2; ++e) {
        const Point& f = ends[e];
        const Point& other = ends[1 - e];
        if (!is_integral(f))
            throw PreconditionError("sweep_sequence_2d: hypothesis failed: endpoint " + to_string(f) + " is not integral");
        Vec delta{Rat(-n[1]), Rat(n[0])};
        if (sgn(dot(delta, sub(other, f))) < 0) delta = scale(delta, -1);
        if (!l.contains(add(f, delta)))
            throw PreconditionError("sweep_sequence_2d: hypothesis failed: facet split at " + to_string(f) +
                                    " is not L-intersecting");

        // Coordinates in the lattice basis (delta, v): w = alpha delta + beta v.
        Rat det = delta[0] * vr[1] - delta[1] * vr[0];
        auto coords = [&](const Vec& w) {
            Rat alpha = (w[0] * vr[1] - w[1] * vr[0]) / det;
            Rat beta = (delta[0] * w[1] - delta[1] * w[0]) / det;
            return std::pair{alpha, beta};
        };
        Vec dstar{vr[1] / det, -vr[0] / det};
        Vec vstar{-delta[1] / det, delta[0] / det};

        Polyhedron upper = geom::intersect(cur, {Inequality::make(scale(nr, -1), -Rat(a0))});
        std::optional<Rat> slope;
        for (const auto& w : upper.vertices()) {
            auto [alpha, beta] = coords(sub(w, f));
            if (sgn(beta) <= 0) continue;
            Rat r = alpha / beta;
            if (!slope || r < *slope) slope = r;
        }
        if (!slope) continue;  // nothing of Q beyond H^A near this end
        // Largest k whose line C^{0,k} meets the part beyond H^A only in f.
        Int ell = ceil_rat(*slope) - 1;
        auto [pa, pb] = coords(sub(p, f));
        Int t = floor_rat(pa / pb);
        for (Int k = ell; k <= t; ++k) {
            Vec pik = sub(dstar, scale(vstar, Rat(k)));
            Split s = Split::make(pik, dot(pik, f));
            out.sequence.push_back({s, "sweep"});
            cur = apply_split(cur, s);
        }
    }

    out.swept = cur;
    Matrix pyramid = l.vertices();
    pyramid.push_back(p);
    Polyhedron pyr = geom::convex_hull(2, pyramid);
    Polyhedron beyond = geom::intersect(cur, {Inequality::make(scale(nr, -1), -Rat(a0))});
    out.contained = pyr.contains(beyond);
    return out;
}

}  // namespace splitlab::splits
