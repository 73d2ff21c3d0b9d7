#include "splitlab/certify.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "splitlab/errors.hpp"
#include "splitlab/lattice.hpp"

namespace splitlab::certify {

Polyhedron integer_hull(const Polyhedron& l) {
    if (!l.is_bounded()) throw PreconditionError("integer_hull: L must be bounded");
    auto pts = geom::lattice_points(l);
    if (pts.empty()) return Polyhedron::empty(l.dim());
    return geom::convex_hull(l.dim(), pts);
}

std::vector<Face> faces(const Polyhedron& p) {
    if (!p.is_bounded()) throw PreconditionError("faces: polyhedron must be bounded");
    if (p.is_empty()) return {};
    const auto& verts = p.vertices();
    const auto& ineqs = p.inequalities();
    using VSet = std::vector<std::size_t>;

    auto tight_of = [&](const VSet& vs) {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < ineqs.size(); ++i) {
            bool all = true;
            for (auto v : vs) all = all && ineqs[i].tight_at(verts[v]);
            if (all) t.push_back(i);
        }
        return t;
    };

    VSet all(verts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::map<VSet, std::vector<std::size_t>> seen{{all, tight_of(all)}};
    std::deque<VSet> queue{all};
    while (!queue.empty()) {
        VSet g = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < ineqs.size(); ++i) {
            VSet sub;
            for (auto v : g)
                if (ineqs[i].tight_at(verts[v])) sub.push_back(v);
            if (sub.empty() || sub.size() == g.size() || seen.count(sub)) continue;
            seen.emplace(sub, tight_of(sub));
            queue.push_back(sub);
        }
    }

    std::vector<Face> out;
    std::vector<std::pair<int, VSet>> order;
    for (const auto& [vs, tight] : seen) {
        Matrix pts;
        for (auto v : vs) pts.push_back(verts[v]);
        out.push_back({geom::convex_hull(p.dim(), pts), tight});
        order.emplace_back(out.back().poly.affine_dimension(), vs);
    }
    std::vector<std::size_t> idx(out.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (order[a].first != order[b].first) return order[a].first > order[b].first;
        return order[a].second < order[b].second;
    });
    std::vector<Face> sorted;
    for (auto i : idx) sorted.push_back(std::move(out[i]));
    return sorted;
}

bool face_in_facet(const Polyhedron& face, const Polyhedron& l) {
    if (!l.contains(face)) throw PreconditionError("face_in_facet: face is not contained in L");
    if (face.is_empty()) return true;
    for (const auto& q : l.inequalities()) {
        bool all = true;
        for (const auto& v : face.vertices()) all = all && q.tight_at(v);
        if (all) return true;
    }
    return false;
}

namespace {

Int l1(const IntVec& v) {
    Int s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

// Greedy descent of ||pi||_1 along the kernel directions.
IntVec shorten(IntVec pi, const geom::IntMatrix& kernel) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& k : kernel)
            for (int sign : {1, -1}) {
                IntVec cand = pi;
                for (std::size_t i = 0; i < cand.size(); ++i) cand[i] += sign * k[i];
                if (l1(cand) < l1(pi)) {
                    pi = std::move(cand);
                    improved = true;
                }
            }
    }
    return pi;
}

}  // namespace

PartitionCertificate is_2partitionable(const Matrix& points_in, std::size_t cap) {
    Matrix points = points_in;
    for (const auto& p : points) {
        if (p.size() != points.front().size()) throw InputError("is_2partitionable: dimension mismatch");
        if (!is_integral(p)) throw InputError("is_2partitionable: points must be integral");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    PartitionCertificate cert;
    if (points.size() <= 1) {
        cert.outcome = PartitionOutcome::trivially_partitionable;
        cert.s1 = points;
        return cert;
    }
    if (points.size() > cap)
        throw InputError("is_2partitionable: " + std::to_string(points.size()) + " points exceed the cap of " +
                         std::to_string(cap));

    const std::size_t n = points.size();
    const std::size_t m = points.front().size();
    IntVec base = to_int(points[0]);
    geom::IntMatrix diffs;
    for (std::size_t i = 1; i < n; ++i) {
        IntVec d = to_int(points[i]);
        for (std::size_t j = 0; j < m; ++j) d[j] -= base[j];
        diffs.push_back(std::move(d));
    }
    geom::HermiteSolver solver(diffs, m);
    auto kernel = solver.kernel();

    // points[0] is always in S1; bit i of mask puts points[i+1] in S2.
    struct Best {
        Int norm;
        std::size_t s1_size;
        std::vector<std::size_t> s1;
        IntVec pi;
    };
    std::optional<Best> best;
    const std::size_t others = n - 1;
    for (unsigned long mask = 1; mask < (1UL << others); ++mask) {
        IntVec rhs(others);
        std::vector<std::size_t> s1{0};
        for (std::size_t i = 0; i < others; ++i) {
            bool up = (mask >> i) & 1UL;
            rhs[i] = up ? 1 : 0;
            if (!up) s1.push_back(i + 1);
        }
        auto sol = solver.solve(rhs);
        if (!sol) continue;
        IntVec pi = shorten(*sol, kernel);
        Best cand{l1(pi), s1.size(), s1, pi};
        auto key = [](const Best& b) { return std::tie(b.norm, b.s1_size, b.s1); };
        if (!best || key(cand) < key(*best)) best = std::move(cand);
    }

    if (!best) {
        cert.outcome = PartitionOutcome::not_partitionable;
        return cert;
    }
    cert.outcome = PartitionOutcome::partitionable;
    Int pi0 = 0;
    for (std::size_t j = 0; j < m; ++j) pi0 += best->pi[j] * base[j];
    std::vector<bool> in_s1(n, false);
    for (auto i : best->s1) in_s1[i] = true;
    for (std::size_t i = 0; i < n; ++i) (in_s1[i] ? cert.s1 : cert.s2).push_back(points[i]);
    splits::Split s = splits::Split::make(best->pi, pi0);
    if (s.pi != best->pi) std::swap(cert.s1, cert.s2);  // canonical orientation flipped the sides
    cert.split = s;
    return cert;
}

TwoHPReport has_2hyperplane_property(const Polyhedron& l) {
    if (!l.is_bounded()) throw PreconditionError("has_2hyperplane_property: L must be bounded");
    cutgen::require_lattice_free(l);
    TwoHPReport report;
    Polyhedron li = integer_hull(l);
    for (auto& f : faces(li)) {
        FaceReport fr;
        fr.face = f.poly;
        fr.points = geom::lattice_points(f.poly);
        fr.contained_in_facet_of_l = face_in_facet(f.poly, l);
        if (!fr.contained_in_facet_of_l) {
            fr.certificate = is_2partitionable(fr.points);
            if (fr.certificate->outcome == PartitionOutcome::not_partitionable) {
                report.overall = false;
                if (!report.offending) report.offending = report.faces.size();
            }
        }
        report.faces.push_back(std::move(fr));
    }
    return report;
}

std::string to_string(Kind2D kind) {
    switch (kind) {
        case Kind2D::split: return "split";
        case Kind2D::triangle_type1: return "triangle_type1";
        case Kind2D::triangle_type2: return "triangle_type2";
        case Kind2D::triangle_type3: return "triangle_type3";
        case Kind2D::quadrilateral: return "quadrilateral";
        case Kind2D::non_maximal: return "non_maximal";
        case Kind2D::other: return "other";
    }
    return "other";
}

namespace {

// Two facets on consecutive parallel lattice lines: L sits inside a split set.
bool split_pattern(const Polyhedron& l) {
    const auto& ineqs = l.inequalities();
    for (std::size_t i = 0; i < ineqs.size(); ++i)
        for (std::size_t j = i + 1; j < ineqs.size(); ++j) {
            Int gi = geom::gcd_of(to_int(ineqs[i].a)), gj = geom::gcd_of(to_int(ineqs[j].a));
            Vec ni = scale(ineqs[i].a, Rat(1) / gi), nj = scale(ineqs[j].a, Rat(1) / gj);
            if (ni != scale(nj, -1)) continue;
            Rat hi = ineqs[i].b / gi, lo = -(ineqs[j].b / gj);
            if (is_integer(hi) && is_integer(lo) && hi - lo == 1) return true;
        }
    return false;
}

}  // namespace

Classification2D classify_2d(const Polyhedron& l) {
    if (l.dim() != 2) throw PreconditionError("classify_2d: L must be two-dimensional");
    if (!l.is_bounded() || !l.full_dimensional())
        throw PreconditionError("classify_2d: L must be bounded with nonempty interior");
    cutgen::require_lattice_free(l);

    Classification2D c;
    c.integer_points_on_boundary = geom::lattice_points(l);
    if (split_pattern(l)) {
        c.kind = Kind2D::split;
        return c;
    }
    const auto& verts = l.vertices();
    for (const auto& q : l.inequalities()) {
        bool relint_point = false;
        for (const auto& x : c.integer_points_on_boundary)
            if (q.tight_at(x) && !std::binary_search(verts.begin(), verts.end(), x)) relint_point = true;
        if (!relint_point) {
            c.kind = Kind2D::non_maximal;
            return c;
        }
    }
    if (verts.size() == 3) {
        bool integral = std::all_of(verts.begin(), verts.end(), [](const Vec& v) { return is_integral(v); });
        if (integral) c.kind = Kind2D::triangle_type1;
        else if (c.integer_points_on_boundary.size() == 3) c.kind = Kind2D::triangle_type3;
        else c.kind = Kind2D::triangle_type2;
    } else if (verts.size() == 4) {
        c.kind = Kind2D::quadrilateral;
    }
    return c;
}

InfiniteRankVerdict infinite_rank_2d(const cutgen::CornerModel& model, const Polyhedron& l) {
    if (model.dim() != 2 || l.dim() != 2) throw PreconditionError("infinite_rank_2d: dimension must be 2");
    if (!cutgen::rays_positively_span(model))
        throw PreconditionError("infinite_rank_2d: rays do not positively span the plane");
    InfiniteRankVerdict v;
    v.boundary_hull = cutgen::boundary_hull(model, l);
    v.boundary_class = classify_2d(v.boundary_hull);
    v.infinite_rank = v.boundary_class.kind == Kind2D::triangle_type1 &&
                      cutgen::rays_into_corners(model, v.boundary_hull);
    v.two_hyperplane_property = has_2hyperplane_property(v.boundary_hull).overall;
    v.consistent = v.infinite_rank == !v.two_hyperplane_property;
    return v;
}

}  // namespace splitlab::certify
