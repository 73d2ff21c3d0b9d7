#include "splitlab/ranklab.hpp"

#include <algorithm>
#include <sstream>

#include "splitlab/certify.hpp"
#include "splitlab/errors.hpp"
#include "splitlab/lattice.hpp"

namespace splitlab::ranklab {

namespace {

Rat dot_prefix(const Vec& a, const Vec& x) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += a[i] * x[i];
    return s;
}

Vec prefix(const Vec& v, std::size_t n) { return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }

Vec append(Vec v, const Rat& z) {
    v.push_back(z);
    return v;
}

std::string describe(const Split& s) { return "(" + splitlab::to_string(s.pi_rat()) + " | " + s.pi0.get_str() + ")"; }

Rat diameter_sq(const Polyhedron& p) {
    Rat best = 0;
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, norm_sq(sub(v[i], v[j])));
    return best;
}

}  // namespace

std::string to_string(const Height& h) { return h ? splitlab::to_string(*h) : "-inf"; }

bool height_le(const Height& a, const Height& b) {
    if (!a) return true;
    if (!b) return false;
    return *a <= *b;
}

std::string to_string(LiftKind kind) {
    return kind == LiftKind::cone_over_l ? "cone_over_l" : "cone_over_boundary_points";
}

LiftedCone lift(const cutgen::CornerModel& model, const Polyhedron& l, LiftKind kind, long floor) {
    if (floor < 1) throw InputError("lift: floor must be at least 1");
    if (l.dim() != model.dim()) throw InputError("lift: model and L differ in dimension");
    auto cut = cutgen::intersection_cut(model, l);

    const std::size_t m = model.dim();
    Matrix base;
    if (kind == LiftKind::cone_over_l) {
        base = l.vertices();
    } else {
        for (std::size_t j = 0; j < model.rays.size(); ++j)
            base.push_back(add(model.f, scale(model.rays[j], 1 / cut.psi[j])));
    }

    LiftedCone cone;
    cone.apex = append(model.f, 1);
    cone.floor = floor;
    cone.kind = kind;
    cone.base = kind == LiftKind::cone_over_l ? l : geom::convex_hull(m, base);
    Matrix pts{cone.apex};
    const Rat stretch = Rat(floor + 1);
    for (const auto& b : base) pts.push_back(append(add(model.f, scale(sub(b, model.f), stretch)), Rat(-floor)));
    cone.poly = geom::convex_hull(m + 1, pts);
    return cone;
}

Height height_at(const Polyhedron& q, const Point& x) {
    if (q.dim() != x.size() + 1) throw InputError("height_at: point must have one coordinate less than Q");
    if (q.is_empty()) return std::nullopt;
    std::optional<Rat> up, lo;
    for (const auto& row : q.all_rows()) {
        const Rat& c = row.a.back();
        Rat rest = row.b - dot_prefix(row.a, x);
        if (sgn(c) > 0) {
            Rat v = rest / c;
            if (!up || v < *up) up = v;
        } else if (sgn(c) < 0) {
            Rat v = rest / c;
            if (!lo || v > *lo) lo = v;
        } else if (sgn(rest) < 0) {
            return std::nullopt;
        }
    }
    if (!up) throw PreconditionError("height_at: Q is unbounded above in z");
    if (lo && *lo > *up) return std::nullopt;
    return up;
}

Height max_height(const Polyhedron& q) {
    if (q.is_empty()) return std::nullopt;
    for (const auto& r : q.rays())
        if (sgn(r.back()) > 0) throw PreconditionError("max_height: Q has a ray with positive z-component");
    Rat best = q.vertices().front().back();
    for (const auto& v : q.vertices()) best = std::max(best, v.back());
    return best;
}

HeightProfile profile(const Polyhedron& q, const Matrix& witnesses) {
    HeightProfile p;
    for (const auto& w : witnesses) p.samples.emplace_back(w, height_at(q, w));
    p.global_max = max_height(q);
    return p;
}

std::string to_string(Verdict v) {
    return v == Verdict::height_nonpositive_at_round_q ? "height_nonpositive_at_round_q"
                                                        : "persists_positive_through_budget";
}

namespace {

struct Recorder {
    ProbeReport& report;
    const Matrix& witnesses;

    // Returns true once the height is at most zero.
    bool record(const Polyhedron& q, std::size_t round, std::size_t count) {
        ProbeRound r{round, count, profile(q, witnesses)};
        for (const auto& [x, h] : r.heights.samples)
            if (!h || sgn(*h) <= 0) report.witnesses_positive = false;
        bool done = height_le(r.heights.global_max, Rat(0));
        report.rounds.push_back(std::move(r));
        if (done && round > 0) {
            report.verdict = Verdict::height_nonpositive_at_round_q;
            report.q = round;
            report.label = "upper_bound";
        }
        return done && round > 0;
    }
};

}  // namespace

ProbeReport probe_rounds(const LiftedCone& cone, const Strategy& strategy, std::size_t budget,
                         const Matrix& witnesses) {
    if (budget == 0) throw InputError("probe_rounds: budget must be positive");
    const std::size_t m = cone.xdim();
    for (const auto& w : witnesses)
        if (w.size() != m) throw InputError("probe_rounds: witness dimension mismatch");

    ProbeReport report;
    Recorder rec{report, witnesses};
    Polyhedron q = cone.poly;
    rec.record(q, 0, 0);

    if (const auto* e = std::get_if<EnumerateStrategy>(&strategy)) {
        if (e->lo.size() != m || e->hi.size() != m) throw InputError("probe_rounds: box dimension mismatch");
        auto all = splits::enumerate_splits(m, e->bound, e->lo, e->hi);
        if (all.empty()) throw InputError("probe_rounds: strategy has no splits");
        for (std::size_t r = 1; r <= budget; ++r) {
            std::vector<Polyhedron> parts;
            for (const auto& s : all) parts.push_back(splits::apply_split(q, s));
            q = geom::intersect(parts);
            if (rec.record(q, r, all.size())) break;
        }
    } else if (const auto* s = std::get_if<SequenceStrategy>(&strategy)) {
        if (s->sequence.empty()) throw InputError("probe_rounds: strategy has no splits");
        for (std::size_t r = 1; r <= std::min(budget, s->sequence.size()); ++r) {
            const auto& entry = s->sequence[r - 1];
            if (entry.split.pi.size() != m) throw InputError("probe_rounds: split dimension mismatch");
            q = splits::apply_split(q, entry.split);
            report.applied.push_back(entry);
            if (rec.record(q, r, 1)) break;
        }
    } else {
        const auto& f = std::get<FacetRoundStrategy>(strategy);
        if (f.shadows.empty()) throw InputError("probe_rounds: strategy has no shadow polytopes");
        for (std::size_t r = 1; r <= std::min(budget, f.shadows.size()); ++r) {
            if (f.shadows[r - 1].dim() != m) throw InputError("probe_rounds: shadow dimension mismatch");
            auto round = splits::round_of_splits(q, f.shadows[r - 1]);
            q = round.result;
            if (rec.record(q, r, round.splits.size())) break;
        }
    }
    report.final_poly = q;
    return report;
}

std::string probe_csv(const ProbeReport& report) {
    std::ostringstream out;
    out << "round,witness,height,decimal\n";
    auto row = [&](std::size_t round, const std::string& who, const Height& h) {
        out << round << ',' << who << ',' << to_string(h) << ',' << (h ? to_decimal(*h) : "-inf") << '\n';
    };
    for (const auto& r : report.rounds) {
        for (std::size_t i = 0; i < r.heights.samples.size(); ++i)
            row(r.round, std::to_string(i), r.heights.samples[i].second);
        row(r.round, "max", r.heights.global_max);
    }
    return out.str();
}

std::optional<NecessityWitness> necessity_witness(const Polyhedron& l) {
    auto report = certify::has_2hyperplane_property(l);
    if (!report.offending) return std::nullopt;
    const auto& face = report.faces[*report.offending];
    NecessityWitness w{face.face, face.points, zeros(l.dim())};
    for (const auto& p : face.points) w.witness = add(w.witness, p);
    w.witness = scale(w.witness, Rat(1) / Rat(static_cast<long>(face.points.size())));
    return w;
}

ReductionReport reduction_coefficient(const Polyhedron& qx, const Split& s) {
    if (!qx.is_bounded() || !qx.full_dimensional())
        throw PreconditionError("reduction_coefficient: Qx must be bounded and full-dimensional");
    const std::size_t m = qx.dim();
    if (m < 2) throw PreconditionError("reduction_coefficient: Qx must have dimension at least 2");
    if (s.pi.size() != m) throw InputError("reduction_coefficient: split dimension mismatch");

    ReductionReport rep;
    rep.width = splits::round_of_splits(qx, qx).width;
    rep.diam = SqrtValue{diameter_sq(qx)};
    rep.delta = SqrtValue{Rat(1)};
    Polyhedron after = splits::apply_split(qx, s);
    if (!after.full_dimensional()) {
        rep.branch = "not_full_dimensional";
        return rep;
    }
    if (after == qx) {
        rep.branch = "unchanged";
        return rep;
    }
    if (rep.width.square >= rep.diam.square) {
        rep.branch = "wide_round";
        return rep;
    }
    if (!splits::classify_split(qx, s).intersecting)
        throw PreconditionError("reduction_coefficient: split " + describe(s) + " is not Qx-intersecting");
    rep.branch = "general";

    const Vec n = s.pi_rat();
    const Rat nn = norm_sq(n);
    Rat worst = 1;
    for (const auto& facet : after.inequalities()) {
        if (std::find(qx.inequalities().begin(), qx.inequalities().end(), facet) != qx.inequalities().end())
            continue;
        // In the plane orthogonal to K = H^F and H^i, u runs along H^i into the far side of H^F.
        Vec u = reject_from_span(facet.a, {n});
        if (is_zero(u)) continue;
        const Rat uu = norm_sq(u);
        for (int plane : {1, 2}) {
            Rat offset = plane == 1 ? Rat(s.pi0) : Rat(s.pi0 + 1);
            auto k = solve({facet.a, n}, {facet.b, offset}, m);
            if (!k) continue;
            Rat sin_sq = 1;
            for (const auto& v : qx.vertices()) {
                Vec d = sub(v, *k);
                Rat alpha = dot(d, u), beta = dot(d, n);
                if (sgn(alpha) <= 0 || sgn(beta) == 0) continue;
                Rat b2 = beta * beta / nn;
                sin_sq = std::min(sin_sq, Rat(b2 / (alpha * alpha / uu + b2)));
            }
            rep.sines.push_back({facet, plane, SqrtValue{sin_sq}});
            worst = std::min(worst, sin_sq);
        }
    }
    rep.delta = SqrtValue{rep.width.square / rep.diam.square * worst};
    return rep;
}

ProbeReport execute_finite_rank(const LiftedCone& cone, const Program& program, std::size_t cap_blocks) {
    const std::size_t m = cone.xdim();
    std::vector<Polyhedron> shadows{cone.base};
    for (std::size_t i = 0; i < program.intersecting.size(); ++i) {
        const auto& s = program.intersecting[i];
        if (s.pi.size() != m) throw InputError("execute_finite_rank: split dimension mismatch");
        if (!splits::classify_split(shadows.back(), s).intersecting)
            throw PreconditionError("execute_finite_rank: split " + std::to_string(i + 1) + " " + describe(s) +
                                    " is not intersecting for its shadow polytope");
        shadows.push_back(splits::apply_split(shadows.back(), s));
    }
    if (program.englobing.pi.size() != m) throw InputError("execute_finite_rank: split dimension mismatch");
    if (shadows.back().is_empty() || !splits::classify_split(shadows.back(), program.englobing).englobing)
        throw PreconditionError("execute_finite_rank: split " + describe(program.englobing) +
                                " does not englobe the last shadow polytope");

    SplitSequence block;
    for (std::size_t i = 0; i < program.intersecting.size(); ++i) {
        if (shadows[i].full_dimensional())
            for (std::size_t idx = 0; idx < shadows[i].inequalities().size(); ++idx)
                block.push_back({splits::facet_split(shadows[i], idx).split, "facet-round"});
        block.push_back({program.intersecting[i], "user"});
    }
    block.push_back({program.englobing, "user"});

    ProbeReport report;
    const Matrix witnesses{cone.f()};
    Recorder rec{report, witnesses};
    Polyhedron q = cone.poly;
    rec.record(q, 0, 0);
    std::size_t applied = 0;
    for (std::size_t b = 0; b < cap_blocks; ++b) {
        for (const auto& entry : block) {
            q = splits::apply_split(q, entry.split);
            report.applied.push_back(entry);
            if (rec.record(q, ++applied, 1)) {
                report.final_poly = q;
                return report;
            }
        }
    }
    report.final_poly = q;
    return report;
}

bool region_bound_check(const Polyhedron& q, const Polyhedron& qx, const Rat& m, const Rat& m0) {
    if (!(m0 < m)) throw PreconditionError("region_bound_check: need M0 < M");
    if (!qx.is_bounded() || !qx.full_dimensional())
        throw PreconditionError("region_bound_check: Qx must be bounded and full-dimensional");
    const std::size_t d = qx.dim();
    if (q.is_empty()) return true;
    if (q.dim() != d + 1) throw InputError("region_bound_check: Q must have one coordinate more than Qx");

    for (const auto& r : q.rays())
        if (sgn(r.back()) > 0) return false;
    for (const auto& v : q.vertices())
        if (v.back() > m) return false;

    const Rat diam_sq = diameter_sq(qx);
    const Rat drop_sq = (m - m0) * (m - m0);
    for (const auto& face : certify::faces(qx)) {
        if (face.tight.empty()) continue;  // Qx itself
        const auto& gv = face.poly.vertices();
        Matrix pts, rays;
        for (const auto& v : gv) pts.push_back(append(v, 0));
        for (auto i : face.tight) rays.push_back(append(qx.inequalities()[i].a, 0));
        rays.push_back(append(zeros(d), 1));
        rays.push_back(append(zeros(d), -1));
        // Points whose nearest point in Qx lies on this face.
        auto piece = geom::intersect({q, geom::convex_hull(d + 1, pts, rays)});
        if (piece.is_empty()) continue;

        Matrix dirs;
        for (std::size_t i = 1; i < gv.size(); ++i) dirs.push_back(sub(gv[i], gv[0]));
        for (const auto& v : piece.vertices()) {
            Rat slack = m0 - v.back();
            if (sgn(slack) < 0) return false;
            Rat dist_sq = norm_sq(reject_from_span(sub(prefix(v, d), gv[0]), dirs));
            if (slack * slack * diam_sq < dist_sq * drop_sq) return false;
        }
        for (const auto& r : piece.rays()) {
            Rat rz = r.back();
            if (sgn(rz) > 0) return false;
            if (rz * rz * diam_sq < norm_sq(prefix(r, d)) * drop_sq) return false;
        }
    }
    return true;
}

Rotation rotate_facet(const Polyhedron& l, std::size_t facet) {
    if (!l.is_bounded() || !l.full_dimensional())
        throw PreconditionError("rotate_facet: L must be bounded and full-dimensional");
    const std::size_t m = l.dim();
    if (m < 2) throw PreconditionError("rotate_facet: dimension must be at least 2");
    const auto& ineqs = l.inequalities();
    if (facet >= ineqs.size()) throw InputError("rotate_facet: facet index out of range");
    const Inequality& f = ineqs[facet];
    if (geom::facet_hyperplane_has_integer_point(f.boundary()))
        throw PreconditionError("rotate_facet: the facet hyperplane already contains integer points");

    const IntVec a1 = to_int(f.a);
    const Int g = geom::gcd_of(a1);
    const Rat c = Rat(g * ceil_rat(f.b / g));

    // a1 U = (g, 0, ..., 0); the second row of U^-1 indexes lattice subspaces inside a1 x = c.
    auto ch = geom::column_hermite({a1}, m);
    Matrix u(m);
    for (std::size_t i = 0; i < m; ++i) u[i] = to_rat(ch.u[i]);
    const Vec phi = (*inverse(u))[1];

    std::vector<Inequality> others;
    for (std::size_t i = 0; i < ineqs.size(); ++i)
        if (i != facet) others.push_back(ineqs[i]);

    Rotation rot;
    rot.removed = f;
    rot.slice = Polyhedron::from_inequalities(m, others, {geom::Hyperplane::make(f.a, c)});
    if (rot.slice.is_empty()) {
        rot.level = floor_rat(*l.range(phi).second) + 1;
    } else {
        rot.level = floor_rat(*rot.slice.range(phi).second) + 1;
    }
    const Rat level(rot.level);

    std::optional<Rat> beta;
    for (const auto& v : l.vertices()) {
        Rat need = (level - dot(phi, v)) / (c - dot(f.a, v));
        if (!beta || need > *beta) beta = need;
    }
    rot.beta = *beta;
    rot.added = Inequality::make(sub(scale(f.a, rot.beta), phi), rot.beta * c - level);
    others.push_back(rot.added);
    rot.result = Polyhedron::from_inequalities(m, others);
    return rot;
}

ChvatalReport chvatal_sequence(const Polyhedron& l, long bound, std::size_t cap) {
    if (!l.is_bounded() || !l.full_dimensional())
        throw PreconditionError("chvatal_sequence: L must be bounded and full-dimensional");
    const std::size_t m = l.dim();
    const Polyhedron li = certify::integer_hull(l);
    const bool li_full = li.full_dimensional();

    Vec lo(m), hi(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto [a, b] = l.range(unit(m, i));
        lo[i] = Rat(floor_rat(*a) - 1);
        hi[i] = Rat(ceil_rat(*b) + 1);
    }
    const auto candidates = splits::enumerate_splits(m, bound, lo, hi);

    ChvatalReport rep;
    rep.polytopes.push_back(l);
    Polyhedron cur = l;
    for (std::size_t step = 0; step < cap; ++step) {
        if (cur == li) {
            rep.reached_integer_hull = true;
            break;
        }
        if (!li_full) {
            auto it = std::find_if(candidates.begin(), candidates.end(),
                                   [&](const Split& s) { return splits::classify_split(cur, s).englobing; });
            if (it != candidates.end()) {
                rep.englobing = *it;
                break;
            }
        }
        // Take the split cutting off the most vertices of the current polytope.
        std::optional<std::pair<std::size_t, Split>> best;
        Polyhedron best_poly;
        for (const auto& s : candidates) {
            if (!splits::classify_split(cur, s).chvatal) continue;
            Polyhedron next = splits::apply_split(cur, s);
            if (next == cur) continue;
            std::size_t cut = 0;
            for (const auto& v : cur.vertices()) cut += next.contains(v) ? 0 : 1;
            if (!best || cut > best->first) {
                best.emplace(cut, s);
                best_poly = std::move(next);
            }
        }
        if (!best) break;
        cur = std::move(best_poly);
        rep.sequence.push_back({best->second, "chvatal"});
        rep.polytopes.push_back(cur);
    }
    rep.index = rep.sequence.size();
    return rep;
}

}  // namespace splitlab::ranklab
