#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "splitlab/bounds.hpp"
#include "splitlab/cutgen.hpp"
#include "splitlab/polyhedron.hpp"
#include "splitlab/splits.hpp"

namespace splitlab::ranklab {

using geom::Inequality;
using geom::Polyhedron;
using splits::Split;
using splits::SplitSequence;

/// Height of a point or a polyhedron; nullopt stands for -infinity.
using Height = std::optional<Rat>;
std::string to_string(const Height& h);
bool height_le(const Height& a, const Height& b);

enum class LiftKind {
    cone_over_l,                ///< apex (f,1) over the vertices of L at z = 0
    cone_over_boundary_points,  ///< apex (f,1) over the points f + r^j / psi(r^j)
};
std::string to_string(LiftKind kind);

inline constexpr long kDefaultFloor = 64;

/// Cone in (x,z)-space with apex (f,1), truncated by z >= -floor.
struct LiftedCone {
    Polyhedron poly;
    Point apex;
    long floor = kDefaultFloor;
    LiftKind kind = LiftKind::cone_over_l;
    Polyhedron base;  ///< the x-space polytope L the cone was built over

    std::size_t xdim() const { return apex.size() - 1; }
    Point f() const { return Point(apex.begin(), apex.end() - 1); }
};

LiftedCone lift(const cutgen::CornerModel& model, const Polyhedron& l, LiftKind kind = LiftKind::cone_over_l,
                long floor = kDefaultFloor);

/// max{z : (x, z) in Q}; -infinity when no point of Q lies over x.
Height height_at(const Polyhedron& q, const Point& x);
/// Max z over Q; throws PreconditionError when a ray of Q points upward.
Height max_height(const Polyhedron& q);

struct HeightProfile {
    std::vector<std::pair<Point, Height>> samples;
    Height global_max;
};
HeightProfile profile(const Polyhedron& q, const Matrix& witnesses);

/// Every enumerated split with ||pi||_inf <= bound over the box, intersected, per round.
struct EnumerateStrategy {
    long bound = 1;
    Vec lo, hi;
};
/// One split per round.
struct SequenceStrategy {
    SplitSequence sequence;
};
/// Round r is the round of splits around shadows[r - 1].
struct FacetRoundStrategy {
    std::vector<Polyhedron> shadows;
};
using Strategy = std::variant<EnumerateStrategy, SequenceStrategy, FacetRoundStrategy>;

enum class Verdict { height_nonpositive_at_round_q, persists_positive_through_budget };
std::string to_string(Verdict v);

struct ProbeRound {
    std::size_t round = 0;  ///< 0 is the initial polyhedron
    std::size_t splits_in_round = 0;
    HeightProfile heights;
};

struct ProbeReport {
    std::vector<ProbeRound> rounds;
    Verdict verdict = Verdict::persists_positive_through_budget;
    /// Rounds needed for max height <= 0: an upper bound on the split rank of the cut.
    std::optional<std::size_t> q;
    /// Every recorded witness height stayed > 0.
    bool witnesses_positive = true;
    /// "upper_bound" when q is set, otherwise "evidence": persistence within a budget proves nothing.
    std::string label = "evidence";
    SplitSequence applied;  ///< explicit splits in application order (sequence strategies only)
    Polyhedron final_poly;
};

ProbeReport probe_rounds(const LiftedCone& cone, const Strategy& strategy, std::size_t budget,
                         const Matrix& witnesses);
/// round,witness,height,decimal
std::string probe_csv(const ProbeReport& report);

struct NecessityWitness {
    Polyhedron face;
    Matrix points;  ///< integer points of the face
    Point witness;  ///< their centroid
};
/// A face of L_I outside the facets of L that is not 2-partitionable, with a relative interior point.
std::optional<NecessityWitness> necessity_witness(const Polyhedron& l);

struct FacetSine {
    Inequality facet;  ///< facet of Qx(pi, pi0) that is not a facet of Qx
    int plane = 1;     ///< 1: pi x = pi0, 2: pi x = pi0 + 1
    SqrtValue sine;
};

struct ReductionReport {
    std::string branch;  ///< "not_full_dimensional", "unchanged", "wide_round" or "general"
    SqrtValue width;
    SqrtValue diam;
    std::vector<FacetSine> sines;
    SqrtValue delta;  ///< in (0, 1]
};
ReductionReport reduction_coefficient(const Polyhedron& qx, const Split& s);

/// Intersecting splits S (each for the evolving shadow L, L^1, ...) followed by a split
/// englobing the last shadow.
struct Program {
    std::vector<Split> intersecting;
    Split englobing;
};

/// Repeats [facet splits of L^0, s_1, facet splits of L^1, s_2, ..., e] one split at a time
/// until the height drops to <= 0 or `cap_blocks` blocks have run. Each entry of `rounds`
/// after the first is one split application, so q counts split applications.
ProbeReport execute_finite_rank(const LiftedCone& cone, const Program& program, std::size_t cap_blocks = 64);

/// Q inside R(Qx, M, M0): z <= M over relint(Qx), z <= M0 - d(x, Qx) (M - M0) / diam(Qx) elsewhere.
/// Exact: each cell of points sharing a nearest face of Qx is checked at its vertices and rays.
bool region_bound_check(const Polyhedron& q, const Polyhedron& qx, const Rat& m, const Rat& m0);

struct Rotation {
    Polyhedron result;
    Inequality removed;
    Inequality added;
    Polyhedron slice;  ///< the other facets with a1 x = G ceil(b1 / G)
    Int level;         ///< index of the lattice subspace inside that hyperplane missed by the slice
    Rat beta;
};
/// Replaces a facet whose hyperplane holds no integer point by one whose hyperplane does,
/// keeping the integer points and containing L.
Rotation rotate_facet(const Polyhedron& l, std::size_t facet);

struct ChvatalReport {
    SplitSequence sequence;
    std::vector<Polyhedron> polytopes;  ///< L, L^1, ...
    std::size_t index = 0;              ///< upper bound on the Chvatal-index
    std::optional<Split> englobing;
    bool reached_integer_hull = false;
};
/// Greedy sequence of Chvatal splits with ||pi||_inf <= bound: each step takes the split that
/// cuts off the most vertices of the current polytope, stopping at L_I or at a split englobing
/// the current polytope when L_I is lower-dimensional.
ChvatalReport chvatal_sequence(const Polyhedron& l, long bound = 2, std::size_t cap = 64);

}  // namespace splitlab::ranklab
