#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitlab/bounds.hpp"
#include "splitlab/polyhedron.hpp"
#include "splitlab/rational.hpp"

namespace splitlab::splits {

using geom::Hyperplane;
using geom::Inequality;
using geom::Polyhedron;

/// The disjunction pi x <= pi0 or pi x >= pi0 + 1.
///
/// Canonical: pi primitive with its leading nonzero entry positive, using the identity
/// (pi, pi0) ~ (-pi, -pi0 - 1).
struct Split {
    IntVec pi;
    Int pi0;

    /// Canonicalizes; throws InputError when pi is zero or not primitive.
    static Split make(const IntVec& pi, const Int& pi0);
    static Split make(const Vec& pi, const Rat& pi0);

    Vec pi_rat() const { return to_rat(pi); }
    Hyperplane lower_plane() const;  ///< pi x = pi0
    Hyperplane upper_plane() const;  ///< pi x = pi0 + 1
    /// pi padded with zeros to act on the leading coordinates of a `dim`-space.
    Vec normal_in(std::size_t dim) const;

    bool operator==(const Split&) const = default;
    friend bool operator<(const Split& x, const Split& y) {
        return x.pi != y.pi ? x.pi < y.pi : x.pi0 < y.pi0;
    }
};

struct SequenceEntry {
    Split split;
    std::string provenance;  ///< "facet-round", "user", "sweep" or "chvatal"
};
using SplitSequence = std::vector<SequenceEntry>;

/// Q(pi, pi0) = conv((Q and pi x <= pi0) union (Q and pi x >= pi0 + 1)). The split acts on
/// the leading pi.size() coordinates of Q; any further coordinates (a lifted z) are untouched.
Polyhedron apply_split(const Polyhedron& q, const Split& s);

enum class EmptySide { none, lower, upper, both };

struct SplitClass {
    bool intersecting = false;  ///< both boundary hyperplanes meet Q
    bool englobing = false;     ///< Q lies in pi0 <= pi x <= pi0 + 1
    bool chvatal = false;       ///< one side of the disjunction misses Q
    EmptySide empty_side = EmptySide::none;
};
SplitClass classify_split(const Polyhedron& q, const Split& s);

/// Split parallel to a facet a x <= b of a full-dimensional Qx.
/// near_plane (paper's H1) is the lattice hyperplane at or beyond F, far_plane (H2) the next one inside.
struct FacetSplit {
    Split split;
    Hyperplane near_plane;
    Hyperplane far_plane;
    Rat width_sq;  ///< squared distance between F and far_plane
};
FacetSplit facet_split(const Polyhedron& qx, std::size_t facet);

struct RoundResult {
    Polyhedron result;
    std::vector<FacetSplit> splits;
    SqrtValue width;
};
/// Intersection of Q(pi(F), pi0(F)) over the facets F of Qx.
RoundResult round_of_splits(const Polyhedron& q, const Polyhedron& qx);

/// Canonical splits with ||pi||_inf <= bound whose slab meets the open box (lo, hi) range.
std::vector<Split> enumerate_splits(std::size_t dim, long bound, const Vec& lo, const Vec& hi);

struct SweepResult {
    SplitSequence sequence;
    Polyhedron swept;  ///< Q after the sequence
    bool contained;    ///< swept part on the far side of H^A lies in conv(p and L)
};
/// Splits that sweep the part of Q beyond H^A into the pyramid conv(p, H^A and Q), in the plane.
SweepResult sweep_sequence_2d(const Polyhedron& q, const Split& chv, const Point& p);

}  // namespace splitlab::splits
