#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitlab/cutgen.hpp"
#include "splitlab/polyhedron.hpp"
#include "splitlab/splits.hpp"

namespace splitlab::certify {

using geom::Polyhedron;

/// conv of the integer points of a bounded L; may be empty or lower-dimensional.
Polyhedron integer_hull(const Polyhedron& l);

struct Face {
    Polyhedron poly;
    std::vector<std::size_t> tight;  ///< indices into P.inequalities() tight on the face
};
/// All nonempty faces of a bounded P, P itself first, then by decreasing dimension.
std::vector<Face> faces(const Polyhedron& p);

/// Some facet inequality of L is tight on every vertex of the face.
bool face_in_facet(const Polyhedron& face, const Polyhedron& l);

enum class PartitionOutcome { partitionable, not_partitionable, trivially_partitionable };

struct PartitionCertificate {
    PartitionOutcome outcome = PartitionOutcome::not_partitionable;
    std::optional<splits::Split> split;  ///< S1 on pi x = pi0, S2 on pi x = pi0 + 1
    Matrix s1, s2;
};

inline constexpr std::size_t kPartitionCap = 20;

/// Searches bipartitions of S for a split whose two boundary hyperplanes carry S1 and S2.
/// Among all witnesses the one with smallest ||pi||_1 (after reduction along the common
/// kernel) is returned, ties broken by |S1| and then by the index set of S1.
PartitionCertificate is_2partitionable(const Matrix& points, std::size_t cap = kPartitionCap);

struct FaceReport {
    Polyhedron face;
    Matrix points;  ///< integer points of the face
    bool contained_in_facet_of_l = false;
    std::optional<PartitionCertificate> certificate;  ///< set for faces not in a facet of L
};

struct TwoHPReport {
    std::vector<FaceReport> faces;
    bool overall = true;
    /// First face not in a facet of L that fails, if any.
    std::optional<std::size_t> offending;
};
TwoHPReport has_2hyperplane_property(const Polyhedron& l);

enum class Kind2D { split, triangle_type1, triangle_type2, triangle_type3, quadrilateral, non_maximal, other };
std::string to_string(Kind2D kind);

struct Classification2D {
    Kind2D kind = Kind2D::other;
    Matrix integer_points_on_boundary;
};
Classification2D classify_2d(const Polyhedron& l);

struct InfiniteRankVerdict {
    bool infinite_rank = false;
    Polyhedron boundary_hull;
    Classification2D boundary_class;
    bool two_hyperplane_property = false;  ///< of the boundary hull
    bool consistent = false;               ///< infinite_rank == !two_hyperplane_property
};
InfiniteRankVerdict infinite_rank_2d(const cutgen::CornerModel& model, const Polyhedron& l);

}  // namespace splitlab::certify
