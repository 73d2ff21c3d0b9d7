#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "splitlab/linalg.hpp"
#include "splitlab/polyhedron.hpp"
#include "splitlab/rational.hpp"

namespace splitlab::geom {

using IntMatrix = std::vector<IntVec>;

/// Column-style Hermite form: H = A U with U unimodular, H lower echelon with positive
/// pivots and entries left of each pivot reduced into [0, pivot).
struct ColumnHermite {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::size_t> pivot_rows;  ///< row of the pivot in each leading column
};
ColumnHermite column_hermite(const IntMatrix& a, std::size_t ncols);

/// Lattice translation + basis Z^k, basis in Hermite normal form (columns are generators).
struct IntegerLattice {
    IntMatrix basis;  ///< square, lower triangular, positive diagonal
    IntVec translation;

    /// Lattice generated by the given full-rank set of integer column vectors.
    static IntegerLattice generated_by(const IntMatrix& generators, IntVec translation);

    bool contains(const IntVec& x) const;
};

/// Integer solutions of A x = b for a fixed A and many right-hand sides.
class HermiteSolver {
public:
    HermiteSolver(const IntMatrix& a, std::size_t ncols);
    std::optional<IntVec> solve(const IntVec& b) const;
    /// Basis of the integer kernel of A.
    IntMatrix kernel() const;

private:
    std::size_t ncols_;
    ColumnHermite ch_;
};

struct IntegerRow {
    IntVec a;
    Int b;
};

/// Some integer x with a_i . x = b_i for all rows, or nullopt if none exists.
std::optional<IntVec> integer_solve(const std::vector<IntegerRow>& rows, std::size_t ncols);

/// Basis of the integer points of {x : a_i . x = 0}, unimodular-completable.
IntMatrix integer_kernel(const std::vector<IntVec>& rows, std::size_t ncols);

/// True iff the hyperplane contains an integer point.
bool facet_hyperplane_has_integer_point(const Hyperplane& h);

Int gcd_of(const IntVec& v);

}  // namespace splitlab::geom
