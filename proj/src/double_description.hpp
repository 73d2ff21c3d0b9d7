#pragma once

// Exact double-description conversion for polyhedral cones {y : R y <= 0}.

#include <cstddef>

#include "splitlab/linalg.hpp"

namespace splitlab::detail {

struct ConeGenerators {
    Matrix lineality;  ///< basis of the lineality space
    Matrix rays;       ///< extreme rays of the pointed part (primitive integral)
};

/// Generators of {y in R^d : row . y <= 0 for every row}.
ConeGenerators cone_generators(const Matrix& rows, std::size_t d);

/// Given the extreme rays of a pointed cone {y : rows y <= 0}, returns the extreme rays
/// of its intersection with {y : h . y <= 0}. This is one double-description step.
Matrix clip_cone(const Matrix& rays, const Matrix& rows, const Vec& h);

}  // namespace splitlab::detail
