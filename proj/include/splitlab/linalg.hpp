#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "splitlab/rational.hpp"

namespace splitlab {

using Matrix = std::vector<Vec>;  // row-major, every row the same length

struct Echelon {
    Matrix rows;                      ///< nonzero rows of the reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form over Q. `ncols` is needed when `m` is empty.
Echelon rref(Matrix m, std::size_t ncols);

std::size_t rank(const Matrix& m, std::size_t ncols);

/// Basis of {y : m y = 0}; each basis vector is primitive integral.
Matrix nullspace(const Matrix& m, std::size_t ncols);

/// Some solution of m y = rhs, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs, std::size_t ncols);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

Rat determinant(Matrix m);

Vec mat_vec(const Matrix& m, const Vec& v);
Matrix transpose(const Matrix& m, std::size_t ncols);

/// Orthogonal projection of `v` onto the row space of `m` subtracted from `v`.
Vec reject_from_span(const Vec& v, const Matrix& m);

}  // namespace splitlab
