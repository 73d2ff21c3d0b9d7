#include "splitlab/linalg.hpp"

#include <utility>

#include "splitlab/errors.hpp"

namespace splitlab {

Echelon rref(Matrix m, std::size_t ncols) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m, std::size_t ncols) { return rref(m, ncols).pivots.size(); }

Matrix nullspace(const Matrix& m, std::size_t ncols) {
    Echelon e = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zeros(ncols);
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(primitive(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs, std::size_t ncols) {
    if (m.size() != rhs.size()) throw InputError("solve: row/rhs mismatch");
    Matrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    Echelon e = rref(aug, ncols + 1);
    Vec y = zeros(ncols);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == ncols) return std::nullopt;
        y[e.pivots[i]] = e.rows[i][ncols];
    }
    return y;
}

std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw InputError("inverse: matrix not square");
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    Echelon e = rref(aug, 2 * n);
    if (e.rows.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(e.rows[i].begin() + static_cast<std::ptrdiff_t>(n), e.rows[i].end());
    return inv;
}

Rat determinant(Matrix m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Matrix transpose(const Matrix& m, std::size_t ncols) {
    Matrix t(ncols, Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
    return t;
}

Vec reject_from_span(const Vec& v, const Matrix& m) {
    if (m.empty()) return v;
    // Gram-Schmidt on the rows, then subtract the projection.
    Matrix ortho;
    for (const auto& row : m) {
        Vec u = row;
        for (const auto& q : ortho) u = sub(u, scale(q, dot(u, q) / norm_sq(q)));
        if (!is_zero(u)) ortho.push_back(u);
    }
    Vec r = v;
    for (const auto& q : ortho) r = sub(r, scale(q, dot(r, q) / norm_sq(q)));
    return r;
}

}  // namespace splitlab
