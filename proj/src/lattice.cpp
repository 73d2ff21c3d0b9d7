#include "splitlab/lattice.hpp"

#include <utility>

#include "splitlab/errors.hpp"

namespace splitlab::geom {

namespace {

// Column operation on every row: (c_i, c_j) <- (p c_i + q c_j, r c_i + s c_j).
void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, const Int& p, const Int& q,
                  const Int& r, const Int& s) {
    for (auto& row : m) {
        Int ci = row[i], cj = row[j];
        row[i] = p * ci + q * cj;
        row[j] = r * ci + s * cj;
    }
}

void negate_col(IntMatrix& m, std::size_t i) {
    for (auto& row : m) row[i] = -row[i];
}

}  // namespace

Int gcd_of(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

ColumnHermite column_hermite(const IntMatrix& a, std::size_t ncols) {
    ColumnHermite out;
    out.h = a;
    out.u.assign(ncols, IntVec(ncols, 0));
    for (std::size_t i = 0; i < ncols; ++i) out.u[i][i] = 1;

    std::size_t col = 0;
    for (std::size_t r = 0; r < out.h.size() && col < ncols; ++r) {
        auto& row = out.h[r];
        // Euclid across columns col..ncols-1 until only row[col] is nonzero.
        for (std::size_t j = col + 1; j < ncols; ++j) {
            if (sgn(row[j]) == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[col].get_mpz_t(),
                       row[j].get_mpz_t());
            Int x = row[col] / g, y = row[j] / g;
            // [c_col c_j] * [[s, -y], [t, x]] has determinant s x + t y = 1.
            combine_cols(out.h, col, j, s, t, -y, x);
            combine_cols(out.u, col, j, s, t, -y, x);
        }
        if (sgn(row[col]) == 0) continue;
        if (sgn(row[col]) < 0) {
            negate_col(out.h, col);
            negate_col(out.u, col);
        }
        for (std::size_t j = 0; j < col; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), row[j].get_mpz_t(), row[col].get_mpz_t());
            if (sgn(q) == 0) continue;
            combine_cols(out.h, j, col, 1, -q, 0, 1);
            combine_cols(out.u, j, col, 1, -q, 0, 1);
        }
        out.pivot_rows.push_back(r);
        ++col;
    }
    return out;
}

IntegerLattice IntegerLattice::generated_by(const IntMatrix& generators, IntVec translation) {
    if (generators.empty()) throw InputError("IntegerLattice: no generators");
    const std::size_t n = generators.size();
    const std::size_t k = generators.front().size();
    auto ch = column_hermite(generators, k);
    if (ch.pivot_rows.size() != n) throw InputError("IntegerLattice: generators not full rank");
    for (std::size_t j = 0; j < n; ++j)
        if (ch.pivot_rows[j] != j) throw InputError("IntegerLattice: generators not full rank");
    IntegerLattice lat;
    lat.basis.assign(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lat.basis[i][j] = ch.h[i][j];
    if (translation.size() != n) throw InputError("IntegerLattice: translation length");
    // Reduce the translation modulo the lattice so the representation is canonical.
    for (std::size_t j = 0; j < n; ++j) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), translation[j].get_mpz_t(), lat.basis[j][j].get_mpz_t());
        for (std::size_t i = j; i < n; ++i) translation[i] -= q * lat.basis[i][j];
    }
    lat.translation = std::move(translation);
    return lat;
}

bool IntegerLattice::contains(const IntVec& x) const {
    const std::size_t n = basis.size();
    if (x.size() != n) throw InputError("IntegerLattice::contains: length mismatch");
    IntVec rest(n);
    for (std::size_t i = 0; i < n; ++i) rest[i] = x[i] - translation[i];
    for (std::size_t j = 0; j < n; ++j) {
        if (!mpz_divisible_p(rest[j].get_mpz_t(), basis[j][j].get_mpz_t())) return false;
        Int y = rest[j] / basis[j][j];
        for (std::size_t i = j; i < n; ++i) rest[i] -= y * basis[i][j];
    }
    return true;
}

HermiteSolver::HermiteSolver(const IntMatrix& a, std::size_t ncols) : ncols_(ncols) {
    for (const auto& row : a)
        if (row.size() != ncols) throw InputError("integer system: row length mismatch");
    ch_ = column_hermite(a, ncols);
}

std::optional<IntVec> HermiteSolver::solve(const IntVec& b) const {
    if (b.size() != ch_.h.size()) throw InputError("integer system: rhs length mismatch");
    // H y = b with H lower echelon; x = U y.
    IntVec y(ncols_, 0);
    std::size_t next_pivot = 0;
    for (std::size_t r = 0; r < b.size(); ++r) {
        Int s = 0;
        for (std::size_t j = 0; j < next_pivot; ++j) s += ch_.h[r][j] * y[j];
        Int need = b[r] - s;
        if (next_pivot < ch_.pivot_rows.size() && ch_.pivot_rows[next_pivot] == r) {
            const Int& d = ch_.h[r][next_pivot];
            if (!mpz_divisible_p(need.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
            y[next_pivot] = need / d;
            ++next_pivot;
        } else if (sgn(need) != 0) {
            return std::nullopt;
        }
    }
    IntVec x(ncols_, 0);
    for (std::size_t i = 0; i < ncols_; ++i)
        for (std::size_t j = 0; j < next_pivot; ++j) x[i] += ch_.u[i][j] * y[j];
    return x;
}

IntMatrix HermiteSolver::kernel() const {
    IntMatrix out;
    for (std::size_t j = ch_.pivot_rows.size(); j < ncols_; ++j) {
        IntVec v(ncols_);
        for (std::size_t i = 0; i < ncols_; ++i) v[i] = ch_.u[i][j];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<IntVec> integer_solve(const std::vector<IntegerRow>& rows, std::size_t ncols) {
    IntMatrix a;
    IntVec b;
    for (const auto& r : rows) {
        a.push_back(r.a);
        b.push_back(r.b);
    }
    return HermiteSolver(a, ncols).solve(b);
}

IntMatrix integer_kernel(const std::vector<IntVec>& rows, std::size_t ncols) {
    return HermiteSolver(rows, ncols).kernel();
}

bool facet_hyperplane_has_integer_point(const Hyperplane& h) {
    Hyperplane c = Hyperplane::make(h.normal, h.offset);
    // After scaling to coprime integers, the normal gcd is g and the offset is coprime to g.
    Int g = gcd_of(to_int(c.normal));
    return mpz_divisible_p(c.offset.get_num_mpz_t(), g.get_mpz_t()) != 0;
}

}  // namespace splitlab::geom
