#include "double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "splitlab/errors.hpp"

namespace splitlab::detail {

namespace {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    IntVec v;
    Bits zero;
};

IntVec int_primitive(const Vec& a) { return to_int(primitive(a)); }

Int int_dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

IntVec int_primitive(IntVec v) {
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

// Adds constraint `h` (index `hidx`) to the current ray list in place.
void dd_step(std::vector<Ray>& rays, const IntVec& h, std::size_t hidx, std::size_t d) {
    std::vector<Int> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        s[i] = int_dot(h, rays[i].v);
        int sg = sgn(s[i]);
        if (sg > 0) pos.push_back(i);
        else if (sg < 0) neg.push_back(i);
        else rays[i].zero.set(hidx);
    }
    if (pos.empty()) return;

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (sgn(s[i]) <= 0) next.push_back(rays[i]);

    const std::size_t need = d >= 2 ? d - 2 : 0;
    for (auto p : pos) {
        for (auto n : neg) {
            Bits common = rays[p].zero & rays[n].zero;
            if (common.count() < need) continue;
            bool adjacent = true;
            for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                if (k == p || k == n) continue;
                if (common.subset_of(rays[k].zero)) adjacent = false;
            }
            if (!adjacent) continue;
            IntVec v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = s[p] * rays[n].v[j] - s[n] * rays[p].v[j];
            Ray r{int_primitive(std::move(v)), common};
            r.zero.set(hidx);
            next.push_back(std::move(r));
        }
    }
    rays = std::move(next);
}

Matrix to_matrix(const std::vector<Ray>& rays) {
    Matrix out;
    out.reserve(rays.size());
    for (const auto& r : rays) out.push_back(to_rat(r.v));
    return out;
}

}  // namespace

ConeGenerators cone_generators(const Matrix& rows_in, std::size_t d) {
    ConeGenerators out;
    std::vector<IntVec> rows;
    for (const auto& r : rows_in) {
        if (r.size() != d) throw InputError("cone_generators: row length mismatch");
        if (!is_zero(r)) rows.push_back(int_primitive(r));
    }
    Matrix rat_rows;
    for (const auto& r : rows) rat_rows.push_back(to_rat(r));
    out.lineality = nullspace(rat_rows, d);
    for (const auto& l : out.lineality) {
        rows.push_back(to_int(l));
        IntVec neg = to_int(l);
        for (auto& x : neg) x = -x;
        rows.push_back(neg);
    }
    if (out.lineality.size() == d) return out;  // cone is the whole space

    // Greedy choice of d independent rows for the initial simplicial cone.
    std::vector<std::size_t> basis;
    Matrix chosen;
    for (std::size_t i = 0; i < rows.size() && basis.size() < d; ++i) {
        Matrix trial = chosen;
        trial.push_back(to_rat(rows[i]));
        if (rank(trial, d) == trial.size()) {
            chosen = std::move(trial);
            basis.push_back(i);
        }
    }
    if (basis.size() != d) throw std::logic_error("cone_generators: lineality not removed");

    auto inv = inverse(chosen);
    const std::size_t nbits = rows.size();
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < d; ++j) {
        Vec col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = -(*inv)[i][j];
        Ray r{int_primitive(col), Bits(nbits)};
        for (std::size_t k = 0; k < d; ++k)
            if (k != j) r.zero.set(basis[k]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> in_basis(rows.size(), false);
    for (auto b : basis) in_basis[b] = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (in_basis[i]) continue;
        dd_step(rays, rows[i], i, d);
        if (rays.empty()) break;
    }
    out.rays = to_matrix(rays);
    return out;
}

Matrix clip_cone(const Matrix& rays_in, const Matrix& rows_in, const Vec& h) {
    if (rays_in.empty()) return {};
    const std::size_t d = rays_in.front().size();
    const std::size_t nbits = rows_in.size() + 1;
    std::vector<Ray> rays;
    std::vector<IntVec> rows;
    for (const auto& r : rows_in) rows.push_back(int_primitive(r));
    for (const auto& rv : rays_in) {
        Ray r{int_primitive(rv), Bits(nbits)};
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (sgn(int_dot(rows[i], r.v)) == 0) r.zero.set(i);
        rays.push_back(std::move(r));
    }
    dd_step(rays, int_primitive(h), rows.size(), d);
    return to_matrix(rays);
}

}  // namespace splitlab::detail
