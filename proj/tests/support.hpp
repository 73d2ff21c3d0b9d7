#pragma once

// Shared helpers for the test suites: seeded RNG and brute-force oracles that do not go
// through the double-description kernel.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "splitlab/linalg.hpp"
#include "splitlab/polyhedron.hpp"
#include "splitlab/rational.hpp"

namespace testsupport {

using namespace splitlab;

inline std::uint64_t seed() {
    if (const char* s = std::getenv("SPLITLAB_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240611ULL;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(seed());
    return gen;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// Random rational num/den with |num| <= range*den.
inline Rat rand_rat(long range, long den_max = 4) {
    long den = rand_int(1, den_max);
    Rat r(rand_int(-range * den, range * den), den);
    r.canonicalize();
    return r;
}

inline Vec rand_point(std::size_t dim, long range, long den_max = 4) {
    Vec v(dim);
    for (auto& x : v) x = rand_rat(range, den_max);
    return v;
}

inline Vec ints(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline Vec rats(std::initializer_list<const char*> xs) {
    Vec v;
    for (const char* x : xs) v.push_back(parse_rat(x));
    return v;
}

/// Facets of a full-dimensional point set by trying every d-subset: a hyperplane through
/// d affinely independent points with all points on one side is a facet.
inline std::set<std::pair<Vec, Rat>> brute_facets(const Matrix& pts) {
    const std::size_t d = pts.front().size();
    std::set<std::pair<Vec, Rat>> out;
    std::vector<std::size_t> idx(d);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t start) {
        if (k == d) {
            Matrix rows;
            for (std::size_t i = 1; i < d; ++i) rows.push_back(sub(pts[idx[i]], pts[idx[0]]));
            Matrix ns = nullspace(rows, d);
            if (ns.size() != 1) return;
            Vec a = ns[0];
            Rat b = dot(a, pts[idx[0]]);
            int side = 0;
            for (const auto& p : pts) {
                int s = sgn(dot(a, p) - b);
                if (s == 0) continue;
                if (side == 0) side = s;
                else if (s != side) return;
            }
            if (side == 0) return;
            if (side > 0) {
                a = scale(a, -1);
                b = -b;
            }
            auto q = geom::Inequality::make(a, b);
            out.insert({q.a, q.b});
            return;
        }
        for (std::size_t i = start; i < pts.size(); ++i) {
            idx[k] = i;
            rec(k + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

/// Integer points of the box [lo, hi]^d accepted by `inside`.
inline std::vector<Vec> box_scan(std::size_t d, long lo, long hi,
                                 const std::function<bool(const Vec&)>& inside) {
    std::vector<Vec> out;
    Vec x(d);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == d) {
            if (inside(x)) out.push_back(x);
            return;
        }
        for (long v = lo; v <= hi; ++v) {
            x[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

/// Membership in conv(pts) for a full-dimensional set, via brute-force facets.
inline bool in_hull_brute(const std::set<std::pair<Vec, Rat>>& facets, const Vec& x) {
    for (const auto& [a, b] : facets)
        if (dot(a, x) > b) return false;
    return true;
}

/// Exhaustive split search with ||pi||_inf <= bound: some pi takes exactly two consecutive values on S.
inline bool brute_partitionable(const Matrix& s, long bound = 3) {
    const std::size_t m = s.front().size();
    std::vector<long> pi(m, -bound);
    while (true) {
        bool nonzero = std::any_of(pi.begin(), pi.end(), [](long x) { return x != 0; });
        if (nonzero) {
            std::set<Rat> values;
            for (const auto& p : s) {
                Rat v = 0;
                for (std::size_t j = 0; j < m; ++j) v += pi[j] * p[j];
                values.insert(v);
            }
            if (values.size() == 2 && *values.rbegin() - *values.begin() == 1) return true;
        }
        std::size_t j = 0;
        while (j < m && pi[j] == bound) pi[j++] = -bound;
        if (j == m) return false;
        ++pi[j];
    }
}

}  // namespace testsupport
