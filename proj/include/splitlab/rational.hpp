#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace splitlab {

// mpq_class results of arithmetic are always canonical (gcd 1, den > 0).
using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;
using IntVec = std::vector<Int>;
using Point = Vec;

/// Parses "p/q", "p" or a decimal-free integer string. Throws InputError.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

/// Fixed-point rendering with `digits` fractional digits, rounded to nearest.
std::string to_decimal(const Rat& value, int digits = 12);

bool is_integer(const Rat& value);
Int floor_rat(const Rat& value);
Int ceil_rat(const Rat& value);

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& factor);
Rat norm_sq(const Vec& a);
bool is_zero(const Vec& a);
bool is_integral(const Vec& a);

/// Positive multiple of `a` with coprime integer entries. The zero vector is returned unchanged.
Vec primitive(const Vec& a);

IntVec to_int(const Vec& a);  ///< requires integral entries
Vec to_rat(const IntVec& a);

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);

std::string to_string(const Vec& v);

}  // namespace splitlab
