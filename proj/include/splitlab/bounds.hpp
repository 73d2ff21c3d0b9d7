#pragma once

#include <string>

#include "splitlab/rational.hpp"

namespace splitlab {

/// A nonnegative real known through its exact square.
struct SqrtValue {
    Rat square;

    /// Rational r with r <= sqrt(square), within 2^-100 relative.
    Rat lower() const;
    /// Rational r with r >= sqrt(square).
    Rat upper() const;
    /// Decimal strings rounded outward, `digits` fractional digits.
    std::string lower_decimal(int digits = 12) const;
    std::string upper_decimal(int digits = 12) const;
};

/// Fixed-point rendering rounded toward -inf (up = false) or +inf (up = true).
std::string to_decimal_directed(const Rat& value, int digits, bool up);

}  // namespace splitlab
