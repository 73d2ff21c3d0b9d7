#include "splitlab/bounds.hpp"

#include <mpfr.h>

#include "splitlab/errors.hpp"

namespace splitlab {

namespace {

constexpr mpfr_prec_t kPrecision = 128;

Rat directed_sqrt(const Rat& square, mpfr_rnd_t mode) {
    if (sgn(square) < 0) throw InputError("sqrt of a negative value");
    mpfr_t x;
    mpfr_init2(x, kPrecision);
    mpfr_set_q(x, square.get_mpq_t(), mode);
    mpfr_sqrt(x, x, mode);
    Rat out;
    mpfr_get_q(out.get_mpq_t(), x);
    mpfr_clear(x);
    return out;
}

}  // namespace

Rat SqrtValue::lower() const { return directed_sqrt(square, MPFR_RNDD); }
Rat SqrtValue::upper() const { return directed_sqrt(square, MPFR_RNDU); }

std::string SqrtValue::lower_decimal(int digits) const { return to_decimal_directed(lower(), digits, false); }
std::string SqrtValue::upper_decimal(int digits) const { return to_decimal_directed(upper(), digits, true); }

std::string to_decimal_directed(const Rat& value, int digits, bool up) {
    Int scale_factor;
    mpz_ui_pow_ui(scale_factor.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rat scaled = value * scale_factor;
    Int n = up ? ceil_rat(scaled) : floor_rat(scaled);
    bool neg = sgn(n) < 0;
    Int mag = abs(n);
    std::string s = mag.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return neg ? "-" + s : s;
}

}  // namespace splitlab
