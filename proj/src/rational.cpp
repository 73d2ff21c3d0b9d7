#include "splitlab/rational.hpp"

#include <algorithm>
#include <cctype>

#include "splitlab/errors.hpp"

namespace splitlab {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Int parse_int(std::string_view s) {
    if (!valid_integer_text(s)) throw InputError("not an integer: '" + std::string(s) + "'");
    std::string owned(s[0] == '+' ? s.substr(1) : s);
    return Int(owned, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rat& value, int digits) {
    Int scale_factor;
    mpz_ui_pow_ui(scale_factor.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rat scaled = abs(value) * scale_factor + Rat(1, 2);
    Int rounded = floor_rat(scaled);
    std::string body = rounded.get_str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<int>(body.size())), '0');
    std::string out = body.substr(0, body.size() - static_cast<std::size_t>(digits));
    if (digits > 0) out += "." + body.substr(body.size() - static_cast<std::size_t>(digits));
    if (value < 0 && rounded != 0) out.insert(0, "-");
    return out;
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

Int floor_rat(const Rat& value) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& value) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("add: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Vec& a, const Rat& factor) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * factor;
    return r;
}

Rat norm_sq(const Vec& a) { return dot(a, a); }

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return sgn(x) == 0; });
}

bool is_integral(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return is_integer(x); });
}

Vec primitive(const Vec& a) {
    Int l = 1;
    for (const auto& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Int g = 0;
    for (const auto& x : a) {
        Int n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return a;
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i].get_num() * (l / a[i].get_den()) / g);
    return r;
}

IntVec to_int(const Vec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!is_integer(a[i])) throw InputError("to_int: fractional entry " + to_string(a[i]));
        r[i] = a[i].get_num();
    }
    return r;
}

Vec to_rat(const IntVec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

Vec zeros(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit(std::size_t n, std::size_t i) {
    Vec r = zeros(n);
    r[i] = 1;
    return r;
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace splitlab
