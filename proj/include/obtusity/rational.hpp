#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace obtusity::exact {

// Reduced arbitrary-precision rational; gmp keeps gcd(num, den) = 1 and den > 0.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Arbitrary-precision binary float with runtime precision (mpfr backend).
using BigFloat = boost::multiprecision::mpfr_float;

// Sets the working precision in decimal digits, restores on scope exit.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits10)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits10);
    }
    ~ScopedPrecision() { BigFloat::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

inline BigFloat to_bigfloat(const Rational& r) {
    return BigFloat(r);
}

// Decimal expansion with `digits` digits after the point, truncated toward zero.
// (Truncation, not rounding: the digit-string contract of the exact module.)
inline std::string decimal_string(const BigFloat& x, int digits) {
    if (digits < 1) throw std::invalid_argument("decimal_string: digits must be >= 1");
    BigFloat scaled = x;
    for (int i = 0; i < digits; ++i) scaled *= 10;
    BigInt units = boost::multiprecision::trunc(scaled).convert_to<BigInt>();
    bool negative = units < 0;
    if (negative) units = -units;
    BigInt base = 1;
    for (int i = 0; i < digits; ++i) base *= 10;
    BigInt whole = units / base;
    std::string frac = BigInt(units % base).str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return (negative ? "-" : "") + whole.str() + "." + frac;
}

inline std::string rational_string(const Rational& r) {
    return r.str();
}

inline Rational rational_from_string(const std::string& s) {
    return Rational(s);
}

}  // namespace obtusity::exact
