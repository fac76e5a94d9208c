#pragma once

#include "obtusity/rational.hpp"

#include <mpfr.h>

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace obtusity::exact {

// Registry of the transcendental constants appearing in the closed forms.
// Products like pi*ln2 are single symbols: the algebra is Q-linear only.
enum class ConstantSymbol {
    One,
    Catalan,
    Pi,
    PiOverSqrt2,
    PiSquared,
    PiLn2,
    PiLnSilver,   // pi * ln(1 + sqrt 2)
    PiOverSqrt3,
    LnSqrt3Over2,
    InvPiSquared,
};

inline constexpr std::array<ConstantSymbol, 10> kAllConstants = {
    ConstantSymbol::One,          ConstantSymbol::Catalan,
    ConstantSymbol::Pi,           ConstantSymbol::PiOverSqrt2,
    ConstantSymbol::PiSquared,    ConstantSymbol::PiLn2,
    ConstantSymbol::PiLnSilver,   ConstantSymbol::PiOverSqrt3,
    ConstantSymbol::LnSqrt3Over2, ConstantSymbol::InvPiSquared,
};

inline std::string_view constant_name(ConstantSymbol sym) {
    switch (sym) {
        case ConstantSymbol::One: return "one";
        case ConstantSymbol::Catalan: return "catalan";
        case ConstantSymbol::Pi: return "pi";
        case ConstantSymbol::PiOverSqrt2: return "pi_over_sqrt2";
        case ConstantSymbol::PiSquared: return "pi_squared";
        case ConstantSymbol::PiLn2: return "pi_ln2";
        case ConstantSymbol::PiLnSilver: return "pi_ln_silver";
        case ConstantSymbol::PiOverSqrt3: return "pi_over_sqrt3";
        case ConstantSymbol::LnSqrt3Over2: return "ln_sqrt3_over_2";
        case ConstantSymbol::InvPiSquared: return "inv_pi_squared";
    }
    throw std::invalid_argument("constant_name: bad symbol");
}

inline ConstantSymbol parse_constant(std::string_view name) {
    for (ConstantSymbol sym : kAllConstants)
        if (constant_name(sym) == name) return sym;
    throw std::invalid_argument("parse_constant: unknown constant '" + std::string(name) + "'");
}

namespace detail {

inline BigFloat mpfr_pi() {
    BigFloat x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

inline BigFloat mpfr_ln2() {
    BigFloat x;
    mpfr_const_log2(x.backend().data(), MPFR_RNDN);
    return x;
}

}  // namespace detail

// Catalan's constant G = sum (-1)^n / (2n+1)^2, computed through the
// accelerated series G = (pi/8) ln(2+sqrt 3) + (3/8) sum 1/(binom(2n,n)(2n+1)^2).
// Term ratio t_{n+1}/t_n = (2n+1)(n+1)/(2(2n+3)^2) < 1/4, so the tail after t_n
// is below t_n/3; we stop once t_n drops under the guard threshold.
inline BigFloat catalan(int digits) {
    if (digits < 1) throw std::invalid_argument("catalan: digits must be >= 1");
    ScopedPrecision prec(static_cast<unsigned>(digits) + 15);
    BigFloat threshold = pow(BigFloat(10), -(digits + 10));
    BigFloat sum = 0;
    BigFloat term = 1;  // n = 0: 1/(binom(0 choose 0)=1 * 1^2)
    for (long n = 0; term > threshold; ++n) {
        sum += term;
        term *= BigFloat((2 * n + 1) * (n + 1)) / BigFloat(2 * (2 * n + 3) * (2 * n + 3));
    }
    BigFloat pi = detail::mpfr_pi();
    BigFloat sqrt3 = sqrt(BigFloat(3));
    return pi / 8 * log(2 + sqrt3) + BigFloat(3) / 8 * sum;
}

// Value of a registry constant, correct to `digits` decimal digits.
// Evaluates at the caller's current working precision if it is higher.
inline BigFloat constant_value(ConstantSymbol sym, int digits) {
    if (digits < 1) throw std::invalid_argument("constant_value: digits must be >= 1");
    ScopedPrecision prec(static_cast<unsigned>(digits) + 15);
    switch (sym) {
        case ConstantSymbol::One: return BigFloat(1);
        case ConstantSymbol::Catalan: return catalan(digits + 5);
        case ConstantSymbol::Pi: return detail::mpfr_pi();
        case ConstantSymbol::PiOverSqrt2: return detail::mpfr_pi() / sqrt(BigFloat(2));
        case ConstantSymbol::PiSquared: {
            BigFloat pi = detail::mpfr_pi();
            return pi * pi;
        }
        case ConstantSymbol::PiLn2: return detail::mpfr_pi() * detail::mpfr_ln2();
        case ConstantSymbol::PiLnSilver: return detail::mpfr_pi() * log(1 + sqrt(BigFloat(2)));
        case ConstantSymbol::PiOverSqrt3: return detail::mpfr_pi() / sqrt(BigFloat(3));
        case ConstantSymbol::LnSqrt3Over2: return log(sqrt(BigFloat(3)) / 2);
        case ConstantSymbol::InvPiSquared: {
            BigFloat pi = detail::mpfr_pi();
            return 1 / (pi * pi);
        }
    }
    throw std::invalid_argument("constant_value: bad symbol");
}

}  // namespace obtusity::exact
