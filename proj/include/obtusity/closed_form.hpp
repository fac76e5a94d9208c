#pragma once

#include "obtusity/constants.hpp"
#include "obtusity/rational.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace obtusity::exact {

// Exact value as a Q-linear combination of registry constants.
// Zero coefficients are never stored, so equality is map equality.
class ClosedFormValue {
public:
    ClosedFormValue() = default;
    ClosedFormValue(std::initializer_list<std::pair<ConstantSymbol, Rational>> terms) {
        for (const auto& [sym, coeff] : terms) set(sym, coeff);
    }

    const std::map<ConstantSymbol, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Rational coefficient(ConstantSymbol sym) const {
        auto it = terms_.find(sym);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set(ConstantSymbol sym, const Rational& coeff) {
        if (coeff == 0)
            terms_.erase(sym);
        else
            terms_[sym] = coeff;
    }

    ClosedFormValue& operator+=(const ClosedFormValue& other) {
        for (const auto& [sym, coeff] : other.terms_) set(sym, coefficient(sym) + coeff);
        return *this;
    }
    ClosedFormValue& operator-=(const ClosedFormValue& other) {
        for (const auto& [sym, coeff] : other.terms_) set(sym, coefficient(sym) - coeff);
        return *this;
    }
    ClosedFormValue& operator*=(const Rational& r) {
        if (r == 0) {
            terms_.clear();
        } else {
            for (auto& [sym, coeff] : terms_) coeff *= r;
        }
        return *this;
    }

    friend ClosedFormValue operator+(ClosedFormValue a, const ClosedFormValue& b) { return a += b; }
    friend ClosedFormValue operator-(ClosedFormValue a, const ClosedFormValue& b) { return a -= b; }
    friend ClosedFormValue operator*(const Rational& r, ClosedFormValue v) { return v *= r; }
    friend bool operator==(const ClosedFormValue& a, const ClosedFormValue& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<ConstantSymbol, Rational> terms_;
};

// Sum coeff * constant with all constants at working precision digits + 10.
inline BigFloat cf_eval(const ClosedFormValue& v, int digits) {
    if (digits < 1) throw std::invalid_argument("cf_eval: digits must be >= 1");
    ScopedPrecision prec(static_cast<unsigned>(digits) + 10);
    BigFloat sum = 0;
    for (const auto& [sym, coeff] : v.terms())
        sum += to_bigfloat(coeff) * constant_value(sym, digits + 5);
    return sum;
}

// Decimal expansion of cf_eval to `digits` digits after the point (truncated).
inline std::string cf_eval_string(const ClosedFormValue& v, int digits) {
    return decimal_string(cf_eval(v, digits + 5), digits);
}

inline double cf_eval_double(const ClosedFormValue& v) {
    return cf_eval(v, 25).convert_to<double>();
}

// Exact sum of the three per-vertex sub-configuration values.
inline ClosedFormValue cf_sum_config(const ClosedFormValue& a, const ClosedFormValue& b,
                                     const ClosedFormValue& c) {
    return a + b + c;
}

// Coefficient map keyed by constant name, values "num/den"; CLI serializes this.
inline std::map<std::string, std::string> cf_coefficient_strings(const ClosedFormValue& v) {
    std::map<std::string, std::string> out;
    for (const auto& [sym, coeff] : v.terms())
        out[std::string(constant_name(sym))] = coeff.str();
    return out;
}

}  // namespace obtusity::exact
