#pragma once

#include "obtusity/closed_form.hpp"
#include "obtusity/paper_results.hpp"
#include "obtusity/rational.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace obtusity::crt {

using exact::ClosedFormValue;
using exact::Rational;

inline constexpr std::array<std::string_view, 7> kUnknownNames = {
    "P333", "P332", "P331", "P322v", "P330", "P321v", "P222v",
};
inline constexpr std::array<std::string_view, 7> kKnownNames = {
    "P221e", "P221r", "P222r", "P311", "P320", "P321r", "P322r",
};
inline constexpr std::array<std::string_view, 7> kKnownConfigLabels = {
    "221e", "221r", "222r", "311", "320", "321r", "322r",
};

// Coefficient affine in the homogeneity order p.
struct AffineCoefficient {
    Rational constant = 0;
    Rational slope = 0;
    Rational at(const Rational& p) const { return constant + slope * p; }
};

// One reduction equation, written as
//   sum_j unknown[j](p) * U_j + sum_k known[k] * K_k = 0
// with U in kUnknownNames order and K in kKnownNames order.
struct ReductionEquation {
    std::string name;
    std::array<AffineCoefficient, 7> unknown{};
    std::array<Rational, 7> known{};
};

struct MixingRelation {
    std::string mixed;
    std::vector<std::pair<std::string, Rational>> parts;
};

struct ReductionSystem {
    std::array<std::string_view, 7> unknowns = kUnknownNames;
    std::array<std::string_view, 7> knowns = kKnownNames;
    std::array<ReductionEquation, 7> equations;
    std::array<MixingRelation, 5> mixing;
};

struct SideWeight {
    Rational side_volume = 0;
    Rational body_volume = 0;
    int body_dimension = 0;
    Rational signed_distance = 0;
};

inline Rational side_weight(const SideWeight& sw) {
    if (sw.body_dimension < 1)
        throw std::invalid_argument("side_weight: body dimension must be >= 1");
    if (sw.body_volume <= 0) throw std::invalid_argument("side_weight: body volume must be > 0");
    return sw.side_volume * sw.signed_distance / (sw.body_dimension * sw.body_volume);
}

namespace detail {

inline size_t unknown_index(std::string_view name) {
    for (size_t i = 0; i < kUnknownNames.size(); ++i)
        if (kUnknownNames[i] == name) return i;
    throw std::invalid_argument("unknown P-name '" + std::string(name) + "'");
}

inline size_t known_index(std::string_view name) {
    for (size_t i = 0; i < kKnownNames.size(); ++i)
        if (kKnownNames[i] == name) return i;
    throw std::invalid_argument("unknown known name '" + std::string(name) + "'");
}

}  // namespace detail

// The seven cube reduction equations with the five mixing relations already
// substituted; each equation is stored with every term moved to the left
// (so equation I reads 9 P332 - (p+9) P333 = 0).
inline ReductionSystem build_cube_system() {
    ReductionSystem sys;
    auto& eq = sys.equations;
    auto set_u = [](ReductionEquation& e, std::string_view name, Rational c, Rational s) {
        e.unknown[detail::unknown_index(name)] = {std::move(c), std::move(s)};
    };
    auto set_k = [](ReductionEquation& e, std::string_view name, Rational c) {
        e.known[detail::known_index(name)] = std::move(c);
    };

    eq[0].name = "I";
    set_u(eq[0], "P333", -9, -1);
    set_u(eq[0], "P332", 9, 0);

    eq[1].name = "II";
    set_u(eq[1], "P332", -8, -1);
    set_u(eq[1], "P331", 2, 0);
    set_u(eq[1], "P322v", 4, 0);
    set_k(eq[1], "P322r", 2);

    eq[2].name = "III";
    set_u(eq[2], "P331", -7, -1);
    set_u(eq[2], "P330", 1, 0);
    set_u(eq[2], "P321v", 2, 0);
    set_k(eq[2], "P321r", 4);

    eq[3].name = "IV";
    set_u(eq[3], "P322v", -7, -1);
    set_u(eq[3], "P321v", 2, 0);
    set_u(eq[3], "P222v", 1, 0);
    set_k(eq[3], "P321r", 2);
    set_k(eq[3], "P222r", 2);

    eq[4].name = "V";
    set_u(eq[4], "P330", -6, -1);
    set_k(eq[4], "P320", 6);

    eq[5].name = "VI";
    set_u(eq[5], "P321v", -6, -1);
    set_k(eq[5], "P320", 1);
    set_k(eq[5], "P311", 2);
    set_k(eq[5], "P221r", 1);
    set_k(eq[5], "P221e", 2);

    eq[6].name = "VII";
    set_u(eq[6], "P222v", -6, -1);
    set_k(eq[6], "P221e", 6);

    sys.mixing = {{
        {"P322", {{"P322r", Rational(1, 3)}, {"P322v", Rational(2, 3)}}},
        {"P321", {{"P321r", Rational(2, 3)}, {"P321v", Rational(1, 3)}}},
        {"P321'", {{"P321r", Rational(1, 2)}, {"P321v", Rational(1, 2)}}},
        {"P222", {{"P222r", Rational(2, 3)}, {"P222v", Rational(1, 3)}}},
        {"P221", {{"P221r", Rational(1, 3)}, {"P221e", Rational(2, 3)}}},
    }};
    return sys;
}

// Exact Gauss-Jordan solve of the system at a fixed rational p; returns all
// seven unknowns in kUnknownNames order.
inline std::array<Rational, 7> solve_all(const ReductionSystem& sys, const Rational& p,
                                         const std::map<std::string, Rational>& known_values) {
    std::array<Rational, 7> known{};
    for (size_t k = 0; k < kKnownNames.size(); ++k) {
        auto it = known_values.find(std::string(kKnownNames[k]));
        if (it == known_values.end())
            throw std::invalid_argument("solve_numeric: missing known " +
                                        std::string(kKnownNames[k]));
        known[k] = it->second;
    }
    std::array<std::array<Rational, 8>, 7> m{};
    for (size_t e = 0; e < 7; ++e) {
        for (size_t j = 0; j < 7; ++j) m[e][j] = sys.equations[e].unknown[j].at(p);
        Rational rhs = 0;
        for (size_t k = 0; k < 7; ++k) rhs -= sys.equations[e].known[k] * known[k];
        m[e][7] = rhs;
    }
    for (size_t col = 0; col < 7; ++col) {
        size_t pivot = col;
        while (pivot < 7 && m[pivot][col] == 0) ++pivot;
        if (pivot == 7)
            throw std::runtime_error("solve_numeric: system is singular at p = " + p.str());
        std::swap(m[col], m[pivot]);
        const Rational lead = m[col][col];
        for (size_t j = col; j < 8; ++j) m[col][j] /= lead;
        for (size_t r = 0; r < 7; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (size_t j = col; j < 8; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::array<Rational, 7> x;
    for (size_t i = 0; i < 7; ++i) x[i] = m[i][7];
    return x;
}

inline Rational solve_numeric(const ReductionSystem& sys, const Rational& p,
                              const std::map<std::string, Rational>& known_values) {
    return solve_all(sys, p, known_values)[0];
}

inline std::map<std::string, Rational> indicator_knowns(std::string_view which) {
    std::map<std::string, Rational> values;
    for (auto name : kKnownNames) values[std::string(name)] = (name == which) ? 1 : 0;
    return values;
}

// Closed-form coefficient of one known in the solved P333, i.e. the solution
// formula
//   P333 = 108(4 P221e + P221r + 2 P311 + 2 P320) / ((6+p)(7+p)(8+p)(9+p))
//        + 72(P222r + 2 P321r) / ((7+p)(8+p)(9+p)) + 18 P322r / ((8+p)(9+p)).
inline Rational reference_coefficient(std::string_view known_name, const Rational& p) {
    for (int pole : {-6, -7, -8, -9})
        if (p == pole)
            throw std::invalid_argument("reference_coefficient: p = " + p.str() + " is a pole");
    const Rational d2 = (8 + p) * (9 + p);
    const Rational d3 = (7 + p) * d2;
    const Rational d4 = (6 + p) * d3;
    if (known_name == "P221e") return 432 / d4;
    if (known_name == "P221r") return 108 / d4;
    if (known_name == "P311") return 216 / d4;
    if (known_name == "P320") return 216 / d4;
    if (known_name == "P222r") return 72 / d3;
    if (known_name == "P321r") return 144 / d3;
    if (known_name == "P322r") return 18 / d2;
    throw std::invalid_argument("reference_coefficient: unknown known '" +
                                std::string(known_name) + "'");
}

struct SolutionWitness {
    std::string known;
    Rational p;
    Rational expected;
    Rational solved;
};

struct SolutionVerification {
    bool pass = true;
    int checks = 0;
    std::vector<SolutionWitness> mismatches;
};

// Each coefficient of the solved P333 is rational in p with denominator degree
// at most 4 and numerator constant, so agreement with the reference formula at
// 12 distinct non-pole p values certifies the identity.
inline SolutionVerification verify_solution_formula(const ReductionSystem& sys) {
    static const std::array<Rational, 12> ps = {
        Rational(0),     Rational(1),      Rational(2),      Rational(3),
        Rational(4),     Rational(5),      Rational(-1),     Rational(-2),
        Rational(-3),    Rational(1, 2),   Rational(3, 2),   Rational(-5, 2),
    };
    SolutionVerification report;
    for (auto name : kKnownNames) {
        const auto knowns = indicator_knowns(name);
        for (const auto& p : ps) {
            const Rational expected = reference_coefficient(name, p);
            const Rational solved = solve_numeric(sys, p, knowns);
            ++report.checks;
            if (solved != expected) {
                report.pass = false;
                report.mismatches.push_back({std::string(name), p, expected, solved});
            }
        }
    }
    return report;
}

// eta is homogeneous of order zero, so eta(C3) is the p = 0 solution with the
// seven irreducible configuration probabilities as knowns.
inline ClosedFormValue assemble_eta_cube() {
    const ReductionSystem sys = build_cube_system();
    ClosedFormValue total;
    for (size_t k = 0; k < kKnownNames.size(); ++k) {
        const Rational w = solve_numeric(sys, 0, indicator_knowns(kKnownNames[k]));
        total += w * exact::paper_value(kKnownConfigLabels[k]);
    }
    return total;
}

}  // namespace obtusity::crt
