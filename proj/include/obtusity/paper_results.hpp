#pragma once

#include "obtusity/closed_form.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace obtusity::exact {

// Identifier conventions:
//   sub-configurations: "3*22r", "32*0", ... (star marks the obtuse vertex)
//   configuration sums: "322r", "321r", "222r", "320", "311", "221r", "221e"
//   bodies: "square", "cube", "disk", "ball", "triangle"; full result: "eta_C3"

inline constexpr std::array<std::string_view, 13> kDistinctSubconfigIds = {
    "3*22r", "32*2r", "3*21r", "32*1r", "321*r", "2*22r", "3*20",
    "32*0",  "3*11",  "31*1",  "221*r", "2*21e", "320*",
};

// Star positions that coincide with another id's value: the first four are
// cube symmetries of the same configuration, the last four are the nontrivial
// distributional identities checked by the identity suite.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 8> kSubconfigAliases = {{
    {"322*r", "32*2r"},
    {"222*r", "22*2r"},
    {"311*", "31*1"},
    {"22*1r", "2*21r"},
    {"22*2r", "32*1r"},
    {"2*21r", "32*0"},
    {"22*1e", "32*0"},
    {"221*e", "31*1"},
}};

inline constexpr std::array<std::string_view, 7> kConfigurationLabels = {
    "322r", "321r", "222r", "320", "311", "221r", "221e",
};

inline constexpr std::array<std::string_view, 5> kBodyIds = {
    "square", "cube", "disk", "ball", "triangle",
};

// Exact coefficient vectors transcribed from the closed-form results.
inline ClosedFormValue paper_value(std::string_view id) {
    using CS = ConstantSymbol;
    auto cf = [](std::initializer_list<std::pair<ConstantSymbol, Rational>> t) {
        return ClosedFormValue(t);
    };

    if (id == "3*22r")
        return cf({{CS::One, Rational(6739, 6750)},
                   {CS::Catalan, Rational(-8, 15)},
                   {CS::Pi, Rational(211, 1440)},
                   {CS::PiOverSqrt2, Rational(-17, 252)},
                   {CS::PiSquared, Rational(-1, 45)},
                   {CS::PiLn2, Rational(1, 24)},
                   {CS::PiLnSilver, Rational(-1, 24)}});
    if (id == "32*2r")
        return cf({{CS::One, Rational(121, 7350)}, {CS::Pi, Rational(1, 2688)}});
    if (id == "322r")
        return cf({{CS::One, Rational(341101, 330750)},
                   {CS::Catalan, Rational(-8, 15)},
                   {CS::Pi, Rational(2969, 20160)},
                   {CS::PiOverSqrt2, Rational(-17, 252)},
                   {CS::PiSquared, Rational(-1, 45)},
                   {CS::PiLn2, Rational(1, 24)},
                   {CS::PiLnSilver, Rational(-1, 24)}});

    if (id == "3*21r")
        return cf({{CS::One, Rational(49043, 54000)},
                   {CS::Catalan, Rational(-8, 15)},
                   {CS::Pi, Rational(1567, 11520)},
                   {CS::PiOverSqrt2, Rational(-67, 720)},
                   {CS::PiSquared, Rational(-1, 240)},
                   {CS::PiLn2, Rational(1, 192)},
                   {CS::PiLnSilver, Rational(-1, 96)}});
    if (id == "32*1r" || id == "22*2r")
        return cf({{CS::One, Rational(37, 1176)}, {CS::Pi, Rational(1, 1344)}});
    if (id == "321*r") return cf({{CS::One, Rational(43, 14700)}});
    if (id == "321r")
        return cf({{CS::One, Rational(2494097, 2646000)},
                   {CS::Catalan, Rational(-8, 15)},
                   {CS::Pi, Rational(11029, 80640)},
                   {CS::PiOverSqrt2, Rational(-67, 720)},
                   {CS::PiSquared, Rational(-1, 240)},
                   {CS::PiLn2, Rational(1, 192)},
                   {CS::PiLnSilver, Rational(-1, 96)}});

    if (id == "2*22r")
        return cf({{CS::One, Rational(14393, 27000)},
                   {CS::Catalan, Rational(-2, 15)},
                   {CS::Pi, Rational(11, 1152)},
                   {CS::PiSquared, Rational(-1, 72)},
                   {CS::PiLn2, Rational(1, 96)}});
    if (id == "222r")
        return cf({{CS::One, Rational(788507, 1323000)},
                   {CS::Catalan, Rational(-2, 15)},
                   {CS::Pi, Rational(89, 8064)},
                   {CS::PiSquared, Rational(-1, 72)},
                   {CS::PiLn2, Rational(1, 96)}});

    if (id == "3*20" || id == "3*11")
        return cf({{CS::One, Rational(42977, 54000)},
                   {CS::Catalan, Rational(-7, 30)},
                   {CS::PiSquared, Rational(-1, 1440)}});
    if (id == "32*0" || id == "2*21r" || id == "22*1r" || id == "22*1e")
        return cf({{CS::One, Rational(23, 450)}});
    if (id == "320*") return ClosedFormValue{};
    if (id == "320")
        return cf({{CS::One, Rational(45737, 54000)},
                   {CS::Catalan, Rational(-7, 30)},
                   {CS::PiSquared, Rational(-1, 1440)}});

    if (id == "31*1" || id == "311*" || id == "221*e")
        return cf({{CS::One, Rational(17, 1800)}});
    if (id == "311")
        return cf({{CS::One, Rational(43997, 54000)},
                   {CS::Catalan, Rational(-7, 30)},
                   {CS::PiSquared, Rational(-1, 1440)}});

    if (id == "221*r")
        return cf({{CS::One, Rational(788, 3375)}, {CS::PiSquared, Rational(-1, 120)}});
    if (id == "221r")
        return cf({{CS::One, Rational(1133, 3375)}, {CS::PiSquared, Rational(-1, 120)}});

    if (id == "2*21e")
        return cf({{CS::One, Rational(32629, 54000)},
                   {CS::Catalan, Rational(-7, 30)},
                   {CS::PiSquared, Rational(-1, 360)}});
    if (id == "221e")
        return cf({{CS::One, Rational(35899, 54000)},
                   {CS::Catalan, Rational(-7, 30)},
                   {CS::PiSquared, Rational(-1, 360)}});
    if (id == "322*r") return paper_value("32*2r");
    if (id == "222*r") return paper_value("22*2r");

    if (id == "eta_C3" || id == "cube" || id == "eta_cube")
        return cf({{CS::One, Rational(323338, 385875)},
                   {CS::Catalan, Rational(-13, 35)},
                   {CS::Pi, Rational(4859, 62720)},
                   {CS::PiOverSqrt2, Rational(-73, 1680)},
                   {CS::PiSquared, Rational(-1, 105)},
                   {CS::PiLn2, Rational(3, 224)},
                   {CS::PiLnSilver, Rational(-3, 224)}});
    if (id == "square" || id == "eta_square")
        return cf({{CS::One, Rational(97, 150)}, {CS::Pi, Rational(1, 40)}});
    if (id == "disk" || id == "eta_disk")
        return cf({{CS::One, Rational(9, 8)}, {CS::InvPiSquared, Rational(-4)}});
    if (id == "ball" || id == "eta_ball") return cf({{CS::One, Rational(37, 70)}});
    if (id == "triangle" || id == "eta_triangle")
        return cf({{CS::One, Rational(25, 4)},
                   {CS::PiOverSqrt3, Rational(1, 12)},
                   {CS::LnSqrt3Over2, Rational(393, 10)}});

    throw std::invalid_argument("paper_value: unknown id '" + std::string(id) + "'");
}

inline bool has_paper_value(std::string_view id) {
    try {
        paper_value(id);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// Sub-configuration id for (configuration label, obtuse vertex 1..3), matching
// the site order of the configuration atlas in geometry.
inline std::string config_vertex_subconfig(std::string_view label, int vertex) {
    static const std::array<std::pair<std::string_view, std::array<std::string_view, 3>>, 7> map = {{
        {"322r", {"3*22r", "32*2r", "322*r"}},
        {"321r", {"3*21r", "32*1r", "321*r"}},
        {"222r", {"2*22r", "22*2r", "222*r"}},
        {"320", {"3*20", "32*0", "320*"}},
        {"311", {"3*11", "31*1", "311*"}},
        {"221r", {"2*21r", "22*1r", "221*r"}},
        {"221e", {"2*21e", "22*1e", "221*e"}},
    }};
    if (vertex < 1 || vertex > 3)
        throw std::invalid_argument("config_vertex_subconfig: vertex must be 1..3");
    for (const auto& [l, subs] : map)
        if (l == label) return std::string(subs[static_cast<size_t>(vertex - 1)]);
    throw std::invalid_argument("config_vertex_subconfig: unknown label '" + std::string(label) +
                                "'");
}

}  // namespace obtusity::exact
