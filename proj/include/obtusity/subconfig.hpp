#pragma once

#include "obtusity/distributions.hpp"
#include "obtusity/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

// Sub-configuration probabilities as iterated 1-D integrals over the
// auxiliary densities. Region boundaries and branch points (t = 0 for
// Lambda/Sigma/Xi, w = 1/4 for Omega) are always panel endpoints, so each
// singular factor is evaluated from an exact endpoint distance.
//
// Legend used in the structure strings: f_L/F_L density and cdf of Lambda,
// f_S/F_S of Sigma, F_X cdf of Xi, f_O density of Omega.

namespace obtusity::quad {

namespace subdetail {

using dist::detail::fL_neg;
using dist::detail::fL_pos;
using dist::detail::FL_neg;
using dist::detail::FL_pos;
using dist::detail::fO_dist;
using dist::detail::fS_neg;
using dist::detail::fS_pos;
using dist::detail::FS_neg;
using dist::detail::FS_pos;
using dist::detail::fX;
using dist::detail::FX;

inline double inner_tolerance(const QuadratureSpec& spec) {
    return std::max(spec.tolerance * 0.02, 1e-13);
}

inline void require_converged(const QuadratureResult& r, std::string_view id) {
    if (!r.converged)
        throw std::runtime_error("eta_subconfig: quadrature for '" + std::string(id) +
                                 "' did not converge (error estimate " +
                                 std::to_string(r.error_estimate) + ")");
}

// P(X + Y + U < 0) = int F_Y(-t) F_X(t) dt for X, Y supported on [-1/4, 1],
// since the integrand at t recovers E[length{t : X <= t <= -Y}] = E[(-X-Y)+].
template <class FnegY, class FposY, class FnegX, class FposX>
double cdf_product(FnegY&& Fneg_y, FposY&& Fpos_y, FnegX&& Fneg_x, FposX&& Fpos_x,
                   const QuadratureSpec& spec, std::string_view id) {
    auto left = tanh_sinh([&](double, double, double dh) { return Fpos_y(dh) * Fneg_x(dh); },
                          -0.25, 0.0, spec.tolerance * 0.5, spec.max_levels);
    auto right = tanh_sinh([&](double, double dl, double) { return Fneg_y(dl) * Fpos_x(dl); },
                           0.0, 0.25, spec.tolerance * 0.5, spec.max_levels);
    require_converged(left, id);
    require_converged(right, id);
    return left.value + right.value;
}

// P(X + Xi + U < 0) for X on [-1/4, 1]: only t in [0, 1/4] contributes.
template <class FnegX>
double cdf_product_xi(FnegX&& Fneg_x, const QuadratureSpec& spec, std::string_view id) {
    auto r = tanh_sinh([&](double, double dl, double) { return Fneg_x(dl) * FX(dl); }, 0.0, 0.25,
                       spec.tolerance, spec.max_levels);
    require_converged(r, id);
    return r.value;
}

// P(X + Y < Omega) = int_0^{1/4} f_O(w) I(w) dw with I the inner integral of
// f_X F_Y over the line x + y < w, split at the branch points of both laws.
template <class Inner>
double omega_mixture(Inner&& inner, const QuadratureSpec& spec, std::string_view id) {
    const double ti = inner_tolerance(spec);
    const int ml = spec.max_levels;
    auto outer = tanh_sinh(
        [&](double omega, double, double dh) { return fO_dist(dh) * inner(omega, ti, ml); }, 0.0,
        0.25, spec.tolerance, spec.max_levels);
    require_converged(outer, id);
    return outer.value;
}

// Inner integrals int f(x) F(w - x) dx for the omega mixtures. The panels are
// [-1/4, 0], [0, w], [w, w + 1/4] (the last only when F extends to negative
// arguments, i.e. F is the Lambda or Sigma cdf).

inline double inner_lambda_lambda(double omega, double tol, int ml) {
    auto p1 = tanh_sinh([=](double, double, double dh) { return fL_neg(dh) * FL_pos(omega + dh); },
                        -0.25, 0.0, tol, ml);
    auto p2 = tanh_sinh([=](double, double dl, double dh) { return fL_pos(dl) * FL_pos(dh); }, 0.0,
                        omega, tol, ml);
    auto p3 = tanh_sinh([=](double x, double dl, double) { return fL_pos(x) * FL_neg(dl); }, omega,
                        omega + 0.25, tol, ml);
    return p1.value + p2.value + p3.value;
}

inline double inner_lambda_sigma(double omega, double tol, int ml) {
    auto p1 = tanh_sinh([=](double, double, double dh) { return fL_neg(dh) * FS_pos(omega + dh); },
                        -0.25, 0.0, tol, ml);
    auto p2 = tanh_sinh([=](double, double dl, double dh) { return fL_pos(dl) * FS_pos(dh); }, 0.0,
                        omega, tol, ml);
    auto p3 = tanh_sinh([=](double x, double dl, double) { return fL_pos(x) * FS_neg(dl); }, omega,
                        omega + 0.25, tol, ml);
    return p1.value + p2.value + p3.value;
}

inline double inner_sigma_sigma(double omega, double tol, int ml) {
    auto p1 = tanh_sinh([=](double, double, double dh) { return fS_neg(dh) * FS_pos(omega + dh); },
                        -0.25, 0.0, tol, ml);
    auto p2 = tanh_sinh([=](double, double dl, double dh) { return fS_pos(dl) * FS_pos(dh); }, 0.0,
                        omega, tol, ml);
    auto p3 = tanh_sinh([=](double x, double dl, double) { return fS_pos(x) * FS_neg(dl); }, omega,
                        omega + 0.25, tol, ml);
    return p1.value + p2.value + p3.value;
}

inline double inner_lambda_xi(double omega, double tol, int ml) {
    auto p1 = tanh_sinh([=](double, double, double dh) { return fL_neg(dh) * FX(omega + dh); },
                        -0.25, 0.0, tol, ml);
    auto p2 = tanh_sinh([=](double, double dl, double dh) { return fL_pos(dl) * FX(dh); }, 0.0,
                        omega, tol, ml);
    return p1.value + p2.value;
}

inline double inner_sigma_xi(double omega, double tol, int ml) {
    auto p1 = tanh_sinh([=](double, double, double dh) { return fS_neg(dh) * FX(omega + dh); },
                        -0.25, 0.0, tol, ml);
    auto p2 = tanh_sinh([=](double, double dl, double dh) { return fS_pos(dl) * FX(dh); }, 0.0,
                        omega, tol, ml);
    return p1.value + p2.value;
}

// P(X + Sigma + U < 0) = E[(-X - Sigma)+] evaluated as a genuine double
// integral; the inner weight (-x - s) is an exact endpoint distance.
template <class FnegX, class FposX>
double plus_part_sigma(FnegX&& f_neg, FposX&& f_pos, const QuadratureSpec& spec,
                       std::string_view id) {
    const double ti = inner_tolerance(spec);
    const int ml = spec.max_levels;
    auto inner_neg = [=](double dhx) {  // x = -dhx < 0, sigma in [-1/4, dhx]
        auto p1 = tanh_sinh([=](double, double, double dh) { return fS_neg(dh) * (dhx + dh); },
                            -0.25, 0.0, ti, ml);
        auto p2 = tanh_sinh([=](double, double dl, double dh) { return fS_pos(dl) * dh; }, 0.0,
                            dhx, ti, ml);
        return p1.value + p2.value;
    };
    auto inner_pos = [=](double dlx) {  // x = dlx > 0, sigma in [-1/4, -dlx]
        auto p = tanh_sinh([=](double, double, double dh) { return fS_neg(dlx + dh) * dh; }, -0.25,
                           -dlx, ti, ml);
        return p.value;
    };
    auto left = tanh_sinh([&](double, double, double dh) { return f_neg(dh) * inner_neg(dh); },
                          -0.25, 0.0, spec.tolerance * 0.5, ml);
    auto right = tanh_sinh([&](double, double dl, double) { return f_pos(dl) * inner_pos(dl); },
                           0.0, 0.25, spec.tolerance * 0.5, ml);
    require_converged(left, id);
    require_converged(right, id);
    return left.value + right.value;
}

// P(Sigma + Sigma' < Omega) = int int f_S(s) f_S(s') P(Omega > s + s'), with
// P(Omega > t) = 1 for t <= 0 and sqrt(1 - 4t) = 2 sqrt(1/4 - t) for t < 1/4.
inline double sigma_sigma_omega_kernel(const QuadratureSpec& spec, std::string_view id) {
    const double ti = inner_tolerance(spec);
    const int ml = spec.max_levels;
    auto J_neg = [=](double dhs) {  // s = -dhs in (-1/4, 0)
        auto p1 = tanh_sinh([=](double, double, double dh) { return fS_neg(dh); }, -0.25, 0.0, ti,
                            ml);
        auto p2 = tanh_sinh([=](double, double dl, double) { return fS_pos(dl); }, 0.0, dhs, ti,
                            ml);
        auto p3 = tanh_sinh(
            [=](double, double dl, double dh) {
                double g2 = 1.0 - 4.0 * dl;  // s + s' = dl here
                return fS_pos(dhs + dl) * (dl < 0.125 ? std::sqrt(g2) : 2.0 * std::sqrt(dh));
            },
            dhs, dhs + 0.25, ti, ml);
        return p1.value + p2.value + p3.value;
    };
    auto J_pos = [=](double s, double dhs) {  // s in (0, 1/4), dhs = 1/4 - s
        auto p1 = tanh_sinh([=](double, double, double dh) { return fS_neg(s + dh); }, -0.25, -s,
                            ti, ml);
        auto p2 = tanh_sinh(
            [=](double, double, double dh) { return fS_neg(dh) * 2.0 * std::sqrt(dhs + dh); }, -s,
            0.0, ti, ml);
        auto p3 = tanh_sinh(
            [=](double, double dl, double dh) { return fS_pos(dl) * 2.0 * std::sqrt(dh); }, 0.0,
            dhs, ti, ml);
        return p1.value + p2.value + p3.value;
    };
    auto J_high = [=](double dls) {  // s = 1/4 + dls, single panel up to -dls
        auto p = tanh_sinh(
            [=](double, double, double dh) { return fS_neg(dls + dh) * 2.0 * std::sqrt(dh); },
            -0.25, -dls, ti, ml);
        return p.value;
    };
    const double tol3 = spec.tolerance / 3.0;
    auto o1 = tanh_sinh([&](double, double, double dh) { return fS_neg(dh) * J_neg(dh); }, -0.25,
                        0.0, tol3, ml);
    auto o2 = tanh_sinh([&](double, double dl, double dh) { return fS_pos(dl) * J_pos(dl, dh); },
                        0.0, 0.25, tol3, ml);
    auto o3 = tanh_sinh(
        [&](double, double dl, double) { return fS_pos(0.25 + dl) * J_high(dl); }, 0.25, 0.5, tol3,
        ml);
    require_converged(o1, id);
    require_converged(o2, id);
    require_converged(o3, id);
    return o1.value + o2.value + o3.value;
}

// P(U + Sigma + Sigma' < 0) = int_0^{1/2} P(Sigma + Sigma' < -u) du.
inline double u_slice_sigma_sigma(const QuadratureSpec& spec, std::string_view id) {
    const double ti = inner_tolerance(spec);
    const int ml = spec.max_levels;
    auto K_low = [=](double u) {  // u in (0, 1/4)
        auto p1 = tanh_sinh([=](double, double, double dh) { return fS_neg(u + dh) * FS_pos(dh); },
                            -0.25, -u, ti, ml);
        auto p2 = tanh_sinh([=](double, double dl, double dh) { return fS_neg(dh) * FS_neg(dl); },
                            -u, 0.0, ti, ml);
        auto p3 = tanh_sinh(
            [=](double, double dl, double) { return fS_pos(dl) * FS_neg(u + dl); }, 0.0, 0.25 - u,
            ti, ml);
        return p1.value + p2.value + p3.value;
    };
    auto K_high = [=](double dlu) {  // u = 1/4 + dlu, sigma in [-1/4, -dlu]
        auto p = tanh_sinh(
            [=](double, double dl, double dh) { return fS_neg(dlu + dh) * FS_neg(dlu + dl); },
            -0.25, -dlu, ti, ml);
        return p.value;
    };
    auto low = tanh_sinh([&](double, double dl, double) { return K_low(dl); }, 0.0, 0.25,
                         spec.tolerance * 0.5, ml);
    auto high = tanh_sinh([&](double, double dl, double) { return K_high(dl); }, 0.25, 0.5,
                          spec.tolerance * 0.5, ml);
    require_converged(low, id);
    require_converged(high, id);
    return low.value + high.value;
}

// P(U + Xi + Sigma < 0) = int_{-1/4}^0 f_S(s) int_0^{-s} F_X(v) dv ds.
inline double sigma_integrated_xi(const QuadratureSpec& spec, std::string_view id) {
    const double ti = inner_tolerance(spec);
    const int ml = spec.max_levels;
    auto H = [=](double c) {
        auto r = tanh_sinh([](double, double dl, double) { return FX(dl); }, 0.0, c, ti, ml);
        return r.value;
    };
    auto outer = tanh_sinh([&](double, double, double dh) { return fS_neg(dh) * H(dh); }, -0.25,
                           0.0, spec.tolerance, ml);
    require_converged(outer, id);
    return outer.value;
}

// The analytically reduced form of P(Xi + Xi' < Omega).
inline double xi_xi_reduced(const QuadratureSpec& spec, std::string_view id) {
    auto r = tanh_sinh(
        [](double, double dl, double dh) {
            double q = 4.0 * dh;  // 1 - 4 xi
            return std::pow(q, 1.5) / 18.0 * (3.0 * std::log(q) - 8.0) * std::log(dl);
        },
        0.0, 0.25, spec.tolerance, spec.max_levels);
    require_converged(r, id);
    return r.value;
}

}  // namespace subdetail

// Direct double integral for P(Xi + Xi' < Omega); the other integration order
// of the same region, used to cross-check the reduced 1-D form of 221*r.
inline double eta_221r_direct_2d(const QuadratureSpec& spec = {}) {
    using namespace subdetail;
    const double ti = inner_tolerance(spec);
    const int ml = spec.max_levels;
    auto outer = tanh_sinh(
        [&](double, double dl_out, double dh_out) {
            auto inner = tanh_sinh(
                [](double, double dl, double dh) { return fX(dl) * 2.0 * std::sqrt(dh); }, 0.0,
                dh_out, ti, ml);
            return fX(dl_out) * inner.value;
        },
        0.0, 0.25, spec.tolerance, spec.max_levels);
    require_converged(outer, "221*r direct 2-D");
    return outer.value;
}

inline double eta_subconfig(std::string_view id, const QuadratureSpec& spec = {}) {
    using namespace subdetail;
    if (spec.tolerance <= 0.0) throw std::invalid_argument("eta_subconfig: tolerance must be > 0");

    // 322r family
    if (id == "3*22r") return omega_mixture(inner_lambda_lambda, spec, id);
    if (id == "32*2r" || id == "322*r")
        return cdf_product(FL_neg, FL_pos, FL_neg, FL_pos, spec, id);

    // 321r family
    if (id == "3*21r") return omega_mixture(inner_lambda_sigma, spec, id);
    if (id == "32*1r") return cdf_product(FL_neg, FL_pos, FS_neg, FS_pos, spec, id);
    if (id == "321*r") return cdf_product_xi(FL_neg, spec, id);

    // 222r family
    if (id == "2*22r") return omega_mixture(inner_lambda_xi, spec, id);
    if (id == "22*2r" || id == "222*r") return plus_part_sigma(fL_neg, fL_pos, spec, id);

    // 320 family
    if (id == "3*20") return omega_mixture(inner_sigma_sigma, spec, id);
    if (id == "32*0") return cdf_product(FS_neg, FS_pos, FS_neg, FS_pos, spec, id);
    if (id == "320*") return 0.0;  // sum of three nonnegative terms is never negative

    // 311 family
    if (id == "3*11") return sigma_sigma_omega_kernel(spec, id);
    if (id == "31*1" || id == "311*") return cdf_product_xi(FS_neg, spec, id);

    // 221r family
    if (id == "2*21r" || id == "22*1r") return plus_part_sigma(fS_neg, fS_pos, spec, id);
    if (id == "221*r") return xi_xi_reduced(spec, id);

    // 221e family
    if (id == "2*21e") return omega_mixture(inner_sigma_xi, spec, id);
    if (id == "22*1e") return u_slice_sigma_sigma(spec, id);
    if (id == "221*e") return sigma_integrated_xi(spec, id);

    throw std::invalid_argument("eta_subconfig: unknown id '" + std::string(id) + "'");
}

struct SubconfigIntegral {
    std::string id;
    std::string structure;
};

inline SubconfigIntegral subconfig_integral(std::string_view id) {
    auto desc = [&](std::string_view s) {
        return SubconfigIntegral{std::string(id), std::string(s)};
    };
    if (id == "3*22r")
        return desc("int_0^1/4 f_O(w) int_-1/4^w+1/4 f_L(l) F_L(w-l) dl dw");
    if (id == "32*2r" || id == "322*r") return desc("int_-1/4^1/4 F_L(-t) F_L(t) dt");
    if (id == "3*21r")
        return desc("int_0^1/4 f_O(w) int_-1/4^w+1/4 f_L(l) F_S(w-l) dl dw");
    if (id == "32*1r") return desc("int_-1/4^1/4 F_L(-t) F_S(t) dt");
    if (id == "321*r") return desc("int_0^1/4 F_L(-t) F_X(t) dt");
    if (id == "2*22r") return desc("int_0^1/4 f_O(w) int_-1/4^w f_L(l) F_X(w-l) dl dw");
    if (id == "22*2r" || id == "222*r")
        return desc("int int f_L(l) f_S(s) max(-l-s, 0) ds dl");
    if (id == "3*20")
        return desc("int_0^1/4 f_O(w) int_-1/4^w+1/4 f_S(s) F_S(w-s) ds dw");
    if (id == "32*0") return desc("int_-1/4^1/4 F_S(-t) F_S(t) dt");
    if (id == "320*") return desc("0 (a sum of three nonnegative terms is never negative)");
    if (id == "3*11") return desc("int int f_S(s) f_S(s') P(Omega > s+s') ds' ds");
    if (id == "31*1" || id == "311*") return desc("int_0^1/4 F_S(-t) F_X(t) dt");
    if (id == "2*21r" || id == "22*1r")
        return desc("int int f_S(s) f_S(s') max(-s-s', 0) ds' ds");
    if (id == "221*r")
        return desc("int_0^1/4 (1-4x)^3/2 / 18 (3 ln(1-4x) - 8) ln x dx");
    if (id == "2*21e") return desc("int_0^1/4 f_O(w) int_-1/4^w f_S(s) F_X(w-s) ds dw");
    if (id == "22*1e") return desc("int_0^1/2 int f_S(s) F_S(-u-s) ds du");
    if (id == "221*e") return desc("int_-1/4^0 f_S(s) int_0^-s F_X(v) dv ds");
    throw std::invalid_argument("subconfig_integral: unknown id '" + std::string(id) + "'");
}

inline constexpr std::array<std::pair<std::string_view, std::array<std::string_view, 3>>, 7>
    kConfigurationStars = {{
        {"322r", {"3*22r", "32*2r", "322*r"}},
        {"321r", {"3*21r", "32*1r", "321*r"}},
        {"222r", {"2*22r", "22*2r", "222*r"}},
        {"320", {"3*20", "32*0", "320*"}},
        {"311", {"3*11", "31*1", "311*"}},
        {"221r", {"2*21r", "22*1r", "221*r"}},
        {"221e", {"2*21e", "22*1e", "221*e"}},
    }};

// Sum of the three per-vertex obtusity probabilities of one configuration.
inline double eta_configuration(std::string_view label, const QuadratureSpec& spec = {}) {
    for (const auto& [l, stars] : kConfigurationStars) {
        if (l != label) continue;
        double sum = 0.0;
        for (std::string_view s : stars) sum += eta_subconfig(s, spec);
        return sum;
    }
    throw std::invalid_argument("eta_configuration: unknown label '" + std::string(label) + "'");
}

// Obtusity probability of the unit cube: the p = 0 Crofton combination of the
// seven configuration sums.
inline double eta_c3(const QuadratureSpec& spec = {}) {
    constexpr std::array<std::pair<std::string_view, int>, 7> weights = {{
        {"322r", 7},
        {"321r", 8},
        {"222r", 4},
        {"320", 2},
        {"311", 2},
        {"221r", 1},
        {"221e", 4},
    }};
    double sum = 0.0;
    for (const auto& [label, w] : weights) sum += w * eta_configuration(label, spec);
    return sum / 28.0;
}

// Slow cross-check: eta(C3) = 3 P(L1 + L2 + L3 < 0) for iid Langford
// coordinates, evaluated as a nested double integral against F_L.
inline double eta_c3_langford_sum(double tolerance = 1e-6) {
    using namespace subdetail;
    const double ti = std::max(tolerance * 0.01, 1e-12);
    const int ml = 12;

    auto inner_neg = [=](double dh1) {  // l1 = -dh1 in (-1/4, 0)
        auto p1 = tanh_sinh([=](double, double, double dh) { return fL_neg(dh) * FL_pos(dh1 + dh); },
                            -0.25, 0.0, ti, ml);
        auto p2 = tanh_sinh([=](double, double dl, double dh) { return fL_pos(dl) * FL_pos(dh); },
                            0.0, dh1, ti, ml);
        auto p3 = tanh_sinh([=](double x, double dl, double) { return fL_pos(x) * FL_neg(dl); },
                            dh1, dh1 + 0.25, ti, ml);
        return p1.value + p2.value + p3.value;
    };
    auto inner_pos = [=](double dl1) {  // l1 = dl1 in (0, 1/4)
        auto p1 = tanh_sinh([=](double, double, double dh) { return fL_neg(dl1 + dh) * FL_pos(dh); },
                            -0.25, -dl1, ti, ml);
        auto p2 = tanh_sinh([=](double, double dl, double dh) { return fL_neg(dh) * FL_neg(dl); },
                            -dl1, 0.0, ti, ml);
        auto p3 = tanh_sinh([=](double, double dl, double) { return fL_pos(dl) * FL_neg(dl1 + dl); },
                            0.0, 0.25 - dl1, ti, ml);
        return p1.value + p2.value + p3.value;
    };
    auto inner_high = [=](double dl1) {  // l1 = 1/4 + dl1 in (1/4, 1/2)
        auto p = tanh_sinh(
            [=](double, double dl, double dh) { return fL_neg(dl1 + dh) * FL_neg(dl1 + dl); },
            -0.25, -dl1, ti, ml);
        return p.value;
    };

    const double tol3 = tolerance / 3.0;
    auto o1 = tanh_sinh([&](double, double, double dh) { return fL_neg(dh) * inner_neg(dh); },
                        -0.25, 0.0, tol3, ml);
    auto o2 = tanh_sinh([&](double, double dl, double) { return fL_pos(dl) * inner_pos(dl); }, 0.0,
                        0.25, tol3, ml);
    auto o3 = tanh_sinh(
        [&](double x, double dl, double) { return fL_pos(x) * inner_high(dl); }, 0.25, 0.5, tol3,
        ml);
    subdetail::require_converged(o1, "eta_c3_langford_sum");
    subdetail::require_converged(o2, "eta_c3_langford_sum");
    subdetail::require_converged(o3, "eta_c3_langford_sum");
    return 3.0 * (o1.value + o2.value + o3.value);
}

}  // namespace obtusity::quad
