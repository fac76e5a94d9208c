#pragma once

#include "obtusity/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace obtusity::dist {

enum class Law { Uniform01, Langford, SigmaLaw, XiLaw, OmegaLaw };

inline constexpr Law kAllLaws[] = {Law::Uniform01, Law::Langford, Law::SigmaLaw, Law::XiLaw,
                                   Law::OmegaLaw};

struct AuxiliaryDistribution {
    Law kind;
    double support_lo;
    double support_hi;
};

inline AuxiliaryDistribution auxiliary(Law kind) {
    switch (kind) {
        case Law::Uniform01: return {kind, 0.0, 1.0};
        case Law::Langford: return {kind, -0.25, 1.0};
        case Law::SigmaLaw: return {kind, -0.25, 1.0};
        case Law::XiLaw: return {kind, 0.0, 1.0};
        case Law::OmegaLaw: return {kind, 0.0, 0.25};
    }
    throw std::invalid_argument("auxiliary: bad law");
}

inline std::string_view law_name(Law kind) {
    switch (kind) {
        case Law::Uniform01: return "U";
        case Law::Langford: return "Lambda";
        case Law::SigmaLaw: return "Sigma";
        case Law::XiLaw: return "Xi";
        case Law::OmegaLaw: return "Omega";
    }
    throw std::invalid_argument("law_name: bad law");
}

inline Law parse_law(std::string_view name) {
    for (Law l : kAllLaws)
        if (law_name(l) == name) return l;
    throw std::invalid_argument("parse_law: unknown law '" + std::string(name) + "'");
}

// Uniform draws consumed by one constructive sample.
inline constexpr int uniforms_needed(Law kind) {
    switch (kind) {
        case Law::Uniform01: return 1;
        case Law::Langford: return 3;
        case Law::SigmaLaw: return 2;
        case Law::XiLaw: return 2;
        case Law::OmegaLaw: return 1;
    }
    return 0;
}

namespace detail {

// All branch formulas below take the distance to the branch point as the
// argument, so quadrature nodes supplied with exact endpoint distances never
// lose digits to cancellation. argtanh(sqrt(1-4d)) is evaluated in log form:
// it diverges as d -> 0 where the naive expression returns atanh(1).

inline double fL_neg(double d) {  // f_Lambda(-d), d in (0, 1/4]
    double s = std::sqrt(1.0 - 4.0 * d);
    return 2.0 * std::log((1.0 + s) * (1.0 + s) / (4.0 * d)) - 4.0 * s;
}

inline double fL_pos(double x) {  // f_Lambda(x), x in (0, 1]
    return 4.0 * std::sqrt(x) - 2.0 * std::log(x) - 4.0;
}

inline double FL_neg(double d) {  // F_Lambda(-d), d in (0, 1/4]
    double s = std::sqrt(1.0 - 4.0 * d);
    return (1.0 + 8.0 * d) * s / 3.0 - 2.0 * d * std::log((1.0 + s) * (1.0 + s) / (4.0 * d));
}

inline double FL_pos(double x) {  // F_Lambda(x), x in [0, 1]
    if (x == 0.0) return 1.0 / 3.0;
    return (1.0 - 6.0 * x + 8.0 * x * std::sqrt(x)) / 3.0 - 2.0 * x * std::log(x);
}

inline double fS_neg(double d) {  // f_Sigma(-d), d in (0, 1/4]
    double s = std::sqrt(1.0 - 4.0 * d);
    return std::log((1.0 + s) * (1.0 + s) / (4.0 * d));
}

inline double fS_pos(double x) {  // f_Sigma(x), x in (0, 1]
    return -0.5 * std::log(x);
}

inline double FS_neg(double d) {  // F_Sigma(-d), d in (0, 1/4]
    double s = std::sqrt(1.0 - 4.0 * d);
    return 0.5 * s - d * std::log((1.0 + s) * (1.0 + s) / (4.0 * d));
}

inline double FS_pos(double x) {  // F_Sigma(x), x in [0, 1]
    if (x == 0.0) return 0.5;
    return 0.5 * (1.0 + x - x * std::log(x));
}

inline double fX(double x) {  // f_Xi(x), x in (0, 1]
    return -std::log(x);
}

inline double FX(double x) {  // F_Xi(x), x in [0, 1]
    if (x <= 0.0) return 0.0;
    return x * (1.0 - std::log(x));
}

inline double fO_dist(double d) {  // f_Omega(1/4 - d), d in (0, 1/4]
    return 1.0 / std::sqrt(d);
}

inline double FO(double x) {  // F_Omega(x), x in [0, 1/4]
    return 1.0 - std::sqrt(1.0 - 4.0 * x);
}

inline double FO_dist(double d) {  // F_Omega(1/4 - d)
    return 1.0 - 2.0 * std::sqrt(d);
}

}  // namespace detail

// Piecewise density. Outside the support: 0. At interior singular points the
// right-continuous branch applies, which diverges; +infinity is the explicit
// infinite-density signal.
inline double pdf(const AuxiliaryDistribution& dist, double x) {
    const double inf = std::numeric_limits<double>::infinity();
    switch (dist.kind) {
        case Law::Uniform01: return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
        case Law::Langford:
            if (x < -0.25 || x >= 1.0) return 0.0;
            if (x < 0.0) return detail::fL_neg(-x);
            if (x == 0.0) return inf;
            return detail::fL_pos(x);
        case Law::SigmaLaw:
            if (x < -0.25 || x >= 1.0) return 0.0;
            if (x < 0.0) return detail::fS_neg(-x);
            if (x == 0.0) return inf;
            return detail::fS_pos(x);
        case Law::XiLaw:
            if (x < 0.0 || x >= 1.0) return 0.0;
            if (x == 0.0) return inf;
            return detail::fX(x);
        case Law::OmegaLaw:
            if (x < 0.0 || x >= 0.25) return 0.0;
            return 2.0 / std::sqrt(1.0 - 4.0 * x);
    }
    throw std::invalid_argument("pdf: bad law");
}

// Piecewise CDF, clamped to [0, 1]; branch limits agree at the seams.
inline double cdf(const AuxiliaryDistribution& dist, double x) {
    switch (dist.kind) {
        case Law::Uniform01:
            if (x <= 0.0) return 0.0;
            return x >= 1.0 ? 1.0 : x;
        case Law::Langford:
            if (x <= -0.25) return 0.0;
            if (x < 0.0) return detail::FL_neg(-x);
            if (x == 0.0) return 1.0 / 3.0;
            return x >= 1.0 ? 1.0 : detail::FL_pos(x);
        case Law::SigmaLaw:
            if (x <= -0.25) return 0.0;
            if (x < 0.0) return detail::FS_neg(-x);
            if (x == 0.0) return 0.5;
            return x >= 1.0 ? 1.0 : detail::FS_pos(x);
        case Law::XiLaw:
            if (x <= 0.0) return 0.0;
            return x >= 1.0 ? 1.0 : detail::FX(x);
        case Law::OmegaLaw:
            if (x <= 0.0) return 0.0;
            return x >= 0.25 ? 1.0 : detail::FO(x);
    }
    throw std::invalid_argument("cdf: bad law");
}

// Constructive sampler: the defining product of Uniform(0,1) draws, never
// inversion. rng() must yield one uniform variate per call.
template <class Rng>
double sample(const AuxiliaryDistribution& dist, Rng&& rng) {
    switch (dist.kind) {
        case Law::Uniform01: return rng();
        case Law::Langford: {
            double u = rng(), u1 = rng(), u2 = rng();
            return (u1 - u) * (u2 - u);
        }
        case Law::SigmaLaw: {
            double u = rng(), u1 = rng();
            return (u - u1) * u;
        }
        case Law::XiLaw: {
            double u = rng(), u1 = rng();
            return u * u1;
        }
        case Law::OmegaLaw: {
            double u = rng();
            return u * (1.0 - u);
        }
    }
    throw std::invalid_argument("sample: bad law");
}

// Integral of the density over [a, b] by singularity-aware panels.
inline quad::QuadratureResult integrate_pdf(const AuxiliaryDistribution& dist, double a, double b,
                                            double tolerance) {
    using quad::QuadratureResult;
    a = std::max(a, dist.support_lo);
    b = std::min(b, dist.support_hi);
    QuadratureResult total;
    total.converged = true;
    total.error_estimate = 0.0;
    if (b <= a) return total;

    auto accumulate = [&](const QuadratureResult& r) {
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.evaluations += r.evaluations;
        total.converged = total.converged && r.converged;
    };

    switch (dist.kind) {
        case Law::Uniform01: {
            quad::QuadratureSpec spec;
            spec.tolerance = tolerance;
            accumulate(quad::integrate_1d([](double) { return 1.0; }, a, b, spec));
            break;
        }
        case Law::Langford:
        case Law::SigmaLaw: {
            const bool langford = dist.kind == Law::Langford;
            double lo = a;
            double hi = std::min(b, 0.0);
            if (lo < hi) {
                accumulate(quad::tanh_sinh(
                    [&](double x, double, double dh) {
                        double d = (hi == 0.0) ? dh : -x;
                        return langford ? detail::fL_neg(d) : detail::fS_neg(d);
                    },
                    lo, hi, tolerance / 2, 12));
            }
            lo = std::max(a, 0.0);
            hi = b;
            if (lo < hi) {
                accumulate(quad::tanh_sinh(
                    [&](double x, double dl, double) {
                        double v = (lo == 0.0) ? dl : x;
                        return langford ? detail::fL_pos(v) : detail::fS_pos(v);
                    },
                    lo, hi, tolerance / 2, 12));
            }
            break;
        }
        case Law::XiLaw: {
            accumulate(quad::tanh_sinh(
                [&](double x, double dl, double) { return detail::fX(a == 0.0 ? dl : x); }, a, b,
                tolerance, 12));
            break;
        }
        case Law::OmegaLaw: {
            accumulate(quad::tanh_sinh(
                [&](double x, double, double dh) {
                    if (b == 0.25) return detail::fO_dist(dh);
                    return 2.0 / std::sqrt(1.0 - 4.0 * x);
                },
                a, b, tolerance, 12));
            break;
        }
    }
    return total;
}

struct CdfCheckReport {
    double max_deviation = 0.0;
    std::vector<std::pair<double, double>> failures;  // (grid point, deviation)
    bool pass = true;
};

// Verifies |cdf(x) - integral of pdf from support_lo to x| <= tol pointwise.
inline CdfCheckReport cdf_numeric_check(const AuxiliaryDistribution& dist,
                                        const std::vector<double>& grid, double tol) {
    CdfCheckReport report;
    for (double x : grid) {
        quad::QuadratureResult r = integrate_pdf(dist, dist.support_lo, x, tol / 20);
        double dev = std::abs(cdf(dist, x) - r.value);
        report.max_deviation = std::max(report.max_deviation, dev);
        if (dev > tol || !r.converged) {
            report.failures.emplace_back(x, dev);
            report.pass = false;
        }
    }
    return report;
}

// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of the
// samples (sorted in place) and the law's CDF.
inline double ks_statistic(const AuxiliaryDistribution& dist, std::vector<double>& samples) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double F = cdf(dist, samples[i]);
        d = std::max(d, F - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - F);
    }
    return d;
}

inline double ks_critical_1pct(std::size_t n) {
    return 1.62762 / std::sqrt(static_cast<double>(n));
}

}  // namespace obtusity::dist
