#pragma once

#include "obtusity/closed_form.hpp"
#include "obtusity/crt.hpp"
#include "obtusity/distributions.hpp"
#include "obtusity/geometry.hpp"
#include "obtusity/montecarlo.hpp"
#include "obtusity/paper_results.hpp"
#include "obtusity/subconfig.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace obtusity::verify {

inline constexpr const char* kEta50 =
    "0.54265928142722907450111187258177267165716732602495";

enum class Level { Quick, Full };

struct AcceptanceOptions {
    long long n = 10'000'000;
    double sub_tolerance = 1e-8;
    double singular_tolerance = 1e-7;
    double identity_tolerance = 1e-9;
    uint64_t seed = 29861;
    int workers = 0;
};

inline AcceptanceOptions options_for(Level level) {
    AcceptanceOptions opt;
    if (level == Level::Quick) {
        opt.n = 1'000'000;
        opt.sub_tolerance = 1e-7;
        opt.singular_tolerance = 1e-7;
        opt.identity_tolerance = 1e-7;
    }
    return opt;
}

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double wall_ms = 0.0;
};

namespace detail {

template <class Fn>
CriterionResult timed(int index, std::string name, Fn&& fn) {
    CriterionResult r;
    r.index = index;
    r.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    auto [pass, detail] = fn();
    const auto t1 = std::chrono::steady_clock::now();
    r.pass = pass;
    r.detail = std::move(detail);
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

inline bool is_doubly_singular(std::string_view id) {
    return id == "3*22r" || id == "3*21r" || id == "2*22r" || id == "3*20" || id == "2*21e";
}

}  // namespace detail

// 1. cf_eval of the assembled eta(C3) reproduces the 50-digit string.
inline CriterionResult criterion_exact_digits(const AcceptanceOptions&) {
    return detail::timed(1, "exact eta(C3) matches the 50-digit string", [] {
        const std::string got = exact::cf_eval_string(crt::assemble_eta_cube(), 50);
        return std::pair{got == kEta50, "computed " + got};
    });
}

// 2. Solution formula certified at 7 knowns x 12 rational p, and the p=0
// weight vector is (4,1,4,2,2,8,7)/28.
inline CriterionResult criterion_crt_identity(const AcceptanceOptions&) {
    return detail::timed(2, "CRT solution formula exact at 7 knowns x 12 p values", [] {
        const auto sys = crt::build_cube_system();
        const auto report = crt::verify_solution_formula(sys);
        bool pass = report.pass && report.checks == 84;
        const int numerators[] = {4, 1, 4, 2, 2, 8, 7};
        for (size_t k = 0; k < crt::kKnownNames.size(); ++k) {
            const auto w = crt::solve_numeric(sys, 0, crt::indicator_knowns(crt::kKnownNames[k]));
            pass = pass && w == crt::Rational(numerators[k], 28);
        }
        return std::pair{pass, std::to_string(report.checks) + " rational checks, " +
                                   std::to_string(report.mismatches.size()) + " mismatches"};
    });
}

// 3. Quadrature vs closed forms for 13 sub-configurations and 7 sums.
inline CriterionResult criterion_quadrature(const AcceptanceOptions& opt) {
    return detail::timed(3, "quadrature matches closed forms (13 subs, 7 sums)", [&opt] {
        bool pass = true;
        double worst = 0.0;
        for (auto id : exact::kDistinctSubconfigIds) {
            const double diff =
                std::abs(quad::eta_subconfig(id) - exact::cf_eval_double(exact::paper_value(id)));
            const double tol =
                detail::is_doubly_singular(id) ? opt.singular_tolerance : opt.sub_tolerance;
            worst = std::max(worst, diff);
            pass = pass && diff <= tol;
        }
        for (auto label : exact::kConfigurationLabels) {
            const double diff = std::abs(quad::eta_configuration(label) -
                                         exact::cf_eval_double(exact::paper_value(label)));
            worst = std::max(worst, diff);
            pass = pass && diff <= opt.sub_tolerance;
        }
        return std::pair{pass, "largest deviation " + detail::fmt(worst)};
    });
}

// 4. Cube Monte Carlo within 4 stderr of the exact value.
inline CriterionResult criterion_mc_cube(const AcceptanceOptions& opt) {
    return detail::timed(4, "MC cube estimate within 4 stderr of 0.5426592814", [&opt] {
        const auto r = mc::estimate_body(geom::make_body(geom::BodyKind::UnitCube), opt.n,
                                         opt.seed, opt.workers);
        const double diff = std::abs(r.estimate - 0.5426592814);
        return std::pair{diff <= 4.0 * r.std_error,
                         "estimate " + std::to_string(r.estimate) + ", |z| = " +
                             detail::fmt(diff / r.std_error)};
    });
}

// 5. The non-cube bodies within 4 stderr each.
inline CriterionResult criterion_mc_table1(const AcceptanceOptions& opt) {
    return detail::timed(5, "MC body estimates within 4 stderr", [&opt] {
        bool pass = true;
        double worst_z = 0.0;
        uint64_t s = opt.seed;
        for (const char* id : {"disk", "ball", "square", "triangle"}) {
            const double want = exact::cf_eval_double(exact::paper_value(id));
            const auto r = mc::estimate_body(geom::parse_body(id), opt.n, ++s, opt.workers);
            const double z = std::abs(r.estimate - want) / r.std_error;
            worst_z = std::max(worst_z, z);
            pass = pass && z <= 4.0;
        }
        return std::pair{pass, "largest |z| = " + detail::fmt(worst_z)};
    });
}

// 6. Normalization, CDF/PDF grid consistency, and KS at 1% for all five laws.
inline CriterionResult criterion_distributions(const AcceptanceOptions& opt) {
    return detail::timed(6, "distribution suite (normalization, CDF grid, KS 1%)", [&opt] {
        bool pass = true;
        std::string note;
        const size_t ks_n = 1'000'000;
        uint64_t s = opt.seed + 50;
        for (dist::Law law : dist::kAllLaws) {
            const auto d = dist::auxiliary(law);
            const auto norm = dist::integrate_pdf(d, d.support_lo, d.support_hi, 1e-12);
            const bool norm_ok = norm.converged && std::abs(norm.value - 1.0) <= 1e-10;

            std::vector<double> grid;
            for (int i = 0; i <= 100; ++i)
                grid.push_back(d.support_lo + (d.support_hi - d.support_lo) * i / 100.0);
            const bool grid_ok = dist::cdf_numeric_check(d, grid, 1e-9).pass;

            std::vector<double> samples(ks_n);
            mc::UniformStream u(++s);
            for (auto& x : samples) x = dist::sample(d, u);
            const bool ks_ok = dist::ks_statistic(d, samples) <= dist::ks_critical_1pct(ks_n);

            if (!(norm_ok && grid_ok && ks_ok)) {
                pass = false;
                note += std::string(dist::law_name(law)) + (norm_ok ? "" : " norm") +
                        (grid_ok ? "" : " grid") + (ks_ok ? "" : " ks") + "; ";
            }
        }
        return std::pair{pass, pass ? std::string("all five laws pass") : note};
    });
}

// 7. The five distributional identities: quadrature pairs within tolerance and
// shared-seed paired MC within 4 sigma of the difference.
inline CriterionResult criterion_identities(const AcceptanceOptions& opt) {
    return detail::timed(7, "identity pairs (quadrature and shared-seed MC)", [&opt] {
        struct Pair {
            const char* id_a;
            const char* id_b;
            const char* label_a;
            int vertex_a;
            const char* label_b;
            int vertex_b;
        };
        const Pair pairs[] = {
            {"3*11", "3*20", "311", 1, "320", 1},
            {"22*2r", "32*1r", "222r", 2, "321r", 2},
            {"2*21r", "32*0", "221r", 1, "320", 2},
            {"22*1e", "32*0", "221e", 2, "320", 2},
            {"221*e", "31*1", "221e", 3, "311", 2},
        };
        bool pass = true;
        double worst_quad = 0.0, worst_z = 0.0;
        uint64_t s = opt.seed + 100;
        for (const auto& p : pairs) {
            const double qdiff = std::abs(quad::eta_subconfig(p.id_a) - quad::eta_subconfig(p.id_b));
            worst_quad = std::max(worst_quad, qdiff);
            pass = pass && qdiff <= opt.identity_tolerance;

            const auto mc_pair = mc::paired_configurations(
                geom::cube_configuration(p.label_a), p.vertex_a,
                geom::cube_configuration(p.label_b), p.vertex_b, opt.n, ++s, opt.workers);
            if (mc_pair.std_error == 0.0) {
                pass = pass && mc_pair.mean_difference == 0.0;
            } else {
                const double z = std::abs(mc_pair.mean_difference) / mc_pair.std_error;
                worst_z = std::max(worst_z, z);
                pass = pass && z <= 4.0;
            }
        }
        return std::pair{pass, "largest quad gap " + detail::fmt(worst_quad) +
                                   ", largest MC |z| = " + detail::fmt(worst_z)};
    });
}

// 8. At most one obtuse angle: no triple fires two indicators.
inline CriterionResult criterion_decomposition(const AcceptanceOptions& opt) {
    return detail::timed(8, "at most one obtuse indicator over 1e6 cube triples", [&opt] {
        const geom::Body cube = geom::make_body(geom::BodyKind::UnitCube);
        mc::UniformStream u(opt.seed + 200);
        long long doubles_fired = 0;
        for (long long i = 0; i < 1'000'000; ++i) {
            const auto x = geom::sample_body(cube, u);
            const auto y = geom::sample_body(cube, u);
            const auto z = geom::sample_body(cube, u);
            const auto parts = geom::obtuse_parts(x, y, z);
            if (static_cast<int>(parts[0]) + static_cast<int>(parts[1]) +
                    static_cast<int>(parts[2]) >=
                2)
                ++doubles_fired;
        }
        return std::pair{doubles_fired == 0,
                         std::to_string(doubles_fired) + " double firings"};
    });
}

// 9. eta(C3) = 3 P(Lambda1+Lambda2+Lambda3 < 0) within 4 sigma of the
// difference of independent estimates.
inline CriterionResult criterion_langford_consistency(const AcceptanceOptions& opt) {
    return detail::timed(9, "cube MC vs 3 P(sum of Lambdas < 0) within 4 sigma", [&opt] {
        const auto cube = mc::estimate_body(geom::make_body(geom::BodyKind::UnitCube), opt.n,
                                            opt.seed + 300, opt.workers);
        const auto aux = mc::estimate_auxiliary_event(
            mc::parse_signed_laws("Lambda+Lambda+Lambda"), opt.n, opt.seed + 301, opt.workers);
        const double diff = cube.estimate - 3.0 * aux.estimate;
        const double sigma = std::sqrt(cube.std_error * cube.std_error +
                                       9.0 * aux.std_error * aux.std_error);
        return std::pair{std::abs(diff) <= 4.0 * sigma,
                         "difference " + detail::fmt(diff) + ", |z| = " +
                             detail::fmt(std::abs(diff) / sigma)};
    });
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    return {
        criterion_exact_digits(opt),    criterion_crt_identity(opt),
        criterion_quadrature(opt),      criterion_mc_cube(opt),
        criterion_mc_table1(opt),       criterion_distributions(opt),
        criterion_identities(opt),      criterion_decomposition(opt),
        criterion_langford_consistency(opt),
    };
}

inline std::vector<CriterionResult> run_acceptance(Level level) {
    return run_acceptance(options_for(level));
}

}  // namespace obtusity::verify
