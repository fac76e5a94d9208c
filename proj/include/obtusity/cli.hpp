#pragma once

#include "obtusity/closed_form.hpp"
#include "obtusity/crt.hpp"
#include "obtusity/geometry.hpp"
#include "obtusity/montecarlo.hpp"
#include "obtusity/paper_results.hpp"
#include "obtusity/report.hpp"
#include "obtusity/subconfig.hpp"
#include "obtusity/verify.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace obtusity::cli {

namespace detail {

inline uint64_t resolve_seed(const std::optional<uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

inline bool is_body(std::string_view target) {
    for (auto id : exact::kBodyIds)
        if (id == target) return true;
    return false;
}

// z-score against the reference; omitted when the estimate is degenerate but
// off (never happens for the shipped targets).
inline void attach_reference(report::ResultRow& row, double reference) {
    row.reference = reference;
    if (row.stderr_or_bound > 0.0)
        row.z_or_dev = (row.value - reference) / row.stderr_or_bound;
    else if (row.value == reference)
        row.z_or_dev = 0.0;
}

}  // namespace detail

struct EstimateOptions {
    std::string target;
    std::optional<int> vertex;
    long long n = 1'000'000;
    std::optional<uint64_t> seed;
    int workers = 0;
};

// Targets: a body id (cube, square, disk, ball, triangle), "config:LABEL"
// with an optional obtuse vertex, or "aux:EXPR" such as aux:Lambda+Lambda-Omega.
inline report::RunReport cmd_estimate(const EstimateOptions& opt) {
    if (opt.n < 1) throw std::invalid_argument("estimate: n must be >= 1");
    const uint64_t seed = detail::resolve_seed(opt.seed);

    report::RunReport rep;
    rep.command = "estimate";
    rep.params["target"] = opt.target;
    rep.params["n"] = opt.n;
    rep.params["seed"] = seed;
    rep.params["workers"] = opt.workers;
    if (opt.vertex) rep.params["vertex"] = *opt.vertex;

    mc::EstimateResult est;
    std::optional<double> reference;
    if (detail::is_body(opt.target)) {
        est = mc::estimate_body(geom::parse_body(opt.target), opt.n, seed, opt.workers);
        reference = exact::cf_eval_double(exact::paper_value(opt.target));
    } else if (opt.target.rfind("config:", 0) == 0) {
        const std::string label = opt.target.substr(7);
        est = mc::estimate_configuration(geom::cube_configuration(label), opt.vertex, opt.n, seed,
                                         opt.workers);
        const std::string ref_id =
            opt.vertex ? exact::config_vertex_subconfig(label, *opt.vertex) : label;
        reference = exact::cf_eval_double(exact::paper_value(ref_id));
    } else if (opt.target.rfind("aux:", 0) == 0) {
        est = mc::estimate_auxiliary_event(mc::parse_signed_laws(opt.target.substr(4)), opt.n,
                                           seed, opt.workers);
    } else {
        throw std::invalid_argument("estimate: unknown target '" + opt.target + "'");
    }

    report::ResultRow row;
    row.target = est.target;
    row.method = "mc";
    row.value = est.estimate;
    row.stderr_or_bound = est.std_error;
    if (reference) detail::attach_reference(row, *reference);
    rep.rows.push_back(row);
    return rep;
}

struct QuadratureOptions {
    std::string target;
    double tolerance = 1e-10;
};

// Targets: a sub-configuration id (32*2r), "config:LABEL", or eta_C3.
inline report::RunReport cmd_quadrature(const QuadratureOptions& opt) {
    report::RunReport rep;
    rep.command = "quadrature";
    rep.params["target"] = opt.target;
    rep.params["tolerance"] = opt.tolerance;

    quad::QuadratureSpec spec;
    spec.tolerance = opt.tolerance;

    double value = 0.0;
    std::string ref_id = opt.target;
    if (opt.target == "eta_C3") {
        value = quad::eta_c3(spec);
    } else if (opt.target.rfind("config:", 0) == 0) {
        ref_id = opt.target.substr(7);
        value = quad::eta_configuration(ref_id, spec);
    } else {
        value = quad::eta_subconfig(opt.target, spec);
    }

    report::ResultRow row;
    row.target = opt.target;
    row.method = "quad";
    row.value = value;
    row.stderr_or_bound = opt.tolerance;
    const double reference = exact::cf_eval_double(exact::paper_value(ref_id));
    row.reference = reference;
    row.z_or_dev = value - reference;
    rep.rows.push_back(row);
    return rep;
}

struct ExactOptions {
    std::string target = "eta_C3";
    int digits = 30;
};

// Targets: anything with a paper value (sub ids, configuration labels, body
// ids, eta_C3).
inline report::RunReport cmd_exact(const ExactOptions& opt) {
    if (opt.digits < 1) throw std::invalid_argument("exact: digits must be >= 1");
    report::RunReport rep;
    rep.command = "exact";
    rep.params["target"] = opt.target;
    rep.params["digits"] = opt.digits;

    const auto value = exact::paper_value(opt.target);
    report::ResultRow row;
    row.target = opt.target;
    row.method = "exact";
    row.value = exact::cf_eval_double(value);
    row.stderr_or_bound = 0.0;
    row.decimal = exact::cf_eval_string(value, opt.digits);
    row.coefficients = exact::cf_coefficient_strings(value);
    rep.rows.push_back(row);
    return rep;
}

struct VerifyOptions {
    verify::Level level = verify::Level::Quick;
    std::optional<uint64_t> seed;
    int workers = 0;
};

inline report::RunReport cmd_verify(const VerifyOptions& opt) {
    verify::AcceptanceOptions acc = verify::options_for(opt.level);
    acc.seed = detail::resolve_seed(opt.seed);
    acc.workers = opt.workers;

    report::RunReport rep;
    rep.command = "verify";
    rep.params["level"] = opt.level == verify::Level::Quick ? "quick" : "full";
    rep.params["n"] = acc.n;
    rep.params["seed"] = acc.seed;
    rep.params["workers"] = acc.workers;

    bool all = true;
    for (const auto& r : verify::run_acceptance(acc)) {
        all = all && r.pass;
        report::ResultRow row;
        row.target = "criterion " + std::to_string(r.index) + ": " + r.name;
        row.method = "verify";
        row.value = r.pass ? 1.0 : 0.0;
        row.stderr_or_bound = 0.0;
        row.decimal = r.detail;
        rep.rows.push_back(row);
    }
    rep.pass = all;
    return rep;
}

struct Table1Options {
    long long n = 1'000'000;
    int digits = 10;
    std::optional<uint64_t> seed;
    int workers = 0;
};

// The five-body table: exact value, decimal expansion, MC estimate, z-score.
inline report::RunReport cmd_table1(const Table1Options& opt) {
    if (opt.n < 1) throw std::invalid_argument("table1: n must be >= 1");
    if (opt.digits < 1) throw std::invalid_argument("table1: digits must be >= 1");
    const uint64_t seed = detail::resolve_seed(opt.seed);

    report::RunReport rep;
    rep.command = "table1";
    rep.params["n"] = opt.n;
    rep.params["digits"] = opt.digits;
    rep.params["seed"] = seed;
    rep.params["workers"] = opt.workers;

    uint64_t s = seed;
    for (auto id : exact::kBodyIds) {
        const auto value = exact::paper_value(id);
        const auto est = mc::estimate_body(geom::parse_body(id), opt.n, s++, opt.workers);
        report::ResultRow row;
        row.target = std::string(id);
        row.method = "mc";
        row.value = est.estimate;
        row.stderr_or_bound = est.std_error;
        detail::attach_reference(row, exact::cf_eval_double(value));
        row.decimal = exact::cf_eval_string(value, opt.digits);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace obtusity::cli
