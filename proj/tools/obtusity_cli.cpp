#include "obtusity/cli.hpp"
#include "obtusity/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>

namespace {

struct CommonFlags {
    std::string format = "json";
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& common) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--timing", common.timing, "Include wall time in the report");
}

int emit(obtusity::report::RunReport rep, const CommonFlags& common, double wall_ms) {
    if (common.timing) rep.wall_ms = wall_ms;
    const std::string text = common.format == "csv" ? obtusity::report::to_csv(rep)
                                                    : obtusity::report::to_json(rep);
    std::fputs(text.c_str(), stdout);
    return rep.pass.value_or(true) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Obtuse-triangle probability toolkit"};
    app.require_subcommand(1);

    std::function<obtusity::report::RunReport()> run;
    CommonFlags common;

    auto* est = app.add_subcommand("estimate", "Monte Carlo estimate of an obtusity target");
    {
        static obtusity::cli::EstimateOptions opt;
        static std::optional<uint64_t> seed;
        static std::optional<int> vertex;
        est->add_option("--target", opt.target,
                        "Body id, config:LABEL, or aux:EXPR (e.g. aux:Lambda+Lambda-Omega)")
            ->required();
        est->add_option("--vertex", vertex, "Obtuse vertex 1..3 for config targets")
            ->check(CLI::Range(1, 3));
        est->add_option("--n", opt.n, "Sample count")->check(CLI::PositiveNumber);
        est->add_option("--seed", seed, "RNG seed (echoed; random when absent)");
        est->add_option("--workers", opt.workers, "Worker threads (0 = auto)");
        add_common(est, common);
        est->callback([&] {
            opt.seed = seed;
            opt.vertex = vertex;
            run = [&] { return obtusity::cli::cmd_estimate(opt); };
        });
    }

    auto* quad = app.add_subcommand("quadrature", "Numerical integration of a sub-configuration");
    {
        static obtusity::cli::QuadratureOptions opt;
        quad->add_option("--target", opt.target, "Sub-configuration id, config:LABEL, or eta_C3")
            ->required();
        quad->add_option("--tol", opt.tolerance, "Quadrature tolerance")
            ->check(CLI::PositiveNumber);
        add_common(quad, common);
        quad->callback([&] { run = [&] { return obtusity::cli::cmd_quadrature(opt); }; });
    }

    auto* exa = app.add_subcommand("exact", "Closed-form coefficients and decimal expansion");
    {
        static obtusity::cli::ExactOptions opt;
        exa->add_option("--target", opt.target, "Any id with a paper value")
            ->capture_default_str();
        exa->add_option("--digits", opt.digits, "Decimal digits after the point")
            ->check(CLI::PositiveNumber);
        add_common(exa, common);
        exa->callback([&] { run = [&] { return obtusity::cli::cmd_exact(opt); }; });
    }

    auto* ver = app.add_subcommand("verify", "Run the acceptance criteria");
    {
        static obtusity::cli::VerifyOptions opt;
        static std::string level = "quick";
        static std::optional<uint64_t> seed;
        ver->add_option("--level", level, "quick (n=1e6) or full (n=1e7)")
            ->check(CLI::IsMember({"quick", "full"}))
            ->capture_default_str();
        ver->add_option("--seed", seed, "RNG seed (echoed; random when absent)");
        ver->add_option("--workers", opt.workers, "Worker threads (0 = auto)");
        add_common(ver, common);
        ver->callback([&] {
            opt.level = level == "full" ? obtusity::verify::Level::Full
                                        : obtusity::verify::Level::Quick;
            opt.seed = seed;
            run = [&] { return obtusity::cli::cmd_verify(opt); };
        });
    }

    auto* tab = app.add_subcommand("table1", "Exact vs Monte Carlo for the five bodies");
    {
        static obtusity::cli::Table1Options opt;
        static std::optional<uint64_t> seed;
        tab->add_option("--n", opt.n, "Sample count per body")->check(CLI::PositiveNumber);
        tab->add_option("--digits", opt.digits, "Decimal digits after the point")
            ->check(CLI::PositiveNumber);
        tab->add_option("--seed", seed, "RNG seed (echoed; random when absent)");
        tab->add_option("--workers", opt.workers, "Worker threads (0 = auto)");
        add_common(tab, common);
        tab->callback([&] {
            opt.seed = seed;
            run = [&] { return obtusity::cli::cmd_table1(opt); };
        });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        const auto t0 = std::chrono::steady_clock::now();
        auto rep = run();
        const double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return emit(std::move(rep), common, wall_ms);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
