#include "obtusity/montecarlo.hpp"

#include "obtusity/closed_form.hpp"
#include "obtusity/paper_results.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

using namespace obtusity;
using mc::estimate_auxiliary_event;
using mc::estimate_body;
using mc::estimate_configuration;
using mc::paired_configurations;
using mc::parse_signed_laws;

namespace {

constexpr uint64_t kSeed = 424242;

double paper_double(std::string_view id) { return exact::cf_eval_double(exact::paper_value(id)); }

// Auxiliary-variable form of each starred sub-configuration probability.
struct AuxForm {
    const char* id;
    const char* expr;
};

constexpr AuxForm kAuxForms[] = {
    {"3*22r", "Lambda+Lambda-Omega"}, {"32*2r", "Lambda+Lambda+U"},
    {"322*r", "Lambda+Lambda+U"},     {"3*21r", "Lambda+Sigma-Omega"},
    {"32*1r", "Lambda+Sigma+U"},      {"321*r", "Lambda+Xi+U"},
    {"2*22r", "Lambda+Xi-Omega"},     {"22*2r", "Lambda+Sigma+U"},
    {"222*r", "Lambda+Sigma+U"},      {"3*20", "Sigma+Sigma-Omega"},
    {"32*0", "Sigma+Sigma+U"},        {"320*", "Xi+Xi+U"},
    {"3*11", "Sigma+Sigma-Omega"},    {"31*1", "U+Xi+Sigma"},
    {"311*", "U+Xi+Sigma"},           {"2*21r", "Sigma+Sigma+U"},
    {"22*1r", "Sigma+Sigma+U"},       {"221*r", "Xi+Xi-Omega"},
    {"2*21e", "Sigma+Xi-Omega"},      {"22*1e", "U+Sigma+Sigma"},
    {"221*e", "U+Xi+Sigma"},
};

}  // namespace

TEST_CASE("chunk seeds are deterministic and distinct") {
    REQUIRE(mc::chunk_seed(kSeed, 0) == mc::chunk_seed(kSeed, 0));
    REQUIRE(mc::chunk_seed(kSeed, 0) != mc::chunk_seed(kSeed, 1));
    REQUIRE(mc::chunk_seed(kSeed, 0) != mc::chunk_seed(kSeed + 1, 0));
    mc::UniformStream u(kSeed);
    for (int i = 0; i < 1000; ++i) {
        double x = u();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
    }
}

TEST_CASE("estimates are bit-identical across worker counts") {
    const geom::Body cube = geom::make_body(geom::BodyKind::UnitCube);
    const long long n = 3 * mc::kChunkSize + 1234;
    auto r1 = estimate_body(cube, n, kSeed, 1);
    auto r4 = estimate_body(cube, n, kSeed, 4);
    auto r0 = estimate_body(cube, n, kSeed, 0);
    REQUIRE(r1.hits == r4.hits);
    REQUIRE(r1.hits == r0.hits);
    REQUIRE(r1.estimate == r4.estimate);

    const auto cfg = geom::cube_configuration("321r");
    auto c1 = estimate_configuration(cfg, 3, n, kSeed, 1);
    auto c4 = estimate_configuration(cfg, 3, n, kSeed, 4);
    REQUIRE(c1.hits == c4.hits);

    auto terms = parse_signed_laws("Lambda+Lambda-Omega");
    auto a1 = estimate_auxiliary_event(terms, n, kSeed, 1);
    auto a4 = estimate_auxiliary_event(terms, n, kSeed, 4);
    REQUIRE(a1.hits == a4.hits);

    const auto cfg_a = geom::cube_configuration("222r");
    const auto cfg_b = geom::cube_configuration("321r");
    auto p1 = paired_configurations(cfg_a, 2, cfg_b, 2, n, kSeed, 1);
    auto p4 = paired_configurations(cfg_a, 2, cfg_b, 2, n, kSeed, 4);
    REQUIRE(p1.mean_difference == p4.mean_difference);
    REQUIRE(p1.std_error == p4.std_error);
}

TEST_CASE("single draw gives a bare indicator") {
    const geom::Body cube = geom::make_body(geom::BodyKind::UnitCube);
    for (uint64_t s = 1; s <= 20; ++s) {
        auto r = estimate_body(cube, 1, s);
        REQUIRE((r.estimate == 0.0 || r.estimate == 1.0));
        REQUIRE(r.hits == static_cast<long long>(r.estimate));
    }
}

TEST_CASE("estimate results carry their metadata") {
    const geom::Body cube = geom::make_body(geom::BodyKind::UnitCube);
    auto r = estimate_body(cube, 10000, kSeed);
    REQUIRE(r.n == 10000);
    REQUIRE(r.seed == kSeed);
    REQUIRE(r.target == "eta(cube)");
    REQUIRE(r.estimate >= 0.0);
    REQUIRE(r.estimate <= 1.0);
    REQUIRE(r.std_error >= 0.0);
    REQUIRE(r.ci95_lo == r.estimate - 1.96 * r.std_error);
    REQUIRE(r.ci95_hi == r.estimate + 1.96 * r.std_error);
    REQUIRE(std::abs(r.std_error -
                     std::sqrt(r.estimate * (1.0 - r.estimate) / 10000.0)) < 1e-15);

    auto c = estimate_configuration(geom::cube_configuration("322r"), 2, 100, kSeed);
    REQUIRE(c.target == "eta_322r vertex 2");
    auto ca = estimate_configuration(geom::cube_configuration("322r"), std::nullopt, 100, kSeed);
    REQUIRE(ca.target == "eta_322r");

    auto a = estimate_auxiliary_event(parse_signed_laws("Lambda+Lambda-Omega"), 100, kSeed);
    REQUIRE(a.target == "P(Lambda+Lambda-Omega<0)");
}

TEST_CASE("vertex splitting is exact") {
    for (const char* label : {"322r", "333", "221e"}) {
        const auto cfg = geom::cube_configuration(label);
        const long long n = 100000;
        auto all = estimate_configuration(cfg, std::nullopt, n, kSeed);
        long long sum = 0;
        for (int v = 1; v <= 3; ++v) sum += estimate_configuration(cfg, v, n, kSeed).hits;
        REQUIRE(sum == all.hits);
    }
}

TEST_CASE("corner vertex is never obtuse") {
    auto r = estimate_configuration(geom::cube_configuration("320"), 3, 1000000, kSeed);
    REQUIRE(r.hits == 0);
}

TEST_CASE("per-vertex estimates match the closed forms") {
    const long long n = 1000000;
    uint64_t s = kSeed;
    for (auto label : exact::kConfigurationLabels) {
        for (int v = 1; v <= 3; ++v) {
            const double want = paper_double(exact::config_vertex_subconfig(label, v));
            auto r = estimate_configuration(geom::cube_configuration(label), v, n, ++s);
            INFO(std::string(label) << " vertex " << v);
            REQUIRE(std::abs(r.estimate - want) <= 4.5 * r.std_error + 1e-12);
        }
    }
}

TEST_CASE("configuration sums match the closed forms") {
    uint64_t s = kSeed + 100;
    auto r322 = estimate_configuration(geom::cube_configuration("322r"), std::nullopt, 2000000, s);
    REQUIRE(std::abs(r322.estimate - 0.6116261737) <= 4.5 * r322.std_error);

    auto r333 = estimate_configuration(geom::cube_configuration("333"), std::nullopt, 2000000,
                                       s + 1);
    REQUIRE(std::abs(r333.estimate - paper_double("eta_C3")) <= 4.5 * r333.std_error);
}

TEST_CASE("body estimates match the closed forms") {
    const long long n = 1000000;
    uint64_t s = kSeed + 200;
    for (auto id : exact::kBodyIds) {
        const double want = paper_double(id);
        auto r = estimate_body(geom::parse_body(id), n, ++s);
        INFO(std::string(id));
        REQUIRE(std::abs(r.estimate - want) <= 4.5 * r.std_error);
    }
}

TEST_CASE("auxiliary events match the worked examples") {
    uint64_t s = kSeed + 300;
    auto r1 = estimate_auxiliary_event(parse_signed_laws("Lambda+Lambda+U"), 2000000, s);
    REQUIRE(std::abs(r1.estimate - paper_double("32*2r")) <= 4.5 * r1.std_error);

    auto r2 = estimate_auxiliary_event(parse_signed_laws("U+Xi+Sigma"), 2000000, s + 1);
    REQUIRE(std::abs(r2.estimate - 17.0 / 1800.0) <= 4.5 * r2.std_error);

    auto r3 = estimate_auxiliary_event(parse_signed_laws("Omega"), 100000, s + 2);
    REQUIRE(r3.hits == 0);
}

TEST_CASE("every star position matches its auxiliary form") {
    const long long n = 500000;
    uint64_t s = kSeed + 400;
    for (const auto& form : kAuxForms) {
        const double want = paper_double(form.id);
        auto r = estimate_auxiliary_event(parse_signed_laws(form.expr), n, ++s);
        INFO(std::string(form.id) << " as " << form.expr);
        REQUIRE(std::abs(r.estimate - want) <= 4.5 * r.std_error + 1e-12);
    }
}

TEST_CASE("distributionally equal star positions agree on shared samples") {
    struct Pair {
        const char* label_a;
        int vertex_a;
        const char* label_b;
        int vertex_b;
    };
    const Pair pairs[] = {
        {"222r", 2, "321r", 2},  // 22*2r = 32*1r
        {"221r", 1, "320", 2},   // 2*21r = 32*0
        {"221e", 2, "320", 2},   // 22*1e = 32*0
        {"221e", 3, "311", 2},   // 221*e = 31*1
        {"311", 1, "320", 1},    // 3*11 = 3*20
        {"322r", 3, "322r", 2},  // mirror symmetry z -> 1-z
    };
    uint64_t s = kSeed + 500;
    for (const auto& p : pairs) {
        auto r = paired_configurations(geom::cube_configuration(p.label_a), p.vertex_a,
                                       geom::cube_configuration(p.label_b), p.vertex_b, 1000000,
                                       ++s);
        INFO(r.target_a << " vs " << r.target_b);
        REQUIRE(std::abs(r.mean_difference) <= 4.0 * r.std_error + 1e-12);
    }
}

TEST_CASE("pairing a configuration with itself cancels exactly") {
    const auto cfg = geom::cube_configuration("321r");
    auto r = paired_configurations(cfg, 1, cfg, 1, 200000, kSeed);
    REQUIRE(r.mean_difference == 0.0);
    REQUIRE(r.std_error == 0.0);
    REQUIRE(r.target_a == "321r vertex 1");
}

TEST_CASE("cube obtusity equals three times the Langford tail") {
    const long long n = 2000000;
    auto cube = estimate_body(geom::make_body(geom::BodyKind::UnitCube), n, kSeed + 600);
    auto aux = estimate_auxiliary_event(parse_signed_laws("Lambda+Lambda+Lambda"), n, kSeed + 601);
    const double diff = cube.estimate - 3.0 * aux.estimate;
    const double sigma = std::sqrt(cube.std_error * cube.std_error +
                                   9.0 * aux.std_error * aux.std_error);
    REQUIRE(std::abs(diff) <= 4.0 * sigma);
}

TEST_CASE("signed law expressions parse and print") {
    auto terms = parse_signed_laws("Lambda+Lambda-Omega");
    REQUIRE(terms.size() == 3);
    REQUIRE(terms[0].law == dist::Law::Langford);
    REQUIRE(terms[0].sign == 1);
    REQUIRE(terms[2].law == dist::Law::OmegaLaw);
    REQUIRE(terms[2].sign == -1);
    REQUIRE(mc::signed_laws_name(terms) == "Lambda+Lambda-Omega");

    auto neg = parse_signed_laws("-Omega+U");
    REQUIRE(neg[0].sign == -1);
    REQUIRE(neg[1].law == dist::Law::Uniform01);
    REQUIRE(mc::signed_laws_name(neg) == "-Omega+U");

    REQUIRE(mc::signed_laws_name(parse_signed_laws(" Xi + Sigma ")) == "Xi+Sigma");

    REQUIRE_THROWS_AS(parse_signed_laws(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_signed_laws("Lambda+"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_signed_laws("Lambda+-Omega"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_signed_laws("Bogus"), std::invalid_argument);
}

TEST_CASE("monte carlo rejects bad arguments") {
    const geom::Body cube = geom::make_body(geom::BodyKind::UnitCube);
    REQUIRE_THROWS_AS(estimate_body(cube, 0, kSeed), std::invalid_argument);
    const auto cfg = geom::cube_configuration("322r");
    REQUIRE_THROWS_AS(estimate_configuration(cfg, 0, 100, kSeed), std::invalid_argument);
    REQUIRE_THROWS_AS(estimate_configuration(cfg, 4, 100, kSeed), std::invalid_argument);
    REQUIRE_THROWS_AS(estimate_auxiliary_event({}, 100, kSeed), std::invalid_argument);
    REQUIRE_THROWS_AS(paired_configurations(cfg, 0, cfg, 1, 100, kSeed), std::invalid_argument);
}
