#include "obtusity/distributions.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace obtusity::dist;

namespace {

struct TestRng {
    std::mt19937_64 gen;
    explicit TestRng(uint64_t seed) : gen(seed) {}
    double operator()() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
};

struct FixedRng {
    std::vector<double> values;
    size_t i = 0;
    double operator()() { return values.at(i++); }
};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
    return out;
}

}  // namespace

TEST_CASE("pdf point examples") {
    auto L = auxiliary(Law::Langford);
    CHECK(pdf(L, 0.25) == Catch::Approx(2.0 * std::log(4.0) - 2.0).epsilon(1e-14));
    CHECK(pdf(L, 2.0) == 0.0);
    CHECK(pdf(auxiliary(Law::OmegaLaw), 0.1) == Catch::Approx(2.0 / std::sqrt(0.6)).epsilon(1e-14));
    CHECK(pdf(auxiliary(Law::XiLaw), std::exp(-1.0)) == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pdf infinite-density signals at singular points") {
    CHECK(std::isinf(pdf(auxiliary(Law::Langford), 0.0)));
    CHECK(std::isinf(pdf(auxiliary(Law::SigmaLaw), 0.0)));
    CHECK(std::isinf(pdf(auxiliary(Law::XiLaw), 0.0)));
    CHECK(pdf(auxiliary(Law::OmegaLaw), 0.25) == 0.0);  // right-continuous: outside
    CHECK(pdf(auxiliary(Law::OmegaLaw), 0.2499999) > 1000.0);
    CHECK(pdf(auxiliary(Law::Uniform01), 0.0) == 1.0);
    CHECK(pdf(auxiliary(Law::Uniform01), 1.0) == 0.0);
}

TEST_CASE("pdf nonnegative on support, zero outside") {
    for (Law law : kAllLaws) {
        auto d = auxiliary(law);
        for (double x : linspace(d.support_lo + 1e-9, d.support_hi - 1e-9, 500)) {
            CHECK(pdf(d, x) >= 0.0);
        }
        CHECK(pdf(d, d.support_lo - 0.05) == 0.0);
        CHECK(pdf(d, d.support_hi + 0.05) == 0.0);
    }
}

TEST_CASE("cdf point examples") {
    CHECK(cdf(auxiliary(Law::Langford), 0.0) == 1.0 / 3.0);
    CHECK(cdf(auxiliary(Law::SigmaLaw), 0.0) == 0.5);
    CHECK(cdf(auxiliary(Law::OmegaLaw), 3.0 / 16.0) == 0.5);
    CHECK(cdf(auxiliary(Law::XiLaw), -0.5) == 0.0);
    for (Law law : kAllLaws) {
        auto d = auxiliary(law);
        CHECK(cdf(d, d.support_lo) == 0.0);
        CHECK(cdf(d, d.support_hi) == 1.0);
        CHECK(cdf(d, d.support_lo - 1.0) == 0.0);
        CHECK(cdf(d, d.support_hi + 1.0) == 1.0);
    }
}

TEST_CASE("cdf monotone across piece boundaries") {
    for (Law law : kAllLaws) {
        auto d = auxiliary(law);
        auto grid = linspace(d.support_lo - 0.01, d.support_hi + 0.01, 10000);
        double prev = -1.0;
        bool monotone = true;
        for (double x : grid) {
            double F = cdf(d, x);
            if (F < prev || F < 0.0 || F > 1.0) monotone = false;
            prev = F;
        }
        CHECK(monotone);
    }
}

TEST_CASE("sampler matches constructive definitions") {
    FixedRng langford_seq{{0.5, 0.5, 0.9}};
    CHECK(sample(auxiliary(Law::Langford), langford_seq) == 0.0);

    FixedRng omega_seq{{0.5}};
    CHECK(sample(auxiliary(Law::OmegaLaw), omega_seq) == 0.25);

    FixedRng sigma_seq{{0.3, 0.8}};
    CHECK(sample(auxiliary(Law::SigmaLaw), sigma_seq) == Catch::Approx((0.3 - 0.8) * 0.3));

    FixedRng xi_seq{{0.3, 0.8}};
    CHECK(sample(auxiliary(Law::XiLaw), xi_seq) == Catch::Approx(0.24));
}

TEST_CASE("samples stay inside the support") {
    TestRng rng(11);
    for (Law law : kAllLaws) {
        auto d = auxiliary(law);
        bool inside = true;
        for (int i = 0; i < 20000; ++i) {
            double x = sample(d, rng);
            if (x < d.support_lo || x > d.support_hi) inside = false;
        }
        CHECK(inside);
    }
}

TEST_CASE("empirical mean of Xi is 1/4") {
    TestRng rng(42);
    auto d = auxiliary(Law::XiLaw);
    const int n = 1000000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = sample(d, rng);
        sum += x;
        sumsq += x * x;
    }
    double mean = sum / n;
    double sd = std::sqrt((sumsq / n - mean * mean) / n);
    CHECK(std::abs(mean - 0.25) < 5.0 * sd);
}

TEST_CASE("normalization of all five densities") {
    for (Law law : kAllLaws) {
        auto d = auxiliary(law);
        auto r = integrate_pdf(d, d.support_lo, d.support_hi, 1e-12);
        INFO(law_name(law));
        REQUIRE(r.converged);
        CHECK(std::abs(r.value - 1.0) <= 1e-10);
    }
}

TEST_CASE("cdf agrees with integrated pdf") {
    auto L = auxiliary(Law::Langford);
    auto rep = cdf_numeric_check(L, linspace(-0.25, 1.0, 101), 1e-9);
    INFO("max deviation " << rep.max_deviation);
    CHECK(rep.pass);

    auto U = auxiliary(Law::Uniform01);
    auto rep_u = cdf_numeric_check(U, {0.0, 1.0}, 1e-12);
    CHECK(rep_u.pass);
    CHECK(rep_u.max_deviation == 0.0);

    auto S = auxiliary(Law::SigmaLaw);
    auto rep_s = cdf_numeric_check(S, linspace(-0.25, 1.0, 41), 1e-9);
    INFO("max deviation " << rep_s.max_deviation);
    CHECK(rep_s.pass);

    auto X = auxiliary(Law::XiLaw);
    CHECK(cdf_numeric_check(X, linspace(0.0, 1.0, 41), 1e-9).pass);

    auto O = auxiliary(Law::OmegaLaw);
    CHECK(cdf_numeric_check(O, linspace(0.0, 0.25, 41), 1e-9).pass);
}

TEST_CASE("cdf_numeric_check reports offending grid points") {
    auto L = auxiliary(Law::Langford);
    auto rep = cdf_numeric_check(L, {0.5}, -1.0);  // impossible tolerance
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].first == 0.5);
}

TEST_CASE("Kolmogorov-Smirnov at the 1 percent level") {
    const size_t n = 1000000;
    uint64_t seed = 7001;
    for (Law law : kAllLaws) {
        auto d = auxiliary(law);
        TestRng rng(seed++);
        std::vector<double> xs(n);
        for (auto& x : xs) x = sample(d, rng);
        double D = ks_statistic(d, xs);
        INFO(law_name(law) << " D=" << D << " crit=" << ks_critical_1pct(n));
        CHECK(D < ks_critical_1pct(n));
    }
}

TEST_CASE("exact probability of the nonpositive half line") {
    CHECK(cdf(auxiliary(Law::Langford), 0.0) == 1.0 / 3.0);
    CHECK(cdf(auxiliary(Law::SigmaLaw), 0.0) == 0.5);
}

TEST_CASE("law names round-trip") {
    for (Law law : kAllLaws) CHECK(parse_law(law_name(law)) == law);
    CHECK_THROWS_AS(parse_law("Gamma"), std::invalid_argument);
    CHECK(uniforms_needed(Law::Langford) == 3);
    CHECK(uniforms_needed(Law::OmegaLaw) == 1);
}
