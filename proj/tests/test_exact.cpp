#include "obtusity/closed_form.hpp"
#include "obtusity/constants.hpp"
#include "obtusity/paper_results.hpp"
#include "obtusity/rational.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <mpfr.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

using namespace obtusity::exact;
using CS = ConstantSymbol;

TEST_CASE("catalan digit strings") {
    CHECK(decimal_string(catalan(10), 10) == "0.9159655941");
    CHECK(decimal_string(catalan(1), 1) == "0.9");
}

TEST_CASE("catalan self-consistency 30 vs 50 digits") {
    std::string a = decimal_string(catalan(30), 30);
    std::string b = decimal_string(catalan(50), 50);
    CHECK(b.substr(0, a.size()) == a);
}

TEST_CASE("catalan matches mpfr built-in to 60 digits") {
    ScopedPrecision prec(80);
    BigFloat ours = catalan(70);
    BigFloat ref;
    mpfr_const_catalan(ref.backend().data(), MPFR_RNDN);
    BigFloat diff = abs(ours - ref);
    CHECK(diff < pow(BigFloat(10), -60));
}

TEST_CASE("constant registry round-trips names") {
    for (ConstantSymbol sym : kAllConstants) {
        CHECK(parse_constant(constant_name(sym)) == sym);
    }
    CHECK_THROWS_AS(parse_constant("nope"), std::invalid_argument);
}

TEST_CASE("constant values at double precision") {
    auto val = [](ConstantSymbol s) { return constant_value(s, 25).convert_to<double>(); };
    CHECK(val(CS::One) == 1.0);
    CHECK(val(CS::Pi) == Catch::Approx(M_PI).epsilon(1e-15));
    CHECK(val(CS::PiOverSqrt2) == Catch::Approx(M_PI / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(val(CS::PiSquared) == Catch::Approx(M_PI * M_PI).epsilon(1e-15));
    CHECK(val(CS::PiLn2) == Catch::Approx(M_PI * std::log(2.0)).epsilon(1e-15));
    CHECK(val(CS::PiLnSilver) == Catch::Approx(M_PI * std::log(1.0 + std::sqrt(2.0))).epsilon(1e-15));
    CHECK(val(CS::PiOverSqrt3) == Catch::Approx(M_PI / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(val(CS::LnSqrt3Over2) == Catch::Approx(std::log(std::sqrt(3.0) / 2.0)).epsilon(1e-15));
    CHECK(val(CS::InvPiSquared) == Catch::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-15));
}

TEST_CASE("cf_eval examples") {
    ClosedFormValue square{{CS::One, Rational(97, 150)}, {CS::Pi, Rational(1, 40)}};
    CHECK(cf_eval_string(square, 4) == "0.7252");
    CHECK(cf_eval_double(ClosedFormValue{}) == 0.0);

    std::string eta50 = cf_eval_string(paper_value("eta_C3"), 50);
    CHECK(eta50 == "0.54265928142722907450111187258177267165716732602495");
}

TEST_CASE("paper_value examples") {
    CHECK(paper_value("321*r") == ClosedFormValue{{CS::One, Rational(43, 14700)}});
    CHECK(paper_value("32*0") == ClosedFormValue{{CS::One, Rational(23, 450)}});
    CHECK(paper_value("ball") == ClosedFormValue{{CS::One, Rational(37, 70)}});
    CHECK(paper_value("320*").empty());
    CHECK_THROWS_AS(paper_value("999x"), std::invalid_argument);
}

TEST_CASE("configuration sums are exact") {
    CHECK(cf_sum_config(paper_value("3*22r"), paper_value("32*2r"), paper_value("32*2r")) ==
          paper_value("322r"));
    CHECK(cf_sum_config(paper_value("3*21r"), paper_value("32*1r"), paper_value("321*r")) ==
          paper_value("321r"));
    CHECK(cf_sum_config(paper_value("2*22r"), paper_value("22*2r"), paper_value("22*2r")) ==
          paper_value("222r"));
    CHECK(cf_sum_config(paper_value("3*20"), paper_value("32*0"), paper_value("320*")) ==
          paper_value("320"));
    CHECK(cf_sum_config(paper_value("3*11"), paper_value("31*1"), paper_value("31*1")) ==
          paper_value("311"));
    CHECK(cf_sum_config(paper_value("2*21r"), paper_value("2*21r"), paper_value("221*r")) ==
          paper_value("221r"));
    CHECK(cf_sum_config(paper_value("2*21e"), paper_value("22*1e"), paper_value("221*e")) ==
          paper_value("221e"));

    ClosedFormValue x = paper_value("322r");
    CHECK(x + ClosedFormValue{} == x);
}

TEST_CASE("printed decimals match cf_eval") {
    // Approximations as printed alongside the closed forms; each must agree
    // to the full printed length.
    const std::vector<std::pair<std::string, std::string>> printed = {
        {"3*22r", "0.576363509"},
        {"32*2r", "0.0176313323"},
        {"322r", "0.611626173665235356686"},
        {"3*21r", "0.5816795685"},
        {"32*1r", "0.03380008"},
        {"321*r", "0.00292517"},
        {"321r", "0.61840481814327429018"},
        {"2*22r", "0.326548524"},
        {"222r", "0.39414868337494"},
        {"3*20", "0.575291173117"},
        {"32*0", "0.0511111"},
        {"320", "0.6264022842"},
        {"3*11", "0.575291173117"},
        {"31*1", "0.00944444"},
        {"311", "0.5941800620"},
        {"221*r", "0.151234778"},
        {"221r", "0.2534570004"},
        {"2*21e", "0.3630998677"},
        {"221e", "0.4236554232"},
        {"eta_C3", "0.54265928142722907450111187258177267165716732602495"},
    };
    for (const auto& [id, dec] : printed) {
        INFO(id << " printed " << dec);
        int places = static_cast<int>(dec.size()) - 2;
        ScopedPrecision prec(static_cast<unsigned>(places) + 20);
        BigFloat value = cf_eval(paper_value(id), places + 10);
        BigFloat ref(dec);
        BigFloat tol = pow(BigFloat(10), -(places - 1));
        CHECK(abs(value - ref) < tol);
    }
}

TEST_CASE("closed form algebra laws on random rationals") {
    std::mt19937 gen(123);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 20);
    auto random_cf = [&]() {
        ClosedFormValue v;
        for (ConstantSymbol sym : kAllConstants)
            v.set(sym, Rational(num(gen), den(gen)));
        return v;
    };
    for (int i = 0; i < 50; ++i) {
        ClosedFormValue a = random_cf(), b = random_cf(), c = random_cf();
        Rational r(num(gen), den(gen));
        CHECK((a + b) + c == a + (b + c));
        CHECK(r * (a + b) == r * a + r * b);
        CHECK(a - a == ClosedFormValue{});
    }
}

TEST_CASE("no zero coefficients stored") {
    ClosedFormValue v;
    v.set(CS::Pi, Rational(1, 2));
    v.set(CS::Pi, Rational(0));
    CHECK(v.empty());
    ClosedFormValue w{{CS::Pi, Rational(1, 3)}};
    w += ClosedFormValue{{CS::Pi, Rational(-1, 3)}};
    CHECK(w.empty());
}

TEST_CASE("coefficient string map") {
    auto m = cf_coefficient_strings(paper_value("square"));
    REQUIRE(m.size() == 2);
    CHECK(m.at("one") == "97/150");
    CHECK(m.at("pi") == "1/40");
}

TEST_CASE("decimal_string truncates toward zero") {
    ScopedPrecision prec(40);
    CHECK(decimal_string(BigFloat("0.123456789"), 4) == "0.1234");
    CHECK(decimal_string(BigFloat("-0.123456789"), 4) == "-0.1234");
    CHECK(decimal_string(BigFloat("2.5"), 2) == "2.50");
    CHECK(decimal_string(BigFloat("0.99999"), 3) == "0.999");
    CHECK_THROWS_AS(decimal_string(BigFloat(1), 0), std::invalid_argument);
}
