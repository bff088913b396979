#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "riskfuzz/fuzzy/config_json.hpp"
#include "riskfuzz/fuzzy/engine.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace riskfuzz;
using fuzzy::TrapezoidalSet;

TEST_CASE("trapezoid breakpoints are validated") {
    CHECK_THROWS_AS(TrapezoidalSet(0.5, 0.4, 0.6, 0.7), validation_error);
    CHECK_THROWS_AS(TrapezoidalSet(0.1, 0.2, 0.3, 0.2), validation_error);
    CHECK_THROWS_AS(TrapezoidalSet(-0.1, 0.2, 0.3, 0.4), validation_error);
    CHECK_THROWS_AS(TrapezoidalSet(0.1, 0.2, 0.3, 1.4), validation_error);
    CHECK_NOTHROW(TrapezoidalSet(0.2, 0.2, 0.2, 0.2));
}

TEST_CASE("trapezoid membership covers edges, plateau, and shoulders") {
    const TrapezoidalSet t(0.1, 0.3, 0.5, 0.9);
    CHECK(t.membership(0.05) == 0.0);
    CHECK(t.membership(0.1) == 0.0);
    CHECK(t.membership(0.2) == Catch::Approx(0.5));
    CHECK(t.membership(0.3) == 1.0);
    CHECK(t.membership(0.4) == 1.0);
    CHECK(t.membership(0.5) == 1.0);
    CHECK(t.membership(0.7) == Catch::Approx(0.5));
    CHECK(t.membership(0.9) == 0.0);
    CHECK(t.membership(0.95) == 0.0);

    // step shoulders keep membership 1 at the domain edge
    const TrapezoidalSet left(0.0, 0.0, 0.25, 0.40);
    CHECK(left.membership(0.0) == 1.0);
    const TrapezoidalSet right(0.65, 0.80, 1.0, 1.0);
    CHECK(right.membership(1.0) == 1.0);

    for (double x : {0.0, 0.1, 0.33, 0.5, 0.77, 1.0})
        CHECK(t.membership(x) == Catch::Approx(oracles::trap_mu(x, 0.1, 0.3, 0.5, 0.9)));
}

TEST_CASE("trapezoid centroid matches numeric integration") {
    CHECK(TrapezoidalSet(0.2, 0.5, 0.5, 0.8).centroid() == Catch::Approx(0.5).margin(1e-12));
    CHECK(TrapezoidalSet(0.1, 0.4, 0.6, 0.9).centroid() == Catch::Approx(0.5).margin(1e-12));
    for (const auto& t : {TrapezoidalSet(0.0, 0.0, 0.25, 0.40), TrapezoidalSet(0.2, 0.35, 0.45, 0.6),
                          TrapezoidalSet(0.65, 0.8, 1.0, 1.0), TrapezoidalSet(0.1, 0.2, 0.7, 0.95)}) {
        const double ref = oracles::centroid_integral(
            [&](double x) { return oracles::trap_mu(x, t.a1, t.a2, t.a3, t.a4); }, 1000000);
        CHECK(t.centroid() == Catch::Approx(ref).margin(1e-6));
    }
}

TEST_CASE("linguistic variable validation catches bad term sets") {
    fuzzy::LinguisticVariable v;
    v.name = "x";
    v.terms = {{"a", {0.0, 0.0, 0.4, 0.5}}, {"a", {0.4, 0.5, 1.0, 1.0}}};
    CHECK_THROWS_AS(v.validate(), validation_error); // duplicate label
    v.terms = {{"a", {0.4, 0.5, 1.0, 1.0}}, {"b", {0.0, 0.0, 0.4, 0.5}}};
    CHECK_THROWS_AS(v.validate(), validation_error); // peaks out of order
    v.terms = {{"a", {0.0, 0.0, 0.2, 0.3}}, {"b", {0.6, 0.7, 1.0, 1.0}}};
    CHECK_THROWS_AS(v.validate(), validation_error); // gap in coverage
    v.terms = {{"a", {0.0, 0.0, 0.4, 0.6}}, {"b", {0.4, 0.6, 1.0, 1.0}}};
    CHECK_NOTHROW(v.validate());
}

TEST_CASE("default profile keeps full input coverage") {
    const auto cfg = fuzzy::default_config();
    CHECK_NOTHROW(cfg.validate());
    for (const auto* var : {&cfg.likelihood, &cfg.impact}) {
        for (int i = 0; i <= 500; ++i) {
            const double x = i / 500.0;
            const auto mu = fuzzy::fuzzify(x, *var);
            double peak = 0.0;
            for (double m : mu) peak = std::max(peak, m);
            REQUIRE(peak == Catch::Approx(1.0).margin(1e-12));
        }
    }
}

TEST_CASE("fuzzify reports known memberships") {
    const auto cfg = fuzzy::default_config();
    const auto mu = fuzzy::fuzzify(0.5202, cfg.risk);
    REQUIRE(mu.size() == 4);
    CHECK(mu[0] == 0.0);
    CHECK(mu[1] == Catch::Approx(0.532).margin(1e-9));
    CHECK(mu[2] == Catch::Approx(0.702).margin(1e-9));
    CHECK(mu[3] == 0.0);
    CHECK_THROWS_AS(fuzzy::fuzzify(1.2, cfg.risk), validation_error);
    CHECK_THROWS_AS(fuzzy::fuzzify(-0.2, cfg.risk), validation_error);
}

TEST_CASE("argmax term picks the first index on ties") {
    const auto cfg = fuzzy::default_config();
    CHECK(fuzzy::argmax_term(0.0, cfg.likelihood) == 0);
    CHECK(fuzzy::argmax_term(0.25, cfg.likelihood) == 0); // both plateaus touch here
    CHECK(fuzzy::argmax_term(0.26, cfg.likelihood) == 1);
    CHECK(fuzzy::argmax_term(0.8286, cfg.likelihood) == 3);
    CHECK(fuzzy::argmax_term(1.0, cfg.likelihood) == 4);
}

TEST_CASE("single-rule activation defuzzifies to the term centroid") {
    const auto cfg = fuzzy::default_config();
    const auto agg = fuzzy::infer(0.5, 0.9, cfg);
    int fired = 0;
    for (double w : agg.activation_trace)
        if (w > 0.0) ++fired;
    CHECK(fired == 1);
    const auto res = fuzzy::assess_risk(0.5, 0.9, cfg);
    CHECK(res.crisp_risk == Catch::Approx(0.6).margin(1e-12));
    CHECK(res.level == "High");
}

TEST_CASE("defuzzification goldens at the default resolution") {
    const auto cfg = fuzzy::default_config();
    auto clipped = [&](const TrapezoidalSet& t, double clip) {
        return fuzzy::defuzzify_centroid_fn(
            [&](double x) { return std::min(clip, t.membership(x)); }, 10001);
    };
    CHECK(clipped(cfg.risk.terms[0].set, 1.0) == Catch::Approx(0.1653591704).margin(1e-9));
    CHECK(clipped(cfg.risk.terms[1].set, 1.0) == Catch::Approx(0.4).margin(1e-12));
    CHECK(clipped(cfg.risk.terms[2].set, 1.0) == Catch::Approx(0.6).margin(1e-12));
    CHECK(clipped(cfg.risk.terms[3].set, 1.0) == Catch::Approx(0.8591165303).margin(1e-9));
    CHECK(clipped(TrapezoidalSet(0.70, 0.85, 1.0, 1.0), 1.0) ==
          Catch::Approx(0.8833592609).margin(1e-9));
    CHECK(clipped(TrapezoidalSet(0.2, 0.5, 0.5, 0.8), 1.0) == Catch::Approx(0.5).margin(1e-12));
    CHECK_THROWS_AS(fuzzy::defuzzify_centroid_fn([](double) { return 0.0; }, 10001),
                    validation_error);
}

TEST_CASE("discrete centroid tracks high-resolution integration") {
    const auto cfg = fuzzy::default_config();
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int it = 0; it < 20; ++it) {
        std::array<double, 4> clips{};
        double top = 0.0;
        for (auto& c : clips) {
            c = u(rng);
            top = std::max(top, c);
        }
        if (top == 0.0) clips[0] = 1.0;
        auto mu = [&](double x) {
            double m = 0.0;
            for (int k = 0; k < 4; ++k) {
                const auto& t = cfg.risk.terms[k].set;
                m = std::max(m, std::min(clips[k], oracles::trap_mu(x, t.a1, t.a2, t.a3, t.a4)));
            }
            return m;
        };
        const double fast = fuzzy::defuzzify_centroid_fn(mu, 10001);
        const double ref = oracles::centroid_integral(mu, 1000000);
        CHECK(fast == Catch::Approx(ref).margin(1e-3));
    }
}

TEST_CASE("classification boundaries and severity tie-break") {
    const auto cfg = fuzzy::default_config();
    // Crossovers sit at 0.30, 0.51, and 0.71; probe just off each edge.
    CHECK(fuzzy::classify_level(0.295, cfg.risk) == 0);
    CHECK(fuzzy::classify_level(0.305, cfg.risk) == 1);
    CHECK(fuzzy::classify_level(0.505, cfg.risk) == 1);
    CHECK(fuzzy::classify_level(0.515, cfg.risk) == 2);
    CHECK(fuzzy::classify_level(0.705, cfg.risk) == 2);
    CHECK(fuzzy::classify_level(0.715, cfg.risk) == 3);
    CHECK(fuzzy::classify_level(1.0, cfg.risk) == 3);
    CHECK_THROWS_AS(fuzzy::classify_level(1.5, cfg.risk), validation_error);

    // An exact membership tie (representable breakpoints) goes to the severer
    // level.
    fuzzy::LinguisticVariable var;
    var.name = "tie";
    var.terms = {{"lo", {0.0, 0.0, 0.25, 0.75}}, {"hi", {0.25, 0.75, 1.0, 1.0}}};
    var.validate();
    CHECK(var.terms[0].set.membership(0.5) == var.terms[1].set.membership(0.5));
    CHECK(fuzzy::classify_level(0.5, var) == 1);
}

TEST_CASE("every rule classifies to its consequent at plateau midpoints") {
    const auto cfg = fuzzy::default_config();
    int matches = 0;
    for (const auto& rule : cfg.rulebase.rules) {
        const auto& lt = cfg.likelihood.terms[rule.likelihood].set;
        const auto& it = cfg.impact.terms[rule.impact].set;
        const auto res = fuzzy::assess_risk((lt.a2 + lt.a3) / 2.0, (it.a2 + it.a3) / 2.0, cfg);
        if (res.level_index == rule.risk) ++matches;
    }
    CHECK(matches == 25);
}

TEST_CASE("published crisp pairs reproduce the published levels") {
    const auto cfg = fuzzy::default_config();
    for (const auto& row : fixtures::published_assessments()) {
        INFO(row.code);
        const auto res = fuzzy::assess_risk(row.likelihood, row.impact, cfg);
        CHECK(res.crisp_risk == Catch::Approx(row.engine_crisp).margin(1e-8));
        CHECK(res.level_index == static_cast<std::size_t>(row.level));
        CHECK(std::abs(res.crisp_risk - row.published_crisp) <= 0.05);
    }
}

TEST_CASE("risk surface is monotone on a 51x51 grid") {
    const auto cfg = fuzzy::default_config();
    std::array<std::array<double, 51>, 51> crisp{};
    for (int i = 0; i <= 50; ++i)
        for (int j = 0; j <= 50; ++j)
            crisp[i][j] = fuzzy::assess_risk(i / 50.0, j / 50.0, cfg).crisp_risk;
    for (int i = 0; i <= 50; ++i)
        for (int j = 1; j <= 50; ++j) {
            REQUIRE(crisp[i][j] - crisp[i][j - 1] >= -1e-9);
            REQUIRE(crisp[j][i] - crisp[j - 1][i] >= -1e-9);
        }
}

TEST_CASE("inference validates its domain") {
    const auto cfg = fuzzy::default_config();
    CHECK_THROWS_AS(fuzzy::infer(-0.01, 0.5, cfg), validation_error);
    CHECK_THROWS_AS(fuzzy::infer(0.5, 1.01, cfg), validation_error);
}

TEST_CASE("config JSON round trip preserves the profile") {
    const auto cfg = fuzzy::default_config();
    const auto j = fuzzy::config_to_json(cfg);
    const auto back = fuzzy::config_from_json(j);
    CHECK(back == cfg);
}

TEST_CASE("config JSON rejects malformed documents") {
    auto j = fuzzy::config_to_json(fuzzy::default_config());
    auto bad = j;
    bad["surprise"] = 1;
    CHECK_THROWS_AS(fuzzy::config_from_json(bad), validation_error);
    bad = j;
    bad["risk"]["terms"][0]["trapezoid"] = {0.5, 0.4, 0.6, 0.7};
    CHECK_THROWS_AS(fuzzy::config_from_json(bad), validation_error);
    bad = j;
    bad["rules"][0]["then_risk"] = 9;
    CHECK_THROWS_AS(fuzzy::config_from_json(bad), validation_error);
    CHECK_THROWS_AS(fuzzy::load_config("/nonexistent/config.json"), io_error);
}
