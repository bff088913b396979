#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "riskfuzz/mcdm/fuzzy_topsis.hpp"
#include "riskfuzz/mcdm/io.hpp"
#include "riskfuzz/mcdm/methods.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace riskfuzz;
using mcdm::DecisionMatrix;
using mcdm::Orientation;
using mcdm::ScoredRanking;

namespace {

struct MethodUnderTest {
    const char* name;
    ScoredRanking (*run)(const DecisionMatrix&);
    std::vector<double> (*oracle)(const oracles::Problem&);
    bool higher_better;
};

ScoredRanking run_electre(const DecisionMatrix& d) { return mcdm::rank_electre1(d); }
ScoredRanking run_vikor(const DecisionMatrix& d) { return mcdm::rank_vikor(d); }
ScoredRanking run_codas(const DecisionMatrix& d) { return mcdm::rank_codas(d); }
ScoredRanking run_borda(const DecisionMatrix& d) { return mcdm::rank_borda(d); }
std::vector<double> oracle_electre(const oracles::Problem& p) { return oracles::electre(p); }
std::vector<double> oracle_vikor(const oracles::Problem& p) { return oracles::vikor(p); }
std::vector<double> oracle_codas(const oracles::Problem& p) { return oracles::codas(p); }

const std::vector<MethodUnderTest>& methods_under_test() {
    static const std::vector<MethodUnderTest> m = {
        {"TOPSIS", mcdm::rank_topsis, oracles::topsis, true},
        {"COPRAS", mcdm::rank_copras, oracles::copras, true},
        {"BORDA", run_borda, oracles::borda, true},
        {"SAW", mcdm::rank_saw, oracles::saw, true},
        {"ELECTRE", run_electre, oracle_electre, true},
        {"VIKOR", run_vikor, oracle_vikor, false},
        {"MARCOS", mcdm::rank_marcos, oracles::marcos, true},
        {"PROMETHEE", mcdm::rank_promethee2, oracles::promethee, true},
        {"WSM", mcdm::rank_wsm, oracles::wsm, true},
        {"CODAS", run_codas, oracle_codas, true},
    };
    return m;
}

oracles::Problem to_problem(const DecisionMatrix& d) {
    oracles::Problem p;
    p.x = d.values;
    p.w = d.weights;
    for (const auto& c : d.criteria) p.cost.push_back(c.orientation == Orientation::Cost);
    return p;
}

DecisionMatrix random_matrix(std::mt19937_64& rng, std::size_t m = 4, std::size_t n = 3,
                             bool with_costs = true) {
    std::uniform_real_distribution<double> value(1.0, 10.0);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::bernoulli_distribution coin(0.4);
    DecisionMatrix d;
    for (std::size_t i = 0; i < m; ++i) d.alternatives.push_back("A" + std::to_string(i + 1));
    double wsum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const bool cost = with_costs && coin(rng);
        d.criteria.push_back(
            {"c" + std::to_string(j + 1), cost ? Orientation::Cost : Orientation::Benefit});
        d.weights.push_back(unit(rng));
        wsum += d.weights[j];
    }
    for (auto& w : d.weights) w /= wsum;
    d.values.resize(m, std::vector<double>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) d.values[i][j] = value(rng);
    return d;
}

} // namespace

TEST_CASE("ranks_from_scores breaks ties toward earlier alternatives") {
    const auto ranks = mcdm::ranks_from_scores({0.3, 0.7, 0.3, 0.9});
    CHECK(ranks == std::vector<int>{3, 2, 4, 1});
    const auto asc = mcdm::ranks_from_scores({0.3, 0.7, 0.3, 0.9}, false);
    CHECK(asc == std::vector<int>{1, 3, 2, 4});
}

TEST_CASE("fixed matrix reproduces frozen scores and ranks") {
    const auto d = fixtures::d0_matrix();
    for (const auto& exp : fixtures::d0_expectations()) {
        INFO(exp.method);
        ScoredRanking got;
        for (const auto& m : methods_under_test())
            if (std::string(m.name) == exp.method) got = m.run(d);
        REQUIRE(got.method == exp.method);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(got.scores[i] == Catch::Approx(exp.scores[i]).margin(1e-5));
            CHECK(got.ranks[i] == exp.ranks[i]);
        }
    }
}

TEST_CASE("all methods match their reference implementations on random matrices") {
    std::mt19937_64 rng(987654321);
    for (int it = 0; it < 50; ++it) {
        const auto d = random_matrix(rng);
        const auto p = to_problem(d);
        for (const auto& m : methods_under_test()) {
            INFO("method " << m.name << " iteration " << it);
            const auto got = m.run(d);
            const auto want_scores = m.oracle(p);
            const auto want_ranks = oracles::ranks_of(want_scores, m.higher_better);
            REQUIRE(got.scores.size() == want_scores.size());
            for (std::size_t i = 0; i < want_scores.size(); ++i)
                REQUIRE(got.scores[i] == Catch::Approx(want_scores[i]).margin(1e-12));
            REQUIRE(got.ranks == want_ranks);
        }
    }
}

TEST_CASE("dominated alternatives never outrank their dominators") {
    std::mt19937_64 rng(24681012);
    std::uniform_int_distribution<std::size_t> pick(0, 3);
    for (int it = 0; it < 100; ++it) {
        auto d = random_matrix(rng);
        std::size_t win = pick(rng), lose = pick(rng);
        if (win == lose) lose = (lose + 1) % 4;
        for (std::size_t j = 0; j < d.criteria.size(); ++j) {
            const double hi = std::max(d.values[win][j], d.values[lose][j]);
            const double lo = std::min(d.values[win][j], d.values[lose][j]);
            const bool cost = d.criteria[j].orientation == Orientation::Cost;
            d.values[win][j] = cost ? lo : hi + 0.25;
            d.values[lose][j] = cost ? hi + 0.25 : lo;
        }
        for (const auto& m : methods_under_test()) {
            if (std::string(m.name) == "BORDA") continue;
            INFO("method " << m.name << " iteration " << it);
            const auto got = m.run(d);
            REQUIRE(got.ranks[win] < got.ranks[lose]);
        }
    }
}

TEST_CASE("relabeling alternatives permutes ranks consistently") {
    std::mt19937_64 rng(1357911);
    for (int it = 0; it < 20; ++it) {
        const auto d = random_matrix(rng);
        std::vector<std::size_t> perm = {0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        DecisionMatrix shuffled = d;
        for (std::size_t i = 0; i < 4; ++i) {
            shuffled.alternatives[i] = d.alternatives[perm[i]];
            shuffled.values[i] = d.values[perm[i]];
        }
        for (const auto& m : methods_under_test()) {
            INFO("method " << m.name << " iteration " << it);
            const auto base = m.run(d);
            const auto moved = m.run(shuffled);
            for (std::size_t i = 0; i < 4; ++i)
                REQUIRE(moved.scores[i] == Catch::Approx(base.scores[perm[i]]).margin(1e-12));
            // Tied scores break by input order, so ranks only transfer when
            // the scores are pairwise distinct.
            bool distinct = true;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = a + 1; b < 4; ++b)
                    if (std::abs(base.scores[a] - base.scores[b]) <= 1e-9) distinct = false;
            if (distinct)
                for (std::size_t i = 0; i < 4; ++i)
                    REQUIRE(moved.ranks[i] == base.ranks[perm[i]]);
        }
    }
}

TEST_CASE("column rescaling leaves scale-free methods unchanged") {
    std::mt19937_64 rng(11223344);
    for (int it = 0; it < 20; ++it) {
        const auto d = random_matrix(rng);
        DecisionMatrix scaled = d;
        std::uniform_real_distribution<double> lambda(0.1, 7.0);
        for (std::size_t j = 0; j < d.criteria.size(); ++j) {
            const double f = lambda(rng);
            for (std::size_t i = 0; i < 4; ++i) scaled.values[i][j] = d.values[i][j] * f;
        }
        CHECK(mcdm::rank_topsis(scaled).ranks == mcdm::rank_topsis(d).ranks);
        CHECK(mcdm::rank_saw(scaled).ranks == mcdm::rank_saw(d).ranks);
        CHECK(mcdm::rank_promethee2(scaled).ranks == mcdm::rank_promethee2(d).ranks);
    }
}

TEST_CASE("scores stay inside their documented ranges") {
    std::mt19937_64 rng(55667788);
    for (int it = 0; it < 30; ++it) {
        const auto d = random_matrix(rng);
        for (double s : mcdm::rank_topsis(d).scores) {
            CHECK(s >= 0.0);
            CHECK(s <= 1.0);
        }
        for (double s : mcdm::rank_vikor(d).scores) {
            CHECK(s >= 0.0);
            CHECK(s <= 1.0);
        }
        for (double s : mcdm::rank_promethee2(d).scores) {
            CHECK(s >= -1.0);
            CHECK(s <= 1.0);
        }
    }
}

TEST_CASE("an all-equal matrix yields input-order ranks everywhere") {
    DecisionMatrix d = fixtures::d0_matrix();
    for (auto& row : d.values) row = {5.0, 5.0, 5.0};
    const std::vector<int> expect = {1, 2, 3, 4};
    for (const auto& m : methods_under_test()) {
        INFO(m.name);
        CHECK(m.run(d).ranks == expect);
    }
}

TEST_CASE("degenerate columns raise errors that name the criterion") {
    DecisionMatrix d = fixtures::d0_matrix();
    for (auto& row : d.values) row[1] = 0.0;
    CHECK_THROWS_WITH(mcdm::rank_topsis(d), Catch::Matchers::ContainsSubstring("c2"));
    DecisionMatrix cost = fixtures::d0_matrix();
    cost.criteria[0].orientation = Orientation::Cost;
    cost.values[2][0] = 0.0;
    CHECK_THROWS_AS(mcdm::rank_wsm(cost), validation_error);
}

TEST_CASE("decision matrix validation") {
    DecisionMatrix d = fixtures::d0_matrix();
    CHECK_NOTHROW(d.validate());
    d.weights = {0.5, 0.4, 0.3};
    CHECK_THROWS_AS(d.validate(), validation_error);
    d = fixtures::d0_matrix();
    d.values[1].pop_back();
    CHECK_THROWS_AS(d.validate(), validation_error);
    d = fixtures::d0_matrix();
    d.weights[0] = -0.1;
    d.weights[1] = 0.8;
    CHECK_THROWS_AS(d.validate(), validation_error);
}

TEST_CASE("consensus over rankings follows the points formula") {
    std::vector<ScoredRanking> rankings;
    rankings.push_back(ScoredRanking::from_scores("m1", {0.9, 0.5, 0.1}));
    rankings.push_back(ScoredRanking::from_scores("m2", {0.2, 0.9, 0.4}));
    rankings.push_back(ScoredRanking::from_scores("m3", {0.9, 0.2, 0.5}));
    const auto consensus = mcdm::rank_borda(rankings);
    // ranks: (1,2,3), (3,1,2), (1,3,2) -> points (2+0+2, 1+2+0, 0+1+1)
    CHECK(consensus.scores == std::vector<double>{4, 3, 2});
    CHECK(consensus.ranks == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(mcdm::rank_borda(std::vector<ScoredRanking>{}), validation_error);
}

TEST_CASE("fuzzy TOPSIS matches the worked example") {
    using mcdm::FuzzyRating;
    const std::vector<FuzzyRating> lik = {{0.1, 0.2, 0.9, 1.0}, {0.4, 0.45, 0.5, 0.55},
                                          {0.2, 0.3, 0.4, 0.5}};
    const std::vector<FuzzyRating> imp = {{0.5, 0.55, 0.6, 0.65}, {0.4, 0.45, 0.5, 0.55},
                                          {0.6, 0.7, 0.8, 0.9}};
    const auto r = mcdm::rank_fuzzy_topsis(lik, imp);
    CHECK(r.method == "FuzzyTOPSIS");
    CHECK(r.scores[0] == Catch::Approx(0.7527560033).margin(1e-9));
    CHECK(r.scores[1] == Catch::Approx(0.2409857844).margin(1e-9));
    CHECK(r.scores[2] == Catch::Approx(0.4045888354).margin(1e-9));
    CHECK(r.ranks == std::vector<int>{1, 3, 2});
}

TEST_CASE("fuzzy TOPSIS agrees with its reference implementation") {
    std::mt19937_64 rng(31415926);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto random_trap = [&]() {
        std::array<double, 4> a = {u(rng), u(rng), u(rng), u(rng)};
        std::sort(a.begin(), a.end());
        return a;
    };
    for (int it = 0; it < 50; ++it) {
        std::vector<oracles::Trap> lik, imp;
        std::vector<mcdm::FuzzyRating> flik, fimp;
        for (int i = 0; i < 4; ++i) {
            const auto a = random_trap(), b = random_trap();
            lik.push_back(a);
            imp.push_back(b);
            flik.push_back({a[0], a[1], a[2], a[3]});
            fimp.push_back({b[0], b[1], b[2], b[3]});
        }
        const auto got = mcdm::rank_fuzzy_topsis(flik, fimp);
        const auto want = oracles::fuzzy_topsis(lik, imp);
        for (std::size_t i = 0; i < want.size(); ++i)
            REQUIRE(got.scores[i] == Catch::Approx(want[i]).margin(1e-12));
        REQUIRE(got.ranks == oracles::ranks_of(want));
    }
}

TEST_CASE("fuzzy TOPSIS edge cases") {
    using mcdm::FuzzyRating;
    const std::vector<FuzzyRating> one_l = {{0.2, 0.3, 0.4, 0.5}};
    const std::vector<FuzzyRating> one_i = {{0.1, 0.2, 0.3, 0.4}};
    const auto r = mcdm::rank_fuzzy_topsis(one_l, one_i);
    CHECK(r.scores == std::vector<double>{0.5});
    CHECK(r.ranks == std::vector<int>{1});
    CHECK_THROWS_AS(mcdm::rank_fuzzy_topsis({}, {}), validation_error);
    CHECK_THROWS_AS(mcdm::rank_fuzzy_topsis(one_l, {}), validation_error);
}

TEST_CASE("decision matrix CSV loading round trips") {
    const std::string csv = "alternative,c1,c2,c3\nA1,7,9,9\nA2,8,7,8\nA3,9,6,8\nA4,6,7,8\n";
    nlohmann::json sidecar = {
        {"criteria",
         {{{"name", "c1"}, {"orientation", "benefit"}},
          {{"name", "c2"}, {"orientation", "benefit"}},
          {{"name", "c3"}, {"orientation", "benefit"}}}},
        {"weights", {0.3, 0.4, 0.3}}};
    const auto d = mcdm::matrix_from_csv(csv, sidecar);
    const auto ref = fixtures::d0_matrix();
    CHECK(d.alternatives == ref.alternatives);
    CHECK(d.values == ref.values);
    CHECK(d.weights == ref.weights);

    const auto r = mcdm::rank_topsis(d);
    const auto text = mcdm::ranking_to_csv(d.alternatives, r);
    CHECK(text.rfind("alternative,score,rank\nA1,", 0) == 0);
    const auto j = mcdm::ranking_to_json(d.alternatives, r);
    CHECK(j["method"] == "TOPSIS");
    CHECK(j["ranks"][0] == 1);

    CHECK_THROWS_AS(mcdm::matrix_from_csv("alternative,c1\nA1,notanumber\n", sidecar),
                    validation_error);
    CHECK_THROWS_AS(mcdm::matrix_from_csv("", sidecar), validation_error);
}
