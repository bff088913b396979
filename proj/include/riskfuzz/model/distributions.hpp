#pragma once

#include <array>
#include <cmath>
#include <fstream>
#include <string>

#include <json.hpp>

#include "riskfuzz/error.hpp"
#include "riskfuzz/model/questionnaire.hpp"
#include "riskfuzz/model/risk_registry.hpp"

namespace riskfuzz::model {

using RatingDistribution = std::array<double, 5>;

// Per-question categorical distributions over Likert ratings 1..5.
struct DistributionSpec {
    std::array<RatingDistribution, criteria_count> criteria{};
    std::array<std::array<RatingDistribution, criteria_count>, risk_count> risks{};

    void validate() const {
        auto check = [](const RatingDistribution& d, const std::string& what) {
            double sum = 0.0;
            for (double p : d) {
                if (!(p >= 0.0)) throw validation_error(what + ": negative probability");
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-9)
                throw validation_error(what + ": probabilities must sum to 1");
        };
        for (std::size_t c = 0; c < criteria_count; ++c)
            check(criteria[c], "distribution for criterion " + criteria_names()[c]);
        for (std::size_t r = 0; r < risk_count; ++r)
            for (std::size_t c = 0; c < criteria_count; ++c)
                check(risks[r][c], "distribution for " + risk_registry()[r].code + "/" +
                                       criteria_names()[c]);
    }
};

// Empirical frequencies with add-one smoothing: (count + 1) / (n + 5).
inline DistributionSpec fit_distributions(const Questionnaire& q) {
    q.validate();
    DistributionSpec spec;
    const double n = static_cast<double>(q.experts.size());
    for (std::size_t c = 0; c < criteria_count; ++c) {
        std::array<int, 5> counts{};
        for (std::size_t e = 0; e < q.experts.size(); ++e)
            ++counts[q.criteria_ratings[e][c] - 1];
        for (int v = 0; v < 5; ++v) spec.criteria[c][v] = (counts[v] + 1.0) / (n + 5.0);
    }
    for (std::size_t r = 0; r < risk_count; ++r)
        for (std::size_t c = 0; c < criteria_count; ++c) {
            std::array<int, 5> counts{};
            for (std::size_t e = 0; e < q.experts.size(); ++e)
                ++counts[q.risk_ratings[e][r][c] - 1];
            for (int v = 0; v < 5; ++v) spec.risks[r][c][v] = (counts[v] + 1.0) / (n + 5.0);
        }
    spec.validate();
    return spec;
}

inline DistributionSpec distribution_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw validation_error("distribution spec: expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "criteria_importance" && it.key() != "risk_ratings")
            throw validation_error("distribution spec: unknown key '" + it.key() + "'");
    for (const char* k : {"criteria_importance", "risk_ratings"})
        if (!j.contains(k))
            throw validation_error(std::string("distribution spec: missing key '") + k + "'");
    auto probs = [](const nlohmann::json& ja, const std::string& where) {
        if (!ja.is_array() || ja.size() != 5)
            throw validation_error(where + ": expected 5 probabilities");
        RatingDistribution d{};
        for (int v = 0; v < 5; ++v) {
            if (!ja[v].is_number()) throw validation_error(where + ": expected numbers");
            d[v] = ja[v].get<double>();
        }
        return d;
    };
    DistributionSpec spec;
    const auto& jc = j["criteria_importance"];
    for (auto it = jc.begin(); it != jc.end(); ++it) criterion_index(it.key());
    for (std::size_t c = 0; c < criteria_count; ++c) {
        const auto& name = criteria_names()[c];
        if (!jc.contains(name))
            throw validation_error("distribution spec: missing criterion " + name);
        spec.criteria[c] = probs(jc[name], "criteria_importance." + name);
    }
    const auto& jr = j["risk_ratings"];
    for (auto it = jr.begin(); it != jr.end(); ++it) risk_index(it.key());
    for (std::size_t r = 0; r < risk_count; ++r) {
        const auto& code = risk_registry()[r].code;
        if (!jr.contains(code))
            throw validation_error("distribution spec: missing risk " + code);
        for (auto it = jr[code].begin(); it != jr[code].end(); ++it) criterion_index(it.key());
        for (std::size_t c = 0; c < criteria_count; ++c) {
            const auto& name = criteria_names()[c];
            if (!jr[code].contains(name))
                throw validation_error("distribution spec: missing " + code + "/" + name);
            spec.risks[r][c] = probs(jr[code][name], "risk_ratings." + code + "." + name);
        }
    }
    spec.validate();
    return spec;
}

inline nlohmann::json distribution_spec_to_json(const DistributionSpec& spec) {
    spec.validate();
    nlohmann::json jc = nlohmann::json::object();
    for (std::size_t c = 0; c < criteria_count; ++c) jc[criteria_names()[c]] = spec.criteria[c];
    nlohmann::json jr = nlohmann::json::object();
    for (std::size_t r = 0; r < risk_count; ++r) {
        nlohmann::json one = nlohmann::json::object();
        for (std::size_t c = 0; c < criteria_count; ++c)
            one[criteria_names()[c]] = spec.risks[r][c];
        jr[risk_registry()[r].code] = one;
    }
    return nlohmann::json{{"criteria_importance", jc}, {"risk_ratings", jr}};
}

inline DistributionSpec load_distribution_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open distribution spec: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("distribution spec " + path + ": " + e.what());
    }
    return distribution_spec_from_json(j);
}

} // namespace riskfuzz::model
