#pragma once

#include <array>
#include <utility>
#include <vector>

#include "riskfuzz/error.hpp"
#include "riskfuzz/fuzzy/engine.hpp"
#include "riskfuzz/mcdm/decision_matrix.hpp"
#include "riskfuzz/model/questionnaire.hpp"
#include "riskfuzz/model/risk_registry.hpp"
#include "riskfuzz/weighting/topsis_weights.hpp"

namespace riskfuzz::model {

inline weighting::ExpertRatings criteria_importance(const Questionnaire& q) {
    q.validate();
    weighting::ExpertRatings r;
    r.experts = q.experts;
    r.criteria.assign(criteria_names().begin(), criteria_names().end());
    for (const auto& row : q.criteria_ratings)
        r.ratings.emplace_back(row.begin(), row.end());
    return r;
}

inline std::array<std::array<double, criteria_count>, risk_count>
mean_ratings(const Questionnaire& q) {
    q.validate();
    std::array<std::array<double, criteria_count>, risk_count> mean{};
    for (std::size_t r = 0; r < risk_count; ++r)
        for (std::size_t c = 0; c < criteria_count; ++c) {
            double sum = 0.0;
            for (std::size_t e = 0; e < q.experts.size(); ++e)
                sum += q.risk_ratings[e][r][c];
            mean[r][c] = sum / static_cast<double>(q.experts.size());
        }
    return mean;
}

// 16x5 decision matrix of mean ratings.  All criteria are benefit-oriented:
// the questionnaire rates each criterion's contribution to risk severity.
inline mcdm::DecisionMatrix build_decision_matrix(const Questionnaire& q,
                                                  const std::vector<double>& weights) {
    const auto mean = mean_ratings(q);
    mcdm::DecisionMatrix d;
    for (const auto& r : risk_registry()) d.alternatives.push_back(r.code);
    for (const auto& c : criteria_names()) d.criteria.push_back({c, mcdm::Orientation::Benefit});
    d.weights = weights;
    for (std::size_t r = 0; r < risk_count; ++r)
        d.values.emplace_back(mean[r].begin(), mean[r].end());
    d.validate();
    return d;
}

struct FisInputs {
    double likelihood = 0.0;
    double impact = 0.0;
};

// Per-risk crisp FIS inputs: mean Likert rating mapped onto [0.2, 1.0].
inline std::vector<FisInputs> fis_inputs(const Questionnaire& q) {
    const auto mean = mean_ratings(q);
    const std::size_t lik = criterion_index("Likelihood");
    const std::size_t imp = criterion_index("Impact");
    std::vector<FisInputs> out(risk_count);
    for (std::size_t r = 0; r < risk_count; ++r)
        out[r] = {weighting::likert_to_unit(mean[r][lik]),
                  weighting::likert_to_unit(mean[r][imp])};
    return out;
}

// Fuzzy ratings for fuzzy-TOPSIS: each expert's Likert rating selects the
// matching input term's trapezoid; per risk the trapezoids are averaged
// breakpoint-wise across experts (a valid trapezoid, since every term is
// ordered the same way).
inline std::pair<std::vector<fuzzy::TrapezoidalSet>, std::vector<fuzzy::TrapezoidalSet>>
fuzzy_ratings(const Questionnaire& q, const fuzzy::FisConfig& cfg) {
    q.validate();
    if (cfg.likelihood.terms.size() != 5 || cfg.impact.terms.size() != 5)
        throw validation_error("fuzzy_ratings: config must have 5 likelihood and 5 impact terms");
    const std::size_t lik = criterion_index("Likelihood");
    const std::size_t imp = criterion_index("Impact");
    const double n = static_cast<double>(q.experts.size());
    std::vector<fuzzy::TrapezoidalSet> lik_out, imp_out;
    for (std::size_t r = 0; r < risk_count; ++r) {
        double la[4] = {0, 0, 0, 0}, ia[4] = {0, 0, 0, 0};
        for (std::size_t e = 0; e < q.experts.size(); ++e) {
            const auto& lt = cfg.likelihood.terms[q.risk_ratings[e][r][lik] - 1].set;
            const auto& it = cfg.impact.terms[q.risk_ratings[e][r][imp] - 1].set;
            la[0] += lt.a1; la[1] += lt.a2; la[2] += lt.a3; la[3] += lt.a4;
            ia[0] += it.a1; ia[1] += it.a2; ia[2] += it.a3; ia[3] += it.a4;
        }
        lik_out.emplace_back(la[0] / n, la[1] / n, la[2] / n, la[3] / n);
        imp_out.emplace_back(ia[0] / n, ia[1] / n, ia[2] / n, ia[3] / n);
    }
    return {lik_out, imp_out};
}

// Section 6 aggregation: per cell the modal risk level across experts, ties
// broken toward the more severe level.
inline fuzzy::RuleBase majority_rulebase(const Questionnaire& q) {
    q.validate();
    fuzzy::RuleBase rb;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            int votes[4] = {0, 0, 0, 0};
            for (std::size_t e = 0; e < q.experts.size(); ++e)
                for (const auto& ra : q.rule_assignments[e])
                    if (ra.likelihood == i && ra.impact == j) ++votes[ra.level];
            int best = 0;
            for (int k = 1; k < 4; ++k)
                if (votes[k] >= votes[best]) best = k;
            rb.rules.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                static_cast<std::size_t>(best)});
        }
    return rb;
}

} // namespace riskfuzz::model
