#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "riskfuzz/error.hpp"

namespace riskfuzz::fuzzy {

// One conjunctive rule: IF likelihood IS term AND impact IS term THEN risk IS term.
// Terms are stored as indices into the owning config's variables.
struct FuzzyRule {
    std::size_t likelihood = 0;
    std::size_t impact = 0;
    std::size_t risk = 0;

    bool operator==(const FuzzyRule& o) const {
        return likelihood == o.likelihood && impact == o.impact && risk == o.risk;
    }
};

struct RuleBase {
    std::vector<FuzzyRule> rules;

    void validate(std::size_t n_lik, std::size_t n_imp, std::size_t n_risk) const {
        if (rules.size() != n_lik * n_imp)
            throw validation_error("rulebase: expected " + std::to_string(n_lik * n_imp) +
                                   " rules, got " + std::to_string(rules.size()));
        std::vector<int> seen(n_lik * n_imp, 0);
        for (const auto& r : rules) {
            if (r.likelihood >= n_lik || r.impact >= n_imp || r.risk >= n_risk)
                throw validation_error("rulebase: rule term index out of range");
            if (++seen[r.likelihood * n_imp + r.impact] > 1)
                throw validation_error("rulebase: duplicate rule for pair (" +
                                       std::to_string(r.likelihood) + "," +
                                       std::to_string(r.impact) + ")");
        }
    }

    std::size_t risk_for(std::size_t lik, std::size_t imp) const {
        for (const auto& r : rules)
            if (r.likelihood == lik && r.impact == imp) return r.risk;
        throw validation_error("rulebase: no rule for pair (" + std::to_string(lik) + "," +
                               std::to_string(imp) + ")");
    }

    bool operator==(const RuleBase& o) const { return rules == o.rules; }
};

// Published 5x5 rule grid: risk level index by [likelihood][impact].
inline const std::array<std::array<int, 5>, 5>& default_rule_grid() {
    static const std::array<std::array<int, 5>, 5> grid = {{
        {{0, 0, 0, 1, 1}},
        {{0, 0, 1, 1, 2}},
        {{0, 0, 1, 2, 2}},
        {{0, 1, 1, 2, 3}},
        {{0, 1, 2, 3, 3}},
    }};
    return grid;
}

inline RuleBase default_rulebase() {
    RuleBase rb;
    const auto& grid = default_rule_grid();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            rb.rules.push_back({i, j, static_cast<std::size_t>(grid[i][j])});
    return rb;
}

} // namespace riskfuzz::fuzzy
