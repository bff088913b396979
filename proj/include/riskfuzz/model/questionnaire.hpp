#pragma once

#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "riskfuzz/error.hpp"
#include "riskfuzz/model/risk_registry.hpp"

namespace riskfuzz::model {

inline const std::array<std::string, 4>& risk_level_labels() {
    static const std::array<std::string, 4> labels = {"Low", "Medium", "High", "Critical"};
    return labels;
}

// Fixed questionnaire vocabulary for section 6 (matches the default config).
inline const std::array<std::string, 5>& likelihood_term_labels() {
    static const std::array<std::string, 5> labels = {"Very unlikely", "Unlikely", "Medium",
                                                      "Likely", "Very likely"};
    return labels;
}

inline const std::array<std::string, 5>& impact_term_labels() {
    static const std::array<std::string, 5> labels = {"Low", "Low-Medium", "Medium",
                                                      "Medium-High", "High"};
    return labels;
}

// Section 6 answer for one (likelihood term, impact term) cell; indices refer
// to the default five-term input label sets and the four risk levels.
struct RuleAssignment {
    int likelihood = 0;
    int impact = 0;
    int level = 0;

    bool operator==(const RuleAssignment& o) const {
        return likelihood == o.likelihood && impact == o.impact && level == o.level;
    }
};

struct Questionnaire {
    std::vector<std::string> experts;
    // Section 1: importance of each criterion, [expert][criterion].
    std::vector<std::array<int, criteria_count>> criteria_ratings;
    // Sections 2-5: [expert][risk][criterion].
    std::vector<std::array<std::array<int, criteria_count>, risk_count>> risk_ratings;
    // Section 6: 25 cells per expert in row-major (likelihood, impact) order.
    std::vector<std::array<RuleAssignment, 25>> rule_assignments;

    void validate() const {
        if (experts.empty()) throw validation_error("questionnaire: no experts");
        std::unordered_set<std::string> seen;
        for (const auto& e : experts)
            if (e.empty() || !seen.insert(e).second)
                throw validation_error("questionnaire: duplicate or empty expert id '" + e + "'");
        if (criteria_ratings.size() != experts.size() || risk_ratings.size() != experts.size() ||
            rule_assignments.size() != experts.size())
            throw validation_error("questionnaire: section sizes do not match expert count");
        for (std::size_t e = 0; e < experts.size(); ++e) {
            for (std::size_t c = 0; c < criteria_count; ++c)
                if (criteria_ratings[e][c] < 1 || criteria_ratings[e][c] > 5)
                    throw validation_error("expert " + experts[e] + ": criterion rating for " +
                                           criteria_names()[c] + " outside 1..5");
            for (std::size_t r = 0; r < risk_count; ++r)
                for (std::size_t c = 0; c < criteria_count; ++c)
                    if (risk_ratings[e][r][c] < 1 || risk_ratings[e][r][c] > 5)
                        throw validation_error("expert " + experts[e] + ": rating for " +
                                               risk_registry()[r].code + "/" + criteria_names()[c] +
                                               " outside 1..5");
            std::array<bool, 25> covered{};
            for (const auto& ra : rule_assignments[e]) {
                if (ra.likelihood < 0 || ra.likelihood > 4 || ra.impact < 0 || ra.impact > 4 ||
                    ra.level < 0 || ra.level > 3)
                    throw validation_error("expert " + experts[e] + ": rule assignment out of range");
                const int cell = ra.likelihood * 5 + ra.impact;
                if (covered[cell])
                    throw validation_error("expert " + experts[e] + ": duplicate rule cell");
                covered[cell] = true;
            }
            for (int cell = 0; cell < 25; ++cell)
                if (!covered[cell])
                    throw validation_error("expert " + experts[e] + ": missing rule cell (" +
                                           std::to_string(cell / 5) + "," +
                                           std::to_string(cell % 5) + ")");
        }
    }

    bool operator==(const Questionnaire& o) const {
        return experts == o.experts && criteria_ratings == o.criteria_ratings &&
               risk_ratings == o.risk_ratings && rule_assignments == o.rule_assignments;
    }
};

} // namespace riskfuzz::model
