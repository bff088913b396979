#pragma once

#include <array>
#include <string>
#include <vector>

#include "riskfuzz/fuzzy/rule_base.hpp"
#include "riskfuzz/mcdm/decision_matrix.hpp"
#include "riskfuzz/model/questionnaire.hpp"

namespace fixtures {

#ifndef RISKFUZZ_DATA_DIR
#define RISKFUZZ_DATA_DIR "data"
#endif

inline std::string data_path(const std::string& name) {
    return std::string(RISKFUZZ_DATA_DIR) + "/" + name;
}

// Published per-risk assessment: crisp (likelihood, impact) inputs, the
// published crisp risk score, and the published level (0=Low..3=Critical),
// plus the score the default engine is expected to produce for them.
struct PublishedAssessment {
    const char* code;
    double likelihood;
    double impact;
    double published_crisp;
    int level;
    double engine_crisp;
};

inline const std::array<PublishedAssessment, 16>& published_assessments() {
    static const std::array<PublishedAssessment, 16> rows = {{
        {"Rreg1", 0.3929, 0.9371, 0.6000, 2, 0.6},
        {"Rreg2", 0.7321, 0.9720, 0.8644, 3, 0.8591165303},
        {"Rreg3", 0.2000, 0.8252, 0.4000, 1, 0.4},
        {"Rreg4", 0.6071, 0.7552, 0.6000, 2, 0.6},
        {"RT1", 0.8393, 0.9720, 0.8519, 3, 0.8591165303},
        {"RT2", 0.4643, 0.9091, 0.6000, 2, 0.6},
        {"RT3", 0.6786, 0.9441, 0.7883, 3, 0.8076804343},
        {"RT4", 0.2000, 0.8252, 0.4000, 1, 0.4},
        {"RM1", 0.2321, 0.8392, 0.4696, 1, 0.4636584768},
        {"RM2", 1.0000, 1.0000, 0.8667, 3, 0.8591165303},
        {"RM3", 0.4286, 0.8741, 0.5202, 2, 0.5190865882},
        {"RM4", 0.2000, 0.8042, 0.4000, 1, 0.4},
        {"Rrep1", 0.2143, 0.8531, 0.4461, 1, 0.4165265144},
        {"Rrep2", 0.4286, 0.8182, 0.4559, 1, 0.4566843035},
        {"Rrep3", 0.3750, 0.7832, 0.4000, 1, 0.4},
        {"Rrep4", 0.2000, 0.6853, 0.3797, 1, 0.3735800756},
    }};
    return rows;
}

// Published rank columns per method (same risk order as above).
inline const std::vector<std::string>& published_rank_methods() {
    static const std::vector<std::string> methods = {"TOPSIS", "COPRAS",  "BORDA",     "SAW",
                                                     "ELECTRE", "VIKOR",  "MARCOS",    "PROMETHEE",
                                                     "WSM",     "CODAS"};
    return methods;
}

inline const std::array<std::array<int, 10>, 16>& published_rank_table() {
    static const std::array<std::array<int, 10>, 16> table = {{
        {6, 7, 7, 7, 8, 10, 7, 6, 7, 7},       // Rreg1
        {1, 2, 1, 2, 2, 2, 2, 1, 2, 2},        // Rreg2
        {12, 12, 13, 12, 15, 7, 12, 13, 12, 12}, // Rreg3
        {10, 10, 10, 10, 10, 11, 10, 11, 10, 10}, // Rreg4
        {5, 5, 5, 5, 4, 5, 5, 5, 5, 4},        // RT1
        {7, 6, 6, 6, 7, 6, 6, 7, 6, 6},        // RT2
        {3, 3, 3, 3, 3, 1, 3, 3, 3, 3},        // RT3
        {13, 13, 12, 13, 12, 14, 13, 12, 13, 13}, // RT4
        {14, 15, 14, 15, 13, 15, 15, 14, 15, 14}, // RM1
        {2, 1, 2, 1, 1, 4, 1, 2, 1, 1},        // RM2
        {4, 4, 4, 4, 5, 13, 4, 4, 4, 5},       // RM3
        {15, 14, 15, 14, 14, 3, 14, 15, 14, 15}, // RM4
        {11, 11, 11, 11, 11, 8, 11, 10, 11, 11}, // Rrep1
        {8, 8, 8, 8, 6, 12, 9, 8, 8, 9},       // Rrep2
        {9, 9, 9, 9, 9, 9, 9, 9, 9, 8},        // Rrep3
        {16, 16, 16, 16, 16, 16, 16, 16, 16, 16}, // Rrep4
    }};
    return table;
}

inline const std::array<std::string, 16>& risk_codes() {
    static const std::array<std::string, 16> codes = {
        "Rreg1", "Rreg2", "Rreg3", "Rreg4", "RT1", "RT2", "RT3", "RT4",
        "RM1",   "RM2",   "RM3",   "RM4",   "Rrep1", "Rrep2", "Rrep3", "Rrep4"};
    return codes;
}

// Small all-benefit decision matrix exercised against frozen scores.
inline riskfuzz::mcdm::DecisionMatrix d0_matrix() {
    riskfuzz::mcdm::DecisionMatrix d;
    d.alternatives = {"A1", "A2", "A3", "A4"};
    d.criteria = {{"c1", riskfuzz::mcdm::Orientation::Benefit},
                  {"c2", riskfuzz::mcdm::Orientation::Benefit},
                  {"c3", riskfuzz::mcdm::Orientation::Benefit}};
    d.weights = {0.3, 0.4, 0.3};
    d.values = {{7, 9, 9}, {8, 7, 8}, {9, 6, 8}, {6, 7, 8}};
    return d;
}

struct D0Expectation {
    const char* method;
    std::array<double, 4> scores;
    std::array<int, 4> ranks;
};

inline const std::array<D0Expectation, 10>& d0_expectations() {
    static const std::array<D0Expectation, 10> rows = {{
        {"TOPSIS", {0.685246, 0.441429, 0.414492, 0.248196}, {1, 2, 3, 4}},
        {"COPRAS", {0.275956, 0.249279, 0.245486, 0.229279}, {1, 2, 3, 4}},
        {"BORDA", {7, 6, 4, 1}, {1, 2, 3, 4}},
        {"SAW", {0.8, 0.333333, 0.3, 0.133333}, {1, 2, 3, 4}},
        {"ELECTRE", {2, 1, -1, -2}, {1, 2, 3, 4}},
        {"VIKOR", {0.0, 0.6, 0.875, 0.75}, {1, 2, 4, 3}},
        {"MARCOS", {0.712329, 0.644488, 0.636008, 0.593607}, {1, 2, 3, 4}},
        {"PROMETHEE", {0.6, 0.0, -0.2, -0.4}, {1, 2, 3, 4}},
        {"WSM", {0.275956, 0.249279, 0.245486, 0.229279}, {1, 2, 3, 4}},
        {"CODAS", {0.544141, -0.067718, -0.010434, -0.465989}, {1, 3, 2, 4}},
    }};
    return rows;
}

// Questionnaire with every Likert answer equal to `rating` and section 6
// matching the default rule grid.
inline riskfuzz::model::Questionnaire uniform_questionnaire(std::size_t n_experts, int rating) {
    riskfuzz::model::Questionnaire q;
    const auto grid = riskfuzz::fuzzy::default_rule_grid();
    for (std::size_t e = 0; e < n_experts; ++e) {
        q.experts.push_back("E" + std::to_string(e + 1));
        std::array<int, 5> crit{};
        crit.fill(rating);
        q.criteria_ratings.push_back(crit);
        std::array<std::array<int, 5>, 16> risks{};
        for (auto& row : risks) row.fill(rating);
        q.risk_ratings.push_back(risks);
        std::array<riskfuzz::model::RuleAssignment, 25> rules{};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                rules[i * 5 + j] = {i, j, static_cast<int>(grid[i][j])};
        q.rule_assignments.push_back(rules);
    }
    return q;
}

} // namespace fixtures
