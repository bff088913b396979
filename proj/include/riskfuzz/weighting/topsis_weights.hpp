#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "riskfuzz/error.hpp"
#include "riskfuzz/mcdm/decision_matrix.hpp"
#include "riskfuzz/mcdm/methods.hpp"

namespace riskfuzz::weighting {

inline double likert_to_unit(double v) {
    if (!(v >= 1.0 && v <= 5.0))
        throw validation_error("likert_to_unit: value " + std::to_string(v) + " outside [1,5]");
    return v / 5.0;
}

struct ExpertRatings {
    std::vector<std::string> experts;
    std::vector<std::string> criteria;
    std::vector<std::vector<int>> ratings; // [expert][criterion], 1..5

    void validate() const {
        if (experts.empty()) throw validation_error("expert ratings: no experts");
        if (criteria.empty()) throw validation_error("expert ratings: no criteria");
        if (ratings.size() != experts.size())
            throw validation_error("expert ratings: row count does not match experts");
        for (std::size_t e = 0; e < ratings.size(); ++e) {
            if (ratings[e].size() != criteria.size())
                throw validation_error("expert ratings: ragged row for expert " + experts[e]);
            for (int v : ratings[e])
                if (v < 1 || v > 5)
                    throw validation_error("expert ratings: expert " + experts[e] +
                                           ": rating " + std::to_string(v) + " outside 1..5");
        }
    }
};

// TOPSIS-derived weights: criteria act as alternatives, experts as equally
// weighted benefit criteria; weight = closeness / sum(closeness), then any
// weight below 0.005 is floored to exactly 0.005 and the rest renormalized.
inline std::vector<double> derive_weights_topsis(const ExpertRatings& r) {
    r.validate();
    const std::size_t n_crit = r.criteria.size(), n_exp = r.experts.size();
    mcdm::DecisionMatrix d;
    d.alternatives = r.criteria;
    for (std::size_t e = 0; e < n_exp; ++e)
        d.criteria.push_back({r.experts[e], mcdm::Orientation::Benefit});
    d.weights.assign(n_exp, 1.0 / static_cast<double>(n_exp));
    d.values.resize(n_crit, std::vector<double>(n_exp));
    for (std::size_t c = 0; c < n_crit; ++c)
        for (std::size_t e = 0; e < n_exp; ++e)
            d.values[c][e] = likert_to_unit(r.ratings[e][c]);
    const auto closeness = mcdm::rank_topsis(d).scores;
    double sum = 0.0;
    for (double c : closeness) sum += c;
    std::vector<double> w(n_crit);
    if (sum == 0.0) {
        w.assign(n_crit, 1.0 / static_cast<double>(n_crit));
        return w;
    }
    for (std::size_t c = 0; c < n_crit; ++c) w[c] = closeness[c] / sum;

    const double floor = 0.005;
    std::vector<bool> floored(n_crit, false);
    for (;;) {
        bool changed = false;
        std::size_t n_floored = 0;
        for (std::size_t c = 0; c < n_crit; ++c) {
            if (!floored[c] && w[c] < floor) {
                floored[c] = true;
                changed = true;
            }
            if (floored[c]) ++n_floored;
        }
        if (n_floored == n_crit) {
            w.assign(n_crit, 1.0 / static_cast<double>(n_crit));
            return w;
        }
        double rest = 0.0;
        for (std::size_t c = 0; c < n_crit; ++c)
            if (!floored[c]) rest += w[c];
        const double target = 1.0 - floor * static_cast<double>(n_floored);
        for (std::size_t c = 0; c < n_crit; ++c)
            w[c] = floored[c] ? floor : w[c] * target / rest;
        if (!changed) break;
    }
    return w;
}

} // namespace riskfuzz::weighting
