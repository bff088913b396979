#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "riskfuzz/error.hpp"
#include "riskfuzz/fuzzy/trapezoid.hpp"
#include "riskfuzz/mcdm/ranking.hpp"

namespace riskfuzz::mcdm {

using FuzzyRating = fuzzy::TrapezoidalSet;

// Vertex-method distance between two trapezoidal fuzzy numbers.
inline double fuzzy_vertex_distance(const FuzzyRating& a, const FuzzyRating& b) {
    const double d1 = a.a1 - b.a1, d2 = a.a2 - b.a2, d3 = a.a3 - b.a3, d4 = a.a4 - b.a4;
    return std::sqrt(0.25 * (d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4));
}

// Fuzzy risk priority: breakpoint-wise product of each alternative's
// likelihood and impact ratings, then TOPSIS closeness against the
// component-wise ideal / anti-ideal fuzzy numbers.
inline ScoredRanking rank_fuzzy_topsis(const std::vector<FuzzyRating>& likelihood_ratings,
                                       const std::vector<FuzzyRating>& impact_ratings) {
    if (likelihood_ratings.empty())
        throw validation_error("fuzzy topsis: empty alternative set");
    if (likelihood_ratings.size() != impact_ratings.size())
        throw validation_error("fuzzy topsis: rating lists cover different alternative sets");
    const std::size_t m = likelihood_ratings.size();
    std::vector<std::array<double, 4>> prod(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& l = likelihood_ratings[i];
        const auto& p = impact_ratings[i];
        prod[i] = {l.a1 * p.a1, l.a2 * p.a2, l.a3 * p.a3, l.a4 * p.a4};
    }
    std::array<double, 4> ideal = prod[0], anti = prod[0];
    for (std::size_t i = 1; i < m; ++i)
        for (int k = 0; k < 4; ++k) {
            ideal[k] = std::max(ideal[k], prod[i][k]);
            anti[k] = std::min(anti[k], prod[i][k]);
        }
    auto vdist = [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
        return std::sqrt(0.25 * s);
    };
    std::vector<double> closeness(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double dp = vdist(prod[i], ideal), dm = vdist(prod[i], anti);
        closeness[i] = (dp + dm == 0.0) ? 0.5 : dm / (dp + dm);
    }
    return ScoredRanking::from_scores("FuzzyTOPSIS", std::move(closeness));
}

} // namespace riskfuzz::mcdm
