#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "riskfuzz/error.hpp"
#include "riskfuzz/mcdm/methods.hpp"
#include "riskfuzz/mcdm/ranking.hpp"

namespace riskfuzz::analysis {

// Tie-corrected Kendall tau-b over two rank vectors.
inline double kendall_tau(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw validation_error("kendall_tau: length mismatch");
    if (a.size() < 2) throw validation_error("kendall_tau: need at least 2 items");
    long long c = 0, d = 0, ta = 0, tb = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const int da = a[i] - a[j], db = b[i] - b[j];
            if (da == 0 && db == 0) continue;
            if (da == 0)
                ++ta;
            else if (db == 0)
                ++tb;
            else if ((da > 0) == (db > 0))
                ++c;
            else
                ++d;
        }
    const double den = std::sqrt(static_cast<double>(c + d + ta) * static_cast<double>(c + d + tb));
    if (den == 0.0) return 0.0; // one vector is fully tied
    return static_cast<double>(c - d) / den;
}

struct CorrelationMatrix {
    std::vector<std::string> methods;
    std::vector<std::vector<double>> tau;

    void validate() const {
        const std::size_t k = methods.size();
        if (tau.size() != k) throw validation_error("correlation matrix: shape mismatch");
        for (std::size_t i = 0; i < k; ++i) {
            if (tau[i].size() != k) throw validation_error("correlation matrix: shape mismatch");
            if (tau[i][i] != 1.0) throw validation_error("correlation matrix: diagonal must be 1");
            for (std::size_t j = 0; j < k; ++j) {
                if (std::abs(tau[i][j] - tau[j][i]) > 1e-12)
                    throw validation_error("correlation matrix: not symmetric");
                if (tau[i][j] < -1.0 || tau[i][j] > 1.0)
                    throw validation_error("correlation matrix: entry outside [-1,1]");
            }
        }
    }
};

inline CorrelationMatrix correlation_matrix(const std::vector<mcdm::ScoredRanking>& rankings) {
    if (rankings.size() < 2)
        throw validation_error("correlation_matrix: need at least 2 rankings");
    const std::size_t k = rankings.size(), m = rankings.front().ranks.size();
    for (const auto& r : rankings)
        if (r.ranks.size() != m)
            throw validation_error("correlation_matrix: rankings cover different alternative sets");
    CorrelationMatrix out;
    out.tau.assign(k, std::vector<double>(k, 1.0));
    for (const auto& r : rankings) out.methods.push_back(r.method);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            out.tau[i][j] = out.tau[j][i] = kendall_tau(rankings[i].ranks, rankings[j].ranks);
    out.validate();
    return out;
}

inline mcdm::ScoredRanking consensus_borda(const std::vector<mcdm::ScoredRanking>& rankings) {
    return mcdm::rank_borda(rankings);
}

} // namespace riskfuzz::analysis
