#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "riskfuzz/error.hpp"

namespace riskfuzz::mcdm {

// Equal scores resolve deterministically: the alternative earlier in input
// order receives the lower (better) rank number.
inline std::vector<int> ranks_from_scores(const std::vector<double>& scores,
                                          bool higher_is_better = true) {
    const std::size_t m = scores.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b])
            return higher_is_better ? scores[a] > scores[b] : scores[a] < scores[b];
        return false;
    });
    std::vector<int> ranks(m, 0);
    for (std::size_t pos = 0; pos < m; ++pos) ranks[order[pos]] = static_cast<int>(pos) + 1;
    return ranks;
}

struct ScoredRanking {
    std::string method;
    std::vector<double> scores;
    std::vector<int> ranks;

    static ScoredRanking from_scores(std::string method, std::vector<double> scores,
                                     bool higher_is_better = true) {
        ScoredRanking r;
        r.method = std::move(method);
        r.ranks = ranks_from_scores(scores, higher_is_better);
        r.scores = std::move(scores);
        return r;
    }
};

} // namespace riskfuzz::mcdm
