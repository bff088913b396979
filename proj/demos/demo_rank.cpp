// Ranks four candidate mitigation projects under three criteria with every
// decision-matrix method, then compares the methods with Kendall's tau.
#include <cstdio>

#include "riskfuzz/analysis/kendall.hpp"
#include "riskfuzz/pipeline.hpp"

int main() {
    using namespace riskfuzz;
    mcdm::DecisionMatrix d;
    d.alternatives = {"Solar retrofit", "Fleet electrification", "Site hardening",
                      "Process redesign"};
    d.criteria = {{"Feasibility", mcdm::Orientation::Benefit},
                  {"RiskReduction", mcdm::Orientation::Benefit},
                  {"Cost", mcdm::Orientation::Cost}};
    d.weights = {0.3, 0.5, 0.2};
    d.values = {{7, 9, 6}, {8, 7, 8}, {9, 6, 4}, {6, 7, 5}};
    d.validate();

    std::vector<mcdm::ScoredRanking> rankings;
    for (const auto& name : matrix_method_names()) rankings.push_back(rank_by_name(name, d));

    std::printf("%-22s", "alternative");
    for (const auto& r : rankings) std::printf(" %9s", r.method.c_str());
    std::printf("\n");
    for (std::size_t i = 0; i < d.alternatives.size(); ++i) {
        std::printf("%-22s", d.alternatives[i].c_str());
        for (const auto& r : rankings) std::printf(" %9d", r.ranks[i]);
        std::printf("\n");
    }

    const auto corr = analysis::correlation_matrix(rankings);
    double min_tau = 1.0;
    std::size_t mi = 0, mj = 0;
    for (std::size_t i = 0; i < corr.methods.size(); ++i)
        for (std::size_t j = i + 1; j < corr.methods.size(); ++j)
            if (corr.tau[i][j] < min_tau) {
                min_tau = corr.tau[i][j];
                mi = i;
                mj = j;
            }
    std::printf("\nleast agreement: %s vs %s (tau = %.4f)\n", corr.methods[mi].c_str(),
                corr.methods[mj].c_str(), min_tau);

    const auto consensus = analysis::consensus_borda(rankings);
    std::printf("consensus ranks:");
    for (std::size_t i = 0; i < d.alternatives.size(); ++i)
        std::printf(" %s=%d", d.alternatives[i].c_str(), consensus.ranks[i]);
    std::printf("\n");
    return 0;
}
