#pragma once

#include <cstdint>
#include <string>

#include "riskfuzz/error.hpp"
#include "riskfuzz/fuzzy/rule_base.hpp"
#include "riskfuzz/model/distributions.hpp"
#include "riskfuzz/model/questionnaire.hpp"

namespace riskfuzz::model {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Stream-split draw: the value for (seed, question, expert, counter) never
// depends on how many experts or questions are generated, so growing a data
// set leaves earlier draws untouched.
inline double unit_draw(std::uint64_t seed, const std::string& question, std::uint64_t expert,
                        std::uint64_t counter) {
    std::uint64_t x = splitmix64(splitmix64(splitmix64(splitmix64(seed) ^ fnv1a64(question)) ^
                                            expert) ^
                                 counter);
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

inline int categorical(double u, const RatingDistribution& probs) {
    double cum = 0.0;
    for (int v = 0; v < 5; ++v) {
        cum += probs[v];
        if (u < cum) return v + 1;
    }
    return 5;
}

} // namespace detail

inline std::string synthetic_expert_id(std::size_t index, std::size_t n_experts) {
    std::size_t width = 2;
    for (std::size_t p = 100; p <= n_experts; p *= 10) ++width;
    std::string digits = std::to_string(index + 1);
    while (digits.size() < width) digits.insert(digits.begin(), '0');
    return "E" + digits;
}

// Ratings drawn independently per question from the spec's distributions;
// section 6 replays the default rule grid with per-cell probability 0.1 of
// mutating to an adjacent risk level.
inline Questionnaire generate_synthetic(const DistributionSpec& spec, std::size_t n_experts,
                                        std::uint64_t seed) {
    spec.validate();
    if (n_experts < 1) throw validation_error("generate_synthetic: need at least 1 expert");
    Questionnaire q;
    const auto& grid = fuzzy::default_rule_grid();
    for (std::size_t e = 0; e < n_experts; ++e) {
        q.experts.push_back(synthetic_expert_id(e, n_experts));
        std::array<int, criteria_count> crit{};
        for (std::size_t c = 0; c < criteria_count; ++c)
            crit[c] = detail::categorical(
                detail::unit_draw(seed, "s1/" + criteria_names()[c], e, 1), spec.criteria[c]);
        q.criteria_ratings.push_back(crit);

        std::array<std::array<int, criteria_count>, risk_count> rr{};
        for (std::size_t r = 0; r < risk_count; ++r)
            for (std::size_t c = 0; c < criteria_count; ++c)
                rr[r][c] = detail::categorical(
                    detail::unit_draw(
                        seed, "risk/" + risk_registry()[r].code + "/" + criteria_names()[c], e, 1),
                    spec.risks[r][c]);
        q.risk_ratings.push_back(rr);

        std::array<RuleAssignment, 25> ra{};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                const std::string key =
                    "rules/" + std::to_string(i) + "," + std::to_string(j);
                int level = grid[i][j];
                if (detail::unit_draw(seed, key, e, 1) < 0.1) {
                    const bool down_ok = level > 0, up_ok = level < 3;
                    const double u = detail::unit_draw(seed, key, e, 2);
                    if (down_ok && up_ok)
                        level += (u < 0.5) ? -1 : 1;
                    else if (down_ok)
                        --level;
                    else
                        ++level;
                }
                ra[i * 5 + j] = {i, j, level};
            }
        q.rule_assignments.push_back(ra);
    }
    q.validate();
    return q;
}

} // namespace riskfuzz::model
