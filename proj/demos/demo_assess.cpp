// Scores a few likelihood/impact pairs with the default fuzzy inference
// system and shows how a crisp score maps back onto the output terms.
#include <cstdio>

#include "riskfuzz/fuzzy/engine.hpp"

int main() {
    using namespace riskfuzz::fuzzy;
    const FisConfig cfg = default_config();

    const double pairs[][2] = {
        {0.20, 0.40}, {0.39, 0.94}, {0.50, 0.50}, {0.73, 0.97}, {1.00, 1.00},
    };
    std::printf("%-12s %-8s %-10s %s\n", "likelihood", "impact", "crisp", "level");
    for (const auto& p : pairs) {
        const AssessmentResult r = assess_risk(p[0], p[1], cfg);
        std::printf("%-12.2f %-8.2f %-10.4f %s\n", p[0], p[1], r.crisp_risk, r.level.c_str());
    }

    const double x = assess_risk(0.43, 0.87, cfg).crisp_risk;
    std::printf("\ncrisp %.4f memberships:", x);
    const auto mu = fuzzify(x, cfg.risk);
    for (std::size_t k = 0; k < mu.size(); ++k)
        std::printf(" %s=%.3f", cfg.risk.terms[k].label.c_str(), mu[k]);
    std::printf("\n");
    return 0;
}
