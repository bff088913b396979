#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "riskfuzz/error.hpp"
#include "riskfuzz/fuzzy/linguistic_variable.hpp"
#include "riskfuzz/fuzzy/rule_base.hpp"

namespace riskfuzz::fuzzy {

struct FisConfig {
    LinguisticVariable likelihood;
    LinguisticVariable impact;
    LinguisticVariable risk;
    RuleBase rulebase;
    int defuzz_resolution = 10001;

    void validate() const {
        likelihood.validate();
        impact.validate();
        risk.validate();
        if (risk.terms.size() != 4)
            throw validation_error("config: risk variable must have exactly 4 terms");
        rulebase.validate(likelihood.terms.size(), impact.terms.size(), risk.terms.size());
        if (defuzz_resolution < 2)
            throw validation_error("config: defuzz_resolution must be >= 2");
    }

    bool operator==(const FisConfig& o) const {
        return likelihood == o.likelihood && impact == o.impact && risk == o.risk &&
               rulebase == o.rulebase && defuzz_resolution == o.defuzz_resolution;
    }
};

// Default profile.  Input partitions tile [0,1] with unit plateaus meeting at
// 0.25/0.45/0.65/0.85 and 0.04-wide transition edges spilling across each
// junction, so max membership is 1 everywhere; output partitions are
// calibrated against the published crisp-value/level table.
inline FisConfig default_config() {
    FisConfig cfg;
    cfg.likelihood.name = "likelihood";
    cfg.likelihood.terms = {
        {"Very unlikely", {0.00, 0.00, 0.25, 0.29}},
        {"Unlikely", {0.21, 0.25, 0.45, 0.49}},
        {"Medium", {0.41, 0.45, 0.65, 0.69}},
        {"Likely", {0.61, 0.65, 0.85, 0.89}},
        {"Very likely", {0.81, 0.85, 1.00, 1.00}},
    };
    cfg.impact.name = "impact";
    cfg.impact.terms = {
        {"Low", {0.00, 0.00, 0.25, 0.29}},
        {"Low-Medium", {0.21, 0.25, 0.45, 0.49}},
        {"Medium", {0.41, 0.45, 0.65, 0.69}},
        {"Medium-High", {0.61, 0.65, 0.85, 0.89}},
        {"High", {0.81, 0.85, 1.00, 1.00}},
    };
    cfg.risk.name = "risk";
    cfg.risk.terms = {
        {"Low", {0.00, 0.00, 0.25, 0.40}},
        {"Medium", {0.20, 0.35, 0.45, 0.60}},
        {"High", {0.45, 0.55, 0.65, 0.75}},
        {"Critical", {0.65, 0.80, 1.00, 1.00}},
    };
    cfg.rulebase = default_rulebase();
    cfg.defuzz_resolution = 10001;
    return cfg;
}

// Aggregated Mamdani output: pointwise max over output terms clipped at their
// rule activation heights.  Self-contained (owns copies of the term shapes).
struct InferenceResult {
    std::vector<double> activation_trace;   // firing strength per rule, rulebase order
    std::vector<double> term_clips;         // clip height per output term
    std::vector<TrapezoidalSet> term_shapes;

    double membership(double x) const {
        double m = 0.0;
        for (std::size_t k = 0; k < term_shapes.size(); ++k)
            m = std::max(m, std::min(term_clips[k], term_shapes[k].membership(x)));
        return m;
    }
};

inline InferenceResult infer(double likelihood_x, double impact_x, const FisConfig& cfg) {
    if (!(likelihood_x >= 0.0 && likelihood_x <= 1.0) || !(impact_x >= 0.0 && impact_x <= 1.0))
        throw validation_error("infer: inputs must lie in [0,1]");
    InferenceResult res;
    res.term_clips.assign(cfg.risk.terms.size(), 0.0);
    res.term_shapes.reserve(cfg.risk.terms.size());
    for (const auto& t : cfg.risk.terms) res.term_shapes.push_back(t.set);
    const auto lik_deg = fuzzify(likelihood_x, cfg.likelihood);
    const auto imp_deg = fuzzify(impact_x, cfg.impact);
    res.activation_trace.reserve(cfg.rulebase.rules.size());
    for (const auto& r : cfg.rulebase.rules) {
        const double w = std::min(lik_deg[r.likelihood], imp_deg[r.impact]);
        res.activation_trace.push_back(w);
        res.term_clips[r.risk] = std::max(res.term_clips[r.risk], w);
    }
    return res;
}

// Discrete centre-of-area over a uniform grid of `resolution` samples.
template <class Membership>
double defuzzify_centroid_fn(const Membership& mu, int resolution) {
    if (resolution < 2) throw validation_error("defuzzify: resolution must be >= 2");
    double num = 0.0, den = 0.0;
    for (int i = 0; i < resolution; ++i) {
        const double x = static_cast<double>(i) / (resolution - 1);
        const double m = mu(x);
        num += m * x;
        den += m;
    }
    if (den == 0.0) throw validation_error("defuzzify: no rule fired (all-zero aggregate)");
    return num / den;
}

inline double defuzzify_centroid(const InferenceResult& agg, int resolution) {
    return defuzzify_centroid_fn([&](double x) { return agg.membership(x); }, resolution);
}

// Label index of the term with max membership; ties break toward severity.
inline std::size_t classify_level(double crisp, const LinguisticVariable& risk_var) {
    if (!(crisp >= 0.0 && crisp <= 1.0))
        throw validation_error("classify_level: value outside [0,1]");
    std::size_t best = 0;
    double best_deg = -1.0;
    for (std::size_t k = 0; k < risk_var.terms.size(); ++k) {
        const double d = risk_var.terms[k].set.membership(crisp);
        if (d >= best_deg) { best_deg = d; best = k; }
    }
    return best;
}

struct AssessmentResult {
    double likelihood_x = 0.0;
    double impact_x = 0.0;
    double crisp_risk = 0.0;
    std::size_t level_index = 0;
    std::string level;
    std::vector<double> activation_trace;
};

inline AssessmentResult assess_risk(double likelihood_x, double impact_x, const FisConfig& cfg) {
    AssessmentResult out;
    out.likelihood_x = likelihood_x;
    out.impact_x = impact_x;
    InferenceResult agg = infer(likelihood_x, impact_x, cfg);
    out.crisp_risk = defuzzify_centroid(agg, cfg.defuzz_resolution);
    out.level_index = classify_level(out.crisp_risk, cfg.risk);
    out.level = cfg.risk.terms[out.level_index].label;
    out.activation_trace = std::move(agg.activation_trace);
    return out;
}

} // namespace riskfuzz::fuzzy
