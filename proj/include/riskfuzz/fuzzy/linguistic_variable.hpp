#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "riskfuzz/error.hpp"
#include "riskfuzz/fuzzy/trapezoid.hpp"

namespace riskfuzz::fuzzy {

struct Term {
    std::string label;
    TrapezoidalSet set;

    bool operator==(const Term& o) const { return label == o.label && set == o.set; }
};

// Ordered list of labeled fuzzy sets over [0,1], least to most severe.
struct LinguisticVariable {
    std::string name;
    std::vector<Term> terms;

    void validate() const {
        if (terms.size() < 2)
            throw validation_error("variable '" + name + "': needs at least 2 terms");
        std::unordered_set<std::string> seen;
        for (const auto& t : terms)
            if (!seen.insert(t.label).second)
                throw validation_error("variable '" + name + "': duplicate term label '" + t.label + "'");
        for (std::size_t k = 1; k < terms.size(); ++k)
            if (!(terms[k - 1].set.peak() < terms[k].set.peak()))
                throw validation_error("variable '" + name + "': term peaks must strictly increase ('" +
                                       terms[k - 1].label + "' vs '" + terms[k].label + "')");
        // Coverage: every point of [0,1] must activate some term.
        const int n = 2001;
        for (int i = 0; i < n; ++i) {
            const double x = static_cast<double>(i) / (n - 1);
            bool hit = false;
            for (const auto& t : terms)
                if (t.set.membership(x) > 0.0) { hit = true; break; }
            if (!hit)
                throw validation_error("variable '" + name + "': coverage gap near x=" + std::to_string(x));
        }
    }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t k = 0; k < terms.size(); ++k)
            if (terms[k].label == label) return k;
        throw validation_error("variable '" + name + "': unknown term label '" + label + "'");
    }

    bool operator==(const LinguisticVariable& o) const {
        return name == o.name && terms == o.terms;
    }
};

// One degree per term, aligned with the term list.
inline std::vector<double> fuzzify(double x, const LinguisticVariable& var) {
    if (!(x >= 0.0 && x <= 1.0))
        throw validation_error("fuzzify: input " + std::to_string(x) + " outside [0,1]");
    std::vector<double> out;
    out.reserve(var.terms.size());
    for (const auto& t : var.terms) out.push_back(t.set.membership(x));
    return out;
}

// Index of the term with maximum membership; ties go to the earlier term.
inline std::size_t argmax_term(double x, const LinguisticVariable& var) {
    const auto deg = fuzzify(x, var);
    std::size_t best = 0;
    for (std::size_t k = 1; k < deg.size(); ++k)
        if (deg[k] > deg[best]) best = k;
    return best;
}

} // namespace riskfuzz::fuzzy
