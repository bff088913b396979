#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "riskfuzz/error.hpp"

namespace riskfuzz::mcdm {

enum class Orientation { Benefit, Cost };

struct Criterion {
    std::string name;
    Orientation orientation = Orientation::Benefit;
};

// Alternatives x criteria performance matrix with per-criterion orientation
// and weights normalized to sum 1.
struct DecisionMatrix {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    std::vector<std::vector<double>> values; // [alternative][criterion]
    std::vector<double> weights;

    std::size_t m() const { return alternatives.size(); }
    std::size_t n() const { return criteria.size(); }

    void validate() const {
        if (alternatives.empty()) throw validation_error("decision matrix: no alternatives");
        if (criteria.empty()) throw validation_error("decision matrix: no criteria");
        if (values.size() != alternatives.size())
            throw validation_error("decision matrix: row count does not match alternatives");
        for (const auto& row : values) {
            if (row.size() != criteria.size())
                throw validation_error("decision matrix: ragged row");
            for (double v : row)
                if (!std::isfinite(v)) throw validation_error("decision matrix: non-finite value");
        }
        if (weights.size() != criteria.size())
            throw validation_error("decision matrix: weight count does not match criteria");
        double sum = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0)) throw validation_error("decision matrix: negative weight");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw validation_error("decision matrix: weights must sum to 1");
    }

    // Column values flipped so that higher is always better.
    double oriented(std::size_t i, std::size_t j) const {
        return criteria[j].orientation == Orientation::Benefit ? values[i][j] : -values[i][j];
    }
};

} // namespace riskfuzz::mcdm
