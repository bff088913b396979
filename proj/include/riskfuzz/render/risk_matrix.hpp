#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "riskfuzz/error.hpp"
#include "riskfuzz/fuzzy/engine.hpp"
#include "riskfuzz/model/aggregation.hpp"

namespace riskfuzz::render {

struct MatrixCell {
    int level = 0; // risk term index 0..3
    std::vector<std::string> codes;
};

struct RiskMatrixGrid {
    std::vector<std::string> likelihood_labels; // least to most likely
    std::vector<std::string> impact_labels;
    std::vector<std::string> level_labels;
    std::array<std::array<MatrixCell, 5>, 5> cells{}; // [likelihood][impact]
};

// Cell colors come from the published pattern by default; with
// recompute_colors they derive from the active FIS at the plateau midpoints
// of each cell's terms.  Risks land in the cell of their argmax input terms.
inline RiskMatrixGrid build_risk_matrix(const fuzzy::FisConfig& cfg,
                                        const std::vector<std::string>& codes,
                                        const std::vector<model::FisInputs>& inputs,
                                        bool recompute_colors = false) {
    cfg.validate();
    if (cfg.likelihood.terms.size() != 5 || cfg.impact.terms.size() != 5)
        throw validation_error("risk matrix: config must have 5x5 input terms");
    if (codes.size() != inputs.size())
        throw validation_error("risk matrix: code/input count mismatch");
    RiskMatrixGrid grid;
    for (const auto& t : cfg.likelihood.terms) grid.likelihood_labels.push_back(t.label);
    for (const auto& t : cfg.impact.terms) grid.impact_labels.push_back(t.label);
    for (const auto& t : cfg.risk.terms) grid.level_labels.push_back(t.label);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            if (recompute_colors) {
                const double lx = cfg.likelihood.terms[i].set.peak();
                const double ix = cfg.impact.terms[j].set.peak();
                grid.cells[i][j].level =
                    static_cast<int>(fuzzy::assess_risk(lx, ix, cfg).level_index);
            } else {
                grid.cells[i][j].level = fuzzy::default_rule_grid()[i][j];
            }
        }
    for (std::size_t r = 0; r < codes.size(); ++r) {
        const std::size_t i = fuzzy::argmax_term(inputs[r].likelihood, cfg.likelihood);
        const std::size_t j = fuzzy::argmax_term(inputs[r].impact, cfg.impact);
        grid.cells[i][j].codes.push_back(codes[r]);
    }
    return grid;
}

inline char level_letter(int level) {
    static const char letters[4] = {'G', 'Y', 'O', 'R'};
    if (level < 0 || level > 3) throw validation_error("risk matrix: level outside 0..3");
    return letters[level];
}

// Fixed-layout text table, one row per likelihood level, most likely on top.
inline std::string render_matrix_ascii(const RiskMatrixGrid& grid) {
    auto cell_text = [&](const MatrixCell& cell) {
        std::string s(1, level_letter(cell.level));
        for (std::size_t k = 0; k < cell.codes.size(); ++k)
            s += (k == 0 ? " " : ",") + cell.codes[k];
        return s;
    };
    const std::string corner = "likelihood \\ impact";
    std::size_t left = corner.size();
    for (const auto& l : grid.likelihood_labels) left = std::max(left, l.size());
    std::array<std::size_t, 5> width{};
    for (std::size_t j = 0; j < 5; ++j) {
        width[j] = grid.impact_labels[j].size();
        for (std::size_t i = 0; i < 5; ++i)
            width[j] = std::max(width[j], cell_text(grid.cells[i][j]).size());
    }
    std::ostringstream os;
    auto pad = [](const std::string& s, std::size_t w) {
        std::string out = s;
        out.resize(w, ' ');
        return out;
    };
    os << pad(corner, left);
    for (std::size_t j = 0; j < 5; ++j) os << " | " << pad(grid.impact_labels[j], width[j]);
    os << "\n";
    os << std::string(left + 1, '-');
    for (std::size_t j = 0; j < 5; ++j) os << "+" << std::string(width[j] + 2, '-');
    os << "\n";
    for (int i = 4; i >= 0; --i) {
        os << pad(grid.likelihood_labels[i], left);
        for (std::size_t j = 0; j < 5; ++j)
            os << " | " << pad(cell_text(grid.cells[i][j]), width[j]);
        os << "\n";
    }
    // Trailing spaces carry no information; strip them for stable goldens.
    std::istringstream lines(os.str());
    std::ostringstream out;
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
    return out.str();
}

} // namespace riskfuzz::render
