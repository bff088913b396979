#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "riskfuzz/error.hpp"
#include "riskfuzz/mcdm/decision_matrix.hpp"
#include "riskfuzz/mcdm/ranking.hpp"

namespace riskfuzz::mcdm {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

// CSV body: header `alternative,<crit1>,...`; sidecar JSON declares
// orientations and weights.
inline DecisionMatrix matrix_from_csv(const std::string& csv_text,
                                      const nlohmann::json& sidecar) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line)) throw validation_error("matrix csv: empty document");
    const auto header = detail::split_csv_line(line);
    if (header.size() < 2 || header[0] != "alternative")
        throw validation_error("matrix csv: header must be 'alternative,<criteria...>'");
    DecisionMatrix d;
    for (std::size_t j = 1; j < header.size(); ++j) d.criteria.push_back({header[j]});
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != header.size())
            throw validation_error("matrix csv: row '" + cells[0] + "' has wrong cell count");
        d.alternatives.push_back(cells[0]);
        std::vector<double> row;
        for (std::size_t j = 1; j < cells.size(); ++j) {
            try {
                row.push_back(std::stod(cells[j]));
            } catch (const std::exception&) {
                throw validation_error("matrix csv: bad number '" + cells[j] + "' in row '" +
                                       cells[0] + "'");
            }
        }
        d.values.push_back(std::move(row));
    }
    if (!sidecar.is_object() || !sidecar.contains("criteria") || !sidecar.contains("weights"))
        throw validation_error("matrix sidecar: expected {\"criteria\": [...], \"weights\": [...]}");
    const auto& jc = sidecar["criteria"];
    if (!jc.is_array() || jc.size() != d.criteria.size())
        throw validation_error("matrix sidecar: criteria count mismatch");
    for (std::size_t j = 0; j < d.criteria.size(); ++j) {
        const auto& c = jc[j];
        if (!c.is_object() || !c.contains("name") || !c.contains("orientation"))
            throw validation_error("matrix sidecar: criterion needs name and orientation");
        if (c["name"].get<std::string>() != d.criteria[j].name)
            throw validation_error("matrix sidecar: criterion name mismatch at column " +
                                   std::to_string(j + 1));
        const std::string o = c["orientation"].get<std::string>();
        if (o == "benefit")
            d.criteria[j].orientation = Orientation::Benefit;
        else if (o == "cost")
            d.criteria[j].orientation = Orientation::Cost;
        else
            throw validation_error("matrix sidecar: orientation must be benefit|cost");
    }
    for (const auto& w : sidecar["weights"]) d.weights.push_back(w.get<double>());
    d.validate();
    return d;
}

inline std::string ranking_to_csv(const std::vector<std::string>& alternatives,
                                  const ScoredRanking& r) {
    std::ostringstream os;
    os << "alternative,score,rank\n";
    os.precision(10);
    for (std::size_t i = 0; i < alternatives.size(); ++i)
        os << alternatives[i] << "," << r.scores[i] << "," << r.ranks[i] << "\n";
    return os.str();
}

inline nlohmann::json ranking_to_json(const std::vector<std::string>& alternatives,
                                      const ScoredRanking& r) {
    return nlohmann::json{{"method", r.method},
                          {"alternatives", alternatives},
                          {"scores", r.scores},
                          {"ranks", r.ranks}};
}

} // namespace riskfuzz::mcdm
