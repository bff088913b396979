#pragma once

#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "riskfuzz/analysis/kendall.hpp"
#include "riskfuzz/error.hpp"
#include "riskfuzz/fuzzy/config_json.hpp"
#include "riskfuzz/fuzzy/engine.hpp"
#include "riskfuzz/mcdm/fuzzy_topsis.hpp"
#include "riskfuzz/mcdm/methods.hpp"
#include "riskfuzz/model/aggregation.hpp"
#include "riskfuzz/model/questionnaire_io.hpp"
#include "riskfuzz/model/risk_registry.hpp"
#include "riskfuzz/render/risk_matrix.hpp"
#include "riskfuzz/weighting/topsis_weights.hpp"

namespace riskfuzz {

// Decision-matrix methods in the order they appear throughout the reports.
inline const std::vector<std::string>& matrix_method_names() {
    static const std::vector<std::string> names = {"TOPSIS", "COPRAS",  "BORDA",     "SAW",
                                                   "ELECTRE", "VIKOR",  "MARCOS",    "PROMETHEE",
                                                   "WSM",     "CODAS"};
    return names;
}

inline std::vector<std::string> all_method_names() {
    auto names = matrix_method_names();
    names.push_back("FuzzyTOPSIS");
    return names;
}

inline mcdm::ScoredRanking rank_by_name(const std::string& name, const mcdm::DecisionMatrix& d) {
    std::string key;
    for (char c : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == "topsis") return mcdm::rank_topsis(d);
    if (key == "copras") return mcdm::rank_copras(d);
    if (key == "borda") return mcdm::rank_borda(d);
    if (key == "saw") return mcdm::rank_saw(d);
    if (key == "electre") return mcdm::rank_electre1(d);
    if (key == "vikor") return mcdm::rank_vikor(d);
    if (key == "marcos") return mcdm::rank_marcos(d);
    if (key == "promethee") return mcdm::rank_promethee2(d);
    if (key == "wsm") return mcdm::rank_wsm(d);
    if (key == "codas") return mcdm::rank_codas(d);
    std::string known;
    for (const auto& n : matrix_method_names()) known += (known.empty() ? "" : ", ") + n;
    throw validation_error("unknown method '" + name + "' (expected one of " + known +
                           ", FuzzyTOPSIS)");
}

struct PipelineReport {
    std::vector<std::string> experts;
    std::vector<std::string> criteria;
    std::vector<double> weights;
    mcdm::DecisionMatrix matrix;
    std::vector<mcdm::ScoredRanking> rankings; // ten matrix methods + FuzzyTOPSIS
    analysis::CorrelationMatrix correlation;
    mcdm::ScoredRanking consensus;
    std::vector<fuzzy::AssessmentResult> assessments; // registry order
    render::RiskMatrixGrid grid;
};

inline PipelineReport run_pipeline(const model::Questionnaire& q,
                                   const fuzzy::FisConfig& cfg = fuzzy::default_config(),
                                   bool recompute_colors = false) {
    q.validate();
    cfg.validate();
    PipelineReport rep;
    rep.experts = q.experts;
    const auto names = model::criteria_names();
    rep.criteria.assign(names.begin(), names.end());
    rep.weights = weighting::derive_weights_topsis(model::criteria_importance(q));
    rep.matrix = model::build_decision_matrix(q, rep.weights);
    for (const auto& name : matrix_method_names())
        rep.rankings.push_back(rank_by_name(name, rep.matrix));
    const auto ratings = model::fuzzy_ratings(q, cfg);
    rep.rankings.push_back(mcdm::rank_fuzzy_topsis(ratings.first, ratings.second));
    rep.correlation = analysis::correlation_matrix(rep.rankings);
    rep.consensus = analysis::consensus_borda(rep.rankings);
    rep.consensus.method = "Consensus";
    const auto inputs = model::fis_inputs(q);
    for (const auto& in : inputs)
        rep.assessments.push_back(fuzzy::assess_risk(in.likelihood, in.impact, cfg));
    rep.grid = render::build_risk_matrix(cfg, rep.matrix.alternatives, inputs, recompute_colors);
    return rep;
}

inline PipelineReport run_pipeline(const std::string& questionnaire_path,
                                   const std::string& config_path = "",
                                   bool recompute_colors = false) {
    const auto q = model::load_questionnaire(questionnaire_path);
    const auto cfg = config_path.empty() ? fuzzy::default_config() : fuzzy::load_config(config_path);
    return run_pipeline(q, cfg, recompute_colors);
}

inline nlohmann::json ranking_json(const mcdm::ScoredRanking& r) {
    return {{"method", r.method}, {"scores", r.scores}, {"ranks", r.ranks}};
}

inline nlohmann::json report_to_json(const PipelineReport& rep) {
    nlohmann::json j;
    j["experts"] = rep.experts;
    j["criteria"] = rep.criteria;
    j["weights"] = {{"criteria", rep.criteria}, {"weights", rep.weights}};
    nlohmann::json risks = nlohmann::json::array();
    for (const auto& d : model::risk_registry())
        risks.push_back({{"code", d.code},
                         {"type", model::risk_type_name(d.risk_type)},
                         {"name", d.name},
                         {"description", d.description}});
    j["risks"] = risks;
    nlohmann::json rankings = nlohmann::json::array();
    for (const auto& r : rep.rankings) rankings.push_back(ranking_json(r));
    j["rankings"] = rankings;
    j["consensus"] = ranking_json(rep.consensus);
    j["correlations"] = {{"methods", rep.correlation.methods}, {"tau", rep.correlation.tau}};
    nlohmann::json assessments = nlohmann::json::array();
    for (std::size_t r = 0; r < rep.assessments.size(); ++r) {
        const auto& a = rep.assessments[r];
        assessments.push_back({{"code", rep.matrix.alternatives[r]},
                               {"likelihood", a.likelihood_x},
                               {"impact", a.impact_x},
                               {"crisp", a.crisp_risk},
                               {"level_index", a.level_index},
                               {"level", a.level}});
    }
    j["assessments"] = assessments;
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& row : rep.grid.cells) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& cell : row)
            jrow.push_back({{"level", cell.level}, {"codes", cell.codes}});
        cells.push_back(jrow);
    }
    j["matrix"] = {{"likelihood_labels", rep.grid.likelihood_labels},
                   {"impact_labels", rep.grid.impact_labels},
                   {"level_labels", rep.grid.level_labels},
                   {"cells", cells}};
    return j;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw validation_error("report schema: " + what);
}

inline void check_string_array(const nlohmann::json& j, const std::string& key) {
    require(j.contains(key) && j[key].is_array(), "missing array '" + key + "'");
    for (const auto& v : j[key]) require(v.is_string(), "'" + key + "' holds a non-string");
}

inline void check_ranking(const nlohmann::json& r, std::size_t n, const std::string& where) {
    require(r.is_object(), where + " is not an object");
    require(r.contains("method") && r["method"].is_string(), where + ": missing method");
    require(r.contains("scores") && r["scores"].is_array() && r["scores"].size() == n,
            where + ": scores length mismatch");
    require(r.contains("ranks") && r["ranks"].is_array() && r["ranks"].size() == n,
            where + ": ranks length mismatch");
    for (const auto& v : r["scores"]) require(v.is_number(), where + ": non-numeric score");
    std::vector<bool> seen(n, false);
    for (const auto& v : r["ranks"]) {
        require(v.is_number_integer(), where + ": non-integer rank");
        const long long rank = v.get<long long>();
        require(rank >= 1 && rank <= static_cast<long long>(n), where + ": rank outside 1..n");
        require(!seen[static_cast<std::size_t>(rank - 1)], where + ": duplicate rank");
        seen[static_cast<std::size_t>(rank - 1)] = true;
    }
}

} // namespace detail

// Structural check mirroring docs/report.schema.json; throws on violations.
inline void validate_report_json(const nlohmann::json& j) {
    using detail::require;
    require(j.is_object(), "root is not an object");
    for (const auto& key : {"experts", "criteria", "weights", "risks", "rankings", "consensus",
                            "correlations", "assessments", "matrix"})
        require(j.contains(key), std::string("missing key '") + key + "'");

    detail::check_string_array(j, "experts");
    detail::check_string_array(j, "criteria");
    require(!j["experts"].empty(), "no experts");

    const auto& w = j["weights"];
    require(w.is_object() && w.contains("criteria") && w.contains("weights"),
            "weights must hold criteria and weights");
    require(w["criteria"] == j["criteria"], "weights criteria mismatch");
    require(w["weights"].is_array() && w["weights"].size() == j["criteria"].size(),
            "weights length mismatch");
    double sum = 0.0;
    for (const auto& v : w["weights"]) {
        require(v.is_number(), "non-numeric weight");
        sum += v.get<double>();
    }
    require(std::abs(sum - 1.0) <= 1e-9, "weights do not sum to 1");

    require(j["risks"].is_array() && !j["risks"].empty(), "risks must be a non-empty array");
    std::vector<std::string> codes;
    for (const auto& r : j["risks"]) {
        require(r.is_object() && r.contains("code") && r["code"].is_string(),
                "risk entry missing code");
        for (const auto& key : {"type", "name", "description"})
            require(r.contains(key) && r[key].is_string(),
                    std::string("risk entry missing ") + key);
        codes.push_back(r["code"].get<std::string>());
    }
    const std::size_t n = codes.size();

    require(j["rankings"].is_array() && !j["rankings"].empty(), "rankings must be non-empty");
    for (const auto& r : j["rankings"]) detail::check_ranking(r, n, "ranking");
    detail::check_ranking(j["consensus"], n, "consensus");

    const auto& c = j["correlations"];
    require(c.is_object() && c.contains("methods") && c.contains("tau"),
            "correlations must hold methods and tau");
    require(c["methods"].is_array() && c["methods"].size() == j["rankings"].size(),
            "correlation methods mismatch");
    require(c["tau"].is_array() && c["tau"].size() == c["methods"].size(),
            "tau row count mismatch");
    for (const auto& row : c["tau"]) {
        require(row.is_array() && row.size() == c["methods"].size(), "tau is not square");
        for (const auto& v : row) {
            require(v.is_number(), "non-numeric tau");
            const double t = v.get<double>();
            require(t >= -1.0 - 1e-12 && t <= 1.0 + 1e-12, "tau outside [-1,1]");
        }
    }

    require(j["assessments"].is_array() && j["assessments"].size() == n,
            "assessments length mismatch");
    for (std::size_t r = 0; r < n; ++r) {
        const auto& a = j["assessments"][r];
        require(a.is_object() && a.contains("code") && a["code"].get<std::string>() == codes[r],
                "assessment codes must follow risk order");
        for (const auto& key : {"likelihood", "impact", "crisp"})
            require(a.contains(key) && a[key].is_number(),
                    std::string("assessment missing ") + key);
        require(a.contains("level_index") && a["level_index"].is_number_integer(),
                "assessment missing level_index");
        require(a.contains("level") && a["level"].is_string(), "assessment missing level");
    }

    const auto& m = j["matrix"];
    require(m.is_object(), "matrix is not an object");
    for (const auto& key : {"likelihood_labels", "impact_labels", "level_labels"})
        detail::check_string_array(m, key);
    require(m["likelihood_labels"].size() == 5 && m["impact_labels"].size() == 5,
            "matrix labels must be 5x5");
    require(m.contains("cells") && m["cells"].is_array() && m["cells"].size() == 5,
            "matrix cells must have 5 rows");
    std::size_t placed = 0;
    for (const auto& row : m["cells"]) {
        require(row.is_array() && row.size() == 5, "matrix cells must have 5 columns");
        for (const auto& cell : row) {
            require(cell.is_object() && cell.contains("level") &&
                        cell["level"].is_number_integer(),
                    "cell missing level");
            const long long level = cell["level"].get<long long>();
            require(level >= 0 && level < static_cast<long long>(m["level_labels"].size()),
                    "cell level outside range");
            require(cell.contains("codes") && cell["codes"].is_array(), "cell missing codes");
            placed += cell["codes"].size();
        }
    }
    require(placed == n, "placed codes do not cover every risk exactly once");

    for (std::size_t r = 0; r < n; ++r) {
        const auto& a = j["assessments"][r];
        const long long li = a["level_index"].get<long long>();
        require(li >= 0 && li < static_cast<long long>(m["level_labels"].size()),
                "assessment level_index outside range");
        require(a["level"].get<std::string>() == m["level_labels"][static_cast<std::size_t>(li)],
                "assessment level label mismatch");
    }
}

} // namespace riskfuzz
