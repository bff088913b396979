#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riskfuzz/riskfuzz.hpp"

namespace {

using namespace riskfuzz;

struct GlobalOptions {
    std::string config_path;
    std::string format = "csv";
    bool quiet = false;
    bool recompute_colors = false;
};

fuzzy::FisConfig active_config(const GlobalOptions& g) {
    return g.config_path.empty() ? fuzzy::default_config() : fuzzy::load_config(g.config_path);
}

void note(const GlobalOptions& g, const std::string& msg) {
    if (!g.quiet) std::cerr << msg << "\n";
}

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_weights(const GlobalOptions& g, const std::string& path) {
    const auto q = model::load_questionnaire(path);
    const auto w = weighting::derive_weights_topsis(model::criteria_importance(q));
    const auto names = model::criteria_names();
    if (g.format == "json") {
        print_json({{"criteria", std::vector<std::string>(names.begin(), names.end())},
                    {"weights", w}});
    } else {
        std::cout << "criterion,weight\n";
        for (std::size_t c = 0; c < w.size(); ++c)
            std::cout << names[c] << "," << csv_number(w[c]) << "\n";
    }
    return 0;
}

std::vector<mcdm::ScoredRanking> all_rankings(const model::Questionnaire& q,
                                              const fuzzy::FisConfig& cfg,
                                              const mcdm::DecisionMatrix& d) {
    std::vector<mcdm::ScoredRanking> out;
    for (const auto& name : matrix_method_names()) out.push_back(rank_by_name(name, d));
    const auto ratings = model::fuzzy_ratings(q, cfg);
    out.push_back(mcdm::rank_fuzzy_topsis(ratings.first, ratings.second));
    return out;
}

int cmd_rank(const GlobalOptions& g, const std::string& path, std::string method) {
    const auto q = model::load_questionnaire(path);
    const auto cfg = active_config(g);
    const auto w = weighting::derive_weights_topsis(model::criteria_importance(q));
    const auto d = model::build_decision_matrix(q, w);
    std::string key;
    for (char c : method) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == "all") {
        const auto rankings = all_rankings(q, cfg, d);
        if (g.format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rankings) j.push_back(mcdm::ranking_to_json(d.alternatives, r));
            print_json(j);
        } else {
            std::cout << "alternative";
            for (const auto& r : rankings) std::cout << "," << r.method;
            std::cout << "\n";
            for (std::size_t i = 0; i < d.alternatives.size(); ++i) {
                std::cout << d.alternatives[i];
                for (const auto& r : rankings) std::cout << "," << r.ranks[i];
                std::cout << "\n";
            }
        }
        return 0;
    }
    mcdm::ScoredRanking r;
    if (key == "fuzzytopsis") {
        const auto ratings = model::fuzzy_ratings(q, cfg);
        r = mcdm::rank_fuzzy_topsis(ratings.first, ratings.second);
    } else {
        r = rank_by_name(method, d);
    }
    if (g.format == "json")
        print_json(mcdm::ranking_to_json(d.alternatives, r));
    else
        std::cout << mcdm::ranking_to_csv(d.alternatives, r);
    return 0;
}

int cmd_compare(const GlobalOptions& g, const std::string& path) {
    const auto q = model::load_questionnaire(path);
    const auto cfg = active_config(g);
    const auto w = weighting::derive_weights_topsis(model::criteria_importance(q));
    const auto d = model::build_decision_matrix(q, w);
    const auto rankings = all_rankings(q, cfg, d);
    const auto corr = analysis::correlation_matrix(rankings);
    auto consensus = analysis::consensus_borda(rankings);
    consensus.method = "Consensus";
    if (g.format == "json") {
        print_json({{"correlations", {{"methods", corr.methods}, {"tau", corr.tau}}},
                    {"consensus", mcdm::ranking_to_json(d.alternatives, consensus)}});
        return 0;
    }
    std::cout << "method";
    for (const auto& m : corr.methods) std::cout << "," << m;
    std::cout << "\n";
    for (std::size_t i = 0; i < corr.methods.size(); ++i) {
        std::cout << corr.methods[i];
        for (double t : corr.tau[i]) std::cout << "," << csv_number(t);
        std::cout << "\n";
    }
    std::cout << "\nalternative,consensus_points,consensus_rank\n";
    for (std::size_t i = 0; i < d.alternatives.size(); ++i)
        std::cout << d.alternatives[i] << "," << csv_number(consensus.scores[i]) << ","
                  << consensus.ranks[i] << "\n";
    return 0;
}

int cmd_assess(const GlobalOptions& g, const std::string& path) {
    const auto q = model::load_questionnaire(path);
    const auto cfg = active_config(g);
    const auto inputs = model::fis_inputs(q);
    const auto& registry = model::risk_registry();
    std::vector<fuzzy::AssessmentResult> results;
    for (const auto& in : inputs)
        results.push_back(fuzzy::assess_risk(in.likelihood, in.impact, cfg));
    std::vector<std::size_t> order(results.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return results[a].crisp_risk > results[b].crisp_risk;
    });
    if (g.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (std::size_t k : order)
            j.push_back({{"code", registry[k].code},
                         {"likelihood", results[k].likelihood_x},
                         {"impact", results[k].impact_x},
                         {"crisp", results[k].crisp_risk},
                         {"level_index", results[k].level_index},
                         {"level", results[k].level}});
        print_json(j);
    } else {
        std::cout << "code,likelihood,impact,crisp,level\n";
        for (std::size_t k : order)
            std::cout << registry[k].code << "," << csv_number(results[k].likelihood_x) << ","
                      << csv_number(results[k].impact_x) << ","
                      << csv_number(results[k].crisp_risk) << "," << results[k].level << "\n";
    }
    return 0;
}

render::RiskMatrixGrid grid_for(const GlobalOptions& g, const model::Questionnaire& q,
                                const fuzzy::FisConfig& cfg) {
    std::vector<std::string> codes;
    for (const auto& d : model::risk_registry()) codes.push_back(d.code);
    return render::build_risk_matrix(cfg, codes, model::fis_inputs(q), g.recompute_colors);
}

int cmd_matrix(const GlobalOptions& g, const std::string& path, const std::string& svg_path) {
    const auto q = model::load_questionnaire(path);
    const auto cfg = active_config(g);
    const auto grid = grid_for(g, q, cfg);
    if (g.format == "json") {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& row : grid.cells) {
            nlohmann::json jrow = nlohmann::json::array();
            for (const auto& cell : row)
                jrow.push_back({{"level", cell.level}, {"codes", cell.codes}});
            cells.push_back(jrow);
        }
        print_json({{"likelihood_labels", grid.likelihood_labels},
                    {"impact_labels", grid.impact_labels},
                    {"level_labels", grid.level_labels},
                    {"cells", cells}});
    } else {
        std::cout << render::render_matrix_ascii(grid);
    }
    if (!svg_path.empty()) {
        model::write_text_file(svg_path, render::render_matrix_svg(grid));
        note(g, "wrote " + svg_path);
    }
    return 0;
}

int cmd_generate(const std::string& spec_path, std::size_t experts, std::uint64_t seed) {
    const auto spec = model::load_distribution_spec(spec_path);
    const auto q = model::generate_synthetic(spec, experts, seed);
    print_json(model::questionnaire_to_json(q));
    return 0;
}

int cmd_report(const GlobalOptions& g, const std::string& path, const std::string& json_path) {
    const auto q = model::load_questionnaire(path);
    const auto cfg = active_config(g);
    const auto rep = run_pipeline(q, cfg, g.recompute_colors);
    const auto j = report_to_json(rep);
    validate_report_json(j);
    model::write_text_file(json_path, j.dump(2) + "\n");
    std::cout << render::render_matrix_ascii(rep.grid);
    note(g, "wrote " + json_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOptions g;
    CLI::App app{"Climate transition risk analysis: questionnaire-driven criteria weighting, "
                 "multi-method risk ranking, fuzzy inference scoring, and risk-matrix rendering"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", g.config_path, "FIS configuration JSON file")
        ->envname("RISKFUZZ_CONFIG");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_flag("--quiet", g.quiet, "Suppress status messages");
    app.add_flag("--recompute-colors", g.recompute_colors,
                 "Derive matrix cell colors from the active FIS instead of the published layout");

    std::string q_weights, q_rank, q_compare, q_assess, q_matrix, q_report;
    std::string method = "all", svg_path, spec_path, json_path;
    std::size_t experts = 0;
    std::uint64_t seed = 0;

    auto* weights = app.add_subcommand("weights", "Derive criteria weights from a questionnaire");
    weights->add_option("questionnaire", q_weights, "Questionnaire file (JSON or CSV)")
        ->required();

    auto* rank = app.add_subcommand("rank", "Rank risks with one or all methods");
    rank->add_option("questionnaire", q_rank, "Questionnaire file (JSON or CSV)")->required();
    rank->add_option("--method", method, "Method name or 'all'")->capture_default_str();

    auto* compare = app.add_subcommand("compare", "Kendall correlation matrix and consensus");
    compare->add_option("questionnaire", q_compare, "Questionnaire file (JSON or CSV)")
        ->required();

    auto* assess = app.add_subcommand("assess", "Crisp fuzzy risk scores per risk");
    assess->add_option("questionnaire", q_assess, "Questionnaire file (JSON or CSV)")->required();

    auto* matrix = app.add_subcommand("matrix", "Render the 5x5 risk matrix");
    matrix->add_option("questionnaire", q_matrix, "Questionnaire file (JSON or CSV)")->required();
    matrix->add_option("--svg", svg_path, "Also write an SVG rendering to this path");

    auto* generate = app.add_subcommand("generate", "Generate a synthetic questionnaire");
    generate->add_option("--spec", spec_path, "Distribution spec JSON")->required();
    generate->add_option("--experts", experts, "Number of experts")->required();
    generate->add_option("--seed", seed, "RNG seed")->required();

    auto* report = app.add_subcommand("report", "Full pipeline report");
    report->add_option("questionnaire", q_report, "Questionnaire file (JSON or CSV)")->required();
    report->add_option("--json", json_path, "Write the report JSON to this path")->required();

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(weights)) return cmd_weights(g, q_weights);
        if (app.got_subcommand(rank)) return cmd_rank(g, q_rank, method);
        if (app.got_subcommand(compare)) return cmd_compare(g, q_compare);
        if (app.got_subcommand(assess)) return cmd_assess(g, q_assess);
        if (app.got_subcommand(matrix)) return cmd_matrix(g, q_matrix, svg_path);
        if (app.got_subcommand(generate)) return cmd_generate(spec_path, experts, seed);
        if (app.got_subcommand(report)) return cmd_report(g, q_report, json_path);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
