// Runs the full questionnaire-to-risk-matrix pipeline on the bundled demo
// questionnaire (or a file passed on the command line).
#include <algorithm>
#include <cstdio>
#include <string>

#include "riskfuzz/riskfuzz.hpp"

int main(int argc, char** argv) {
    using namespace riskfuzz;
    const std::string path = argc > 1 ? argv[1] : "data/demo_questionnaire.json";
    try {
        const PipelineReport rep = run_pipeline(path);

        std::printf("experts: %zu\n\ncriteria weights:\n", rep.experts.size());
        for (std::size_t c = 0; c < rep.criteria.size(); ++c)
            std::printf("  %-14s %.4f\n", rep.criteria[c].c_str(), rep.weights[c]);

        std::printf("\nconsensus ranking (top 5 of %zu):\n", rep.matrix.alternatives.size());
        for (int want = 1; want <= 5; ++want)
            for (std::size_t i = 0; i < rep.matrix.alternatives.size(); ++i)
                if (rep.consensus.ranks[i] == want)
                    std::printf("  %d. %-6s (Borda points %.0f, crisp risk %.4f, %s)\n", want,
                                rep.matrix.alternatives[i].c_str(), rep.consensus.scores[i],
                                rep.assessments[i].crisp_risk, rep.assessments[i].level.c_str());

        double min_tau = 1.0;
        for (std::size_t i = 0; i < rep.correlation.methods.size(); ++i)
            for (std::size_t j = i + 1; j < rep.correlation.methods.size(); ++j)
                min_tau = std::min(min_tau, rep.correlation.tau[i][j]);
        std::printf("\nminimum pairwise Kendall tau across %zu methods: %.4f\n\n",
                    rep.correlation.methods.size(), min_tau);

        std::fputs(render::render_matrix_ascii(rep.grid).c_str(), stdout);
        return 0;
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
