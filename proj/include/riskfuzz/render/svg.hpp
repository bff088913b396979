#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "riskfuzz/analysis/kendall.hpp"
#include "riskfuzz/render/risk_matrix.hpp"

namespace riskfuzz::render {

namespace detail {

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

inline std::string format2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace detail

inline const char* level_color(int level) {
    static const char* colors[4] = {"#2e7d32", "#f9a825", "#ef6c00", "#c62828"};
    if (level < 0 || level > 3) throw validation_error("svg: level outside 0..3");
    return colors[level];
}

// Linear blue(-1) -> white(0) -> red(+1) scale.
inline std::string heat_color(double t) {
    t = std::clamp(t, -1.0, 1.0);
    int r = 255, g = 255, b = 255;
    if (t >= 0.0) {
        g = b = static_cast<int>(std::lround(255.0 * (1.0 - t)));
    } else {
        r = g = static_cast<int>(std::lround(255.0 * (1.0 + t)));
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

inline std::string render_matrix_svg(const RiskMatrixGrid& grid) {
    const int x0 = 140, y0 = 40, cw = 128, ch = 96;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
          "viewBox=\"0 0 800 600\">\n";
    for (int row = 0; row < 5; ++row) {
        const int i = 4 - row; // most likely on top
        for (int j = 0; j < 5; ++j) {
            const auto& cell = grid.cells[i][j];
            const int x = x0 + j * cw, y = y0 + row * ch;
            os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw << "\" height=\""
               << ch << "\" fill=\"" << level_color(cell.level)
               << "\" stroke=\"#ffffff\" stroke-width=\"2\"/>\n";
            if (!cell.codes.empty()) {
                std::string joined;
                for (std::size_t k = 0; k < cell.codes.size(); ++k)
                    joined += (k ? ", " : "") + cell.codes[k];
                os << "<text x=\"" << x + cw / 2 << "\" y=\"" << y + ch / 2 + 4
                   << "\" font-family=\"sans-serif\" font-size=\"13\" font-weight=\"bold\" "
                      "fill=\"#ffffff\" text-anchor=\"middle\">"
                   << detail::xml_escape(joined) << "</text>\n";
            }
        }
        os << "<text x=\"" << x0 - 8 << "\" y=\"" << y0 + row * ch + ch / 2 + 4
           << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
           << detail::xml_escape(grid.likelihood_labels[i]) << "</text>\n";
    }
    for (int j = 0; j < 5; ++j)
        os << "<text x=\"" << x0 + j * cw + cw / 2 << "\" y=\"" << y0 + 5 * ch + 18
           << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
           << detail::xml_escape(grid.impact_labels[j]) << "</text>\n";
    os << "<text x=\"" << x0 + 5 * cw / 2 << "\" y=\"" << y0 + 5 * ch + 44
       << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">impact</text>\n";
    os << "<text x=\"24\" y=\"" << y0 + 5 * ch / 2
       << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
          "transform=\"rotate(-90 24 "
       << y0 + 5 * ch / 2 << ")\">likelihood</text>\n";
    os << "</svg>\n";
    return os.str();
}

inline std::string render_heatmap_svg(const analysis::CorrelationMatrix& c) {
    c.validate();
    const int k = static_cast<int>(c.methods.size());
    if (k == 0) throw validation_error("heatmap: empty correlation matrix");
    const int x0 = 150, y0 = 70;
    const int cell = std::min((800 - x0 - 30) / k, (600 - y0 - 30) / k);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
          "viewBox=\"0 0 800 600\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const int x = x0 + j * cell, y = y0 + i * cell;
            os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
               << cell << "\" fill=\"" << heat_color(c.tau[i][j])
               << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
            os << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
               << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">"
               << detail::format2(c.tau[i][j]) << "</text>\n";
        }
        os << "<text x=\"" << x0 - 6 << "\" y=\"" << y0 + i * cell + cell / 2 + 4
           << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
           << detail::xml_escape(c.methods[i]) << "</text>\n";
        os << "<text x=\"" << x0 + i * cell + cell / 2 << "\" y=\"" << y0 - 8
           << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"start\" "
              "transform=\"rotate(-40 "
           << x0 + i * cell + cell / 2 << " " << y0 - 8 << ")\">"
           << detail::xml_escape(c.methods[i]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace riskfuzz::render
