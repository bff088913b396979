#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "riskfuzz/error.hpp"
#include "riskfuzz/mcdm/decision_matrix.hpp"
#include "riskfuzz/mcdm/ranking.hpp"

namespace riskfuzz::mcdm {

namespace detail {

[[noreturn]] inline void degenerate_column(const DecisionMatrix& d, std::size_t j,
                                           const char* what) {
    throw validation_error("criterion '" + d.criteria[j].name + "': " + what);
}

// Sum normalization with reciprocal transform on cost criteria
// (shared by COPRAS and WSM).
inline std::vector<double> sum_norm_scores(const DecisionMatrix& d) {
    const std::size_t m = d.m(), n = d.n();
    std::vector<double> score(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> col(m);
        for (std::size_t i = 0; i < m; ++i) {
            double v = d.values[i][j];
            if (d.criteria[j].orientation == Orientation::Cost) {
                if (v == 0.0) degenerate_column(d, j, "zero value under reciprocal transform");
                v = 1.0 / v;
            }
            col[i] = v;
        }
        double sum = 0.0;
        for (double v : col) sum += v;
        if (sum == 0.0) degenerate_column(d, j, "zero-sum column during normalization");
        for (std::size_t i = 0; i < m; ++i) score[i] += d.weights[j] * col[i] / sum;
    }
    return score;
}

} // namespace detail

inline ScoredRanking rank_topsis(const DecisionMatrix& d) {
    d.validate();
    const std::size_t m = d.m(), n = d.n();
    std::vector<std::vector<double>> v(m, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        double norm = 0.0;
        for (std::size_t i = 0; i < m; ++i) norm += d.values[i][j] * d.values[i][j];
        norm = std::sqrt(norm);
        if (norm == 0.0) detail::degenerate_column(d, j, "zero-norm column during normalization");
        for (std::size_t i = 0; i < m; ++i) v[i][j] = d.weights[j] * d.values[i][j] / norm;
    }
    std::vector<double> ideal(n), anti(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = v[0][j], hi = v[0][j];
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, v[i][j]);
            hi = std::max(hi, v[i][j]);
        }
        const bool ben = d.criteria[j].orientation == Orientation::Benefit;
        ideal[j] = ben ? hi : lo;
        anti[j] = ben ? lo : hi;
    }
    std::vector<double> closeness(m);
    for (std::size_t i = 0; i < m; ++i) {
        double dp = 0.0, dm = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            dp += (v[i][j] - ideal[j]) * (v[i][j] - ideal[j]);
            dm += (v[i][j] - anti[j]) * (v[i][j] - anti[j]);
        }
        dp = std::sqrt(dp);
        dm = std::sqrt(dm);
        closeness[i] = (dp + dm == 0.0) ? 0.5 : dm / (dp + dm);
    }
    return ScoredRanking::from_scores("TOPSIS", std::move(closeness));
}

inline ScoredRanking rank_copras(const DecisionMatrix& d) {
    d.validate();
    const std::size_t m = d.m(), n = d.n();
    std::vector<double> splus(m, 0.0), sminus(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) sum += d.values[i][j];
        if (sum == 0.0) detail::degenerate_column(d, j, "zero-sum column during normalization");
        for (std::size_t i = 0; i < m; ++i) {
            const double t = d.weights[j] * d.values[i][j] / sum;
            if (d.criteria[j].orientation == Orientation::Benefit)
                splus[i] += t;
            else
                sminus[i] += t;
        }
    }
    bool any_cost = false;
    for (const auto& c : d.criteria)
        if (c.orientation == Orientation::Cost) any_cost = true;
    std::vector<double> q = splus;
    if (any_cost) {
        double total = 0.0, inv = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (sminus[i] == 0.0)
                throw validation_error("copras: zero cost significance for an alternative");
            total += sminus[i];
            inv += 1.0 / sminus[i];
        }
        for (std::size_t i = 0; i < m; ++i) q[i] = splus[i] + total / (sminus[i] * inv);
    }
    return ScoredRanking::from_scores("COPRAS", std::move(q));
}

inline ScoredRanking rank_saw(const DecisionMatrix& d) {
    d.validate();
    const std::size_t m = d.m(), n = d.n();
    std::vector<double> score(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = d.values[0][j], hi = d.values[0][j];
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, d.values[i][j]);
            hi = std::max(hi, d.values[i][j]);
        }
        for (std::size_t i = 0; i < m; ++i) {
            double nv;
            if (hi == lo)
                nv = 1.0;
            else if (d.criteria[j].orientation == Orientation::Benefit)
                nv = (d.values[i][j] - lo) / (hi - lo);
            else
                nv = (hi - d.values[i][j]) / (hi - lo);
            score[i] += d.weights[j] * nv;
        }
    }
    return ScoredRanking::from_scores("SAW", std::move(score));
}

inline ScoredRanking rank_wsm(const DecisionMatrix& d) {
    d.validate();
    auto score = detail::sum_norm_scores(d);
    return ScoredRanking::from_scores("WSM", std::move(score));
}

inline ScoredRanking rank_electre1(const DecisionMatrix& d, double c_threshold = 0.65,
                                   double d_threshold = 0.35) {
    d.validate();
    const std::size_t m = d.m(), n = d.n();
    std::vector<double> range(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = d.oriented(0, j), hi = d.oriented(0, j);
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, d.oriented(i, j));
            hi = std::max(hi, d.oriented(i, j));
        }
        range[j] = hi - lo;
    }
    std::vector<double> net(m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            double c = 0.0, disc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double pa = d.oriented(a, j), pb = d.oriented(b, j);
                if (pa >= pb)
                    c += d.weights[j];
                else if (range[j] > 0.0)
                    disc = std::max(disc, (pb - pa) / range[j]);
            }
            if (c >= c_threshold && disc <= d_threshold) {
                net[a] += 1.0;
                net[b] -= 1.0;
            }
        }
    }
    return ScoredRanking::from_scores("ELECTRE", std::move(net));
}

inline ScoredRanking rank_vikor(const DecisionMatrix& d, double v = 0.5) {
    d.validate();
    const std::size_t m = d.m(), n = d.n();
    std::vector<double> s(m, 0.0), r(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = d.oriented(0, j), hi = d.oriented(0, j);
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, d.oriented(i, j));
            hi = std::max(hi, d.oriented(i, j));
        }
        if (hi == lo) continue; // degenerate span: zero regret
        for (std::size_t i = 0; i < m; ++i) {
            const double t = d.weights[j] * (hi - d.oriented(i, j)) / (hi - lo);
            s[i] += t;
            r[i] = std::max(r[i], t);
        }
    }
    const double s_best = *std::min_element(s.begin(), s.end());
    const double s_worst = *std::max_element(s.begin(), s.end());
    const double r_best = *std::min_element(r.begin(), r.end());
    const double r_worst = *std::max_element(r.begin(), r.end());
    std::vector<double> q(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double qa = (s_worst > s_best) ? (s[i] - s_best) / (s_worst - s_best) : 0.0;
        double qb = (r_worst > r_best) ? (r[i] - r_best) / (r_worst - r_best) : 0.0;
        q[i] = v * qa + (1.0 - v) * qb;
    }
    return ScoredRanking::from_scores("VIKOR", std::move(q), /*higher_is_better=*/false);
}

inline ScoredRanking rank_marcos(const DecisionMatrix& d) {
    d.validate();
    const std::size_t m = d.m(), n = d.n();
    std::vector<double> ai(n), aai(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = d.values[0][j], hi = d.values[0][j];
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, d.values[i][j]);
            hi = std::max(hi, d.values[i][j]);
        }
        const bool ben = d.criteria[j].orientation == Orientation::Benefit;
        ai[j] = ben ? hi : lo;
        aai[j] = ben ? lo : hi;
    }
    auto srow = [&](const std::vector<double>& row) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double nv;
            if (d.criteria[j].orientation == Orientation::Benefit) {
                if (ai[j] == 0.0) detail::degenerate_column(d, j, "zero ideal value");
                nv = row[j] / ai[j];
            } else {
                if (row[j] == 0.0) detail::degenerate_column(d, j, "zero value under ratio transform");
                nv = ai[j] / row[j];
            }
            sum += d.weights[j] * nv;
        }
        return sum;
    };
    const double s_ai = srow(ai), s_aai = srow(aai);
    if (s_ai == 0.0 || s_aai == 0.0)
        throw validation_error("marcos: degenerate ideal/anti-ideal utility");
    std::vector<double> f(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double s = srow(d.values[i]);
        const double kp = s / s_ai, km = s / s_aai;
        const double fp = km / (kp + km), fm = kp / (kp + km);
        f[i] = (kp + km) / (1.0 + (1.0 - fp) / fp + (1.0 - fm) / fm);
    }
    return ScoredRanking::from_scores("MARCOS", std::move(f));
}

inline ScoredRanking rank_promethee2(const DecisionMatrix& d) {
    d.validate();
    const std::size_t m = d.m(), n = d.n();
    std::vector<double> phi(m, 0.0);
    if (m == 1) return ScoredRanking::from_scores("PROMETHEE", std::move(phi));
    std::vector<std::vector<double>> pi(m, std::vector<double>(m, 0.0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (d.oriented(a, j) > d.oriented(b, j)) pi[a][b] += d.weights[j];
        }
    for (std::size_t a = 0; a < m; ++a) {
        double out = 0.0, in = 0.0;
        for (std::size_t b = 0; b < m; ++b) {
            out += pi[a][b];
            in += pi[b][a];
        }
        phi[a] = (out - in) / static_cast<double>(m - 1);
    }
    return ScoredRanking::from_scores("PROMETHEE", std::move(phi));
}

inline ScoredRanking rank_codas(const DecisionMatrix& d, double tau = 0.02) {
    d.validate();
    const std::size_t m = d.m(), n = d.n();
    std::vector<std::vector<double>> r(m, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        double lo = d.values[0][j], hi = d.values[0][j];
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, d.values[i][j]);
            hi = std::max(hi, d.values[i][j]);
        }
        for (std::size_t i = 0; i < m; ++i) {
            double nv;
            if (d.criteria[j].orientation == Orientation::Benefit) {
                if (hi == 0.0) detail::degenerate_column(d, j, "zero maximum during normalization");
                nv = d.values[i][j] / hi;
            } else {
                if (d.values[i][j] == 0.0)
                    detail::degenerate_column(d, j, "zero value under ratio transform");
                nv = lo / d.values[i][j];
            }
            r[i][j] = d.weights[j] * nv;
        }
    }
    std::vector<double> ns(n);
    for (std::size_t j = 0; j < n; ++j) {
        ns[j] = r[0][j];
        for (std::size_t i = 1; i < m; ++i) ns[j] = std::min(ns[j], r[i][j]);
    }
    std::vector<double> e(m, 0.0), t(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[i] += (r[i][j] - ns[j]) * (r[i][j] - ns[j]);
            t[i] += std::abs(r[i][j] - ns[j]);
        }
        e[i] = std::sqrt(e[i]);
    }
    std::vector<double> h(m, 0.0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const double de = e[a] - e[b];
            const double psi = std::abs(de) >= tau ? 1.0 : 0.0;
            h[a] += de + psi * (t[a] - t[b]);
        }
    return ScoredRanking::from_scores("CODAS", std::move(h));
}

// Borda aggregation: score = sum over input rankings of (m - rank).
// Serves both as the standalone method (over per-criterion rankings) and as
// the cross-method consensus aggregator.
inline ScoredRanking rank_borda(const std::vector<ScoredRanking>& rankings) {
    if (rankings.empty()) throw validation_error("borda: no input rankings");
    const std::size_t m = rankings.front().ranks.size();
    if (m == 0) throw validation_error("borda: empty input ranking");
    std::vector<double> points(m, 0.0);
    for (const auto& r : rankings) {
        if (r.ranks.size() != m)
            throw validation_error("borda: rankings cover different alternative counts");
        for (std::size_t i = 0; i < m; ++i)
            points[i] += static_cast<double>(m) - static_cast<double>(r.ranks[i]);
    }
    return ScoredRanking::from_scores("BORDA", std::move(points));
}

inline ScoredRanking rank_borda(const DecisionMatrix& d) {
    d.validate();
    std::vector<ScoredRanking> per_criterion;
    per_criterion.reserve(d.n());
    for (std::size_t j = 0; j < d.n(); ++j) {
        std::vector<double> col(d.m());
        for (std::size_t i = 0; i < d.m(); ++i) col[i] = d.oriented(i, j);
        per_criterion.push_back(ScoredRanking::from_scores(d.criteria[j].name, std::move(col)));
    }
    return rank_borda(per_criterion);
}

} // namespace riskfuzz::mcdm
