#include "cadm/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cadm {

std::vector<std::vector<std::int64_t>> contingency(std::span<const std::int32_t> pred,
                                                   std::span<const std::int32_t> truth) {
    if (pred.size() != truth.size() || pred.empty())
        throw std::invalid_argument("label vectors must be non-empty and equally sized");
    std::int32_t kp = 0, kt = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (pred[i] < 0 || truth[i] < 0) throw std::invalid_argument("negative label");
        kp = std::max(kp, pred[i]);
        kt = std::max(kt, truth[i]);
    }
    std::vector<std::vector<std::int64_t>> table(kp + 1, std::vector<std::int64_t>(kt + 1, 0));
    for (std::size_t i = 0; i < pred.size(); ++i) ++table[pred[i]][truth[i]];
    return table;
}

// Potentials method over the column-expanded cost matrix; runs in O(n^3).
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
    if (cost.empty() || cost[0].empty()) throw std::invalid_argument("empty cost matrix");
    std::size_t rows = cost.size(), cols = cost[0].size();
    for (const auto& row : cost)
        if (row.size() != cols) throw std::invalid_argument("ragged cost matrix");
    const std::size_t n = std::max(rows, cols);
    const double inf = std::numeric_limits<double>::infinity();

    auto at = [&](std::size_t r, std::size_t c) -> double {
        return (r < rows && c < cols) ? cost[r][c] : 0.0;  // zero padding to square
    };

    // 1-indexed arrays; p[j] is the row matched to column j, p[0] the row
    // currently being placed.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            std::size_t i0 = p[j0], j1 = 0;
            double delta = inf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = at(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> match(n, -1);
    for (std::size_t j = 1; j <= n; ++j)
        if (p[j] != 0) match[p[j] - 1] = static_cast<int>(j - 1);
    return match;
}

double clustering_accuracy(std::span<const std::int32_t> pred, std::span<const std::int32_t> truth) {
    auto table = contingency(pred, truth);
    std::vector<std::vector<double>> cost(table.size(), std::vector<double>(table[0].size()));
    for (std::size_t a = 0; a < table.size(); ++a)
        for (std::size_t b = 0; b < table[a].size(); ++b)
            cost[a][b] = -static_cast<double>(table[a][b]);
    auto match = hungarian(cost);
    std::int64_t hits = 0;
    for (std::size_t a = 0; a < table.size(); ++a) {
        int b = match[a];
        if (b >= 0 && b < static_cast<int>(table[a].size())) hits += table[a][b];
    }
    return static_cast<double>(hits) / static_cast<double>(pred.size());
}

RunSummary summarize(const std::vector<std::pair<double, double>>& ca_and_seconds) {
    RunSummary s;
    s.runs = static_cast<int>(ca_and_seconds.size());
    if (s.runs == 0) return s;
    for (auto [ca, sec] : ca_and_seconds) {
        s.ca_mean += ca;
        s.seconds_mean += sec;
    }
    s.ca_mean /= s.runs;
    s.seconds_mean /= s.runs;
    if (s.runs > 1) {
        double ss = 0.0;
        for (auto [ca, sec] : ca_and_seconds) ss += (ca - s.ca_mean) * (ca - s.ca_mean);
        s.ca_std = std::sqrt(ss / (s.runs - 1));
    }
    return s;
}

}  // namespace cadm
