#pragma once

// Empirical size scaling: build structures over generated graphs of growing
// order and record edge counts against the analytic bound. Seeds derive from
// a base so that any single row can be regenerated in isolation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "builder.hpp"
#include "graph.hpp"

namespace ftbfs {

struct ScaleConfig {
    std::vector<int> sizes;
    int trials = 3;
    std::uint64_t base_seed = 0;
    GraphModel model = GraphModel::gnp;
    std::optional<double> p;  // gnp edge probability; default 3*ln(n)/n
    int sigma = 1;            // sources are 0..sigma-1, clamped to n
    int k = 2;
    FailureMode mode = FailureMode::edge;
    int threads = 1;
};

struct ScaleRow {
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    long long edges = 0;
    double bound = 0.0;
    double ratio = 0.0;
};

struct ScaleAggregate {
    int n = 0;
    double mean_ratio = 0.0;
    double max_ratio = 0.0;
    long long max_edges = 0;
};

struct ScaleReport {
    ScaleConfig config;
    std::vector<ScaleRow> rows;
    std::vector<ScaleAggregate> aggregates;
};

inline std::uint64_t scale_trial_seed(std::uint64_t base, int n, int trial) {
    return base + static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(trial);
}

inline double scale_default_p(int n) {
    return std::min(1.0, 3.0 * std::log(static_cast<double>(std::max(n, 2))) / n);
}

inline ScaleReport run_scale(const ScaleConfig& cfg) {
    ScaleReport report;
    report.config = cfg;
    for (int n : cfg.sizes) {
        ScaleAggregate agg;
        agg.n = n;
        double sum_ratio = 0.0;
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t seed = scale_trial_seed(cfg.base_seed, n, trial);
            const std::optional<double> p =
                cfg.model == GraphModel::gnp
                    ? std::optional<double>(cfg.p ? *cfg.p : scale_default_p(n))
                    : std::nullopt;
            const Graph g = gen_graph(cfg.model, n, p, seed);
            std::vector<Vertex> sources;
            for (Vertex s = 0; s < std::min(cfg.sigma, n); ++s) sources.push_back(s);
            const FtStructure st = build_ft_mbfs(g, sources, cfg.k, cfg.mode, cfg.threads);
            const SizeReport sr = structure_stats(st);
            ScaleRow row;
            row.n = n;
            row.trial = trial;
            row.seed = seed;
            row.edges = sr.edges;
            row.bound = sr.bound;
            row.ratio = sr.ratio;
            sum_ratio += row.ratio;
            agg.max_ratio = std::max(agg.max_ratio, row.ratio);
            agg.max_edges = std::max(agg.max_edges, row.edges);
            report.rows.push_back(row);
        }
        agg.mean_ratio = cfg.trials > 0 ? sum_ratio / cfg.trials : 0.0;
        report.aggregates.push_back(agg);
    }
    return report;
}

inline std::string scale_csv(const ScaleReport& report) {
    std::ostringstream out;
    out << "n,trial,seed,edges,bound,ratio\n";
    out << std::fixed << std::setprecision(6);
    for (const ScaleRow& r : report.rows)
        out << r.n << ',' << r.trial << ',' << r.seed << ',' << r.edges << ',' << r.bound << ','
            << r.ratio << '\n';
    return out.str();
}

}  // namespace ftbfs
