#pragma once

// Subgraph builder. Targets are processed independently: for each target the
// failure sets of every source run in passes by set size (empty, singles,
// pairs), sources ascending within a pass, schedule order within a source. A
// path contributes exactly when its last edge is new among the last edges
// already accumulated AT THAT TARGET. Because the bookkeeping is per-target,
// partial builds over disjoint target sets merge into exactly the structure
// a sequential run produces, and the parallel path below is byte-identical
// to the sequential one.

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bfs.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "paths.hpp"

namespace ftbfs {

struct BuildParams {
    std::vector<Vertex> sources;
    int k = 2;
    FailureMode mode = FailureMode::edge;

    friend bool operator==(const BuildParams&, const BuildParams&) = default;
};

struct Assignment {
    Vertex source = -1;
    Vertex target = -1;
    FailureSpec failure;
    PathRecord path;
    Edge last_edge;
};

struct TargetOutcome {
    int processed = 0;
    int contributed = 0;
    int unreachable = 0;
    int duplicate = 0;
};

struct FtStructure {
    BuildParams params;
    int n = 0;
    bool directed = false;
    std::vector<Vertex> targets;  // ascending
    std::set<Edge> edges;
    std::vector<Assignment> assignments;  // target-major, schedule order within a target
    std::map<Vertex, std::vector<Edge>> per_target_last;  // accumulation order
    std::map<Vertex, TargetOutcome> outcomes;
};

namespace detail {

inline void process_target(const Graph& g, const BuildParams& params,
                           const std::vector<std::vector<int>>& source_dist, Vertex v,
                           FtStructure& out) {
    out.targets.push_back(v);
    TargetOutcome oc;
    std::vector<Edge>& last_list = out.per_target_last[v];
    std::set<Edge> last_seen;

    const int nsrc = static_cast<int>(params.sources.size());
    std::vector<std::optional<FailureSchedule>> sched(nsrc);
    for (int si = 0; si < nsrc; ++si) {
        const Vertex s = params.sources[si];
        if (s == v || source_dist[si][v] == kInf) continue;
        sched[si] =
            build_failure_schedule(g, s, v, params.k, params.mode, params.sources);
    }

    for (int pass = 0; pass <= params.k; ++pass) {
        for (int si = 0; si < nsrc; ++si) {
            if (!sched[si]) continue;
            for (const ScheduledFailure& sf : sched[si]->order) {
                if (static_cast<int>(sf.spec.size()) != pass) continue;
                ++oc.processed;
                auto path = resolve_scheduled(g, *sched[si], sf);
                if (!path) {
                    ++oc.unreachable;
                    continue;
                }
                const auto& verts = path->vertices;
                const Edge last = canonical_edge(verts[verts.size() - 2], verts.back(),
                                                 g.directed());
                if (!last_seen.insert(last).second) {
                    ++oc.duplicate;
                    continue;
                }
                last_list.push_back(last);
                out.edges.insert(last);
                Assignment a;
                a.source = params.sources[si];
                a.target = v;
                a.failure = sf.spec;
                a.path = std::move(*path);
                a.last_edge = last;
                out.assignments.push_back(std::move(a));
                ++oc.contributed;
            }
        }
    }
    out.outcomes[v] = oc;
}

inline BuildParams checked_params(const Graph& g, std::vector<Vertex> sources, int k,
                                  FailureMode mode) {
    if (sources.empty()) throw std::invalid_argument("build: no sources");
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    for (Vertex s : sources)
        if (s < 0 || s >= g.vertex_count())
            throw std::invalid_argument("build: source out of range");
    if (k < 0 || k > 2) throw std::invalid_argument("build: k must be 0, 1 or 2");
    return BuildParams{std::move(sources), k, mode};
}

}  // namespace detail

// Builds the structure restricted to the given targets (ascending, no
// duplicates). The full builders below are this over all vertices.
inline FtStructure build_ft_partial(const Graph& g, std::vector<Vertex> sources, int k,
                                    FailureMode mode, const std::vector<Vertex>& targets) {
    const BuildParams params = detail::checked_params(g, std::move(sources), k, mode);
    for (std::size_t i = 0; i + 1 < targets.size(); ++i)
        if (targets[i] >= targets[i + 1])
            throw std::invalid_argument("build: targets must be ascending");
    std::vector<std::vector<int>> source_dist;
    const GraphView whole = remove_failures(g, FailureSpec::none(mode));
    for (Vertex s : params.sources) source_dist.push_back(bfs_distances(whole, s));

    FtStructure out;
    out.params = params;
    out.n = g.vertex_count();
    out.directed = g.directed();
    for (Vertex v : targets) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("build: target out of range");
        detail::process_target(g, params, source_dist, v, out);
    }
    return out;
}

// Merges partial structures over disjoint target sets built with identical
// parameters. The result equals the sequential build over the union.
inline FtStructure merge_structures(const std::vector<FtStructure>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge: no parts");
    std::vector<const FtStructure*> order;
    for (const auto& p : parts) order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const FtStructure* a, const FtStructure* b) {
        if (a->targets.empty() || b->targets.empty()) return !a->targets.empty();
        return a->targets.front() < b->targets.front();
    });

    FtStructure out;
    out.params = order.front()->params;
    out.n = order.front()->n;
    out.directed = order.front()->directed;
    Vertex prev = -1;
    for (const FtStructure* p : order) {
        if (!(p->params == out.params) || p->n != out.n || p->directed != out.directed)
            throw std::invalid_argument("merge: parts built with different parameters");
        for (Vertex v : p->targets) {
            if (v <= prev) throw std::invalid_argument("merge: overlapping target sets");
            prev = v;
            out.targets.push_back(v);
        }
        out.edges.insert(p->edges.begin(), p->edges.end());
        out.assignments.insert(out.assignments.end(), p->assignments.begin(),
                               p->assignments.end());
        out.per_target_last.insert(p->per_target_last.begin(), p->per_target_last.end());
        out.outcomes.insert(p->outcomes.begin(), p->outcomes.end());
    }
    return out;
}

// Multi-source build over every vertex. `threads` splits the target range
// into static chunks; the merge step makes the output independent of it.
inline FtStructure build_ft_mbfs(const Graph& g, std::vector<Vertex> sources, int k,
                                 FailureMode mode, int threads = 1) {
    const BuildParams params = detail::checked_params(g, std::move(sources), k, mode);
    const int n = g.vertex_count();
    const auto ranges = chunk_ranges(0, n, threads);
    std::vector<FtStructure> parts(ranges.size());
    run_chunked(0, n, threads, [&](int chunk, int begin, int end) {
        std::vector<Vertex> targets;
        for (Vertex v = begin; v < end; ++v) targets.push_back(v);
        parts[chunk] = build_ft_partial(g, params.sources, params.k, params.mode, targets);
    });
    if (parts.empty()) throw std::invalid_argument("build: empty graph");
    if (parts.size() == 1) return std::move(parts.front());
    return merge_structures(parts);
}

inline FtStructure build_ft_structure(const Graph& g, Vertex source, int k, FailureMode mode,
                                      int threads = 1) {
    return build_ft_mbfs(g, {source}, k, mode, threads);
}

// ---------------------------------------------------------------------------
// Size accounting.

struct SizeReport {
    int edges = 0;
    int n = 0;
    int k = 0;
    int sigma = 0;
    double bound = 0;
    double ratio = 0;
    int per_target_max = 0;
};

// The size guarantee the construction aims for, by regime.
inline double size_bound(int n, int k, int sigma) {
    const double nn = static_cast<double>(n);
    if (k <= 0) return std::max(1.0, nn - 1.0);
    if (k == 1) return (sigma > 1 ? std::sqrt(static_cast<double>(sigma)) : 1.0) * std::pow(nn, 1.5);
    return (sigma > 1 ? std::cbrt(static_cast<double>(sigma)) : 1.0) * std::pow(nn, 5.0 / 3.0);
}

inline SizeReport structure_stats(const FtStructure& st) {
    SizeReport r;
    r.edges = static_cast<int>(st.edges.size());
    r.n = st.n;
    r.k = st.params.k;
    r.sigma = static_cast<int>(st.params.sources.size());
    r.bound = size_bound(r.n, r.k, r.sigma);
    r.ratio = r.bound > 0 ? r.edges / r.bound : 0;
    for (const auto& [v, last] : st.per_target_last)
        r.per_target_max = std::max(r.per_target_max, static_cast<int>(last.size()));
    return r;
}

// The structure as a graph over the same vertex set.
inline Graph structure_graph(const FtStructure& st) {
    return Graph(st.n, st.directed, std::vector<Edge>(st.edges.begin(), st.edges.end()));
}

}  // namespace ftbfs
