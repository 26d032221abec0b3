#pragma once

// Additive +2 spanner resilient to two edge failures. Construction: keep
// every edge with a low-degree endpoint, pick a small source set hitting the
// neighborhood of every high-degree vertex three times over, and union in
// the two-failure multi-source structure of those sources. Any surviving
// shortest path either consists of kept edges or passes a high-degree
// vertex, which still has an intact edge to a source after two failures;
// rerouting through that source costs at most two extra hops.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "analysis.hpp"
#include "builder.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "verifier.hpp"

namespace ftbfs {

struct SourceSelection {
    std::vector<Vertex> sources;
    int sampled = 0;   // chosen by the coin flips
    int repaired = 0;  // added to cover a high-degree vertex
    int degree_cap = 0;
};

// Bernoulli sampling at rate sigma*ln(n)/n in vertex order, then a repair
// pass: every vertex of degree above ceil(n/sigma) must keep at least
// min(3, degree) selected neighbors, so that two edge failures cannot cut
// it off from all of them. Repair prefers the highest-degree neighbor,
// lowest index on ties. Falls back to vertex 0 when nothing got selected.
inline SourceSelection select_sources(const Graph& g, int sigma, std::uint64_t seed) {
    const int n = g.vertex_count();
    SourceSelection sel;
    sel.degree_cap = (n + sigma - 1) / sigma;
    const double rate =
        std::min(1.0, sigma * std::log(static_cast<double>(std::max(n, 2))) / n);

    SplitMix64 rng(seed);
    std::vector<char> selected(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (rng.bernoulli(rate)) {
            selected[v] = 1;
            ++sel.sampled;
        }

    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) <= sel.degree_cap) continue;
        const int need = std::min(3, g.degree(v));
        int have = 0;
        for (Vertex w : g.neighbors(v))
            if (selected[w]) ++have;
        while (have < need) {
            Vertex best = -1;
            for (Vertex w : g.neighbors(v))
                if (!selected[w] && (best < 0 || g.degree(w) > g.degree(best))) best = w;
            selected[best] = 1;
            ++sel.repaired;
            ++have;
        }
    }

    for (Vertex v = 0; v < n; ++v)
        if (selected[v]) sel.sources.push_back(v);
    if (sel.sources.empty() && n > 0) sel.sources.push_back(0);
    return sel;
}

struct SpannerResult {
    SourceSelection selection;
    int sigma = 0;
    long long light_edges = 0;      // edges with a low-degree endpoint
    long long structure_edges = 0;  // edges of the multi-source structure
    std::set<Edge> edges;           // their union
    double bound = 0.0;             // n^(7/4)
    double ratio = 0.0;
};

inline SpannerResult build_additive_spanner(const Graph& g, int sigma = 0,
                                            std::uint64_t seed = 0, int threads = 1) {
    const int n = g.vertex_count();
    SpannerResult r;
    r.sigma = sigma > 0 ? sigma : ceil_fourth_root(n);
    r.selection = select_sources(g, r.sigma, seed);

    for (const Edge& e : g.edges())
        if (g.degree(e.u) <= r.selection.degree_cap ||
            g.degree(e.v) <= r.selection.degree_cap) {
            r.edges.insert(e);
            ++r.light_edges;
        }

    const FtStructure st =
        build_ft_mbfs(g, r.selection.sources, 2, FailureMode::edge, threads);
    r.structure_edges = static_cast<long long>(st.edges.size());
    r.edges.insert(st.edges.begin(), st.edges.end());

    r.bound = std::pow(static_cast<double>(std::max(n, 1)), 1.75);
    r.ratio = static_cast<double>(r.edges.size()) / r.bound;
    return r;
}

inline Graph spanner_graph(const Graph& g, const SpannerResult& r) {
    return Graph(g.vertex_count(), g.directed(),
                 std::vector<Edge>(r.edges.begin(), r.edges.end()));
}

struct StretchReport {
    bool pass = true;
    long checked = 0;  // (failure set, u, v) triples compared
    std::vector<DistanceWitness> witnesses;
    long failure_sets = 0;
    bool sampled = false;
    long requested = 0;
    std::uint64_t seed = 0;
    long elapsed_ms = 0;
};

// All-pairs check: for every enumerated failure set F and every ordered pair
// (u, v) reachable in g minus F, the subgraph must answer within +2. The
// subgraph never connects what the graph does not, so unreachable pairs
// carry no obligation.
inline StretchReport verify_spanner_stretch(const Graph& g, const Graph& h,
                                            const FailureEnumeration& fe, int threads = 1) {
    const auto started = std::chrono::steady_clock::now();
    if (h.vertex_count() != g.vertex_count() || h.directed() != g.directed())
        throw std::invalid_argument("stretch: graphs disagree on vertex count or direction");
    for (const Edge& e : h.edges())
        if (!g.has_arc(e.u, e.v))
            throw std::invalid_argument("stretch: subgraph edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") not in graph");

    StretchReport report;
    report.failure_sets = static_cast<long>(fe.sets.size());
    report.sampled = fe.sampled;
    report.requested = fe.requested;
    report.seed = fe.seed;

    const int n = g.vertex_count();
    struct ChunkOut {
        long checked = 0;
        std::vector<DistanceWitness> witnesses;
    };
    const auto ranges = chunk_ranges(0, static_cast<int>(fe.sets.size()), threads);
    std::vector<ChunkOut> outs(ranges.size());
    run_chunked(0, static_cast<int>(fe.sets.size()), threads,
                [&](int chunk, int begin, int end) {
                    ChunkOut& out = outs[chunk];
                    for (int fi = begin; fi < end; ++fi) {
                        const FailureSpec& f = fe.sets[fi];
                        const GraphView gv(g, f);
                        const GraphView hv(h, f);
                        for (Vertex u = 0; u < n; ++u) {
                            const auto dg = bfs_distances(gv, u);
                            const auto dh = bfs_distances(hv, u);
                            for (Vertex v = 0; v < n; ++v) {
                                if (dg[v] == kInf) continue;
                                ++out.checked;
                                if (dh[v] == kInf || dh[v] > dg[v] + 2)
                                    out.witnesses.push_back({f, u, v, dg[v], dh[v]});
                            }
                        }
                    }
                });
    for (const ChunkOut& out : outs) {
        report.checked += out.checked;
        report.witnesses.insert(report.witnesses.end(), out.witnesses.begin(),
                                out.witnesses.end());
    }
    report.pass = report.witnesses.empty();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

}  // namespace ftbfs
