#pragma once

// Brute-force verification: enumerate failure sets, delete, BFS, compare
// distances between the graph and the candidate subgraph for every source
// and every target. No shared logic with the builder beyond the graph type;
// in particular distances come from plain BFS over views, never from
// replacement-path machinery.

#include <chrono>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfs.hpp"
#include "builder.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace ftbfs {

struct FailureEnumeration {
    FailureMode mode = FailureMode::edge;
    std::vector<FailureSpec> sets;  // canonical order: empty, singles, pairs
    bool sampled = false;
    long requested = 0;       // pairs asked for when sampling
    std::uint64_t seed = 0;
    long pair_population = 0;  // pairs available in total
};

namespace detail {

inline long item_count(const Graph& g, FailureMode mode, const std::vector<Vertex>& excluded) {
    if (mode == FailureMode::edge) return g.edge_count();
    long c = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) ++c;
    return c;
}

inline FailureSpec item_single(const Graph& g, FailureMode mode,
                               const std::vector<Vertex>& items_v, long i) {
    if (mode == FailureMode::edge) return FailureSpec::of_edges({g.edges()[i]});
    return FailureSpec::of_vertices({items_v[i]});
}

inline FailureSpec item_pair(const Graph& g, FailureMode mode, const std::vector<Vertex>& items_v,
                             long i, long j) {
    if (mode == FailureMode::edge) return FailureSpec::of_edges({g.edges()[i], g.edges()[j]});
    return FailureSpec::of_vertices({items_v[i], items_v[j]});
}

inline std::vector<Vertex> vertex_items(const Graph& g, const std::vector<Vertex>& excluded) {
    std::vector<Vertex> items;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end())
            items.push_back(v);
    return items;
}

}  // namespace detail

// Every failure set of size <= k (k at most 2): the empty set, all
// singletons, all pairs, items in canonical ascending order. Vertex mode
// skips `excluded` (the designated sources).
inline FailureEnumeration enumerate_failure_sets(const Graph& g, FailureMode mode, int k = 2,
                                                 const std::vector<Vertex>& excluded = {}) {
    FailureEnumeration fe;
    fe.mode = mode;
    const std::vector<Vertex> items = detail::vertex_items(g, excluded);
    const long m = detail::item_count(g, mode, excluded);
    fe.pair_population = k >= 2 ? m * (m - 1) / 2 : 0;
    fe.sets.push_back(FailureSpec::none(mode));
    if (k >= 1)
        for (long i = 0; i < m; ++i) fe.sets.push_back(detail::item_single(g, mode, items, i));
    if (k >= 2)
        for (long i = 0; i < m; ++i)
            for (long j = i + 1; j < m; ++j)
                fe.sets.push_back(detail::item_pair(g, mode, items, i, j));
    return fe;
}

// Seeded uniform subsample of pairs; the empty set and all singletons are
// always included. Asking for at least the whole population degrades to the
// exhaustive enumeration, as does k < 2 (there is nothing to sample then).
inline FailureEnumeration sample_failure_sets(const Graph& g, FailureMode mode, long pair_count,
                                              std::uint64_t seed, int k = 2,
                                              const std::vector<Vertex>& excluded = {}) {
    const long m = detail::item_count(g, mode, excluded);
    const long population = m * (m - 1) / 2;
    if (k < 2 || pair_count >= population) return enumerate_failure_sets(g, mode, k, excluded);

    FailureEnumeration fe;
    fe.mode = mode;
    fe.sampled = true;
    fe.requested = pair_count;
    fe.seed = seed;
    fe.pair_population = population;
    const std::vector<Vertex> items = detail::vertex_items(g, excluded);
    fe.sets.push_back(FailureSpec::none(mode));
    for (long i = 0; i < m; ++i) fe.sets.push_back(detail::item_single(g, mode, items, i));
    SplitMix64 rng(seed);
    std::set<std::pair<long, long>> chosen;
    while (static_cast<long>(chosen.size()) < pair_count) {
        long i = static_cast<long>(rng.below(m));
        long j = static_cast<long>(rng.below(m));
        if (i == j) continue;
        if (j < i) std::swap(i, j);
        chosen.insert({i, j});
    }
    for (const auto& [i, j] : chosen) fe.sets.push_back(detail::item_pair(g, mode, items, i, j));
    return fe;
}

struct DistanceWitness {
    FailureSpec failure;
    Vertex source = -1;
    Vertex target = -1;
    int dist_g = kInf;
    int dist_h = kInf;
};

struct VerificationReport {
    bool pass = true;
    long checked = 0;  // (failure set, source, target) triples compared
    std::vector<DistanceWitness> witnesses;
    int h_edges = 0;
    double bound = 0;
    double ratio = 0;
    bool sampled = false;
    long requested = 0;
    std::uint64_t seed = 0;
    long failure_sets = 0;
    long elapsed_ms = 0;
};

// Compares distances from every source to every vertex under every failure
// set in `fe`, in g and in h. Pre: h is a subgraph of g on the same vertex
// set (checked; the offending edge is named).
inline VerificationReport verify_structure(const Graph& g, const Graph& h,
                                           const std::vector<Vertex>& sources, int k,
                                           const FailureEnumeration& fe, int threads = 1) {
    if (h.vertex_count() != g.vertex_count())
        throw std::invalid_argument("verify: vertex count differs");
    if (h.directed() != g.directed())
        throw std::invalid_argument("verify: directedness differs");
    for (const Edge& e : h.edges())
        if (!g.has_arc(e.u, e.v))
            throw std::invalid_argument("verify: subgraph edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") not in graph");
    if (sources.empty()) throw std::invalid_argument("verify: no sources");

    const auto t0 = std::chrono::steady_clock::now();
    const int nsets = static_cast<int>(fe.sets.size());
    const auto ranges = chunk_ranges(0, nsets, threads);
    std::vector<long> checked(ranges.size(), 0);
    std::vector<std::vector<DistanceWitness>> found(ranges.size());

    run_chunked(0, nsets, threads, [&](int chunk, int begin, int end) {
        for (int fi = begin; fi < end; ++fi) {
            const FailureSpec& f = fe.sets[fi];
            const GraphView vg(g, f);
            const GraphView vh(h, f);
            for (Vertex s : sources) {
                const std::vector<int> dg = bfs_distances(vg, s);
                const std::vector<int> dh = bfs_distances(vh, s);
                for (Vertex v = 0; v < g.vertex_count(); ++v) {
                    ++checked[chunk];
                    if (dg[v] != dh[v])
                        found[chunk].push_back(DistanceWitness{f, s, v, dg[v], dh[v]});
                }
            }
        }
    });

    VerificationReport r;
    for (std::size_t c = 0; c < ranges.size(); ++c) {
        r.checked += checked[c];
        r.witnesses.insert(r.witnesses.end(), found[c].begin(), found[c].end());
    }
    r.pass = r.witnesses.empty();
    r.h_edges = h.edge_count();
    r.bound = size_bound(g.vertex_count(), k, static_cast<int>(sources.size()));
    r.ratio = r.bound > 0 ? r.h_edges / r.bound : 0;
    r.sampled = fe.sampled;
    r.requested = fe.requested;
    r.seed = fe.seed;
    r.failure_sets = nsets;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

}  // namespace ftbfs
