#pragma once

// Exhaustive ground truth for small graphs: enumerate every shortest simple
// path by DFS, apply the leave-once rule and the tie order literally, and
// recurse for base paths. Deliberately shares no selection logic with the
// candidate engine in paths.hpp; agreement between the two is something the
// tests assert, not something the construction guarantees.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bfs.hpp"
#include "graph.hpp"

namespace ftbfs {
namespace oracle {

inline constexpr int kMaxVertices = 14;

// Every shortest s->v path in the view, emitted in lexicographic order
// (neighbors are explored ascending and every branch kept).
inline std::vector<std::vector<Vertex>> all_shortest_paths(const GraphView& view, Vertex s,
                                                           Vertex v) {
    if (view.graph().vertex_count() > kMaxVertices)
        throw std::invalid_argument("oracle: graph too large for exhaustive enumeration");
    std::vector<std::vector<Vertex>> out;
    const std::vector<int> to_v = bfs_distances_to(view, v);
    if (!view.vertex_ok(s) || to_v[s] == kInf) return out;
    std::vector<Vertex> cur{s};
    auto dfs = [&](auto&& self, Vertex u) -> void {
        if (u == v) {
            out.push_back(cur);
            return;
        }
        for (Vertex w : view.graph().neighbors(u)) {
            if (!view.step_ok(u, w) || to_v[w] != to_v[u] - 1) continue;
            cur.push_back(w);
            self(self, w);
            cur.pop_back();
        }
    };
    dfs(dfs, s);
    return out;
}

namespace detail {

// Leave-once rule, literally: the positions of q that land inside the
// region (the carrier prefix base[0..cut]) must form a contiguous block
// starting at position 0.
inline bool leaves_region_once(const std::vector<Vertex>& q, const std::vector<Vertex>& base,
                               int cut, int n) {
    std::vector<char> region(n, 0);
    for (int i = 0; i <= cut; ++i) region[base[i]] = 1;
    std::size_t r = 0;
    while (r < q.size() && region[q[r]]) ++r;
    for (std::size_t j = r; j < q.size(); ++j)
        if (region[q[j]]) return false;
    return true;
}

// Longest-common-prefix length minus one: the position of the last vertex q
// shares with the base before diverging. Both start at the same source, so
// this is at least 0.
inline int divergence_position(const std::vector<Vertex>& q, const std::vector<Vertex>& base) {
    std::size_t i = 0;
    while (i < q.size() && i < base.size() && q[i] == base[i]) ++i;
    return static_cast<int>(i) - 1;
}

inline int element_position(const Graph& g, FailureMode mode, const std::vector<Vertex>& path,
                            const FailureSpec& f, int idx) {
    if (mode == FailureMode::edge) {
        for (int i = 0; i + 1 < static_cast<int>(path.size()); ++i)
            if (canonical_edge(path[i], path[i + 1], g.directed()) == f.edges[idx]) return i;
    } else {
        for (int i = 0; i < static_cast<int>(path.size()); ++i)
            if (path[i] == f.vertices[idx]) return i;
    }
    return -1;
}

inline FailureSpec sub_spec(FailureMode mode, const FailureSpec& f, int idx) {
    if (mode == FailureMode::edge) return FailureSpec::of_edges({f.edges[idx]});
    return FailureSpec::of_vertices({f.vertices[idx]});
}

}  // namespace detail

// Base path: the lexicographically smallest among all shortest paths.
inline std::optional<std::vector<Vertex>> base_path(const Graph& g, FailureMode mode, Vertex s,
                                                    Vertex v) {
    auto all = all_shortest_paths(remove_failures(g, FailureSpec::none(mode)), s, v);
    if (all.empty()) return std::nullopt;
    return all.front();
}

// Preferred path for a failure set that is consistent with its own chain:
// empty; one element on the base path; or a pair whose first element (by
// base-path position) lies on the base path and whose second lies on the
// replacement path around the first. Selection: among shortest paths of the
// survivor graph keep those leaving every pre-failure region exactly once,
// then order by divergence from P0, then from P1, then lexicographically.
inline std::optional<std::vector<Vertex>> preferred(const Graph& g, FailureMode mode, Vertex s,
                                                    Vertex v, const FailureSpec& f) {
    if (f.contains_vertex(s) || f.contains_vertex(v)) return std::nullopt;
    auto p0 = base_path(g, mode, s, v);
    if (!p0) return std::nullopt;
    if (f.empty()) return p0;

    const int n = g.vertex_count();
    std::vector<int> pos_on_p0;
    for (int i = 0; i < static_cast<int>(f.size()); ++i)
        pos_on_p0.push_back(detail::element_position(g, mode, *p0, f, i));

    if (f.size() == 1) {
        if (pos_on_p0[0] < 0) return p0;
        const int cut = mode == FailureMode::edge ? pos_on_p0[0] : pos_on_p0[0] - 1;
        auto shortest = all_shortest_paths(remove_failures(g, f), s, v);
        std::vector<const std::vector<Vertex>*> kept;
        for (const auto& q : shortest)
            if (detail::leaves_region_once(q, *p0, cut, n)) kept.push_back(&q);
        if (kept.empty()) {
            if (shortest.empty()) return std::nullopt;
            throw std::logic_error("oracle: no shortest path leaves the region once");
        }
        const std::vector<Vertex>* best = kept.front();
        for (const auto* q : kept)
            if (detail::divergence_position(*q, *p0) < detail::divergence_position(*best, *p0))
                best = q;  // strict: lex order of enumeration settles equal divergence
        return *best;
    }

    // Pair: orient so the first element is the one on p0 nearest s.
    int first = -1;
    if (pos_on_p0[0] >= 0 && (pos_on_p0[1] < 0 || pos_on_p0[0] < pos_on_p0[1]))
        first = 0;
    else if (pos_on_p0[1] >= 0)
        first = 1;
    if (first < 0) return p0;

    auto p1 = preferred(g, mode, s, v, detail::sub_spec(mode, f, first));
    if (!p1) return std::nullopt;
    const int second = 1 - first;
    const int pos2 = detail::element_position(g, mode, *p1, f, second);
    if (pos2 < 0) return *p1;

    const int cut0 = mode == FailureMode::edge ? pos_on_p0[first] : pos_on_p0[first] - 1;
    const int cut1 = mode == FailureMode::edge ? pos2 : pos2 - 1;
    auto shortest = all_shortest_paths(remove_failures(g, f), s, v);
    std::vector<const std::vector<Vertex>*> kept;
    for (const auto& q : shortest)
        if (detail::leaves_region_once(q, *p0, cut0, n) &&
            detail::leaves_region_once(q, *p1, cut1, n))
            kept.push_back(&q);
    if (kept.empty()) {
        if (shortest.empty()) return std::nullopt;
        throw std::logic_error("oracle: no shortest path leaves both regions once");
    }
    const std::vector<Vertex>* best = kept.front();
    for (const auto* q : kept) {
        const int d0 = detail::divergence_position(*q, *p0);
        const int b0 = detail::divergence_position(*best, *p0);
        if (d0 != b0) {
            if (d0 < b0) best = q;
            continue;
        }
        const int d1 = detail::divergence_position(*q, *p1);
        const int b1 = detail::divergence_position(*best, *p1);
        if (d1 < b1) best = q;  // equal (d0,d1): enumeration is lex-ordered, keep first
    }
    return *best;
}

}  // namespace oracle
}  // namespace ftbfs
