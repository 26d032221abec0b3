#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace ftbfs {

// Distances from s in the view; kInf where unreachable (including blocked
// vertices and, if s itself is blocked, everywhere).
inline std::vector<int> bfs_distances(const GraphView& view, Vertex s) {
    const Graph& g = view.graph();
    std::vector<int> dist(g.vertex_count(), kInf);
    if (!view.vertex_ok(s)) return dist;
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] != kInf || !view.step_ok(u, w)) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

// Distances TO t (over reversed arcs), i.e. dist_to[x] = d(x, t) in the view.
// For undirected graphs this equals bfs_distances(view, t).
inline std::vector<int> bfs_distances_to(const GraphView& view, Vertex t) {
    const Graph& g = view.graph();
    std::vector<int> dist(g.vertex_count(), kInf);
    if (!view.vertex_ok(t)) return dist;
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    dist[t] = 0;
    queue.push_back(t);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex w = queue[head];
        for (Vertex u : g.in_neighbors(w)) {
            // forward step u -> w must survive the view
            if (dist[u] != kInf || !view.vertex_ok(u) || !view.step_ok(u, w)) continue;
            dist[u] = dist[w] + 1;
            queue.push_back(u);
        }
    }
    return dist;
}

// Lexicographically smallest shortest path s -> v in the view, as a vertex
// sequence compared position by position. Works by greedy descent on
// distance-to-v: from each vertex take the smallest neighbor that still lies
// on some shortest path. That greedy choice is exactly the lex order on
// whole sequences because all candidates share the prefix chosen so far.
inline std::optional<std::vector<Vertex>> lex_shortest_path(const GraphView& view, Vertex s,
                                                            Vertex v) {
    const std::vector<int> to_v = bfs_distances_to(view, v);
    if (!view.vertex_ok(s) || to_v[s] == kInf) return std::nullopt;
    std::vector<Vertex> path{s};
    Vertex cur = s;
    while (cur != v) {
        const int d = to_v[cur];
        for (Vertex w : view.graph().neighbors(cur)) {
            if (view.step_ok(cur, w) && to_v[w] == d - 1) {
                path.push_back(w);
                cur = w;
                break;
            }
        }
    }
    return path;
}

}  // namespace ftbfs
