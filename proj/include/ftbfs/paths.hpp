#pragma once

// Replacement-path machinery: lexicographic base paths, preferred paths
// under one or two failures, and the per-target failure schedule in exactly
// the order the builder consumes.
//
// Preferred path, informally: among shortest s->v paths avoiding the failure
// set F, keep those that leave each pre-failure region (the prefix of the
// carrier path strictly before its failed element) exactly once; break ties
// by earliest divergence from P0, then earliest divergence from P1, then by
// lexicographically smallest vertex sequence. The engine enumerates the
// divergence vertex z: along the common prefix of P0 and P1, then along P1
// strictly between the common split and the second failure, then along P0
// strictly between the common split and the first failure. Each candidate is
// the carrier prefix up to z plus the lex-smallest shortest z->v suffix that
// avoids both regions except at z. That enumeration order realizes the tie
// order exactly, so the first strict minimum wins and no comparison of
// divergence positions is ever needed.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bfs.hpp"
#include "graph.hpp"

namespace ftbfs {

struct PathRecord {
    std::vector<Vertex> vertices;
    Vertex source = -1;
    Vertex dest = -1;
    FailureSpec avoided;
    // Divergence vertices: last vertex shared with P0 (resp. P1) before the
    // path leaves it. Absent for paths that are the base itself / have no P1.
    std::optional<Vertex> div0;
    std::optional<Vertex> div1;

    int length() const { return static_cast<int>(vertices.size()) - 1; }

    friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

// Inclusive vertex-position span on a carrier path.
struct DetourSpan {
    int first = -1;
    int last = -1;

    int edge_count() const { return last - first; }

    friend bool operator==(const DetourSpan&, const DetourSpan&) = default;
};

inline std::optional<int> vertex_position_on_path(const std::vector<Vertex>& path, Vertex x) {
    for (int i = 0; i < static_cast<int>(path.size()); ++i)
        if (path[i] == x) return i;
    return std::nullopt;
}

// Position of e among the edges of `path` (edge i joins positions i, i+1).
inline std::optional<int> edge_position_on_path(const Graph& g, const std::vector<Vertex>& path,
                                                const Edge& e) {
    for (int i = 0; i + 1 < static_cast<int>(path.size()); ++i)
        if (canonical_edge(path[i], path[i + 1], g.directed()) == e) return i;
    return std::nullopt;
}

// Last maximal run of vertices of `path` that lie on none of the base
// paths, widened one position each side to its boundary vertices (which, by
// maximality, do lie on a base or are the endpoints). nullopt when every
// vertex is shared, e.g. a path that shortcuts between base vertices along a
// chord; such paths have no detour in the vertex-subtraction sense.
inline std::optional<DetourSpan> last_detour_span(const std::vector<Vertex>& path,
                                                  const std::vector<const std::vector<Vertex>*>& bases) {
    std::set<Vertex> base_vertices;
    for (const auto* b : bases) base_vertices.insert(b->begin(), b->end());
    int j = static_cast<int>(path.size()) - 1;
    while (j >= 0 && base_vertices.count(path[j])) --j;
    if (j < 0) return std::nullopt;
    int i = j;
    while (i > 0 && !base_vertices.count(path[i - 1])) --i;
    // path[0] and path.back() sit on every base path they came from, so the
    // widened span stays in range.
    return DetourSpan{i - 1, j + 1};
}

// ---------------------------------------------------------------------------
// Preferred-path engine.

namespace detail {

// Last index of the pre-failure region on the carrier path: for a failed
// edge at position p the region is [0..p]; for a failed vertex it stops one
// vertex earlier.
inline int region_cut(FailureMode mode, int fail_pos) {
    return mode == FailureMode::edge ? fail_pos : fail_pos - 1;
}

struct EngineResult {
    PathRecord rec;
    int div0_pos = -1;  // position of div0 on p0
    int div1_pos = -1;  // position of div1 on p1 (pairs only)
};

inline std::vector<char> block_region(const Graph& g, const std::vector<Vertex>& p0, int cut0,
                                      const std::vector<Vertex>* p1, int cut1, Vertex keep) {
    std::vector<char> blocked(g.vertex_count(), 0);
    for (int i = 0; i <= cut0; ++i) blocked[p0[i]] = 1;
    if (p1)
        for (int i = 0; i <= cut1; ++i) blocked[(*p1)[i]] = 1;
    blocked[keep] = 0;
    return blocked;
}

inline std::optional<EngineResult> preferred_single(const Graph& g, FailureMode mode,
                                                    const std::vector<Vertex>& p0, int fail_pos,
                                                    const FailureSpec& spec) {
    const Vertex v = p0.back();
    const int cut = region_cut(mode, fail_pos);
    int best_z = -1;
    int best_len = kInf;
    for (int z = 0; z <= cut; ++z) {
        GraphView view(g, spec, block_region(g, p0, cut, nullptr, -1, p0[z]));
        const int tail = bfs_distances_to(view, v)[p0[z]];
        if (tail == kInf) continue;
        if (z + tail < best_len) {
            best_len = z + tail;
            best_z = z;
        }
    }
    if (best_z < 0) return std::nullopt;

    GraphView view(g, spec, block_region(g, p0, cut, nullptr, -1, p0[best_z]));
    auto tail = lex_shortest_path(view, p0[best_z], v);
    EngineResult r;
    r.rec.vertices.assign(p0.begin(), p0.begin() + best_z);
    r.rec.vertices.insert(r.rec.vertices.end(), tail->begin(), tail->end());
    r.rec.source = p0.front();
    r.rec.dest = v;
    r.rec.avoided = spec;
    r.rec.div0 = p0[best_z];
    r.div0_pos = best_z;
    return r;
}

// Pre: canonical orientation, i.e. if both failed elements sit on p0 the one
// at the smaller position plays e1. Then the second region always reaches at
// least the common split (x1_pos) along p1.
inline std::optional<EngineResult> preferred_pair(const Graph& g, FailureMode mode,
                                                  const std::vector<Vertex>& p0, int e1_pos,
                                                  const std::vector<Vertex>& p1, int e2_pos,
                                                  int x1_pos, const FailureSpec& spec) {
    const Vertex v = p0.back();
    const int cut_r = region_cut(mode, e1_pos);   // on p0
    const int cut_b = region_cut(mode, e2_pos);   // on p1
    if (cut_b < x1_pos) throw std::logic_error("preferred_pair: orientation not canonical");

    struct Cand {
        int branch;  // 0: common prefix, 1: along p1, 2: along p0
        int pos;     // position on its carrier
    };
    std::vector<Cand> cands;
    for (int z = 0; z <= x1_pos; ++z) cands.push_back({0, z});
    for (int z = x1_pos + 1; z <= cut_b; ++z) cands.push_back({1, z});
    for (int z = x1_pos + 1; z <= cut_r; ++z) cands.push_back({2, z});

    const Cand* best = nullptr;
    int best_len = kInf;
    for (const Cand& c : cands) {
        const Vertex zv = c.branch == 2 ? p0[c.pos] : p1[c.pos];
        GraphView view(g, spec, block_region(g, p0, cut_r, &p1, cut_b, zv));
        const int tail = bfs_distances_to(view, v)[zv];
        if (tail == kInf) continue;
        if (c.pos + tail < best_len) {
            best_len = c.pos + tail;
            best = &c;
        }
    }
    if (!best) return std::nullopt;

    const std::vector<Vertex>& carrier = best->branch == 2 ? p0 : p1;
    const Vertex zv = carrier[best->pos];
    GraphView view(g, spec, block_region(g, p0, cut_r, &p1, cut_b, zv));
    auto tail = lex_shortest_path(view, zv, v);
    EngineResult r;
    r.rec.vertices.assign(carrier.begin(), carrier.begin() + best->pos);
    r.rec.vertices.insert(r.rec.vertices.end(), tail->begin(), tail->end());
    r.rec.source = p0.front();
    r.rec.dest = v;
    r.rec.avoided = spec;
    r.div0_pos = best->branch == 1 ? x1_pos : best->pos;
    r.div1_pos = best->branch == 2 ? x1_pos : best->pos;
    r.rec.div0 = p0[r.div0_pos];
    r.rec.div1 = p1[r.div1_pos];
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Base chain and failure schedule.

struct ChainEntry {
    FailureSpec single;               // the first failure, on p0
    int e1_pos = -1;                  // its position on p0
    std::optional<PathRecord> p1;     // preferred path around it, if any
    int div_pos = -1;                 // position of p1's divergence vertex (on p0 and p1 alike)
    std::optional<DetourSpan> d0;     // last off-p0 excursion of p1, on p1
};

struct BaseChain {
    Vertex source = -1;
    Vertex dest = -1;
    FailureMode mode = FailureMode::edge;
    PathRecord p0;
    std::vector<ChainEntry> entries;  // farthest failure first
};

struct ScheduledFailure {
    FailureSpec spec;
    int entry = -1;    // index into chain.entries; -1 for the empty set
    int e2_pos = -1;   // pairs: position of the second element on that entry's p1
};

// Processing order for one (source, target) pair: the empty set, then single
// failures on P0 farthest-from-source first, then pairs grouped under the
// same first-failure order with the second failure farthest along P1 first.
// Pairs whose second element also lies on P0 are kept only when the first
// element is strictly closer to the source there; the mirrored pair covers
// the other orientation, so each unordered set is scheduled at most once.
struct FailureSchedule {
    Vertex source = -1;
    Vertex dest = -1;
    int k = 0;
    FailureMode mode = FailureMode::edge;
    BaseChain chain;
    std::vector<ScheduledFailure> order;
};

namespace detail {

inline FailureSpec single_spec(const Graph& g, FailureMode mode, const std::vector<Vertex>& path,
                               int pos) {
    if (mode == FailureMode::edge)
        return FailureSpec::of_edges({canonical_edge(path[pos], path[pos + 1], g.directed())});
    return FailureSpec::of_vertices({path[pos]});
}

inline FailureSpec pair_spec(const Graph& g, FailureMode mode, const std::vector<Vertex>& p0,
                             int e1_pos, const std::vector<Vertex>& p1, int e2_pos) {
    if (mode == FailureMode::edge)
        return FailureSpec::of_edges(
            {canonical_edge(p0[e1_pos], p0[e1_pos + 1], g.directed()),
             canonical_edge(p1[e2_pos], p1[e2_pos + 1], g.directed())});
    return FailureSpec::of_vertices({p0[e1_pos], p1[e2_pos]});
}

// Candidate failure positions on a path, farthest from the source first.
// Edge mode: every edge. Vertex mode: internal vertices not in `excluded`.
inline std::vector<int> failure_positions(FailureMode mode, const std::vector<Vertex>& path,
                                          const std::vector<Vertex>& excluded) {
    std::vector<int> out;
    const int len = static_cast<int>(path.size()) - 1;
    if (mode == FailureMode::edge) {
        for (int i = len - 1; i >= 0; --i) out.push_back(i);
    } else {
        for (int i = len - 1; i >= 1; --i)
            if (std::find(excluded.begin(), excluded.end(), path[i]) == excluded.end())
                out.push_back(i);
    }
    return out;
}

}  // namespace detail

// Builds the full schedule for one (source, target) pair. `excluded` lists
// vertices that must never fail (the other sources of a multi-source build);
// the source and target of the schedule are excluded by construction.
// Pre: target reachable from source.
inline FailureSchedule build_failure_schedule(const Graph& g, Vertex source, Vertex target, int k,
                                              FailureMode mode,
                                              const std::vector<Vertex>& excluded = {}) {
    if (k < 0 || k > 2) throw std::invalid_argument("schedule: k must be 0, 1 or 2");
    auto p0 = lex_shortest_path(remove_failures(g, FailureSpec::none(mode)), source, target);
    if (!p0) throw std::invalid_argument("schedule: target unreachable");

    FailureSchedule sched;
    sched.source = source;
    sched.dest = target;
    sched.k = k;
    sched.mode = mode;
    sched.chain.source = source;
    sched.chain.dest = target;
    sched.chain.mode = mode;
    sched.chain.p0.vertices = *p0;
    sched.chain.p0.source = source;
    sched.chain.p0.dest = target;
    sched.chain.p0.avoided = FailureSpec::none(mode);
    sched.order.push_back(ScheduledFailure{FailureSpec::none(mode), -1, -1});
    if (k == 0) return sched;

    for (int pos : detail::failure_positions(mode, *p0, excluded)) {
        ChainEntry entry;
        entry.single = detail::single_spec(g, mode, *p0, pos);
        entry.e1_pos = pos;
        if (auto r = detail::preferred_single(g, mode, *p0, pos, entry.single)) {
            entry.p1 = std::move(r->rec);
            entry.div_pos = r->div0_pos;
            entry.d0 = last_detour_span(entry.p1->vertices, {&*p0});
        }
        sched.chain.entries.push_back(std::move(entry));
        sched.order.push_back(
            ScheduledFailure{sched.chain.entries.back().single,
                             static_cast<int>(sched.chain.entries.size()) - 1, -1});
    }
    if (k == 1) return sched;

    for (int ei = 0; ei < static_cast<int>(sched.chain.entries.size()); ++ei) {
        const ChainEntry& entry = sched.chain.entries[ei];
        if (!entry.p1) continue;
        const std::vector<Vertex>& p1 = entry.p1->vertices;
        for (int pos : detail::failure_positions(mode, p1, excluded)) {
            // Shared elements: schedule the pair only from the orientation
            // whose first element is nearer the source on P0.
            if (mode == FailureMode::edge) {
                const Edge e2 = canonical_edge(p1[pos], p1[pos + 1], g.directed());
                if (auto q = edge_position_on_path(g, *p0, e2); q && entry.e1_pos >= *q) continue;
            } else {
                if (auto q = vertex_position_on_path(*p0, p1[pos]); q && entry.e1_pos >= *q)
                    continue;
            }
            sched.order.push_back(ScheduledFailure{
                detail::pair_spec(g, mode, *p0, entry.e1_pos, p1, pos), ei, pos});
        }
    }
    return sched;
}

// Resolves one scheduled failure to its preferred path. nullopt when the
// target is unreachable after the failure.
inline std::optional<PathRecord> resolve_scheduled(const Graph& g, const FailureSchedule& sched,
                                                   const ScheduledFailure& sf) {
    if (sf.entry < 0) return sched.chain.p0;
    const ChainEntry& entry = sched.chain.entries[sf.entry];
    if (sf.e2_pos < 0) return entry.p1;
    if (!entry.p1) return std::nullopt;
    auto r = detail::preferred_pair(g, sched.mode, sched.chain.p0.vertices, entry.e1_pos,
                                    entry.p1->vertices, sf.e2_pos, entry.div_pos, sf.spec);
    if (!r) return std::nullopt;
    return std::move(r->rec);
}

// Preferred path for a failure set consistent with the chain: empty, a
// single failure on P0, or a pair (first element on P0, second on that
// element's P1). Throws when f does not fit the chain that way.
inline std::optional<PathRecord> preferred_path(const Graph& g, const BaseChain& chain,
                                                const FailureSpec& f) {
    if (f.mode != chain.mode) throw std::invalid_argument("preferred_path: mode mismatch");
    if (f.empty()) return chain.p0;

    const std::vector<Vertex>& p0 = chain.p0.vertices;
    // Locate elements of f on p0, canonically orienting pairs by position.
    struct Loc {
        int idx;   // element index within f
        int pos;   // position on p0
    };
    std::vector<Loc> on_p0;
    const int count = static_cast<int>(f.size());
    for (int i = 0; i < count; ++i) {
        std::optional<int> pos;
        if (f.mode == FailureMode::edge)
            pos = edge_position_on_path(g, p0, f.edges[i]);
        else
            pos = vertex_position_on_path(p0, f.vertices[i]);
        if (pos) on_p0.push_back({i, *pos});
    }
    if (on_p0.empty()) throw std::invalid_argument("preferred_path: no element on P0");
    std::sort(on_p0.begin(), on_p0.end(), [](const Loc& a, const Loc& b) { return a.pos < b.pos; });
    const Loc e1 = on_p0.front();

    const ChainEntry* entry = nullptr;
    for (const ChainEntry& ce : chain.entries)
        if (ce.e1_pos == e1.pos) {
            entry = &ce;
            break;
        }
    if (!entry) throw std::invalid_argument("preferred_path: first element not scheduled");
    if (count == 1) return entry->p1;

    if (!entry->p1) return std::nullopt;
    const int other = 1 - e1.idx;
    std::optional<int> e2_pos;
    if (f.mode == FailureMode::edge)
        e2_pos = edge_position_on_path(g, entry->p1->vertices, f.edges[other]);
    else
        e2_pos = vertex_position_on_path(entry->p1->vertices, f.vertices[other]);
    if (!e2_pos) throw std::invalid_argument("preferred_path: second element not on P1");
    auto r = detail::preferred_pair(g, chain.mode, p0, entry->e1_pos, entry->p1->vertices, *e2_pos,
                                    entry->div_pos, f);
    if (!r) return std::nullopt;
    PathRecord rec = std::move(r->rec);
    rec.avoided = f;
    return rec;
}

// Total variant used by verification sweeps: reduces an arbitrary failure
// set against the chain of its own base path. Elements off P0 are ignored
// unless they hit the replacement path, mirroring how distances decompose:
// if P0 survives F it stays shortest; else the failure nearest the source
// on P0 defines P1, and only a second hit on P1 escalates to a pair.
inline std::optional<PathRecord> preferred_for_failure_set(const Graph& g, FailureMode mode,
                                                           Vertex source, Vertex target,
                                                           const FailureSpec& f) {
    if (f.contains_vertex(source) || f.contains_vertex(target)) return std::nullopt;
    auto p0 = lex_shortest_path(remove_failures(g, FailureSpec::none(mode)), source, target);
    if (!p0) return std::nullopt;

    PathRecord base;
    base.vertices = *p0;
    base.source = source;
    base.dest = target;
    base.avoided = f;

    struct Loc {
        int idx;
        int pos;
    };
    std::vector<Loc> on_p0;
    for (int i = 0; i < static_cast<int>(f.size()); ++i) {
        std::optional<int> pos;
        if (mode == FailureMode::edge)
            pos = edge_position_on_path(g, *p0, f.edges[i]);
        else
            pos = vertex_position_on_path(*p0, f.vertices[i]);
        if (pos) on_p0.push_back({i, *pos});
    }
    if (on_p0.empty()) return base;
    std::sort(on_p0.begin(), on_p0.end(), [](const Loc& a, const Loc& b) { return a.pos < b.pos; });
    const Loc e1 = on_p0.front();

    const FailureSpec s1 = mode == FailureMode::edge
                               ? FailureSpec::of_edges({f.edges[e1.idx]})
                               : FailureSpec::of_vertices({f.vertices[e1.idx]});
    auto r1 = detail::preferred_single(g, mode, *p0, e1.pos, s1);
    if (!r1) return std::nullopt;
    if (f.size() == 1) {
        PathRecord rec = std::move(r1->rec);
        rec.avoided = f;
        return rec;
    }

    const int other = 1 - e1.idx;
    std::optional<int> e2_pos;
    if (mode == FailureMode::edge)
        e2_pos = edge_position_on_path(g, r1->rec.vertices, f.edges[other]);
    else
        e2_pos = vertex_position_on_path(r1->rec.vertices, f.vertices[other]);
    if (!e2_pos) {
        PathRecord rec = std::move(r1->rec);
        rec.avoided = f;
        return rec;
    }
    auto r2 = detail::preferred_pair(g, mode, *p0, e1.pos, r1->rec.vertices, *e2_pos, r1->div0_pos,
                                     f);
    if (!r2) return std::nullopt;
    PathRecord rec = std::move(r2->rec);
    rec.avoided = f;
    return rec;
}

}  // namespace ftbfs
