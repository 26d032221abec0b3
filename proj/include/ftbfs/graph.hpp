#pragma once

// Unweighted simple graphs on vertices 0..n-1. Undirected edges are stored
// canonically as (min,max); directed edges as ordered (tail,head). Adjacency
// lists are sorted ascending, and that order is load-bearing: every
// deterministic tie-break downstream (lexicographic path selection, failure
// enumeration, sampling) leans on it.

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rng.hpp"

namespace ftbfs {

using Vertex = int;

// Distance sentinel for "unreachable".
inline constexpr int kInf = std::numeric_limits<int>::max();

struct Edge {
    Vertex u = -1;
    Vertex v = -1;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge canonical_edge(Vertex a, Vertex b, bool directed) {
    if (!directed && b < a) std::swap(a, b);
    return Edge{a, b};
}

enum class FailureMode { edge, vertex };

inline const char* failure_mode_name(FailureMode m) {
    return m == FailureMode::edge ? "edge" : "vertex";
}

// A set of at most two failed elements, all edges or all vertices, held
// sorted and distinct. Sources (and the target of a vertex-mode query) are
// never valid members; that is enforced where the context knows them.
struct FailureSpec {
    FailureMode mode = FailureMode::edge;
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;

    static FailureSpec none(FailureMode m) {
        FailureSpec f;
        f.mode = m;
        return f;
    }

    static FailureSpec of_edges(std::vector<Edge> es) {
        FailureSpec f;
        f.mode = FailureMode::edge;
        std::sort(es.begin(), es.end());
        if (std::adjacent_find(es.begin(), es.end()) != es.end())
            throw std::invalid_argument("failure spec: duplicate edge");
        if (es.size() > 2) throw std::invalid_argument("failure spec: more than two elements");
        f.edges = std::move(es);
        return f;
    }

    static FailureSpec of_vertices(std::vector<Vertex> vs) {
        FailureSpec f;
        f.mode = FailureMode::vertex;
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw std::invalid_argument("failure spec: duplicate vertex");
        if (vs.size() > 2) throw std::invalid_argument("failure spec: more than two elements");
        f.vertices = std::move(vs);
        return f;
    }

    std::size_t size() const {
        return mode == FailureMode::edge ? edges.size() : vertices.size();
    }

    bool empty() const { return size() == 0; }

    bool contains_vertex(Vertex x) const {
        return mode == FailureMode::vertex &&
               std::find(vertices.begin(), vertices.end(), x) != vertices.end();
    }

    friend auto operator<=>(const FailureSpec&, const FailureSpec&) = default;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind {
        bad_header,
        bad_edge_line,
        vertex_out_of_range,
        self_loop,
        duplicate_edge,
        edge_count_mismatch,
    };

    ParseError(Kind kind, int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          kind(kind),
          line(line) {}

    Kind kind;
    int line;  // 1-based, counting comment lines
};

class Graph {
public:
    Graph() = default;

    Graph(int n, bool directed, std::vector<Edge> edges) : n_(n), directed_(directed) {
        if (n < 1) throw std::invalid_argument("graph: vertex count must be positive");
        for (Edge& e : edges) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw std::invalid_argument("graph: endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("graph: self loop");
            e = canonical_edge(e.u, e.v, directed);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("graph: duplicate edge");
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        radj_.assign(n_, {});
        for (const Edge& e : edges_) {
            adj_[e.u].push_back(e.v);
            radj_[e.v].push_back(e.u);
            if (!directed_) {
                adj_[e.v].push_back(e.u);
                radj_[e.u].push_back(e.v);
            }
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
        for (auto& a : radj_) std::sort(a.begin(), a.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool directed() const { return directed_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }
    const std::vector<Vertex>& in_neighbors(Vertex u) const { return radj_[u]; }
    int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }

    bool has_arc(Vertex a, Vertex b) const {
        const Edge e = canonical_edge(a, b, directed_);
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

private:
    int n_ = 0;
    bool directed_ = false;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<Vertex>> radj_;
};

// Validates a failure spec against a graph: elements must exist, and failed
// vertices must avoid the protected set (sources, plus the target where the
// caller says so).
inline void validate_failure(const Graph& g, const FailureSpec& f,
                             const std::vector<Vertex>& protected_vertices = {}) {
    if (f.mode == FailureMode::edge) {
        for (const Edge& e : f.edges) {
            if (e.u < 0 || e.u >= g.vertex_count() || e.v < 0 || e.v >= g.vertex_count() ||
                !g.has_arc(e.u, e.v))
                throw std::invalid_argument("failure spec: edge not in graph");
            if (canonical_edge(e.u, e.v, g.directed()) != e)
                throw std::invalid_argument("failure spec: edge not canonical");
        }
    } else {
        for (Vertex x : f.vertices) {
            if (x < 0 || x >= g.vertex_count())
                throw std::invalid_argument("failure spec: vertex out of range");
            if (std::find(protected_vertices.begin(), protected_vertices.end(), x) !=
                protected_vertices.end())
                throw std::invalid_argument("failure spec: protected vertex");
        }
    }
}

// ---------------------------------------------------------------------------
// Plain-text edge-list format.
//
//   <n> <m> <directed|undirected>
//   <u> <v>            (m lines)
//
// Lines starting with '#' are comments and may appear anywhere. Parse errors
// carry the 1-based line number of the offending line.

namespace detail {

inline bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

}  // namespace detail

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    int n = -1;
    long m = -1;
    bool directed = false;
    int header_line = 0;

    // header
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        std::string kind, extra;
        if (!(ls >> n >> m >> kind) || (ls >> extra) || n < 1 || m < 0 ||
            (kind != "directed" && kind != "undirected"))
            throw ParseError(ParseError::Kind::bad_header, lineno,
                             "expected header '<n> <m> <directed|undirected>'");
        directed = (kind == "directed");
        header_line = lineno;
        break;
    }
    if (header_line == 0)
        throw ParseError(ParseError::Kind::bad_header, lineno + 1, "missing header");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        if (static_cast<long>(edges.size()) == m)
            throw ParseError(ParseError::Kind::edge_count_mismatch, lineno,
                             "more than " + std::to_string(m) + " edges");
        std::istringstream ls(line);
        Vertex u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError(ParseError::Kind::bad_edge_line, lineno,
                             "expected '<u> <v>'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(ParseError::Kind::vertex_out_of_range, lineno,
                             "vertex out of range [0," + std::to_string(n - 1) + "]");
        if (u == v)
            throw ParseError(ParseError::Kind::self_loop, lineno, "self loop");
        const Edge e = canonical_edge(u, v, directed);
        if (!seen.insert(e).second)
            throw ParseError(ParseError::Kind::duplicate_edge, lineno, "duplicate edge");
        edges.push_back(e);
    }
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(ParseError::Kind::edge_count_mismatch, lineno + 1,
                         "expected " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
    return Graph(n, directed, std::move(edges));
}

// Canonical serialization: header, then edges ascending. No trailing newline,
// so round-trips are byte-exact string comparisons.
inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << ' '
        << (g.directed() ? "directed" : "undirected");
    for (const Edge& e : g.edges()) out << '\n' << e.u << ' ' << e.v;
    return out.str();
}

// ---------------------------------------------------------------------------
// Deterministic generators.

enum class GraphModel { gnp, path, cycle, complete };

inline const char* graph_model_name(GraphModel m) {
    switch (m) {
        case GraphModel::gnp: return "gnp";
        case GraphModel::path: return "path";
        case GraphModel::cycle: return "cycle";
        case GraphModel::complete: return "complete";
    }
    return "?";
}

inline std::optional<GraphModel> graph_model_from_name(const std::string& s) {
    if (s == "gnp") return GraphModel::gnp;
    if (s == "path") return GraphModel::path;
    if (s == "cycle") return GraphModel::cycle;
    if (s == "complete") return GraphModel::complete;
    return std::nullopt;
}

// gnp draws one bernoulli per vertex pair, pairs enumerated in canonical
// ascending order (undirected: u < v lexicographic; directed: all ordered
// pairs u != v lexicographic). The stream position of a pair is therefore
// independent of p, and the same seed with different p gives aligned draws.
inline Graph gen_graph(GraphModel model, int n, std::optional<double> p, std::uint64_t seed,
                       bool directed = false) {
    if (n < 1) throw std::invalid_argument("gen: vertex count must be positive");
    std::vector<Edge> edges;
    switch (model) {
        case GraphModel::gnp: {
            if (!p) throw std::invalid_argument("gen: gnp needs p");
            SplitMix64 rng(seed);
            if (directed) {
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = 0; v < n; ++v)
                        if (u != v && rng.bernoulli(*p)) edges.push_back({u, v});
            } else {
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v)
                        if (rng.bernoulli(*p)) edges.push_back({u, v});
            }
            break;
        }
        case GraphModel::path:
            for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
            break;
        case GraphModel::cycle:
            if (n < 3) throw std::invalid_argument("gen: cycle needs n >= 3");
            for (Vertex u = 0; u < n; ++u)
                edges.push_back(canonical_edge(u, (u + 1) % n, directed));
            break;
        case GraphModel::complete:
            if (directed) {
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = 0; v < n; ++v)
                        if (u != v) edges.push_back({u, v});
            } else {
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
            }
            break;
    }
    return Graph(n, directed, std::move(edges));
}

// ---------------------------------------------------------------------------
// GraphView: the graph minus a failure set, plus (internally) a set of
// blocked vertices. Never materializes a copy; all search code runs on
// views so that "delete and search" is allocation-light.

class GraphView {
public:
    GraphView(const Graph& g, const FailureSpec& f) : g_(&g), blocked_(g.vertex_count(), 0) {
        apply(f);
    }

    GraphView(const Graph& g, const FailureSpec& f, std::vector<char> blocked)
        : g_(&g), blocked_(std::move(blocked)) {
        blocked_.resize(g.vertex_count(), 0);
        apply(f);
    }

    const Graph& graph() const { return *g_; }

    bool vertex_ok(Vertex x) const { return !blocked_[x]; }

    // Whether the step a -> b survives: b alive and the arc not failed.
    // (Callers iterate neighbors of a, so a's liveness is theirs to check.)
    bool step_ok(Vertex a, Vertex b) const {
        if (blocked_[b]) return false;
        if (ndead_ > 0) {
            const Edge e = canonical_edge(a, b, g_->directed());
            for (int i = 0; i < ndead_; ++i)
                if (dead_[i] == e) return false;
        }
        return true;
    }

private:
    void apply(const FailureSpec& f) {
        if (f.mode == FailureMode::edge) {
            for (const Edge& e : f.edges) dead_[ndead_++] = e;
        } else {
            for (Vertex x : f.vertices) blocked_[x] = 1;
        }
    }

    const Graph* g_;
    std::array<Edge, 2> dead_{};
    int ndead_ = 0;
    std::vector<char> blocked_;
};

inline GraphView remove_failures(const Graph& g, const FailureSpec& f) {
    return GraphView(g, f);
}

}  // namespace ftbfs
