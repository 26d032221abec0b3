#pragma once

// JSON shapes for every report the tools emit. One function per report type;
// all field names fixed here and nowhere else. Distances of unreachable
// targets serialize as null. elapsedMs is the only volatile field; strip it
// before comparing two documents for byte equality.

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "builder.hpp"
#include "graph.hpp"
#include "scale.hpp"
#include "spanner.hpp"
#include "verifier.hpp"

namespace ftbfs {

using nlohmann::json;

inline json json_failure(const FailureSpec& f) {
    json items = json::array();
    if (f.mode == FailureMode::edge)
        for (const Edge& e : f.edges) items.push_back({e.u, e.v});
    else
        for (Vertex x : f.vertices) items.push_back(x);
    return {{"mode", failure_mode_name(f.mode)}, {"items", items}};
}

inline json json_distance(int d) { return d == kInf ? json(nullptr) : json(d); }

inline json json_witness(const DistanceWitness& w) {
    return {{"failure", json_failure(w.failure)},
            {"source", w.source},
            {"target", w.target},
            {"distGraph", json_distance(w.dist_g)},
            {"distSubgraph", json_distance(w.dist_h)}};
}

inline json json_edges(const std::set<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

inline json json_size_report(const SizeReport& r) {
    return {{"edges", r.edges},   {"n", r.n},         {"k", r.k},
            {"sigma", r.sigma},   {"bound", r.bound}, {"ratio", r.ratio},
            {"perTargetMax", r.per_target_max}};
}

inline json json_build_summary(const Graph& g, const FtStructure& st) {
    long processed = 0, contributed = 0, unreachable = 0, duplicate = 0;
    for (const auto& [v, o] : st.outcomes) {
        processed += o.processed;
        contributed += o.contributed;
        unreachable += o.unreachable;
        duplicate += o.duplicate;
    }
    return {{"n", st.n},
            {"directed", st.directed},
            {"graphEdges", g.edge_count()},
            {"sources", st.params.sources},
            {"k", st.params.k},
            {"mode", failure_mode_name(st.params.mode)},
            {"targets", st.targets.size()},
            {"assignments", st.assignments.size()},
            {"processed", processed},
            {"contributed", contributed},
            {"unreachable", unreachable},
            {"duplicate", duplicate},
            {"size", json_size_report(structure_stats(st))}};
}

// Sidecar: every contributing assignment, sorted by (target, source,
// failure) so the document is independent of build order.
inline json json_assignments(const FtStructure& st) {
    std::vector<const Assignment*> order;
    for (const Assignment& a : st.assignments) order.push_back(&a);
    std::sort(order.begin(), order.end(), [](const Assignment* a, const Assignment* b) {
        if (a->target != b->target) return a->target < b->target;
        if (a->source != b->source) return a->source < b->source;
        return a->failure < b->failure;
    });
    json rows = json::array();
    for (const Assignment* a : order)
        rows.push_back({{"target", a->target},
                        {"source", a->source},
                        {"failure", json_failure(a->failure)},
                        {"path", a->path.vertices},
                        {"lastEdge", {a->last_edge.u, a->last_edge.v}}});
    return {{"params",
             {{"sources", st.params.sources},
              {"k", st.params.k},
              {"mode", failure_mode_name(st.params.mode)},
              {"n", st.n},
              {"directed", st.directed}}},
            {"assignments", rows}};
}

inline json json_verification(const VerificationReport& r) {
    json witnesses = json::array();
    for (const DistanceWitness& w : r.witnesses) witnesses.push_back(json_witness(w));
    return {{"pass", r.pass},
            {"checked", r.checked},
            {"failureSets", r.failure_sets},
            {"sampled", r.sampled},
            {"requested", r.requested},
            {"seed", r.seed},
            {"subgraphEdges", r.h_edges},
            {"bound", r.bound},
            {"ratio", r.ratio},
            {"witnesses", witnesses},
            {"elapsedMs", r.elapsed_ms}};
}

inline json json_analysis(const AnalysisReport& r) {
    json targets = json::array();
    for (const TargetReport& t : r.targets) {
        json hist = json::object();
        for (const auto& [len, count] : t.length_histogram)
            hist[std::to_string(len)] = count;
        targets.push_back({{"target", t.target},
                           {"classCounts", t.class_counts},
                           {"legOk", t.leg_ok},
                           {"convOk", t.conv_ok},
                           {"distinctOk", t.distinct_ok},
                           {"ceilingOk", t.ceiling_ok},
                           {"segmentsOk", t.segments_ok},
                           {"segmentCount", t.segment_count},
                           {"multifailP0", t.multifail_p0},
                           {"baseConv", t.base_conv},
                           {"mdConv", t.md_conv},
                           {"mdUndefined", t.md_undefined},
                           {"lengthHistogram", hist},
                           {"violations", t.violations}});
    }
    return {{"allOk", r.all_ok},
            {"pathsClassified", r.paths_classified},
            {"classTotals", r.class_totals},
            {"maxMultifailP0", r.max_multifail_p0},
            {"targets", targets}};
}

inline json json_spanner(const SpannerResult& r) {
    return {{"sigma", r.sigma},
            {"degreeCap", r.selection.degree_cap},
            {"sources", r.selection.sources},
            {"sampled", r.selection.sampled},
            {"repaired", r.selection.repaired},
            {"lightEdges", r.light_edges},
            {"structureEdges", r.structure_edges},
            {"edges", r.edges.size()},
            {"bound", r.bound},
            {"ratio", r.ratio}};
}

inline json json_stretch(const StretchReport& r) {
    json witnesses = json::array();
    for (const DistanceWitness& w : r.witnesses) witnesses.push_back(json_witness(w));
    return {{"pass", r.pass},
            {"checked", r.checked},
            {"failureSets", r.failure_sets},
            {"sampled", r.sampled},
            {"requested", r.requested},
            {"seed", r.seed},
            {"witnesses", witnesses},
            {"elapsedMs", r.elapsed_ms}};
}

inline json json_scale(const ScaleReport& r) {
    json rows = json::array();
    for (const ScaleRow& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"trial", row.trial},
                        {"seed", row.seed},
                        {"edges", row.edges},
                        {"bound", row.bound},
                        {"ratio", row.ratio}});
    json aggregates = json::array();
    for (const ScaleAggregate& a : r.aggregates)
        aggregates.push_back({{"n", a.n},
                              {"meanRatio", a.mean_ratio},
                              {"maxRatio", a.max_ratio},
                              {"maxEdges", a.max_edges}});
    json config = {{"sizes", r.config.sizes},
                   {"trials", r.config.trials},
                   {"baseSeed", r.config.base_seed},
                   {"model", graph_model_name(r.config.model)},
                   {"sigma", r.config.sigma},
                   {"k", r.config.k},
                   {"mode", failure_mode_name(r.config.mode)}};
    if (r.config.p) config["p"] = *r.config.p;
    return {{"config", config}, {"rows", rows}, {"aggregates", aggregates}};
}

// Removes timing fields, recursively, so two runs can be compared bytewise.
inline void strip_volatile(json& doc) {
    if (doc.is_object()) {
        doc.erase("elapsedMs");
        for (auto& [k, v] : doc.items()) strip_volatile(v);
    } else if (doc.is_array()) {
        for (auto& v : doc) strip_volatile(v);
    }
}

}  // namespace ftbfs
