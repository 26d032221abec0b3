#pragma once

// Structural analysis of built structures. Contributing paths are matched
// back to their schedule, classified by where the two failures sit relative
// to the base path and its first detour, and the per-class families are
// checked for the structural properties the size argument rests on:
// disjoint last legs, converging detours, pairwise-distinct lengths, a
// bounded segment decomposition, and (multi-source) converging modified
// detours. Checks report violations as witnesses; they never repair.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bfs.hpp"
#include "builder.hpp"
#include "graph.hpp"
#include "paths.hpp"

namespace ftbfs {

// Integer-exact thresholds. ceil((n/sigma)^(1/3)) is the least t with
// t^3 * sigma >= n; no floating point, so classification never wobbles on
// exact cubes.
inline int ceil_cbrt_ratio(long long n, long long sigma) {
    int t = 1;
    while (static_cast<long long>(t) * t * t * sigma < n) ++t;
    return t;
}

inline int ceil_cbrt_sq_ratio(long long n, long long sigma) {
    int t = 1;
    while (static_cast<long long>(t) * t * t * sigma * sigma < n * n) ++t;
    return t;
}

inline int ceil_fourth_root(long long n) {
    int t = 1;
    while (static_cast<long long>(t) * t * t * t < n) ++t;
    return t;
}

inline int ceil_sqrt(long long n) {
    int t = 1;
    while (static_cast<long long>(t) * t < n) ++t;
    return t;
}

enum class PathClass {
    base,
    single,
    excluded_multifail_p0,
    non_standard,
    long_standard,
    short_standard,
};

inline const char* path_class_name(PathClass c) {
    switch (c) {
        case PathClass::base: return "base";
        case PathClass::single: return "single";
        case PathClass::excluded_multifail_p0: return "excludedMultifailP0";
        case PathClass::non_standard: return "nonStandard";
        case PathClass::long_standard: return "longStandard";
        case PathClass::short_standard: return "shortStandard";
    }
    return "?";
}

inline std::string failure_brief(const FailureSpec& f) {
    std::ostringstream out;
    if (f.mode == FailureMode::edge) {
        for (std::size_t i = 0; i < f.edges.size(); ++i) {
            if (i) out << '+';
            out << 'e' << f.edges[i].u << '-' << f.edges[i].v;
        }
    } else {
        for (std::size_t i = 0; i < f.vertices.size(); ++i) {
            if (i) out << '+';
            out << 'v' << f.vertices[i];
        }
    }
    if (f.empty()) out << "none";
    return out.str();
}

struct ClassifiedPath {
    int assignment = -1;  // index into st.assignments
    int entry = -1;       // chain entry of the first failure; -1 for the base path
    int e2_pos = -1;      // pairs: second element position on that entry's p1
    PathClass cls = PathClass::base;
    std::optional<DetourSpan> d1;  // last span off (p0 union p1), on the path itself
    int lp_entry = -2;             // -2 unset, -1 last contact on base path, else chain entry index
    int leg_start = -1;            // position of the last-leg start vertex on the path
};

struct TargetAnalysis {
    Vertex source = -1;
    Vertex target = -1;
    BaseChain chain;
    std::vector<ClassifiedPath> paths;  // one per contributing assignment of (source,target)
    int vl_pos = 0;
    int split_threshold = 0;  // ceil((n/sigma)^(1/3)), edges below the split vertex
    int long_threshold = 0;   // ceil((n/sigma)^(2/3)), detour length separating long from short
};

namespace detail {

inline bool second_element_in_detour(FailureMode mode, const std::optional<DetourSpan>& span,
                                     int e2_pos) {
    if (!span) return false;
    if (mode == FailureMode::edge) return e2_pos >= span->first && e2_pos <= span->last - 1;
    return e2_pos > span->first && e2_pos < span->last;
}

inline PathClass classify_pair(const Graph&, const TargetAnalysis& ta, FailureMode mode,
                               const ChainEntry& entry, int e2_pos) {
    if (!second_element_in_detour(mode, entry.d0, e2_pos))
        return PathClass::excluded_multifail_p0;
    const std::vector<Vertex>& p0 = ta.chain.p0.vertices;
    const bool e1_high = mode == FailureMode::edge ? entry.e1_pos <= ta.vl_pos - 1
                                                   : entry.e1_pos <= ta.vl_pos;
    const Vertex dest = entry.p1->vertices[entry.d0->last];
    const auto dest_pos = vertex_position_on_path(p0, dest);
    const bool dest_low = dest_pos && *dest_pos >= ta.vl_pos;
    if (!e1_high || !dest_low) return PathClass::non_standard;
    return entry.d0->edge_count() >= ta.long_threshold ? PathClass::long_standard
                                                       : PathClass::short_standard;
}

}  // namespace detail

// Rebuilds the schedule of every (source, target) pair and matches the
// structure's contributing assignments back to it. Returns one analysis per
// source that reaches the target.
inline std::vector<TargetAnalysis> extract_contributing(const Graph& g, const FtStructure& st,
                                                        Vertex target) {
    std::vector<TargetAnalysis> out;
    const int sigma = static_cast<int>(st.params.sources.size());
    for (Vertex s : st.params.sources) {
        if (s == target) continue;
        const GraphView whole = remove_failures(g, FailureSpec::none(st.params.mode));
        if (bfs_distances(whole, s)[target] == kInf) continue;

        TargetAnalysis ta;
        ta.source = s;
        ta.target = target;
        FailureSchedule sched =
            build_failure_schedule(g, s, target, st.params.k, st.params.mode, st.params.sources);
        ta.chain = std::move(sched.chain);
        ta.split_threshold = ceil_cbrt_ratio(g.vertex_count(), sigma);
        ta.long_threshold = ceil_cbrt_sq_ratio(g.vertex_count(), sigma);
        ta.vl_pos = std::max(0, ta.chain.p0.length() - ta.split_threshold);

        // Assignments for (s, target) appear in schedule order, so a single
        // forward walk pairs them up.
        std::vector<int> mine;
        for (int ai = 0; ai < static_cast<int>(st.assignments.size()); ++ai)
            if (st.assignments[ai].target == target && st.assignments[ai].source == s)
                mine.push_back(ai);
        std::size_t next = 0;
        for (const ScheduledFailure& sf : sched.order) {
            if (next >= mine.size()) break;
            const Assignment& a = st.assignments[mine[next]];
            if (!(a.failure == sf.spec)) continue;
            ++next;
            ClassifiedPath cp;
            cp.assignment = mine[next - 1];
            cp.entry = sf.entry;
            cp.e2_pos = sf.e2_pos;
            if (sf.spec.empty()) {
                cp.cls = PathClass::base;
            } else if (sf.spec.size() == 1) {
                cp.cls = PathClass::single;
            } else {
                const ChainEntry& entry = ta.chain.entries[sf.entry];
                cp.cls = detail::classify_pair(g, ta, st.params.mode, entry, sf.e2_pos);
                cp.d1 = last_detour_span(a.path.vertices,
                                         {&ta.chain.p0.vertices, &entry.p1->vertices});
            }
            ta.paths.push_back(cp);
        }
        if (next != mine.size())
            throw std::logic_error("analysis: assignment not found in schedule");

        // Last legs: the suffix after the path's final contact with the base
        // path or any carrier of its class. Nothing of that union may appear
        // on the leg, or two legs could cross and split without one of them
        // running through the other's failure. The carrier wins position
        // ties, in ascending chain order.
        const std::set<Vertex> p0v(ta.chain.p0.vertices.begin(), ta.chain.p0.vertices.end());
        for (PathClass cls :
             {PathClass::non_standard, PathClass::long_standard, PathClass::short_standard}) {
            std::vector<int> family;
            for (const ClassifiedPath& cp : ta.paths)
                if (cp.cls == cls &&
                    std::find(family.begin(), family.end(), cp.entry) == family.end())
                    family.push_back(cp.entry);
            std::sort(family.begin(), family.end());
            std::vector<std::set<Vertex>> member_verts;
            for (int ei : family) {
                const auto& p1 = ta.chain.entries[ei].p1->vertices;
                member_verts.emplace_back(p1.begin(), p1.end());
            }
            for (ClassifiedPath& cp : ta.paths) {
                if (cp.cls != cls) continue;
                const auto& verts = st.assignments[cp.assignment].path.vertices;
                const int len = static_cast<int>(verts.size()) - 1;
                int best_pos = -1;
                int best_entry = -2;
                for (std::size_t fi = 0; fi < family.size(); ++fi) {
                    for (int i = len - 1; i >= 0; --i) {
                        if (member_verts[fi].count(verts[i])) {
                            if (i > best_pos) {
                                best_pos = i;
                                best_entry = family[fi];
                            }
                            break;
                        }
                    }
                }
                for (int i = len - 1; i > best_pos; --i)
                    if (p0v.count(verts[i])) {
                        best_pos = i;
                        best_entry = -1;
                        break;
                    }
                cp.lp_entry = best_entry;
                cp.leg_start = best_pos;
            }
        }
        out.push_back(std::move(ta));
    }
    return out;
}

struct CheckResult {
    bool pass = true;
    std::vector<std::string> violations;

    void fail(const std::string& why) {
        pass = false;
        violations.push_back(why);
    }
};

// Within each class: the last legs of two contributing paths may share the
// target but nothing else, and in particular never their starting vertex.
inline CheckResult check_last_leg_disjointness(const FtStructure& st, const TargetAnalysis& ta) {
    CheckResult r;
    for (PathClass cls :
         {PathClass::non_standard, PathClass::long_standard, PathClass::short_standard}) {
        std::vector<const ClassifiedPath*> group;
        for (const ClassifiedPath& cp : ta.paths)
            if (cp.cls == cls) group.push_back(&cp);
        for (std::size_t a = 0; a < group.size(); ++a) {
            const auto& pa = st.assignments[group[a]->assignment];
            const std::vector<Vertex> leg_a(pa.path.vertices.begin() + group[a]->leg_start,
                                            pa.path.vertices.end());
            const std::set<Vertex> set_a(leg_a.begin(), leg_a.end());
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                const auto& pb = st.assignments[group[b]->assignment];
                const std::vector<Vertex> leg_b(pb.path.vertices.begin() + group[b]->leg_start,
                                                pb.path.vertices.end());
                if (leg_a.front() == leg_b.front())
                    r.fail(std::string(path_class_name(cls)) + ": legs of " +
                           failure_brief(pa.failure) + " and " + failure_brief(pb.failure) +
                           " start at the same vertex " + std::to_string(leg_a.front()));
                for (Vertex x : leg_b)
                    if (x != ta.target && set_a.count(x))
                        r.fail(std::string(path_class_name(cls)) + ": legs of " +
                               failure_brief(pa.failure) + " and " + failure_brief(pb.failure) +
                               " share vertex " + std::to_string(x));
            }
        }
    }
    return r;
}

// Two paths converge when, from their first common vertex on, they are the
// same sequence. Tails must line up exactly; a later split is a violation.
inline bool converging(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    const std::set<Vertex> bs(b.begin(), b.end());
    std::size_t i = 0;
    while (i < a.size() && !bs.count(a[i])) ++i;
    if (i == a.size()) return true;
    std::size_t j = 0;
    while (b[j] != a[i]) ++j;
    if (a.size() - i != b.size() - j) return false;
    for (; i < a.size(); ++i, ++j)
        if (a[i] != b[j]) return false;
    return true;
}

// The detour continuations (first-detour start to target) of the standard
// classes must pairwise converge.
inline CheckResult check_detour_convergence(const FtStructure&, const TargetAnalysis& ta) {
    CheckResult r;
    std::vector<int> family;
    for (const ClassifiedPath& cp : ta.paths)
        if ((cp.cls == PathClass::long_standard || cp.cls == PathClass::short_standard) &&
            std::find(family.begin(), family.end(), cp.entry) == family.end())
            family.push_back(cp.entry);
    std::sort(family.begin(), family.end());
    std::vector<std::vector<Vertex>> tails;
    for (int ei : family) {
        const ChainEntry& e = ta.chain.entries[ei];
        tails.emplace_back(e.p1->vertices.begin() + e.d0->first, e.p1->vertices.end());
    }
    for (std::size_t a = 0; a < tails.size(); ++a)
        for (std::size_t b = a + 1; b < tails.size(); ++b)
            if (!converging(tails[a], tails[b]))
                r.fail("detours of " + failure_brief(ta.chain.entries[family[a]].single) +
                       " and " + failure_brief(ta.chain.entries[family[b]].single) +
                       " cross without merging");
    return r;
}

struct LengthCheck {
    bool distinct = true;
    bool ceiling = true;
    std::map<int, int> histogram;
    std::vector<std::string> violations;
};

// Standard-class paths at one target have pairwise distinct lengths, and the
// short class stays within three long-thresholds of the base path.
inline LengthCheck check_distinct_lengths(const FtStructure& st, const TargetAnalysis& ta) {
    LengthCheck r;
    for (const ClassifiedPath& cp : ta.paths) {
        if (cp.cls != PathClass::long_standard && cp.cls != PathClass::short_standard) continue;
        const Assignment& a = st.assignments[cp.assignment];
        ++r.histogram[a.path.length()];
        if (cp.cls == PathClass::short_standard &&
            a.path.length() > ta.chain.p0.length() + 3 * ta.long_threshold) {
            r.ceiling = false;
            r.violations.push_back("short path " + failure_brief(a.failure) + " has length " +
                                   std::to_string(a.path.length()) + " over base " +
                                   std::to_string(ta.chain.p0.length()));
        }
    }
    for (const auto& [len, count] : r.histogram)
        if (count > 1) {
            r.distinct = false;
            r.violations.push_back("length " + std::to_string(len) + " used by " +
                                   std::to_string(count) + " standard paths");
        }
    return r;
}

// Contributing pairs whose second failure sits back on the base path.
inline int multifail_p0_count(const Graph& g, const FtStructure& st, const TargetAnalysis& ta) {
    int count = 0;
    for (const ClassifiedPath& cp : ta.paths) {
        if (cp.e2_pos < 0) continue;
        const ChainEntry& entry = ta.chain.entries[cp.entry];
        const auto& p1 = entry.p1->vertices;
        if (st.params.mode == FailureMode::edge) {
            const Edge e2 = canonical_edge(p1[cp.e2_pos], p1[cp.e2_pos + 1], g.directed());
            if (edge_position_on_path(g, ta.chain.p0.vertices, e2)) ++count;
        } else {
            if (vertex_position_on_path(ta.chain.p0.vertices, p1[cp.e2_pos])) ++count;
        }
    }
    return count;
}

// ---------------------------------------------------------------------------
// Converging-family segment decomposition.
//
// A pairwise-converging family of paths into one target forms an in-tree:
// every shared vertex has one outgoing continuation. Segments are the
// maximal chains between cut vertices (path starts, merge points, target).
// A family of f paths yields at most 2f segments: each segment starts at a
// path start or strictly below a merge vertex, and an in-tree with at most
// f leaves has fewer than f internal merge points.

struct SegmentDecomposition {
    bool converging = true;
    int witness_a = -1;  // offending pair when not converging
    int witness_b = -1;
    int family = 0;  // deduplicated size
    std::vector<std::vector<Vertex>> segments;
    std::vector<std::optional<std::vector<Vertex>>> representatives;
    std::vector<std::optional<Vertex>> rep_anchor;
    bool count_ok = true;
};

inline SegmentDecomposition compute_segments(const Graph& g,
                                             const std::vector<std::vector<Vertex>>& family_in) {
    SegmentDecomposition r;
    std::vector<std::vector<Vertex>> family;
    for (const auto& p : family_in) {
        if (p.size() < 2) continue;
        if (std::find(family.begin(), family.end(), p) == family.end()) family.push_back(p);
    }
    r.family = static_cast<int>(family.size());
    if (family.empty()) return r;

    const Vertex target = family.front().back();
    for (const auto& p : family)
        if (p.back() != target)
            throw std::invalid_argument("segments: family members end at different targets");

    // In-tree: next-vertex map; a conflict is exactly a convergence failure.
    std::map<Vertex, std::pair<Vertex, int>> next;
    std::map<Vertex, std::set<Vertex>> prev;
    for (int pi = 0; pi < static_cast<int>(family.size()); ++pi) {
        const auto& p = family[pi];
        for (std::size_t t = 0; t + 1 < p.size(); ++t) {
            auto it = next.find(p[t]);
            if (it != next.end() && it->second.first != p[t + 1]) {
                r.converging = false;
                r.witness_a = it->second.second;
                r.witness_b = pi;
                return r;
            }
            next[p[t]] = {p[t + 1], pi};
            prev[p[t + 1]].insert(p[t]);
        }
    }

    std::set<Vertex> cuts;
    for (const auto& p : family) cuts.insert(p.front());
    for (const auto& [x, kids] : prev)
        if (kids.size() >= 2) cuts.insert(x);

    for (Vertex c : cuts) {
        if (c == target) continue;
        std::vector<Vertex> seg{c};
        Vertex cur = c;
        do {
            cur = next.at(cur).first;
            seg.push_back(cur);
        } while (cur != target && !cuts.count(cur));
        r.segments.push_back(std::move(seg));
    }
    r.count_ok = static_cast<int>(r.segments.size()) <= 2 * r.family;

    // Representative: the lex-smallest shortest start->target path avoiding
    // everything strictly below the segment (the tree suffix from its end),
    // plus where that path last touches the segment.
    for (const auto& seg : r.segments) {
        std::vector<char> blocked(g.vertex_count(), 0);
        Vertex cur = seg.back();
        while (cur != target) {
            blocked[cur] = 1;
            cur = next.at(cur).first;
        }
        GraphView view(g, FailureSpec::none(FailureMode::edge), std::move(blocked));
        auto rep = lex_shortest_path(view, seg.front(), target);
        if (!rep) {
            r.representatives.emplace_back(std::nullopt);
            r.rep_anchor.emplace_back(std::nullopt);
            continue;
        }
        const std::set<Vertex> seg_set(seg.begin(), seg.end());
        Vertex anchor = rep->front();
        for (auto it = rep->rbegin(); it != rep->rend(); ++it)
            if (seg_set.count(*it)) {
                anchor = *it;
                break;
            }
        r.representatives.emplace_back(std::move(rep));
        r.rep_anchor.emplace_back(anchor);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Multi-source machinery: anchor paths and modified detours.

struct ModifiedDetourReport {
    std::vector<std::vector<Vertex>> base_family;  // base paths of all reaching sources
    bool base_converging = true;
    std::vector<std::vector<Vertex>> md_family;
    bool md_converging = true;
    int undefined = 0;  // standard detours with no eligible anchor path
    std::vector<std::string> violations;
};

// The anchor path of a replacement path P1 is the base path (over all
// sources) from which P1 departs last, among those still carrying P1's
// failure beyond the departure; the modified detour is P1 from that
// departure on. With one source this is exactly the first-detour
// continuation whenever the failure lies beyond the departure.
inline ModifiedDetourReport compute_modified_detours(const Graph& g, const FtStructure& st,
                                                     const std::vector<TargetAnalysis>& tas) {
    ModifiedDetourReport r;
    for (const TargetAnalysis& ta : tas) r.base_family.push_back(ta.chain.p0.vertices);

    for (std::size_t a = 0; a < r.base_family.size(); ++a)
        for (std::size_t b = a + 1; b < r.base_family.size(); ++b)
            if (!converging(r.base_family[a], r.base_family[b])) {
                r.base_converging = false;
                r.violations.push_back("base paths of sources " +
                                       std::to_string(tas[a].source) + " and " +
                                       std::to_string(tas[b].source) + " cross without merging");
            }

    for (const TargetAnalysis& ta : tas) {
        std::vector<int> family;
        for (const ClassifiedPath& cp : ta.paths)
            if ((cp.cls == PathClass::long_standard || cp.cls == PathClass::short_standard) &&
                std::find(family.begin(), family.end(), cp.entry) == family.end())
                family.push_back(cp.entry);
        std::sort(family.begin(), family.end());
        for (int ei : family) {
            const ChainEntry& entry = ta.chain.entries[ei];
            const auto& p1 = entry.p1->vertices;
            int best_y = -1;
            for (const TargetAnalysis& ta2 : tas) {
                const auto& q = ta2.chain.p0.vertices;
                const std::set<Vertex> qv(q.begin(), q.end());
                int y = -1;
                for (int t = static_cast<int>(p1.size()) - 2; t >= 0; --t)
                    if (qv.count(p1[t]) && !qv.count(p1[t + 1])) {
                        y = t;
                        break;
                    }
                if (y < 0) continue;
                const auto pos_y = vertex_position_on_path(q, p1[y]);
                bool eligible = false;
                if (st.params.mode == FailureMode::edge) {
                    const auto fpos = edge_position_on_path(g, q, entry.single.edges[0]);
                    eligible = fpos && *fpos >= *pos_y;
                } else {
                    const auto fpos = vertex_position_on_path(q, entry.single.vertices[0]);
                    eligible = fpos && *fpos >= *pos_y;
                }
                if (eligible && y > best_y) best_y = y;  // first source wins ties
            }
            if (best_y < 0) {
                ++r.undefined;
                continue;
            }
            r.md_family.emplace_back(p1.begin() + best_y, p1.end());
        }
    }

    for (std::size_t a = 0; a < r.md_family.size(); ++a)
        for (std::size_t b = a + 1; b < r.md_family.size(); ++b)
            if (!converging(r.md_family[a], r.md_family[b])) {
                r.md_converging = false;
                r.violations.push_back("modified detours cross without merging");
            }
    return r;
}

// ---------------------------------------------------------------------------
// Whole-structure report.

struct TargetReport {
    Vertex target = -1;
    std::map<std::string, int> class_counts;
    bool leg_ok = true;
    bool conv_ok = true;
    bool distinct_ok = true;
    bool ceiling_ok = true;
    bool segments_ok = true;
    int segment_count = 0;
    int multifail_p0 = 0;  // max over sources
    bool base_conv = true;
    bool md_conv = true;
    int md_undefined = 0;
    std::map<int, int> length_histogram;
    std::vector<std::string> violations;
};

struct AnalysisReport {
    std::vector<TargetReport> targets;
    long paths_classified = 0;
    std::map<std::string, long> class_totals;
    bool all_ok = true;
    int max_multifail_p0 = 0;
};

inline AnalysisReport analyze_structure(const Graph& g, const FtStructure& st) {
    AnalysisReport report;
    const bool multi = st.params.sources.size() > 1;
    for (Vertex target : st.targets) {
        const std::vector<TargetAnalysis> tas = extract_contributing(g, st, target);
        if (tas.empty()) continue;
        TargetReport tr;
        tr.target = target;
        for (const TargetAnalysis& ta : tas) {
            for (const ClassifiedPath& cp : ta.paths) {
                ++tr.class_counts[path_class_name(cp.cls)];
                ++report.class_totals[path_class_name(cp.cls)];
                ++report.paths_classified;
            }
            const CheckResult legs = check_last_leg_disjointness(st, ta);
            tr.leg_ok = tr.leg_ok && legs.pass;
            const CheckResult conv = check_detour_convergence(st, ta);
            tr.conv_ok = tr.conv_ok && conv.pass;
            const LengthCheck lens = check_distinct_lengths(st, ta);
            tr.distinct_ok = tr.distinct_ok && lens.distinct;
            tr.ceiling_ok = tr.ceiling_ok && lens.ceiling;
            for (const auto& [len, count] : lens.histogram) tr.length_histogram[len] += count;
            tr.multifail_p0 = std::max(tr.multifail_p0, multifail_p0_count(g, st, ta));
            for (const auto& v : legs.violations) tr.violations.push_back(v);
            for (const auto& v : conv.violations) tr.violations.push_back(v);
            for (const auto& v : lens.violations) tr.violations.push_back(v);

            // Per-source standard-detour family decomposition.
            std::vector<int> family;
            for (const ClassifiedPath& cp : ta.paths)
                if ((cp.cls == PathClass::long_standard ||
                     cp.cls == PathClass::short_standard) &&
                    std::find(family.begin(), family.end(), cp.entry) == family.end())
                    family.push_back(cp.entry);
            std::sort(family.begin(), family.end());
            std::vector<std::vector<Vertex>> tails;
            for (int ei : family) {
                const ChainEntry& e = ta.chain.entries[ei];
                tails.emplace_back(e.p1->vertices.begin() + e.d0->first, e.p1->vertices.end());
            }
            const SegmentDecomposition seg = compute_segments(g, tails);
            tr.segments_ok = tr.segments_ok && seg.converging && seg.count_ok;
            tr.segment_count += static_cast<int>(seg.segments.size());
        }
        if (multi) {
            const ModifiedDetourReport md = compute_modified_detours(g, st, tas);
            tr.base_conv = md.base_converging;
            tr.md_conv = md.md_converging;
            tr.md_undefined = md.undefined;
            for (const auto& v : md.violations) tr.violations.push_back(v);
            const SegmentDecomposition bseg = compute_segments(g, md.base_family);
            const SegmentDecomposition mseg = compute_segments(g, md.md_family);
            tr.segments_ok = tr.segments_ok && bseg.converging && bseg.count_ok &&
                             mseg.converging && mseg.count_ok;
            tr.segment_count += static_cast<int>(bseg.segments.size()) +
                                static_cast<int>(mseg.segments.size());
        }
        report.max_multifail_p0 = std::max(report.max_multifail_p0, tr.multifail_p0);
        report.all_ok = report.all_ok && tr.leg_ok && tr.conv_ok && tr.distinct_ok &&
                        tr.ceiling_ok && tr.segments_ok && tr.base_conv && tr.md_conv;
        report.targets.push_back(std::move(tr));
    }
    return report;
}

}  // namespace ftbfs
