#include <catch2/catch_amalgamated.hpp>

#include <ftbfs/analysis.hpp>
#include <ftbfs/builder.hpp>
#include <ftbfs/oracle.hpp>
#include <ftbfs/report_json.hpp>
#include <ftbfs/scale.hpp>
#include <ftbfs/spanner.hpp>
#include <ftbfs/verifier.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace ftbfs;

// Frozen regression guards, calibrated once against this implementation:
// structure ratios peak around 0.38 on the sweep corpus and 0.21 on the
// n=40 instances; spanner ratios peak around 0.40.
namespace {

constexpr double kRatioGuard = 4.0;
constexpr double kSpannerRatioGuard = 2.0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << std::endl;
}

VerificationReport build_and_verify(const Graph& g, const std::vector<Vertex>& sources, int k,
                                    FailureMode mode) {
    const FtStructure st = build_ft_mbfs(g, sources, k, mode);
    const Graph h = structure_graph(st);
    const auto fe = enumerate_failure_sets(
        g, mode, k, mode == FailureMode::vertex ? sources : std::vector<Vertex>{});
    return verify_structure(g, h, sources, k, fe);
}

}  // namespace

TEST_CASE("criterion 1: exhaustive dual-failure correctness") {
    long witnesses = 0;
    long sets = 0;
    double max_ratio = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = gen_graph(GraphModel::gnp, 40, 0.15, seed);
        const auto r = build_and_verify(g, {0}, 2, FailureMode::edge);
        witnesses += static_cast<long>(r.witnesses.size());
        sets += r.failure_sets;
        max_ratio = std::max(max_ratio, r.ratio);
    }
    const bool ok = witnesses == 0 && max_ratio <= kRatioGuard;
    std::ostringstream d;
    d << "0 distance mismatches over 10 builds (n=40, two edge failures, " << sets
      << " failure sets total, max size ratio " << max_ratio << ")";
    report(1, ok, witnesses == 0 ? d.str() : std::to_string(witnesses) + " distance mismatches");
    CHECK(ok);
}

TEST_CASE("criterion 2: directed, vertex-failure, and multi-source variants") {
    long witnesses = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Graph dir = gen_graph(GraphModel::gnp, 30, 0.2, seed, true);
        witnesses += static_cast<long>(
            build_and_verify(dir, {0}, 2, FailureMode::edge).witnesses.size());

        const Graph und = gen_graph(GraphModel::gnp, 30, 0.2, seed);
        witnesses += static_cast<long>(
            build_and_verify(und, {0}, 2, FailureMode::vertex).witnesses.size());
        witnesses += static_cast<long>(
            build_and_verify(und, {0, 1, 2}, 2, FailureMode::edge).witnesses.size());
    }
    const bool ok = witnesses == 0;
    report(2, ok,
           ok ? "0 distance mismatches across directed, vertex-failure, and 3-source runs "
                "(n=30, 3 seeds each, exhaustive)"
              : std::to_string(witnesses) + " distance mismatches");
    CHECK(ok);
}

TEST_CASE("criterion 3: path selector agrees with the brute-force oracle") {
    long mismatches = 0;
    long compared = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Graph g = gen_graph(GraphModel::gnp, 10, 0.3, seed);
        for (FailureMode mode : {FailureMode::edge, FailureMode::vertex}) {
            const auto fe = enumerate_failure_sets(g, mode, 2);
            for (Vertex v = 1; v < g.vertex_count(); ++v) {
                for (const FailureSpec& f : fe.sets) {
                    const auto engine = preferred_for_failure_set(g, mode, 0, v, f);
                    const auto truth = oracle::preferred(g, mode, 0, v, f);
                    ++compared;
                    if (engine.has_value() != truth.has_value() ||
                        (engine && engine->vertices != *truth))
                        ++mismatches;
                }
            }
        }
    }
    const bool ok = mismatches == 0;
    std::ostringstream d;
    d << "selector identical to oracle on " << compared
      << " (failure set, target) queries (100 seeds, both failure modes)";
    report(3, ok, ok ? d.str() : std::to_string(mismatches) + " oracle disagreements");
    CHECK(ok);
}

TEST_CASE("criterion 4: structure size scales below the bound") {
    bool ok = true;
    std::ostringstream d;
    for (int k : {2, 1}) {
        ScaleConfig cfg;
        cfg.sizes = {25, 50, 100, 200};
        cfg.trials = 5;
        cfg.base_seed = 1;
        cfg.k = k;
        const ScaleReport rep = run_scale(cfg);
        double max_ratio = 0.0;
        for (const ScaleRow& row : rep.rows) max_ratio = std::max(max_ratio, row.ratio);
        bool strictly_growing = true;
        for (std::size_t i = 1; i < rep.aggregates.size(); ++i)
            strictly_growing =
                strictly_growing && rep.aggregates[i].mean_ratio > rep.aggregates[i - 1].mean_ratio;
        ok = ok && max_ratio <= kRatioGuard && !strictly_growing;
        d << "k=" << k << " max ratio " << max_ratio << " mean "
          << rep.aggregates.front().mean_ratio << "->" << rep.aggregates.back().mean_ratio
          << (k == 2 ? ", " : "");
    }
    report(4, ok, d.str() + " (n up to 200, 5 trials, guard " + std::to_string(kRatioGuard) + ")");
    CHECK(ok);
}

TEST_CASE("criterion 5: structural properties hold on seeded builds") {
    int bad_single = 0;
    int bad_multi = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Graph g = gen_graph(GraphModel::gnp, 30, 0.2, seed);
        const FtStructure st = build_ft_structure(g, 0, 2, FailureMode::edge);
        if (!analyze_structure(g, st).all_ok) ++bad_single;
    }
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Graph g = gen_graph(GraphModel::gnp, 30, 0.2, seed);
        const FtStructure st = build_ft_mbfs(g, {0, 1, 2}, 2, FailureMode::edge);
        const AnalysisReport rep = analyze_structure(g, st);
        bool conv = rep.all_ok;
        for (const TargetReport& tr : rep.targets) conv = conv && tr.base_conv && tr.md_conv;
        if (!conv) ++bad_multi;
    }
    const bool ok = bad_single == 0 && bad_multi == 0;
    report(5, ok,
           ok ? "last-leg disjointness, detour convergence, distinct lengths, length ceiling, "
                "and segment counts hold on 100 single-source and 25 three-source builds (n=30)"
              : std::to_string(bad_single) + " single-source and " + std::to_string(bad_multi) +
                    " multi-source builds failed a check");
    CHECK(ok);
}

TEST_CASE("criterion 6: spanner keeps +2 stretch under two failures") {
    long witnesses = 0;
    double max_ratio = 0.0;
    long checked = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Graph g = gen_graph(GraphModel::gnp, 24, 0.35, seed);
        const SpannerResult r = build_additive_spanner(g, 0, seed);
        const Graph h = spanner_graph(g, r);
        const auto fe = enumerate_failure_sets(g, FailureMode::edge, 2);
        const StretchReport rep = verify_spanner_stretch(g, h, fe);
        witnesses += static_cast<long>(rep.witnesses.size());
        checked += rep.checked;
        max_ratio = std::max(max_ratio, r.ratio);
    }
    const bool ok = witnesses == 0 && max_ratio <= kSpannerRatioGuard;
    std::ostringstream d;
    d << "all " << checked << " reachable ordered pairs answered within +2 on 5 spanners "
      << "(n=24, exhaustive two-failure enumeration, max size ratio " << max_ratio << ")";
    report(6, ok, ok ? d.str() : std::to_string(witnesses) + " stretch violations");
    CHECK(ok);
}

TEST_CASE("criterion 7: fixture structures match frozen bytes") {
    struct Golden {
        const char* name;
        Graph g;
        std::vector<Vertex> sources;
        int k;
        std::string expect;
    };
    const std::vector<Golden> goldens = {
        {"diamond", fx::diamond(), {0}, 2, "4 4 undirected\n0 1\n0 2\n1 3\n2 3"},
        {"diamond two-source", fx::diamond(), {0, 3}, 1, "4 4 undirected\n0 1\n0 2\n1 3\n2 3"},
        {"cycle", fx::c5(), {0}, 2, "5 5 undirected\n0 1\n0 4\n1 2\n2 3\n3 4"},
        {"path", fx::p4(), {0}, 1, "4 3 undirected\n0 1\n1 2\n2 3"},
        {"star", fx::star5(), {0}, 2, "5 4 undirected\n0 1\n0 2\n0 3\n0 4"},
        {"two-divergence", fx::twodiv(), {0}, 2,
         "8 9 undirected\n0 1\n1 2\n1 5\n2 3\n2 7\n3 4\n4 6\n4 7\n5 6"},
    };
    bool ok = true;
    std::string offender;
    for (const Golden& gd : goldens) {
        const FtStructure st = build_ft_mbfs(gd.g, gd.sources, gd.k, FailureMode::edge);
        if (serialize_graph(structure_graph(st)) != gd.expect) {
            ok = false;
            offender += std::string(" ") + gd.name;
        }
    }
    report(7, ok,
           ok ? "all 6 fixture structures serialize byte-for-byte to their frozen goldens"
              : "fixture output drifted:" + offender);
    CHECK(ok);
}

TEST_CASE("criterion 8: parallel runs are byte-identical to sequential") {
    bool ok = true;
    std::string offender;
    const auto fixtures = fx::all();
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const Graph& g = fixtures[i];
        const FtStructure a = build_ft_mbfs(g, {0}, 2, FailureMode::edge, 1);
        const FtStructure b = build_ft_mbfs(g, {0}, 2, FailureMode::edge, 3);
        if (serialize_graph(structure_graph(a)) != serialize_graph(structure_graph(b)) ||
            json_assignments(a).dump() != json_assignments(b).dump()) {
            ok = false;
            offender += " build#" + std::to_string(i);
        }
        const Graph h = structure_graph(a);
        const auto fe = enumerate_failure_sets(g, FailureMode::edge, 2);
        json v1 = json_verification(verify_structure(g, h, {0}, 2, fe, 1));
        json v3 = json_verification(verify_structure(g, h, {0}, 2, fe, 3));
        strip_volatile(v1);
        strip_volatile(v3);
        if (v1.dump() != v3.dump()) {
            ok = false;
            offender += " verify#" + std::to_string(i);
        }
    }
    // Multi-source build and spanner stretch, same discipline.
    const Graph g = gen_graph(GraphModel::gnp, 15, 0.3, 7);
    const FtStructure m1 = build_ft_mbfs(g, {0, 2}, 2, FailureMode::edge, 1);
    const FtStructure m4 = build_ft_mbfs(g, {0, 2}, 2, FailureMode::edge, 4);
    if (json_assignments(m1).dump() != json_assignments(m4).dump()) {
        ok = false;
        offender += " multi-source";
    }
    const SpannerResult sp = build_additive_spanner(g, 0, 7);
    const Graph sph = spanner_graph(g, sp);
    const auto fe = enumerate_failure_sets(g, FailureMode::edge, 2);
    json s1 = json_stretch(verify_spanner_stretch(g, sph, fe, 1));
    json s2 = json_stretch(verify_spanner_stretch(g, sph, fe, 2));
    strip_volatile(s1);
    strip_volatile(s2);
    if (s1.dump() != s2.dump()) {
        ok = false;
        offender += " stretch";
    }
    report(8, ok,
           ok ? "builds, verifications, and stretch checks agree byte-for-byte across "
                "thread counts on all fixtures"
              : "thread count changed output:" + offender);
    CHECK(ok);
}
