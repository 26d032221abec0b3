#include <catch2/catch_amalgamated.hpp>

#include <ftbfs/paths.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "fixtures.hpp"

using namespace ftbfs;

namespace {

std::vector<Vertex> base(const Graph& g, Vertex s, Vertex v) {
    auto p = lex_shortest_path(remove_failures(g, FailureSpec::none(FailureMode::edge)), s, v);
    REQUIRE(p);
    return *p;
}

std::optional<std::vector<Vertex>> pref(const Graph& g, FailureMode mode, Vertex s, Vertex v,
                                        const FailureSpec& f) {
    auto r = preferred_for_failure_set(g, mode, s, v, f);
    if (!r) return std::nullopt;
    return r->vertices;
}

}  // namespace

TEST_CASE("base paths take the lexicographically smallest shortest route") {
    CHECK(base(fx::diamond(), 0, 3) == std::vector<Vertex>{0, 1, 3});
    CHECK(base(fx::p4(), 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(base(fx::twodiv(), 0, 4) == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(base(fx::c5(), 0, 2) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("single failure replacements prefer the earliest divergence") {
    const Graph g = fx::twodiv();
    // Both repairs have length 4; the one leaving the base path at vertex 1
    // wins over the one leaving at vertex 2.
    CHECK(pref(g, FailureMode::edge, 0, 4, FailureSpec::of_edges({fx::e(2, 3)})) ==
          std::vector<Vertex>{0, 1, 5, 6, 4});
    CHECK(pref(g, FailureMode::edge, 0, 4, FailureSpec::of_edges({fx::e(3, 4)})) ==
          std::vector<Vertex>{0, 1, 5, 6, 4});

    CHECK(pref(fx::diamond(), FailureMode::edge, 0, 3, FailureSpec::of_edges({fx::e(1, 3)})) ==
          std::vector<Vertex>{0, 2, 3});
    CHECK(pref(fx::c5(), FailureMode::edge, 0, 2, FailureSpec::of_edges({fx::e(1, 2)})) ==
          std::vector<Vertex>{0, 4, 3, 2});

    // The divergence vertex is recorded on the result.
    const auto rec =
        preferred_for_failure_set(g, FailureMode::edge, 0, 4, FailureSpec::of_edges({fx::e(2, 3)}));
    REQUIRE(rec);
    REQUIRE(rec->div0);
    CHECK(*rec->div0 == 1);
}

TEST_CASE("failures off the base path leave it untouched") {
    const Graph g = fx::twodiv();
    CHECK(pref(g, FailureMode::edge, 0, 4, FailureSpec::of_edges({fx::e(5, 6)})) ==
          std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(pref(g, FailureMode::vertex, 0, 4, FailureSpec::of_vertices({6})) ==
          std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("pair failures resolve through the second region") {
    const Graph g = fx::twodiv();
    // (2,3) pushes onto [0,1,5,6,4]; (5,6) then forces the branch at 2.
    CHECK(pref(g, FailureMode::edge, 0, 4,
               FailureSpec::of_edges({fx::e(2, 3), fx::e(5, 6)})) ==
          std::vector<Vertex>{0, 1, 2, 7, 4});
    // Vertex flavor of the same shape.
    CHECK(pref(g, FailureMode::vertex, 0, 4, FailureSpec::of_vertices({3, 6})) ==
          std::vector<Vertex>{0, 1, 2, 7, 4});

    CHECK_FALSE(pref(fx::diamond(), FailureMode::edge, 0, 3,
                     FailureSpec::of_edges({fx::e(1, 3), fx::e(0, 2)})));
}

TEST_CASE("replacement may follow the base path beyond the first divergence") {
    // elbow, failures {(3,4),(5,6)}: the repair [0,1,2,3,7,4] stays on the
    // base path strictly past the point where the single-failure repair
    // [0,1,5,6,4] left it. Exercises the third candidate branch.
    const Graph g = fx::elbow();
    CHECK(pref(g, FailureMode::edge, 0, 4, FailureSpec::of_edges({fx::e(3, 4)})) ==
          std::vector<Vertex>{0, 1, 5, 6, 4});
    CHECK(pref(g, FailureMode::edge, 0, 4,
               FailureSpec::of_edges({fx::e(3, 4), fx::e(5, 6)})) ==
          std::vector<Vertex>{0, 1, 2, 3, 7, 4});
}

TEST_CASE("detour spans subtract base vertices") {
    const std::vector<Vertex> p0{0, 1, 2, 3, 4};
    const std::vector<Vertex> p1{0, 1, 5, 6, 4};
    auto d = last_detour_span(p1, {&p0});
    REQUIRE(d);
    CHECK(d->first == 1);
    CHECK(d->last == 4);
    CHECK(d->edge_count() == 3);

    // A chord between base vertices has no off-base vertex, hence no detour.
    const std::vector<Vertex> chord_base{0, 1, 2};
    CHECK_FALSE(last_detour_span({0, 2}, {&chord_base}));

    // Against two carriers only vertices on neither count.
    const std::vector<Vertex> p{0, 1, 2, 7, 4};
    auto d2 = last_detour_span(p, {&p0, &p1});
    REQUIRE(d2);
    CHECK(d2->first == 2);
    CHECK(d2->last == 4);
}

TEST_CASE("schedules order failures farthest from the source first") {
    const Graph p4 = fx::p4();
    const FailureSchedule sched = build_failure_schedule(p4, 0, 3, 1, FailureMode::edge);
    REQUIRE(sched.order.size() == 4);
    CHECK(sched.order[0].spec == FailureSpec::none(FailureMode::edge));
    CHECK(sched.order[1].spec == FailureSpec::of_edges({fx::e(2, 3)}));
    CHECK(sched.order[2].spec == FailureSpec::of_edges({fx::e(1, 2)}));
    CHECK(sched.order[3].spec == FailureSpec::of_edges({fx::e(0, 1)}));
}

TEST_CASE("pair schedule on the 5-cycle") {
    const Graph g = fx::c5();
    const FailureSchedule sched = build_failure_schedule(g, 0, 2, 2, FailureMode::edge);
    CHECK(sched.chain.p0.vertices == std::vector<Vertex>{0, 1, 2});

    const std::vector<FailureSpec> expected{
        FailureSpec::none(FailureMode::edge),
        FailureSpec::of_edges({fx::e(1, 2)}),
        FailureSpec::of_edges({fx::e(0, 1)}),
        FailureSpec::of_edges({fx::e(1, 2), fx::e(2, 3)}),
        FailureSpec::of_edges({fx::e(1, 2), fx::e(3, 4)}),
        FailureSpec::of_edges({fx::e(1, 2), fx::e(0, 4)}),
        FailureSpec::of_edges({fx::e(0, 1), fx::e(2, 3)}),
        FailureSpec::of_edges({fx::e(0, 1), fx::e(3, 4)}),
        FailureSpec::of_edges({fx::e(0, 1), fx::e(0, 4)}),
    };
    REQUIRE(sched.order.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(sched.order[i].spec == expected[i]);

    // The farthest single failure's replacement and its detour.
    const ChainEntry& far = sched.chain.entries[0];
    CHECK(far.single == FailureSpec::of_edges({fx::e(1, 2)}));
    REQUIRE(far.p1);
    CHECK(far.p1->vertices == std::vector<Vertex>{0, 4, 3, 2});
    REQUIRE(far.d0);
    CHECK(*far.d0 == DetourSpan{0, 3});
}

TEST_CASE("pairs under a farther first failure come first") {
    const Graph g = fx::twodiv();
    const FailureSchedule sched = build_failure_schedule(g, 0, 4, 2, FailureMode::edge);
    const FailureSpec far = FailureSpec::of_edges({fx::e(3, 4)});
    const FailureSpec near = FailureSpec::of_edges({fx::e(2, 3)});
    int last_far = -1, first_near = 1 << 20;
    for (int i = 0; i < static_cast<int>(sched.order.size()); ++i) {
        const ScheduledFailure& sf = sched.order[i];
        if (sf.spec.size() != 2) continue;
        const ChainEntry& entry = sched.chain.entries[sf.entry];
        if (entry.single == far) last_far = std::max(last_far, i);
        if (entry.single == near) first_near = std::min(first_near, i);
    }
    REQUIRE(last_far >= 0);
    REQUIRE(first_near < (1 << 20));
    CHECK(last_far < first_near);
}

TEST_CASE("each unordered pair is scheduled at most once") {
    for (const Graph& g : fx::all()) {
        for (Vertex v = 1; v < g.vertex_count(); ++v) {
            for (FailureMode mode : {FailureMode::edge, FailureMode::vertex}) {
                FailureSchedule sched;
                try {
                    sched = build_failure_schedule(g, 0, v, 2, mode);
                } catch (const std::invalid_argument&) {
                    continue;  // unreachable target
                }
                std::set<FailureSpec> seen;
                for (const ScheduledFailure& sf : sched.order) {
                    CHECK(seen.insert(sf.spec).second);
                }
            }
        }
    }
}

TEST_CASE("schedule rejects bad arguments") {
    CHECK_THROWS_AS(build_failure_schedule(fx::p4(), 0, 3, 3, FailureMode::edge),
                    std::invalid_argument);
    const Graph split(3, false, {fx::e(0, 1)});
    CHECK_THROWS_AS(build_failure_schedule(split, 0, 2, 1, FailureMode::edge),
                    std::invalid_argument);
}

TEST_CASE("chain-consistent lookups agree with the schedule resolution") {
    const Graph g = fx::twodiv();
    const FailureSchedule sched = build_failure_schedule(g, 0, 4, 2, FailureMode::edge);
    for (const ScheduledFailure& sf : sched.order) {
        const auto via_chain = preferred_path(g, sched.chain, sf.spec);
        const auto via_sched = resolve_scheduled(g, sched, sf);
        REQUIRE(via_chain.has_value() == via_sched.has_value());
        if (via_chain) CHECK(via_chain->vertices == via_sched->vertices);
    }
    CHECK_THROWS_AS(preferred_path(g, sched.chain, FailureSpec::of_edges({fx::e(5, 6)})),
                    std::invalid_argument);
}
