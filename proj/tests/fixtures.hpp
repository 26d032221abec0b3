#pragma once

// Small named graphs shared across the suite.
//
//   diamond: 0-1,0-2,1-3,2-3. Two disjoint routes 0->3.
//   c5:      the 5-cycle.
//   p4:      the path 0-1-2-3.
//   star5:   K_{1,4}, center 0.
//   twodiv:  two parallel detours around the base path 0-1-2-3-4, one
//            branching at 1 (via 5,6), one at 2 (via 7). Separates the
//            divergence tie rule from plain length comparison.
//   elbow:   like twodiv but the second branch hangs off 3, so with
//            failures {(3,4),(5,6)} the only shortest replacement runs
//            along the base path beyond the split before detouring.

#include <vector>

#include <ftbfs/graph.hpp>

namespace fx {

inline ftbfs::Edge e(int u, int v) { return ftbfs::canonical_edge(u, v, false); }

inline const char* kDiamondText = "4 4 undirected\n0 1\n0 2\n1 3\n2 3";

inline ftbfs::Graph diamond() { return ftbfs::parse_graph(kDiamondText); }

inline ftbfs::Graph c5() {
    return ftbfs::gen_graph(ftbfs::GraphModel::cycle, 5, std::nullopt, 0);
}

inline ftbfs::Graph p4() {
    return ftbfs::gen_graph(ftbfs::GraphModel::path, 4, std::nullopt, 0);
}

inline ftbfs::Graph star5() {
    return ftbfs::Graph(5, false, {e(0, 1), e(0, 2), e(0, 3), e(0, 4)});
}

inline ftbfs::Graph twodiv() {
    return ftbfs::Graph(8, false,
                        {e(0, 1), e(1, 2), e(2, 3), e(3, 4), e(1, 5), e(5, 6), e(6, 4), e(2, 7),
                         e(7, 4)});
}

inline ftbfs::Graph elbow() {
    return ftbfs::Graph(8, false,
                        {e(0, 1), e(1, 2), e(2, 3), e(3, 4), e(1, 5), e(5, 6), e(6, 4), e(3, 7),
                         e(7, 4)});
}

inline std::vector<ftbfs::Graph> all() {
    return {diamond(), c5(), p4(), star5(), twodiv(), elbow()};
}

}  // namespace fx
