#ifndef CEG_CONSTRUCTIONS_HPP
#define CEG_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "ceg/graph.hpp"

namespace ceg {

// Builders for edge-minimal graphs that survive a given number of color
// failures. Every builder re-verifies its output with the connectivity
// checker before returning and throws std::logic_error if verification fails.

// m pairwise edge-disjoint spanning trees, one per color: survives any m-1
// color failures with lambda = m*(n-1). Exists iff n >= 2m.
ColoredEdgeGraph build_disjoint_spanning(int n, int m);

// Minimal single-failure-tolerant family (survives any one color failure).
// For m >= 3 and n >= m this is the hub-and-rings construction: k rings of
// m-1 nodes each through a hub, plus an optional partial ring; lambda = mk+j
// for n = (m-1)k + j. For 3 <= n < m an n-ring with n distinct colors
// suffices (the remaining palette stays unused). m = 2 delegates to
// build_disjoint_spanning.
ColoredEdgeGraph build_t1(int n, int m);

// Palette 4, tolerating any 2 color failures: glued copies of the 5-node and
// 7-node gadgets; lambda = 4k for n = 2k+1, 4k+3 for n = 2k+2 (k >= 2).
ColoredEdgeGraph build_m4_t2(int n);

// Palette 5, tolerating any 3 color failures: glued copies of the 5-node and
// 7-node gadgets; lambda = 5k for n = 2k+1, 5k+4 for n = 2k+2 (k >= 2).
ColoredEdgeGraph build_m5_t3(int n);

// Exhaustive search: the lexicographically first coloring of a lambda-edge
// subgraph of K_n on palette m that survives any t color failures, or nullopt
// if none exists. Order: edge subsets by index-set lex order (K_n edges
// enumerated (0,1),(0,2),...), then coloring vectors lexicographically.
// Deterministic; guarded to small instances.
std::optional<ColoredEdgeGraph> gadget_search(int n, int m, int t, int lambda);

// Disjoint union with the anchor node of every part identified as one node.
// Part 0 keeps its node ids; later parts are appended in order. All parts
// must share the palette size; colors are unified positionally.
ColoredEdgeGraph glue_at_node(const std::vector<ColoredEdgeGraph>& parts,
                              const std::vector<NodeId>& anchors);

// The four frozen gadgets the m=4 and m=5 families glue together.
const ColoredEdgeGraph& gadget_g1();   // n=5, m=4, lambda=8,  survives any 2 failures
const ColoredEdgeGraph& gadget_g2();   // n=7, m=4, lambda=12, survives any 2 failures
const ColoredEdgeGraph& gadget_g51();  // n=5, m=5, lambda=10, survives any 3 failures
const ColoredEdgeGraph& gadget_g52();  // n=7, m=5, lambda=15, survives any 3 failures

}  // namespace ceg

#endif
