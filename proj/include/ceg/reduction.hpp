#ifndef CEG_REDUCTION_HPP
#define CEG_REDUCTION_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "ceg/graph.hpp"

namespace ceg {

// Uncolored simple graph: the vertex-cover side of the reduction.
struct PlainGraph {
  int n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;  // canonical u < v, sorted, unique
};

PlainGraph make_plain_graph(int n, std::vector<std::pair<int, int>> edges);

// Deciding pair connectivity under color failures is as hard as Vertex Cover.
// The reduced instance has terminals a, b, one relay node per original edge,
// and one color per original vertex: the covering question becomes "does a
// t-color failure cut every a-b relay path".
struct ReductionInstance {
  ColoredEdgeGraph graph;
  NodeId a = 0;
  NodeId b = 1;
  int t = 0;
};

// Builds the instance: node a, node b, one relay node per edge (u,v) with
// u < v, edge (a, relay) colored by u and (relay, b) colored by v. The source
// graph has a vertex cover of size <= t iff some t colors separate a from b.
ReductionInstance vc_to_ceconnect(const PlainGraph& g, int t);

// Exhaustive vertex-cover decision, subsets by size ascending. Small graphs
// only (guarded); this is the referee for the reduction.
bool vertex_cover_exists(const PlainGraph& g, int t);

// Computes both sides of the reduction equivalence independently and returns
// whether they agree. Must always be true; false flags a bug.
bool certify_reduction(const PlainGraph& g, int t);

// DIMACS edge-list format: "p edge <n> <m>" header, "e <u> <v>" lines,
// 1-indexed vertices, "c" comment lines.
PlainGraph parse_dimacs(std::string_view text);

}  // namespace ceg

#endif
