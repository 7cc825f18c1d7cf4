#ifndef CEG_CONNECTIVITY_HPP
#define CEG_CONNECTIVITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ceg/graph.hpp"

namespace ceg {

// A set of colors whose removal disconnects the stated scope, together with a
// witness: `side` is one shore of a node bipartition that no surviving edge
// crosses. Scope is the whole graph when `pair` is empty, otherwise the two
// terminal nodes.
struct ColorSeparator {
  std::vector<ColorId> colors;                    // sorted ascending
  std::optional<std::pair<NodeId, NodeId>> pair;  // nullopt: whole graph
  std::vector<NodeId> side;                       // sorted; holds node 0 resp. the pair's first node
};

// max_t is the largest t such that the graph stays connected after the removal
// of any t colors: -1 if the graph is disconnected with everything present,
// m if no separator exists at all (only possible for graphs with < 2 nodes).
struct ResilienceReport {
  int max_t = 0;
  std::optional<ColorSeparator> certificate;  // minimum whole-graph separator, when one exists
};

// True iff the subgraph on all n nodes using only edges whose color is not in
// `removed` is connected (graphs with < 2 nodes count as connected).
bool connected_after_removal(const ColoredEdgeGraph& g, const std::vector<ColorId>& removed);

// True iff the graph survives the failure of any t colors, i.e. it is
// (t+1)-color connected. t = 0 asks for plain connectivity. Decided exactly by
// enumerating all t-subsets of the palette; the enumeration may be split
// across `workers` threads and the answer never depends on the worker count.
bool is_color_connected(const ColoredEdgeGraph& g, int t, unsigned workers = 1);

// Same decision through the complementary route: every union of m-t color
// classes must span a connected graph. Kept as an independent implementation
// for cross-checking.
bool is_color_connected_unions(const ColoredEdgeGraph& g, int t);

// True iff a and b stay connected after the failure of any t colors.
bool is_pair_color_connected(const ColoredEdgeGraph& g, NodeId a, NodeId b, int t,
                             unsigned workers = 1);

// Minimum-cardinality color separator, searched by subset size ascending and
// lexicographically within a size, so the result is deterministic. Returns
// nullopt only when the scope can never be disconnected (< 2 nodes).
std::optional<ColorSeparator> min_color_separator(const ColoredEdgeGraph& g, unsigned workers = 1);
std::optional<ColorSeparator> min_color_separator(const ColoredEdgeGraph& g, NodeId a, NodeId b,
                                                  unsigned workers = 1);

ResilienceReport resilience(const ColoredEdgeGraph& g);

}  // namespace ceg

#endif
