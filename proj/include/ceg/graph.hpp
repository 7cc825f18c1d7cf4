#ifndef CEG_GRAPH_HPP
#define CEG_GRAPH_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ceg {

// Dense 0-based ids; NodeId < n and ColorId < m for the containing graph.
using NodeId = int;
using ColorId = int;

enum class Errc {
  self_loop,
  duplicate_edge,
  node_out_of_range,
  color_out_of_range,
  bad_parameter,
  malformed_document,
  too_large,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Undirected edge carrying exactly one color. Canonical orientation is u < v.
struct ColoredEdge {
  NodeId u = 0;
  NodeId v = 0;
  ColorId color = 0;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// Optional display names. Algorithms never read these; they only survive
// serialization round trips.
struct LabelTable {
  std::vector<std::string> nodes;
  std::vector<std::string> colors;
  bool empty() const { return nodes.empty() && colors.empty(); }
  friend bool operator==(const LabelTable&, const LabelTable&) = default;
};

// Simple undirected graph on n nodes where every edge carries one of m colors.
// A color stands for a shared failure cause: all edges of that color fail
// together. Edges are canonicalized (u < v, sorted, duplicates rejected) so
// structural equality and serialization are deterministic.
//
// Instances are immutable after construction; share freely across threads.
//
// The color map is not required to be onto: a color with no edges is a device
// type with no deployed links, and removing it is harmless. Use is_onto() to
// query surjectivity.
class ColoredEdgeGraph {
public:
  ColoredEdgeGraph() = default;
  ColoredEdgeGraph(int n, int m, std::vector<ColoredEdge> edges, LabelTable labels = {});

  int node_count() const { return n_; }
  int palette_size() const { return m_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<ColoredEdge>& edges() const { return edges_; }
  const LabelTable& labels() const { return labels_; }

  // Labels are annotations, not structure.
  friend bool operator==(const ColoredEdgeGraph& a, const ColoredEdgeGraph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<ColoredEdge> edges_;
  LabelTable labels_;
};

// Per-color edge classes: classes()[c] holds every edge of color c. Classes
// are pairwise disjoint and their union is the edge set.
using ColorClassView = std::vector<std::vector<ColoredEdge>>;

ColoredEdgeGraph new_graph(int n, int m, const std::vector<ColoredEdge>& edges);
ColorClassView color_classes(const ColoredEdgeGraph& g);

// True iff every color class is nonempty (the color map is onto).
bool is_onto(const ColoredEdgeGraph& g);

// JSON interchange:
//   {"n": int, "m": int, "edges": [[u, v, c], ...], "labels": {...}?}
// Input edges may appear in any order and orientation; output is canonical.
ColoredEdgeGraph parse_graph(std::string_view text);
std::string serialize_graph(const ColoredEdgeGraph& g);

}  // namespace ceg

#endif
