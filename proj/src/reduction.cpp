#include "ceg/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ceg/combinatorics.hpp"
#include "ceg/connectivity.hpp"

namespace ceg {

PlainGraph make_plain_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw Error(Errc::bad_parameter, "node count must be nonnegative");
  for (auto& [u, v] : edges) {
    if (u == v)
      throw Error(Errc::self_loop, "self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw Error(Errc::node_out_of_range, "edge (" + std::to_string(u) + "," +
                                               std::to_string(v) + ") out of range (n=" +
                                               std::to_string(n) + ")");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(Errc::duplicate_edge, "duplicate edge in graph");
  return PlainGraph{n, std::move(edges)};
}

ReductionInstance vc_to_ceconnect(const PlainGraph& g, int t) {
  if (t < 1 || t > g.n)
    throw Error(Errc::bad_parameter, "reduction needs 1 <= t <= n");

  const int relays = static_cast<int>(g.edges.size());
  std::vector<ColoredEdge> edges;
  edges.reserve(2 * relays);
  LabelTable labels;
  labels.nodes = {"A", "B"};
  for (int i = 0; i < relays; ++i) {
    const auto [u, v] = g.edges[i];
    edges.push_back({0, 2 + i, u});  // A side carries the smaller vertex's color
    edges.push_back({1, 2 + i, v});
    labels.nodes.push_back("e(" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  for (int v = 0; v < g.n; ++v) labels.colors.push_back("v" + std::to_string(v));
  return ReductionInstance{ColoredEdgeGraph(2 + relays, g.n, std::move(edges), std::move(labels)),
                           0, 1, t};
}

bool vertex_cover_exists(const PlainGraph& g, int t) {
  if (t < 0) throw Error(Errc::bad_parameter, "cover size must be nonnegative");
  if (g.n > 24)
    throw Error(Errc::too_large, "exhaustive vertex-cover search is limited to n <= 24");
  if (g.edges.empty()) return true;

  for (int s = 0; s <= std::min(t, g.n); ++s) {
    std::vector<int> comb(s);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      std::uint32_t mask = 0;
      for (int x : comb) mask |= std::uint32_t{1} << x;
      bool covers = true;
      for (const auto& [u, v] : g.edges)
        if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
          covers = false;
          break;
        }
      if (covers) return true;
    } while (next_combination(comb, g.n));
  }
  return false;
}

bool certify_reduction(const PlainGraph& g, int t) {
  const bool cover = vertex_cover_exists(g, t);
  const auto inst = vc_to_ceconnect(g, t);
  const auto sep = min_color_separator(inst.graph, inst.a, inst.b);
  const bool separable = sep && static_cast<int>(sep->colors.size()) <= t;
  return cover == separable;
}

PlainGraph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  long long declared = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0)
        throw Error(Errc::malformed_document, "duplicate problem line at line " + std::to_string(lineno));
      std::string fmt;
      if (!(ls >> fmt >> n >> declared) || fmt != "edge" || n < 0 || declared < 0)
        throw Error(Errc::malformed_document, "expected 'p edge <n> <m>' at line " + std::to_string(lineno));
      continue;
    }
    if (tag == "e") {
      if (n < 0)
        throw Error(Errc::malformed_document, "edge before problem line at line " + std::to_string(lineno));
      int u = 0, v = 0;
      if (!(ls >> u >> v))
        throw Error(Errc::malformed_document, "expected 'e <u> <v>' at line " + std::to_string(lineno));
      if (u < 1 || u > n || v < 1 || v > n)
        throw Error(Errc::malformed_document, "vertex out of range at line " + std::to_string(lineno) +
                                                  " (vertices are 1-indexed)");
      edges.emplace_back(u - 1, v - 1);
      continue;
    }
    throw Error(Errc::malformed_document, "unrecognized line tag '" + tag + "' at line " +
                                              std::to_string(lineno));
  }
  if (n < 0) throw Error(Errc::malformed_document, "missing 'p edge' problem line");
  if (declared != static_cast<long long>(edges.size()))
    throw Error(Errc::malformed_document,
                "edge count mismatch: header says " + std::to_string(declared) + ", found " +
                    std::to_string(edges.size()));
  return make_plain_graph(n, std::move(edges));
}

}  // namespace ceg
