#include "ceg/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>

#include "ceg/combinatorics.hpp"
#include "ceg/dsu.hpp"

namespace ceg {

namespace {

void require_small_palette(const ColoredEdgeGraph& g) {
  if (g.palette_size() > 64)
    throw Error(Errc::too_large, "palette exceeds one machine word (64 colors)");
}

void require_threshold(const ColoredEdgeGraph& g, int t) {
  if (t < 0 || t > g.palette_size())
    throw Error(Errc::bad_parameter,
                "threshold t must lie in [0, m]; got t=" + std::to_string(t) +
                    " with m=" + std::to_string(g.palette_size()));
}

void require_node(const ColoredEdgeGraph& g, NodeId x) {
  if (x < 0 || x >= g.node_count())
    throw Error(Errc::node_out_of_range, "node " + std::to_string(x) + " out of range");
}

std::uint64_t removal_mask(const ColoredEdgeGraph& g, const std::vector<ColorId>& removed) {
  std::uint64_t mask = 0;
  for (ColorId c : removed) {
    if (c < 0 || c >= g.palette_size())
      throw Error(Errc::color_out_of_range, "color " + std::to_string(c) + " out of range");
    mask |= std::uint64_t{1} << c;
  }
  return mask;
}

std::uint64_t mask_of(const std::vector<int>& comb) {
  std::uint64_t mask = 0;
  for (int c : comb) mask |= std::uint64_t{1} << c;
  return mask;
}

bool connected_without(const ColoredEdgeGraph& g, std::uint64_t removed) {
  if (g.node_count() <= 1) return true;
  DisjointSets dsu(g.node_count());
  for (const auto& e : g.edges())
    if (!((removed >> e.color) & 1)) dsu.unite(e.u, e.v);
  return dsu.components() == 1;
}

bool pair_connected_without(const ColoredEdgeGraph& g, NodeId a, NodeId b, std::uint64_t removed) {
  DisjointSets dsu(g.node_count());
  for (const auto& e : g.edges())
    if (!((removed >> e.color) & 1)) dsu.unite(e.u, e.v);
  return dsu.find(a) == dsu.find(b);
}

// Scans all k-subsets of [0, m) in lexicographic order and returns the rank of
// the first one satisfying `pred`. The rank space may be chunked across
// threads; every worker reports the least hit inside its chunk and the overall
// minimum equals the sequential first hit, so the result is independent of the
// worker count.
std::optional<std::uint64_t> first_subset(int m, int k, unsigned workers,
                                          const std::function<bool(std::uint64_t)>& pred) {
  const std::uint64_t total = binomial(m, k);
  if (total == 0) return std::nullopt;
  workers = std::max(1u, workers);
  if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<unsigned>(total);

  if (workers == 1) {
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    std::uint64_t rank = 0;
    do {
      if (pred(mask_of(comb))) return rank;
      ++rank;
    } while (next_combination(comb, m));
    return std::nullopt;
  }

  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::optional<std::uint64_t>> hits(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (begin >= end) return;
      auto comb = unrank_combination(m, k, begin);
      for (std::uint64_t r = begin; r < end; ++r) {
        if (pred(mask_of(comb))) {
          hits[w] = r;
          return;
        }
        next_combination(comb, m);
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& h : hits)
    if (h) return h;
  return std::nullopt;
}

std::vector<NodeId> component_of(const ColoredEdgeGraph& g, std::uint64_t removed, NodeId anchor) {
  DisjointSets dsu(g.node_count());
  for (const auto& e : g.edges())
    if (!((removed >> e.color) & 1)) dsu.unite(e.u, e.v);
  std::vector<NodeId> side;
  const int root = dsu.find(anchor);
  for (int x = 0; x < g.node_count(); ++x)
    if (dsu.find(x) == root) side.push_back(x);
  return side;
}

ColorSeparator make_separator(const ColoredEdgeGraph& g, std::vector<int> colors,
                              std::optional<std::pair<NodeId, NodeId>> pair) {
  ColorSeparator sep;
  sep.colors.assign(colors.begin(), colors.end());
  sep.pair = pair;
  const NodeId anchor = pair ? pair->first : 0;
  sep.side = component_of(g, mask_of(colors), anchor);
  return sep;
}

}  // namespace

bool connected_after_removal(const ColoredEdgeGraph& g, const std::vector<ColorId>& removed) {
  return connected_without(g, removal_mask(g, removed));
}

bool is_color_connected(const ColoredEdgeGraph& g, int t, unsigned workers) {
  require_small_palette(g);
  require_threshold(g, t);
  if (g.node_count() <= 1) return true;
  return !first_subset(g.palette_size(), t, workers,
                       [&](std::uint64_t mask) { return !connected_without(g, mask); })
              .has_value();
}

bool is_color_connected_unions(const ColoredEdgeGraph& g, int t) {
  require_small_palette(g);
  require_threshold(g, t);
  if (g.node_count() <= 1) return true;
  const int m = g.palette_size();
  const int keep = m - t;
  const auto classes = color_classes(g);
  std::vector<int> comb(keep);
  std::iota(comb.begin(), comb.end(), 0);
  do {
    DisjointSets dsu(g.node_count());
    for (int c : comb)
      for (const auto& e : classes[c]) dsu.unite(e.u, e.v);
    if (dsu.components() != 1) return false;
  } while (next_combination(comb, m));
  return true;
}

bool is_pair_color_connected(const ColoredEdgeGraph& g, NodeId a, NodeId b, int t,
                             unsigned workers) {
  require_small_palette(g);
  require_threshold(g, t);
  require_node(g, a);
  require_node(g, b);
  if (a == b) throw Error(Errc::bad_parameter, "terminal nodes must be distinct");
  return !first_subset(g.palette_size(), t, workers,
                       [&](std::uint64_t mask) { return !pair_connected_without(g, a, b, mask); })
              .has_value();
}

std::optional<ColorSeparator> min_color_separator(const ColoredEdgeGraph& g, unsigned workers) {
  require_small_palette(g);
  if (g.node_count() <= 1) return std::nullopt;
  const int m = g.palette_size();
  for (int s = 0; s <= m; ++s) {
    auto hit = first_subset(m, s, workers,
                            [&](std::uint64_t mask) { return !connected_without(g, mask); });
    if (hit) return make_separator(g, unrank_combination(m, s, *hit), std::nullopt);
  }
  return std::nullopt;  // unreachable for n >= 2: removing all colors kills all edges
}

std::optional<ColorSeparator> min_color_separator(const ColoredEdgeGraph& g, NodeId a, NodeId b,
                                                  unsigned workers) {
  require_small_palette(g);
  require_node(g, a);
  require_node(g, b);
  if (a == b) throw Error(Errc::bad_parameter, "terminal nodes must be distinct");
  const int m = g.palette_size();
  for (int s = 0; s <= m; ++s) {
    auto hit = first_subset(m, s, workers, [&](std::uint64_t mask) {
      return !pair_connected_without(g, a, b, mask);
    });
    if (hit) return make_separator(g, unrank_combination(m, s, *hit), std::make_pair(a, b));
  }
  return std::nullopt;
}

ResilienceReport resilience(const ColoredEdgeGraph& g) {
  require_small_palette(g);
  ResilienceReport report;
  auto sep = min_color_separator(g);
  if (!sep) {
    report.max_t = g.palette_size();  // < 2 nodes: no failure set ever disconnects
    return report;
  }
  report.max_t = static_cast<int>(sep->colors.size()) - 1;
  report.certificate = std::move(sep);
  return report;
}

}  // namespace ceg
