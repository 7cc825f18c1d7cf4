#ifndef CEG_TEST_HELPERS_HPP
#define CEG_TEST_HELPERS_HPP

#include <random>
#include <stdexcept>
#include <vector>

#include "ceg/graph.hpp"

namespace ceg::test {

template <typename F>
Errc thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a ceg::Error");
}

inline ColoredEdgeGraph random_graph(std::mt19937& rng, int max_n = 10, int max_m = 6) {
  std::uniform_int_distribution<int> nd(1, max_n);
  std::uniform_int_distribution<int> md(1, max_m);
  std::uniform_int_distribution<int> coin(0, 1);
  const int n = nd(rng);
  const int m = md(rng);
  std::uniform_int_distribution<int> cd(0, m - 1);
  std::vector<ColoredEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, cd(rng)});
  return ColoredEdgeGraph(n, m, std::move(edges));
}

// The 5-node, 4-color, 8-edge gadget in its source orientation (exercises
// canonicalization when fed to new_graph).
inline const std::vector<ColoredEdge>& g1_edges() {
  static const std::vector<ColoredEdge> edges = {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 4, 2},
                                                 {4, 0, 1}, {0, 2, 2}, {0, 3, 3}, {1, 4, 3}};
  return edges;
}

}  // namespace ceg::test

#endif
