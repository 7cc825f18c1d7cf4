#include "ceg/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "ceg/combinatorics.hpp"
#include "ceg/connectivity.hpp"
#include "ceg/dsu.hpp"

namespace ceg {

namespace {

using Pair = std::pair<int, int>;

Pair canon(int a, int b) { return a < b ? Pair{a, b} : Pair{b, a}; }

ColoredEdgeGraph assemble(int n, int m, const std::vector<std::vector<Pair>>& classes) {
  std::vector<ColoredEdge> edges;
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    for (const auto& [a, b] : classes[c]) edges.push_back({a, b, c});
  return ColoredEdgeGraph(n, m, std::move(edges));
}

ColoredEdgeGraph verified(ColoredEdgeGraph g, int t, const char* what) {
  if (!is_color_connected(g, t))
    throw std::logic_error(std::string(what) + ": output failed connectivity verification");
  return g;
}

// Union-find without path compression so merges can be undone in LIFO order.
class RollbackDsu {
public:
  void init(int n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(n, 1);
    log_.clear();
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    log_.push_back({b, a});
  }
  std::size_t mark() const { return log_.size(); }
  void rollback(std::size_t mark) {
    while (log_.size() > mark) {
      auto [child, root] = log_.back();
      log_.pop_back();
      size_[root] -= size_[child];
      parent_[child] = child;
    }
  }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> log_;
};

}  // namespace

ColoredEdgeGraph build_disjoint_spanning(int n, int m) {
  if (m < 1) throw Error(Errc::bad_parameter, "palette size m must be >= 1");
  if (n < 2 * m)
    throw Error(Errc::bad_parameter,
                "m edge-disjoint spanning trees need n >= 2m; got n=" + std::to_string(n) +
                    ", m=" + std::to_string(m));

  // Grow along the diagonal (2m0, m0) -> (2m0+2, m0+1), then add one node at
  // a time with the color count fixed. Each class stays a spanning tree.
  std::vector<std::vector<Pair>> classes{{{0, 1}}};
  int n0 = 2;
  while (static_cast<int>(classes.size()) < m) {
    const int m0 = static_cast<int>(classes.size());
    if (n0 != 2 * m0) throw std::logic_error("diagonal step requires n0 == 2*m0");
    const int u = n0;
    const int v = n0 + 1;

    // Class 0 donates its lexicographically smallest edge (x, y) and is
    // rerouted x-u-v-y; the donated edge seeds the new class.
    std::sort(classes[0].begin(), classes[0].end());
    const auto [x, y] = classes[0].front();
    classes[0].erase(classes[0].begin());
    classes[0].push_back(canon(x, u));
    classes[0].push_back(canon(u, v));
    classes[0].push_back(canon(v, y));
    std::vector<Pair> fresh{canon(v, x), canon(x, y), canon(y, u)};
    std::set<int> used{x, y};

    // Every other class gets pendant edges to u and v through two nodes no
    // class has used in this step (lexicographically smallest choices).
    for (int i = 1; i < m0; ++i) {
      int a = 0;
      while (used.count(a)) ++a;
      used.insert(a);
      int b = a + 1;
      while (used.count(b)) ++b;
      used.insert(b);
      classes[i].push_back(canon(u, a));
      classes[i].push_back(canon(v, b));
      fresh.push_back(canon(v, a));
      fresh.push_back(canon(u, b));
    }
    classes.push_back(std::move(fresh));
    n0 += 2;
  }
  while (n0 < n) {
    const int u = n0;
    for (int i = 0; i < m; ++i) classes[i].push_back(canon(u, i));
    ++n0;
  }
  return verified(assemble(n, m, classes), m - 1, "build_disjoint_spanning");
}

ColoredEdgeGraph build_t1(int n, int m) {
  if (m < 2) throw Error(Errc::bad_parameter, "single-failure designs need m >= 2");
  if (m == 2) return build_disjoint_spanning(n, 2);
  if (n < 3)
    throw Error(Errc::bad_parameter, "no single-failure-tolerant design exists for n < 3");

  std::vector<ColoredEdge> edges;
  if (n < m) {
    // Ring with n distinct colors; the rest of the palette stays unused.
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, i});
    edges.push_back({0, n - 1, n - 1});
    return verified(ColoredEdgeGraph(n, m, std::move(edges)), 1, "build_t1");
  }

  // n = (m-1)k + j with k >= 1, 1 <= j <= m-1. Base: k rings of m-1 fresh
  // nodes each through hub 0, spoke colors c0..c_{m-2} outward and c_{m-1} on
  // the edge closing each ring; lambda = mk.
  const int k = (n - 1) / (m - 1);
  const int j = (n - 1) % (m - 1) + 1;
  const int base_nodes = (m - 1) * k + 1;
  for (int i = 0; i < k; ++i) {
    edges.push_back({0, (m - 1) * i + 1, 0});
    for (int step = 2; step <= m - 1; ++step) {
      const int a = (m - 1) * i + step - 1;
      edges.push_back({a, a + 1, step - 1});
    }
    edges.push_back({0, (m - 1) * (i + 1), m - 1});
  }
  if (j >= 2) {
    // Partial ring: j-1 extra nodes strung from the last ring's end back to
    // the hub, path colors c0, c1, ... and c_{j-1} on the closing edge. The
    // chain's colors are pairwise distinct, so one color failure cuts at most
    // one chain edge and both stubs stay attached to the base graph.
    int prev = (m - 1) * k;
    for (int i = 1; i <= j - 1; ++i) {
      const int next = base_nodes + i - 1;
      const auto [a, b] = canon(prev, next);
      edges.push_back({a, b, i - 1});
      prev = next;
    }
    edges.push_back({0, prev, j - 1});
  }
  return verified(ColoredEdgeGraph(n, m, std::move(edges)), 1, "build_t1");
}

ColoredEdgeGraph glue_at_node(const std::vector<ColoredEdgeGraph>& parts,
                              const std::vector<NodeId>& anchors) {
  if (parts.empty() || parts.size() != anchors.size())
    throw Error(Errc::bad_parameter, "need one anchor per part and at least one part");
  const int m = parts[0].palette_size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].palette_size() != m)
      throw Error(Errc::bad_parameter, "palette mismatch between glued parts");
    if (anchors[i] < 0 || anchors[i] >= parts[i].node_count())
      throw Error(Errc::node_out_of_range, "anchor out of range in part " + std::to_string(i));
  }
  if (parts.size() == 1) return parts[0];

  const NodeId hub = anchors[0];
  std::vector<ColoredEdge> edges = parts[0].edges();
  int offset = parts[0].node_count();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const NodeId anchor = anchors[i];
    auto remap = [&](NodeId w) { return w == anchor ? hub : offset + (w > anchor ? w - 1 : w); };
    for (const auto& e : parts[i].edges()) {
      const auto [a, b] = canon(remap(e.u), remap(e.v));
      edges.push_back({a, b, e.color});
    }
    offset += parts[i].node_count() - 1;
  }
  return ColoredEdgeGraph(offset, m, std::move(edges));
}

namespace {

// Shared shape of the m=4/t=2 and m=5/t=3 families: glue gadget copies at
// node 0; for even n add one extra node fanned out with t+1 distinctly
// colored edges to the first t+1 nodes.
ColoredEdgeGraph glued_family(int n, int t, const ColoredEdgeGraph& small,
                              const ColoredEdgeGraph& large, const char* what) {
  const int m = small.palette_size();
  if (n <= 4)
    throw Error(Errc::bad_parameter,
                std::string(what) + ": no design exists for n <= 4");
  const bool even = (n % 2 == 0);
  const int k = even ? (n - 2) / 2 : (n - 1) / 2;

  std::vector<ColoredEdgeGraph> ops;
  if (k % 2 == 0) {
    ops.assign(k / 2, small);
  } else {
    ops.assign((k - 1) / 2 - 1, small);
    ops.push_back(large);
  }
  ColoredEdgeGraph odd_graph = glue_at_node(ops, std::vector<NodeId>(ops.size(), 0));
  if (!even) return verified(std::move(odd_graph), t, what);

  std::vector<ColoredEdge> edges = odd_graph.edges();
  const int extra = odd_graph.node_count();
  for (int c = 0; c <= t; ++c) edges.push_back({c, extra, c});
  return verified(ColoredEdgeGraph(extra + 1, m, std::move(edges)), t, what);
}

}  // namespace

ColoredEdgeGraph build_m4_t2(int n) {
  return glued_family(n, 2, gadget_g1(), gadget_g2(), "build_m4_t2");
}

ColoredEdgeGraph build_m5_t3(int n) {
  return glued_family(n, 3, gadget_g51(), gadget_g52(), "build_m5_t3");
}

std::optional<ColoredEdgeGraph> gadget_search(int n, int m, int t, int lambda) {
  if (n < 0 || m < 1 || t < 0 || t > m || lambda < 0)
    throw Error(Errc::bad_parameter, "gadget_search needs n >= 0, m >= 1, 0 <= t <= m, lambda >= 0");
  const int P = n * (n - 1) / 2;
  if (lambda > P) return std::nullopt;
  if (n > 8 || m > 8 || binomial(P, lambda) > 400000)
    throw Error(Errc::too_large, "gadget_search is exhaustive; instance too large");

  if (n <= 1) return ColoredEdgeGraph(n, m, {});
  if (t == m) return std::nullopt;  // removing every color disconnects any n >= 2 graph

  // Counting reject: each of the C(m, m-t) unions needs >= n-1 edges and each
  // edge lies in C(m-1, m-t-1) of them, so lambda*(m-t) >= m*(n-1) must hold.
  if (static_cast<long long>(lambda) * (m - t) < static_cast<long long>(m) * (n - 1))
    return std::nullopt;

  std::vector<Pair> all;
  all.reserve(P);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);

  // When lambda*(m-t) == m*(n-1) (and t >= 1), counting forces every union of
  // m-t classes to be exactly a spanning tree and every class to hold
  // lambda/m edges: the unions' sizes sum to that total and each must reach
  // n-1. Not integral -> impossible; otherwise partial colorings can be
  // pruned on any cycle inside a union.
  const bool tree_mode = t >= 1 && static_cast<long long>(lambda) * (m - t) ==
                                       static_cast<long long>(m) * (n - 1);
  if (tree_mode && lambda % m != 0) return std::nullopt;
  const int class_cap = tree_mode ? lambda / m : lambda;

  std::vector<std::uint64_t> union_masks;
  {
    std::vector<int> comb(m - t);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      std::uint64_t mask = 0;
      for (int c : comb) mask |= std::uint64_t{1} << c;
      union_masks.push_back(mask);
    } while (next_combination(comb, m));
  }
  std::vector<std::vector<int>> unions_of_color(m);
  for (int c = 0; c < m; ++c)
    for (int ui = 0; ui < static_cast<int>(union_masks.size()); ++ui)
      if ((union_masks[ui] >> c) & 1) unions_of_color[c].push_back(ui);

  std::vector<int> subset(lambda);
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<int> coloring(lambda);
  std::vector<int> class_size(m);
  std::vector<RollbackDsu> forest(union_masks.size());

  do {
    // Prefilters: a node of degree <= t is cut off by removing the colors of
    // its incident edges, and a disconnected edge set cannot improve.
    std::vector<int> degree(n, 0);
    DisjointSets dsu(n);
    for (int idx : subset) {
      ++degree[all[idx].first];
      ++degree[all[idx].second];
      dsu.unite(all[idx].first, all[idx].second);
    }
    if (*std::min_element(degree.begin(), degree.end()) < t + 1) continue;
    if (dsu.components() != 1) continue;

    std::fill(class_size.begin(), class_size.end(), 0);
    bool found = false;

    // Colorings in lexicographic order; candidate colors are capped at one
    // past the count used so far, which is exactly the shape of the
    // lexicographically least passing coloring (colors are interchangeable,
    // and relabeling by first appearance never increases the vector).
    if (tree_mode) {
      for (auto& f : forest) f.init(n);
      std::function<bool(int, int)> go = [&](int pos, int used) -> bool {
        if (pos == lambda) return true;
        const auto [eu, ev] = all[subset[pos]];
        const int limit = std::min(used, m - 1);
        for (int c = 0; c <= limit; ++c) {
          if (class_size[c] == class_cap) continue;
          bool acyclic = true;
          for (int ui : unions_of_color[c])
            if (forest[ui].find(eu) == forest[ui].find(ev)) {
              acyclic = false;
              break;
            }
          if (!acyclic) continue;
          std::vector<std::size_t> marks;
          marks.reserve(unions_of_color[c].size());
          for (int ui : unions_of_color[c]) {
            marks.push_back(forest[ui].mark());
            forest[ui].unite(eu, ev);
          }
          ++class_size[c];
          coloring[pos] = c;
          if (go(pos + 1, std::max(used, c + 1))) return true;
          --class_size[c];
          for (std::size_t i = unions_of_color[c].size(); i-- > 0;)
            forest[unions_of_color[c][i]].rollback(marks[i]);
        }
        return false;
      };
      found = go(0, 0);
    } else {
      // General mode: optimistic reachability prune. A union that cannot be
      // connected even if every not-yet-colored edge joined it never will be.
      std::function<bool(int, int)> go = [&](int pos, int used) -> bool {
        if (pos == lambda) {
          std::vector<ColoredEdge> edges(lambda);
          for (int i = 0; i < lambda; ++i)
            edges[i] = {all[subset[i]].first, all[subset[i]].second, coloring[i]};
          return is_color_connected(ColoredEdgeGraph(n, m, std::move(edges)), t);
        }
        const int limit = std::min(used, m - 1);
        for (int c = 0; c <= limit; ++c) {
          coloring[pos] = c;
          bool viable = true;
          for (std::uint64_t umask : union_masks) {
            DisjointSets part(n);
            for (int i = 0; i <= pos; ++i)
              if ((umask >> coloring[i]) & 1)
                part.unite(all[subset[i]].first, all[subset[i]].second);
            for (int i = pos + 1; i < lambda; ++i)
              part.unite(all[subset[i]].first, all[subset[i]].second);
            if (part.components() != 1) {
              viable = false;
              break;
            }
          }
          if (!viable) continue;
          if (go(pos + 1, std::max(used, c + 1))) return true;
        }
        return false;
      };
      found = go(0, 0);
    }

    if (found) {
      std::vector<ColoredEdge> edges(lambda);
      for (int i = 0; i < lambda; ++i)
        edges[i] = {all[subset[i]].first, all[subset[i]].second, coloring[i]};
      return verified(ColoredEdgeGraph(n, m, std::move(edges)), t, "gadget_search");
    }
  } while (next_combination(subset, P));
  return std::nullopt;
}

// The m=4 gadgets are fixed edge lists; the m=5 gadgets were found once by
// gadget_search and frozen (a test regenerates and compares them).

const ColoredEdgeGraph& gadget_g1() {
  static const ColoredEdgeGraph g(
      5, 4,
      {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 4, 2}, {0, 4, 1}, {0, 2, 2}, {0, 3, 3}, {1, 4, 3}});
  return g;
}

const ColoredEdgeGraph& gadget_g2() {
  static const ColoredEdgeGraph g(7, 4,
                                  {{0, 1, 0},
                                   {1, 2, 1},
                                   {3, 4, 2},
                                   {0, 4, 1},
                                   {0, 2, 2},
                                   {0, 3, 3},
                                   {1, 4, 3},
                                   {2, 5, 0},
                                   {5, 6, 2},
                                   {3, 6, 0},
                                   {3, 5, 3},
                                   {2, 6, 1}});
  return g;
}

const ColoredEdgeGraph& gadget_g51() {
  // = gadget_search(5, 5, 3, 10): all of K5, five 2-edge classes, any two of
  // which form a spanning tree.
  static const ColoredEdgeGraph g(5, 5,
                                  {{0, 1, 0},
                                   {0, 2, 1},
                                   {0, 3, 2},
                                   {0, 4, 3},
                                   {1, 2, 2},
                                   {1, 3, 3},
                                   {1, 4, 4},
                                   {2, 3, 4},
                                   {2, 4, 0},
                                   {3, 4, 1}});
  return g;
}

const ColoredEdgeGraph& gadget_g52() {
  // = gadget_search(7, 5, 3, 15): five 3-edge classes, any two of which form
  // a spanning tree on 7 nodes.
  static const ColoredEdgeGraph g(7, 5,
                                  {{0, 1, 0},
                                   {0, 2, 1},
                                   {0, 3, 2},
                                   {0, 4, 1},
                                   {0, 5, 2},
                                   {0, 6, 3},
                                   {1, 2, 3},
                                   {1, 3, 4},
                                   {1, 4, 2},
                                   {2, 3, 0},
                                   {2, 5, 4},
                                   {3, 6, 1},
                                   {4, 5, 3},
                                   {4, 6, 4},
                                   {5, 6, 0}});
  return g;
}

}  // namespace ceg
