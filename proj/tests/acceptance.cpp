// Acceptance suite: runs every release criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <climits>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ceg/bounds.hpp"
#include "ceg/cff.hpp"
#include "ceg/connectivity.hpp"
#include "ceg/constructions.hpp"
#include "ceg/dot.hpp"
#include "ceg/graph.hpp"
#include "ceg/reduction.hpp"

using namespace ceg;

namespace {

struct Check {
  std::string name;
  std::function<bool(std::string&)> run;
};

ColoredEdgeGraph random_graph(std::mt19937& rng, int max_n, int max_m) {
  std::uniform_int_distribution<int> nd(1, max_n), md(1, max_m), coin(0, 1);
  const int n = nd(rng), m = md(rng);
  std::uniform_int_distribution<int> cd(0, m - 1);
  std::vector<ColoredEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, cd(rng)});
  return ColoredEdgeGraph(n, m, std::move(edges));
}

// Minimum edge count for the single-failure family, straight from the
// expression list: min over j in [1, m-1] of m*ceil((n-j)/(m-1)) (+ j if j>=2).
long long t1_minimum_edges(int n, int m) {
  long long best = LLONG_MAX;
  for (int j = 1; j <= m - 1; ++j) {
    const long long k = (n - j + m - 2) / (m - 1);
    best = std::min(best, m * k + (j >= 2 ? j : 0));
  }
  return best;
}

// 1. mu closed form == brute-force oracle on the full grid, incl. pinned values.
bool c1_mu_grid(std::string& note) {
  for (int lambda = 0; lambda <= 14; ++lambda)
    for (int m = 1; m <= 6; ++m)
      for (int t = 0; t <= m; ++t)
        if (mu_formula(lambda, m, t) != mu_oracle(lambda, m, t)) {
          note = "mismatch at lambda=" + std::to_string(lambda) + " m=" + std::to_string(m) +
                 " t=" + std::to_string(t);
          return false;
        }
  if (mu_formula(10, 5, 2) != 6 || mu_formula(3, 2, 1) != 1 || mu_formula(6, 4, 2) != 2)
    return false;
  // mu(10,3;2): closed form and oracle both give 3; the stray value 1 that
  // sometimes gets quoted for this point is consistent with neither route.
  if (mu_formula(10, 3, 2) != 3 || mu_oracle(10, 3, 2) != 3) return false;
  note = "mu(10,5;2)=6 mu(3,2;1)=1 mu(6,4;2)=2; mu(10,3;2)=3 on both routes (not 1)";
  return true;
}

// 2. The three infeasible parameter triples, two confirmed by enumeration.
bool c2_infeasibility(std::string& note) {
  if (min_lambda(3, 2, 1) || min_lambda(4, 4, 2) || min_lambda(5, 3, 2)) return false;
  if (exhaustive_feasibility(3, 2, 1)) return false;
  if (exhaustive_feasibility(4, 4, 2)) return false;
  note = "bounds say infeasible; enumeration over all colorings confirms the first two";
  return true;
}

// 3. m = t+1: feasible exactly when n >= 2m, with spanning-tree builders.
bool c3_spanning_equivalence(std::string& note) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 2; n <= 12; ++n) {
      const bool feasible = min_lambda(n, m, m - 1).has_value();
      if (feasible != (n >= 2 * m)) {
        note = "verdict mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
        return false;
      }
      if (!feasible) {
        try {
          build_disjoint_spanning(n, m);
          note = "builder accepted infeasible n=" + std::to_string(n) + " m=" + std::to_string(m);
          return false;
        } catch (const Error&) {
        }
        continue;
      }
      const auto g = build_disjoint_spanning(n, m);
      if (g.edge_count() != m * (n - 1) || !is_color_connected(g, m - 1)) return false;
    }
  return true;
}

// 4. Single-failure family: checker-verified and edge-optimal on the grid.
bool c4_t1_family(std::string& note) {
  for (int m = 3; m <= 6; ++m)
    for (int n = m; n <= 25; ++n) {
      const auto g = build_t1(n, m);
      if (!is_color_connected(g, 1)) {
        note = "not survivable at n=" + std::to_string(n) + " m=" + std::to_string(m);
        return false;
      }
      if (g.edge_count() != t1_minimum_edges(n, m)) {
        note = "edge count " + std::to_string(g.edge_count()) + " != minimum " +
               std::to_string(t1_minimum_edges(n, m)) + " at n=" + std::to_string(n) +
               " m=" + std::to_string(m);
        return false;
      }
    }
  return true;
}

// 5. m=4 family: exact sizes, both gadgets verbatim.
bool c5_m4_family(std::string& note) {
  const std::vector<ColoredEdge> g1 = {{0, 1, 0}, {0, 2, 2}, {0, 3, 3}, {0, 4, 1},
                                       {1, 2, 1}, {1, 4, 3}, {2, 3, 0}, {3, 4, 2}};
  const std::vector<ColoredEdge> g2 = {{0, 1, 0}, {0, 2, 2}, {0, 3, 3}, {0, 4, 1},
                                       {1, 2, 1}, {1, 4, 3}, {2, 5, 0}, {2, 6, 1},
                                       {3, 4, 2}, {3, 5, 3}, {3, 6, 0}, {5, 6, 2}};
  if (build_m4_t2(5).edges() != g1 || build_m4_t2(7).edges() != g2) {
    note = "gadget edge lists differ from the fixed references";
    return false;
  }
  for (int k = 2; k <= 6; ++k) {
    const auto odd = build_m4_t2(2 * k + 1);
    if (odd.edge_count() != 4 * k || !is_color_connected(odd, 2)) return false;
    const auto even = build_m4_t2(2 * k + 2);
    if (even.edge_count() != 4 * k + 3 || !is_color_connected(even, 2)) return false;
  }
  return true;
}

// 6. m=5 family: search regenerates the frozen gadgets; glued family checks.
bool c6_m5_family(std::string& note) {
  const auto g51 = gadget_search(5, 5, 3, 10);
  if (!g51 || g51->edge_count() != 10 || !(*g51 == gadget_g51())) {
    note = "5-node gadget not regenerated";
    return false;
  }
  const auto g52 = gadget_search(7, 5, 3, 15);
  if (!g52 || g52->edge_count() != 15 || !(*g52 == gadget_g52())) {
    note = "7-node gadget not regenerated";
    return false;
  }
  for (int k = 2; k <= 5; ++k) {
    const auto odd = build_m5_t3(2 * k + 1);
    if (odd.edge_count() != 5 * k || !is_color_connected(odd, 3)) return false;
    const auto even = build_m5_t3(2 * k + 2);
    if (even.edge_count() != 5 * k + 4 || !is_color_connected(even, 3)) return false;
  }
  note = "search regenerated both frozen gadgets";
  return true;
}

// 7. Reduction certification: exhaustive on 5 source nodes, sampled on 8.
bool c7_reduction(std::string& note) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) all.emplace_back(u, v);
  int graphs = 0;
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 10; ++i)
      if ((mask >> i) & 1) edges.push_back(all[i]);
    const auto g = make_plain_graph(5, std::move(edges));
    ++graphs;
    for (int t = 1; t <= 5; ++t)
      if (!certify_reduction(g, t)) {
        note = "mismatch on the 5-node graph with edge mask " + std::to_string(mask) +
               " at t=" + std::to_string(t);
        return false;
      }
  }

  std::mt19937 rng(97);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int round = 0; round < 200; ++round) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const auto g = make_plain_graph(8, std::move(edges));
    std::uniform_int_distribution<int> td(1, 8);
    if (!certify_reduction(g, td(rng))) {
      note = "mismatch on a random 8-node graph (round " + std::to_string(round) + ")";
      return false;
    }
  }
  note = std::to_string(graphs) + " five-node graphs exhaustively + 200 random 8-node graphs";
  return true;
}

// 8. The two checker formulations agree on 1000 random graphs, all t.
bool c8_checker_equivalence(std::string& note) {
  std::mt19937 rng(101);
  for (int i = 0; i < 1000; ++i) {
    const auto g = random_graph(rng, 10, 6);
    for (int t = 0; t <= g.palette_size(); ++t)
      if (is_color_connected(g, t) != is_color_connected_unions(g, t)) {
        note = "routes disagree on sample " + std::to_string(i) + " at t=" + std::to_string(t);
        return false;
      }
  }
  return true;
}

// 9. Everything the checker accepts satisfies both necessary conditions.
bool c9_necessity(std::string& note) {
  std::vector<std::pair<ColoredEdgeGraph, int>> accepted;
  for (int m = 1; m <= 4; ++m)
    for (int n = 2 * m; n <= 10; ++n) accepted.emplace_back(build_disjoint_spanning(n, m), m - 1);
  for (int m = 3; m <= 6; ++m)
    for (int n = m; n <= 16; ++n) accepted.emplace_back(build_t1(n, m), 1);
  for (int n = 5; n <= 13; ++n) {
    accepted.emplace_back(build_m4_t2(n), 2);
    accepted.emplace_back(build_m5_t3(n), 3);
  }
  std::mt19937 rng(103);
  int random_accepted = 0;
  for (int i = 0; i < 500; ++i) {
    const auto g = random_graph(rng, 8, 5);
    if (g.node_count() < 2) continue;
    for (int t = 1; t <= g.palette_size(); ++t)
      if (is_color_connected(g, t)) {
        accepted.emplace_back(g, t);
        ++random_accepted;
      }
  }
  for (const auto& [g, t] : accepted) {
    if (t < 1) continue;
    if (mu_formula(g.edge_count(), g.palette_size(), t) < g.node_count() - 1) {
      note = "partition condition violated";
      return false;
    }
    if (2LL * g.edge_count() < static_cast<long long>(t + 1) * g.node_count()) {
      note = "degree condition violated";
      return false;
    }
  }
  note = std::to_string(accepted.size()) + " accepted graphs (" +
         std::to_string(random_accepted) + " random)";
  return true;
}

// 10. Byte-identical serialization, DOT, and separators across runs and workers.
bool c10_determinism(std::string& note) {
  std::mt19937 rng(107);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_graph(rng, 9, 6);
    if (serialize_graph(g) != serialize_graph(parse_graph(serialize_graph(g)))) {
      note = "serialization round trip not stable";
      return false;
    }
    if (to_dot(g) != to_dot(g)) return false;
    const auto s1 = min_color_separator(g, 1);
    const auto s2 = min_color_separator(g, 2);
    const auto s4 = min_color_separator(g, 4);
    const auto render = [](const std::optional<ColorSeparator>& s) {
      if (!s) return std::string("none");
      std::ostringstream os;
      for (ColorId c : s->colors) os << c << ',';
      os << '|';
      for (NodeId v : s->side) os << v << ',';
      return os.str();
    };
    if (render(s1) != render(s2) || render(s1) != render(s4)) {
      note = "separator differs across worker counts on sample " + std::to_string(i);
      return false;
    }
  }
  const auto a = build_m5_t3(9);
  const auto b = build_m5_t3(9);
  if (serialize_graph(a) != serialize_graph(b) || to_dot(a) != to_dot(b)) {
    note = "builder output not reproducible";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {"mu closed form matches the brute-force oracle on the full grid", c1_mu_grid},
      {"the three infeasible triples are reported and referee-confirmed", c2_infeasibility},
      {"m = t+1 feasibility is exactly n >= 2m with spanning-tree builders", c3_spanning_equivalence},
      {"single-failure designs are verified and edge-optimal on the grid", c4_t1_family},
      {"m=4 family: exact sizes with both gadgets verbatim", c5_m4_family},
      {"m=5 family: frozen gadgets regenerate and glued sizes verify", c6_m5_family},
      {"covering reduction certifies on all small and sampled instances", c7_reduction},
      {"both checker formulations agree on 1000 random graphs", c8_checker_equivalence},
      {"accepted graphs always satisfy both necessary conditions", c9_necessity},
      {"serialization, DOT, and separators are deterministic", c10_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = checks[i].run(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1, checks[i].name.c_str(),
                secs, note.empty() ? "" : " — ", note.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria passed\n", checks.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
