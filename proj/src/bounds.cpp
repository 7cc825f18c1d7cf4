#include "ceg/bounds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ceg/connectivity.hpp"

namespace ceg {

namespace {

void require_mt(int m, int t) {
  if (m < 1) throw Error(Errc::bad_parameter, "palette size m must be >= 1");
  if (t < 0 || t > m)
    throw Error(Errc::bad_parameter, "threshold t must lie in [0, m]; got t=" + std::to_string(t) +
                                         " with m=" + std::to_string(m));
}

bool proven_family(int m, int t) {
  return t == 0 || m == t + 1 || t == 1 || (m == 4 && t == 2) || (m == 5 && t == 3);
}

// Number of (edge subset, canonical coloring) candidates exhaustive_feasibility
// would visit: sum over subset sizes s of C(P, s) * #set-partitions of s items
// into at most m blocks (colorings canonicalized by first appearance).
double candidate_estimate(int pair_count, int m) {
  const int P = pair_count;
  std::vector<std::vector<double>> stirling(P + 1, std::vector<double>(P + 1, 0.0));
  stirling[0][0] = 1.0;
  for (int s = 1; s <= P; ++s)
    for (int k = 1; k <= s; ++k)
      stirling[s][k] = stirling[s - 1][k - 1] + k * stirling[s - 1][k];
  double total = 0.0;
  for (int s = 0; s <= P; ++s) {
    double colorings = 0.0;
    for (int k = 0; k <= std::min(s, m); ++k) colorings += stirling[s][k];
    if (s == 0) colorings = 1.0;
    double choose = 1.0;
    for (int i = 1; i <= s; ++i) choose = choose * (P - s + i) / i;
    total += choose * colorings;
  }
  return total;
}

}  // namespace

const char* feasibility_name(Feasibility f) {
  switch (f) {
    case Feasibility::infeasible: return "infeasible";
    case Feasibility::feasible_by_construction: return "feasible-by-construction";
    case Feasibility::necessary_conditions_met: return "necessary-conditions-met";
  }
  return "?";
}

long long mu_formula(long long lambda, int m, int t) {
  require_mt(m, t);
  if (lambda < 0) throw Error(Errc::bad_parameter, "lambda must be nonnegative");
  const long long q = lambda / m;
  const long long r = lambda - q * m;
  if (t >= r) return (m - t) * q;
  return (m - t) * q + (r - t);
}

long long mu_oracle(long long lambda, int m, int t) {
  require_mt(m, t);
  if (lambda < 0) throw Error(Errc::bad_parameter, "lambda must be nonnegative");
  if (lambda > 30 || m > 12)
    throw Error(Errc::too_large, "mu_oracle enumerates block-size multisets; keep lambda <= 30, m <= 12");

  // Block sizes as a nonincreasing sequence of m values summing to lambda
  // (zeros allowed). With sizes sorted descending, deleting the t largest
  // blocks is optimal for the adversary, so the partition's value is
  // lambda - (sum of the first t sizes).
  long long best = 0;
  std::vector<long long> parts(m, 0);
  std::function<void(int, long long, long long)> rec = [&](int idx, long long remaining,
                                                           long long max_part) {
    if (idx == m) {
      if (remaining != 0) return;
      long long removed = 0;
      for (int i = 0; i < t; ++i) removed += parts[i];
      best = std::max(best, lambda - removed);
      return;
    }
    if (remaining > max_part * (m - idx)) return;  // cannot place the rest
    for (long long p = std::min(max_part, remaining); p >= 0; --p) {
      parts[idx] = p;
      rec(idx + 1, remaining - p, p);
    }
  };
  rec(0, lambda, lambda);
  return best;
}

long long degree_bound(int n, int t) {
  if (n < 1 || t < 0) throw Error(Errc::bad_parameter, "degree_bound needs n >= 1, t >= 0");
  return (static_cast<long long>(t + 1) * n + 1) / 2;
}

long long case_bound(int n, int m, int t) {
  if (!(m - 1 > t && t > 0))
    throw Error(Errc::bad_parameter, "case split applies only for m-1 > t > 0");
  if (n < 1) throw Error(Errc::bad_parameter, "case_bound needs n >= 1");
  const int width = m - t;
  const long long k = n / width;
  const int j = n % width;
  if (j == 0) return m * k - 1;
  if (j == 1) return m * k;
  return m * k + t + j - 1;
}

BoundsReport bounds_report(int n, int m, int t) {
  if (n < 2) throw Error(Errc::bad_parameter, "bounds need n >= 2");
  require_mt(m, t);

  BoundsReport r;
  r.n = n;
  r.m = m;
  r.t = t;
  r.degree_bound = degree_bound(n, t);
  r.degree_source = "total degree: every node needs t+1 distinctly colored edges";
  r.mu_source = "partition minimum: mu(lambda,m;t) >= n-1";
  const long long cap = static_cast<long long>(n) * (n - 1) / 2;

  if (t < m) {
    // mu is nondecreasing in lambda and mu(m*(n-1), m, t) >= (m-t)(n-1) >= n-1,
    // so the scan always terminates.
    for (long long lambda = 0;; ++lambda) {
      if (mu_formula(lambda, m, t) >= n - 1) {
        r.mu_bound = lambda;
        break;
      }
    }
  }
  if (m - 1 > t && t > 0) {
    r.case_bound = case_bound(n, m, t);
    r.case_source = "case split on n = (m-t)k + j";
    if (!r.mu_bound || *r.case_bound != *r.mu_bound)
      throw std::logic_error("case-split bound disagrees with the partition-minimum bound");
  }

  if (r.mu_bound) {
    const long long lm = std::max(r.degree_bound, *r.mu_bound);
    if (lm <= cap) r.lambda_min = lm;
  }

  if (!r.lambda_min) {
    r.feasible = Feasibility::infeasible;
    r.verdict_source = "some necessary condition fails for every lambda <= n(n-1)/2";
  } else if (proven_family(m, t)) {
    r.feasible = Feasibility::feasible_by_construction;
    r.verdict_source = "an optimal builder family covers (m, t)";
  } else {
    r.feasible = Feasibility::necessary_conditions_met;
    r.verdict_source = "necessary conditions hold; sufficiency unknown in general";
  }
  return r;
}

std::optional<long long> min_lambda(int n, int m, int t) { return bounds_report(n, m, t).lambda_min; }

bool exhaustive_feasibility(int n, int m, int t) {
  if (n < 1) throw Error(Errc::bad_parameter, "exhaustive_feasibility needs n >= 1");
  require_mt(m, t);
  if (n == 1) return true;
  const int P = n * (n - 1) / 2;
  if (P > 12 || candidate_estimate(P, m) > 2e6)
    throw Error(Errc::too_large, "instance too large for exhaustive enumeration");

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(P);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  // All edge subsets; per subset all colorings canonicalized so that colors
  // appear in first-appearance order (connectivity is invariant under color
  // relabeling, so this loses nothing).
  std::vector<int> chosen;
  std::vector<int> coloring;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << P); ++mask) {
    chosen.clear();
    for (int i = 0; i < P; ++i)
      if ((mask >> i) & 1) chosen.push_back(i);
    const int sz = static_cast<int>(chosen.size());
    coloring.assign(sz, 0);
    std::function<bool(int, int)> assign = [&](int pos, int used) -> bool {
      if (pos == sz) {
        std::vector<ColoredEdge> edges(sz);
        for (int i = 0; i < sz; ++i)
          edges[i] = {pairs[chosen[i]].first, pairs[chosen[i]].second, coloring[i]};
        return is_color_connected(ColoredEdgeGraph(n, m, std::move(edges)), t);
      }
      const int limit = std::min(used, m - 1);
      for (int c = 0; c <= limit; ++c) {
        coloring[pos] = c;
        if (assign(pos + 1, std::max(used, c + 1))) return true;
      }
      return false;
    };
    if (assign(0, 0)) return true;
  }
  return false;
}

}  // namespace ceg
