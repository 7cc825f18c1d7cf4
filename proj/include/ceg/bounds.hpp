#ifndef CEG_BOUNDS_HPP
#define CEG_BOUNDS_HPP

#include <optional>
#include <string>

#include "ceg/graph.hpp"

namespace ceg {

enum class Feasibility {
  infeasible,                 // some necessary condition fails for every lambda <= n(n-1)/2
  feasible_by_construction,   // a builder family achieves the bound exactly
  necessary_conditions_met,   // conditions hold; sufficiency unknown in general
};

// Lower bounds on the edge count lambda of a graph on n nodes with palette m
// that survives any t color failures, and the combined verdict.
struct BoundsReport {
  int n = 0;
  int m = 0;
  int t = 0;
  long long degree_bound = 0;             // least lambda with 2*lambda >= (t+1)*n
  std::optional<long long> mu_bound;      // least lambda with mu(lambda,m;t) >= n-1
  std::optional<long long> case_bound;    // the n = (m-t)k + j case split, when m-1 > t > 0
  std::optional<long long> lambda_min;    // max of the bounds; empty when infeasible
  Feasibility feasible = Feasibility::infeasible;
  std::string degree_source;
  std::string mu_source;
  std::string case_source;
  std::string verdict_source;
};

const char* feasibility_name(Feasibility f);

// Best achievable "ground elements left after deleting t blocks" over all
// partitions of a lambda-element set into m blocks. Closed form:
//   (m-t) * floor(lambda/m)                      if t >= lambda mod m
//   (m-t) * floor(lambda/m) + (lambda mod m - t) otherwise
long long mu_formula(long long lambda, int m, int t);

// The same maximum by brute-force enumeration of all block-size multisets.
// Small inputs only (guarded); exists to referee mu_formula.
long long mu_oracle(long long lambda, int m, int t);

// Least lambda with 2*lambda >= (t+1)*n: every node needs more distinctly
// colored edges than the failure budget.
long long degree_bound(int n, int t);

// The mu condition reorganized by n = (m-t)k + j. Requires m-1 > t > 0.
//   j=0: m*k - 1,  j=1: m*k,  2<=j<=m-t-1: m*k + t + j - 1
long long case_bound(int n, int m, int t);

BoundsReport bounds_report(int n, int m, int t);

// Smallest lambda <= n(n-1)/2 meeting every necessary condition, or empty.
std::optional<long long> min_lambda(int n, int m, int t);

// Independent referee for the infeasibility verdicts: enumerates every edge
// subset of K_n and every coloring up to color relabeling and asks the
// connectivity checker. Tiny instances only (guarded).
bool exhaustive_feasibility(int n, int m, int t);

}  // namespace ceg

#endif
