#ifndef CEG_COMBINATORICS_HPP
#define CEG_COMBINATORICS_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace ceg {

// Exact C(n, k) for n <= 64 (fits in 64 bits; intermediates widened).
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

// Lexicographic successor of a k-subset of [0, n), as a sorted index vector.
// Returns false at the last combination.
inline bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// The k-subset of [0, n) at lexicographic rank `rank` (0-based).
inline std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<int> comb(k);
  int x = 0;
  for (int i = 0; i < k; ++i) {
    while (binomial(n - x - 1, k - i - 1) <= rank) {
      rank -= binomial(n - x - 1, k - i - 1);
      ++x;
    }
    comb[i] = x++;
  }
  return comb;
}

}  // namespace ceg

#endif
