#include "ceg/cff.hpp"

#include <algorithm>

namespace ceg {

BlockPartition partition_of_graph(const ColoredEdgeGraph& g) {
  BlockPartition p;
  p.ground_size = g.edge_count();
  p.blocks.resize(g.palette_size());
  for (int i = 0; i < g.edge_count(); ++i) p.blocks[g.edges()[i].color].push_back(i);
  return p;
}

long long mu_of_partition(const BlockPartition& p, int t) {
  const int m = static_cast<int>(p.blocks.size());
  if (t < 0 || t > m)
    throw Error(Errc::bad_parameter, "t must lie in [0, block count]");
  std::vector<long long> sizes;
  sizes.reserve(m);
  for (const auto& b : p.blocks) sizes.push_back(static_cast<long long>(b.size()));
  std::sort(sizes.begin(), sizes.end());
  long long sum = 0;
  for (int i = 0; i < m - t; ++i) sum += sizes[i];
  return sum;
}

bool is_cff(const BlockPartition& p, int t, long long threshold) {
  return mu_of_partition(p, t) >= threshold;
}

bool same_partition(const BlockPartition& a, const BlockPartition& b) {
  if (a.ground_size != b.ground_size || a.blocks.size() != b.blocks.size()) return false;
  auto sorted_blocks = [](const BlockPartition& p) {
    auto blocks = p.blocks;
    for (auto& bl : blocks) std::sort(bl.begin(), bl.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  };
  return sorted_blocks(a) == sorted_blocks(b);
}

}  // namespace ceg
