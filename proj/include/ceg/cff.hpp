#ifndef CEG_CFF_HPP
#define CEG_CFF_HPP

#include <vector>

#include "ceg/graph.hpp"

namespace ceg {

// Partition of the ground set [0, ground_size) into disjoint blocks whose
// union covers it. The color classes of a graph's edge set form one, with the
// ground set indexing the canonical edge order.
struct BlockPartition {
  int ground_size = 0;
  std::vector<std::vector<int>> blocks;  // sorted index lists; may be empty
};

BlockPartition partition_of_graph(const ColoredEdgeGraph& g);

// Ground elements guaranteed to survive the deletion of any t blocks: the sum
// of the m-t smallest block sizes.
long long mu_of_partition(const BlockPartition& p, int t);

// True iff deleting any t blocks leaves at least `threshold` ground elements.
// A graph on n nodes can survive t color failures only if its partition
// passes with threshold n-1.
bool is_cff(const BlockPartition& p, int t, long long threshold);

// Blocks are interchangeable under color relabeling; equality is by multiset.
bool same_partition(const BlockPartition& a, const BlockPartition& b);

}  // namespace ceg

#endif
