// Balanced partitions, polydiagonal invariance and quotient networks.
#pragma once

#include <string>
#include <vector>

#include "reinet/network.hpp"

namespace reinet {

struct Partition {
  std::vector<std::vector<int>> blocks;  // 0-based nodes

  // Blocks sorted internally and by first element.
  Partition normalized() const;
  std::vector<int> block_map(int n) const;  // node -> block index
  int nontrivial() const;                   // blocks with more than one node
  std::string to_string() const;            // "1,2|3", 1-based
  bool operator==(const Partition& o) const { return normalized().blocks == o.normalized().blocks; }
};

Partition singletons(int n);
// "1,2|3": comma inside a block, bar between blocks, whitespace ignored.
Partition parse_partition(const std::string& text, int n);
// Throws std::invalid_argument unless the blocks are nonempty, disjoint and cover 0..n-1.
void check_partition(const Partition& p, int n);

bool is_balanced(const ReiNetwork& net, const Partition& p);
// Exact check that every adjacency-bundle matrix maps the polydiagonal into itself.
bool polydiagonal_invariant(const ReiNetwork& net, const Partition& p);

std::vector<Partition> all_partitions(int n);
// Balanced partitions ordered coarsest first (fewest blocks), then by text.
std::vector<Partition> balanced_partitions(const ReiNetwork& net);

struct QuotientNetwork {
  ReiNetwork net;
  std::vector<int> block_map;
};

QuotientNetwork quotient(const ReiNetwork& net, const Partition& p);

}  // namespace reinet
