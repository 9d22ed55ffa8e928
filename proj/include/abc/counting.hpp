#pragma once
// Closed-form counting of unlabeled trees, used to cross-check enumeration.

#include <cstdint>
#include <vector>

namespace abc {

// counts[k] = number of unlabeled rooted trees on k vertices, k = 0..n
// (counts[0] = 0 by convention). Overflow-checked; valid through n = 26.
std::vector<std::uint64_t> rooted_tree_counts(int n);

// Number of unlabeled free trees on n vertices (Otter's formula applied to
// the rooted counts). Valid through n = 26.
std::uint64_t free_tree_count(int n);

}  // namespace abc
