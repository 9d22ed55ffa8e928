#pragma once
// Immutable labeled tree on vertices 0..n-1, stored as adjacency lists.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace abc {

using Edge = std::pair<int, int>;

class Tree {
public:
  // Empty placeholder (zero vertices); every factory below returns a
  // nonempty, validated tree.
  Tree() = default;

  // Builds a tree from an explicit edge list. Throws std::invalid_argument
  // unless the edges form a tree on n vertices (n-1 edges, endpoints in
  // range, no self-loops, no duplicates, connected).
  static Tree from_edges(int n, const std::vector<Edge>& edges);

  // Single vertex / empty helpers.
  static Tree single_vertex();

  int size() const { return n_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  // All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Non-increasing degree multiset.
  std::vector<int> degree_sequence() const;

  // Audit: every stored degree equals the adjacency-list length and the
  // degree sum equals 2(n-1).
  bool degrees_consistent() const;

private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
};

}  // namespace abc
