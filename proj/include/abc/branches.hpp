#pragma once
// Structural taxonomy of a tree: pendant/internal paths, B_k and B_k*
// branches, terminal vertices, and degree-ordering diagnostics.

#include <map>
#include <optional>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

struct PendantPath {
  int start;   // vertex of degree > 2 the path hangs from
  int leaf;    // the pendant endpoint
  int length;  // number of edges
};

struct InternalPath {
  int a, b;    // endpoints, both of degree > 2
  int length;  // number of edges; interior vertices all have degree 2
};

struct PathDecomposition {
  bool whole_tree_is_path = false;  // no vertex of degree > 2
  std::vector<PendantPath> pendant_paths;
  std::vector<InternalPath> internal_paths;
};

PathDecomposition decompose_paths(const Tree& t);

// Branch classification relative to a root.
//
// An "arm" under a vertex w is a child of degree 2 whose only child is a
// leaf (a hanging path of length 2); a "long arm" is a child of degree 2
// whose only child has degree 2 and ends in a leaf (length 3).
//
// - B_k center (k >= 2): a non-root vertex of degree k+1 whose k children
//   are all arms.
// - B_k* center (k >= 2): as B_k but exactly one child is a long arm.
// - B_1 center: a non-root vertex of degree 2 whose child is a leaf and
//   whose parent has at least one child of degree >= 3.
// - B_1* center: as B_1 but with the hanging path of length 3.
// - k-terminal vertex: a non-root vertex of degree k+1 >= 3 all of whose
//   children are B/B* centers, at least one of them B_1 or B_1*.
struct BranchInventory {
  int b[5] = {0, 0, 0, 0, 0};       // b[k]: B_k child branches, k = 1..4
  int b_star[5] = {0, 0, 0, 0, 0};  // b_star[k]: B_k* child branches
};

struct BranchProfile {
  int root = -1;
  std::map<int, std::vector<int>> b_centers;       // k -> centers
  std::map<int, std::vector<int>> b_star_centers;  // k -> centers
  std::vector<std::pair<int, int>> terminal_vertices;  // (vertex, k)
  std::map<int, BranchInventory> inventory;  // parent -> child branch counts
};

BranchProfile classify_branches(const Tree& t, int root);

// True iff every child subtree of `root` is a single B/B* branch and at
// least one of them is a B_1 or B_1* branch (the whole tree is one
// terminal branch).
bool tree_is_terminal_branch(const Tree& t, int root);

// Pairs (u, w) in breadth-first visiting order (children enqueued by
// descending degree, ties by id) where both degrees are >= 3 and the
// earlier vertex has the smaller degree.
std::vector<std::pair<int, int>> bfs_degree_order_violations(const Tree& t,
                                                             int root);

// True iff some breadth-first ordering rooted at `root` (children kept
// grouped under their parents) visits the degree->=3 vertices with
// non-increasing degrees. Searches over the orderings of equal-degree
// siblings.
bool bfs_degree_order_feasible(const Tree& t, int root);

// Leaf-to-leaf paths violating the two-ended degree interleaving: walking
// the interior from both ends inward and alternating sides must give
// non-decreasing degrees in at least one of the two orientations.
struct PathWitness {
  int leaf_a, leaf_b;
  std::vector<int> path;  // full vertex sequence including the leaves
};

std::vector<PathWitness> path_degree_ordering_violations(const Tree& t);

}  // namespace abc
