#pragma once
// Text formats for trees.
//
// Edge-list format:
//   line 1: n
//   next n-1 lines: "u v" with 0-based vertex ids.
// On output edges are printed with u < v, sorted lexicographically.
//
// Parent-array format:
//   line 1: n
//   line 2: n-1 integers p_1 .. p_{n-1}, where p_i < i is the parent of
//   vertex i. Vertices are expected in an order where every parent precedes
//   its children (BFS or DFS order both qualify).

#include <iosfwd>
#include <string>

#include "abc/tree.hpp"

namespace abc {

Tree read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Tree& t);

Tree read_parent_array(std::istream& in);
// Writes the parent-array of t rooted at `root` in BFS order.
void write_parent_array(std::ostream& out, const Tree& t, int root = 0);

// Convenience wrappers over string payloads.
Tree tree_from_edge_list(const std::string& text);
std::string tree_to_edge_list(const Tree& t);
Tree tree_from_parent_array(const std::string& text);
std::string tree_to_parent_array(const Tree& t, int root = 0);

}  // namespace abc
