#pragma once
// Breadth-first greedy tree of a degree sequence, and recognition of trees
// realizing it.

#include <vector>

#include "abc/tree.hpp"

namespace abc {

// True iff `degrees` (any order) is the degree sequence of some tree:
// n == 1 with degree 0, or all degrees >= 1 summing to 2(n-1).
bool is_tree_degree_sequence(const std::vector<int>& degrees);

// The greedy tree of the sequence: degrees are assigned in non-increasing
// order along a breadth-first ordering; the root receives the largest
// degree and each vertex in turn takes the next unassigned degrees as its
// children.
Tree greedy_tree(const std::vector<int>& degrees);

// True iff t is isomorphic to the greedy tree of its own degree sequence.
bool is_greedy_tree(const Tree& t);

// Structural route to the same predicate: some root of maximum degree
// admits per-level orderings (children kept consecutive under their
// parents, parent groups in parent order) whose concatenated level-by-level
// degree sequence is non-increasing. Implemented independently of
// greedy_tree; agrees with is_greedy_tree everywhere.
bool is_greedy_layout(const Tree& t);

}  // namespace abc
