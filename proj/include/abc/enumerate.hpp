#pragma once
// Isomorph-free exhaustive generation of free trees.
//
// Rooted trees are iterated as canonical level sequences (root at level 0,
// preorder, lexicographically maximal representative) in decreasing
// lexicographic order. Free trees are obtained by keeping exactly the
// sequences rooted at a unique centroid (every root-child subtree of size
// <= ceil(n/2)-1) and, for even n, joining unordered pairs of rooted trees
// on n/2 vertices at their roots.

#include <functional>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

// A tree in level-sequence form. For second_root == -1 the whole of
// `levels` is one canonical rooted tree. Otherwise positions
// [0, second_root) and [second_root, n) are two rooted trees (each root at
// level 0) joined by an edge between the two roots.
struct LevelTree {
  int n = 0;
  std::vector<int> levels;
  int second_root = -1;

  std::vector<int> parents() const;  // -1 for roots
  std::vector<int> degrees() const;
  Tree to_tree() const;
};

// First (lexicographically largest) canonical level sequence: the path.
std::vector<int> initial_level_sequence(int n);

// Advances to the next canonical sequence in decreasing lexicographic
// order; returns false when none remains. With forced_position >= 0 the
// rewrite point is forced there (the sequence value at that position must
// be >= 2), which skips every sequence sharing the prefix up to it.
bool next_level_sequence(std::vector<int>& levels, int forced_position = -1);

// Streams every canonical rooted level sequence on n >= 1 vertices.
void enumerate_rooted_level_sequences(
    int n, const std::function<void(const std::vector<int>&)>& cb);

// Streams every free tree on n >= 1 vertices exactly once up to
// isomorphism.
void enumerate_free_trees(int n,
                          const std::function<void(const LevelTree&)>& cb);
void enumerate_trees(int n, const std::function<void(const Tree&)>& cb);

// Streams the centroid-rooted (unique-centroid) free trees on n >= 3
// vertices beginning at `start` (emitted first when include_start is true
// and it passes the centroid filter). A false return from the callback
// stops the scan early, and the function then returns false. Together with
// rooted_level_sequences this makes long scans resumable from a saved
// sequence.
bool enumerate_unicentroid_from(
    int n, std::vector<int> start, bool include_start,
    const std::function<bool(const LevelTree&)>& cb);

// All canonical rooted level sequences on n >= 1 vertices, materialized
// (for the centroid-edge pairing of even orders).
std::vector<std::vector<int>> rooted_level_sequences(int n);

// Every free tree (up to isomorphism) whose degree multiset equals
// `degrees` (input order irrelevant). Throws std::domain_error for
// sequences on more than 26 vertices and std::invalid_argument for
// non-tree sequences.
std::vector<Tree> trees_with_degree_sequence(const std::vector<int>& degrees);

}  // namespace abc
