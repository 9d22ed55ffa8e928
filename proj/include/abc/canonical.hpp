#pragma once
// Isomorphism-invariant canonical codes for free and rooted trees.

#include <string>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

// Centroid vertex/vertices of a tree (one or two; two only for even n,
// joined by an edge). Returned sorted by vertex id.
std::vector<int> centroids(const Tree& t);

// Canonical code of t rooted at `root`: "(" + concatenation of children's
// codes sorted as strings + ")". Equal for exactly the isomorphic rooted
// trees.
std::string rooted_code(const Tree& t, int root);

// Canonical code of the free tree: rooted code at the centroid, or for a
// bicentroidal tree the codes of the two halves of the central edge, sorted
// and joined. Equal for exactly the isomorphic free trees.
std::string canonical_code(const Tree& t);

// True iff the two trees are isomorphic as free trees.
bool isomorphic(const Tree& a, const Tree& b);

// Conventional root: a vertex of maximum degree; ties broken by the
// lexicographically smallest rooted code, then by vertex id.
int canonical_root(const Tree& t);

}  // namespace abc
