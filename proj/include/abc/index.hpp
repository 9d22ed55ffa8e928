#pragma once
// Atom-bond connectivity index: per-edge contribution and whole-tree sum.

#include <vector>

#include "abc/tree.hpp"

namespace abc {

// Contribution of an edge whose endpoints have degrees x and y:
//   sqrt((x + y - 2) / (x * y)).
// Degrees must be >= 1; (1,1) is valid and contributes 0.
double edge_contribution(int x, int y);

// Same quantity over the reals (used by the scalar analytic machinery,
// where "degrees" range over a continuum).
double edge_contribution_real(double x, double y);

// Precomputed table of edge contributions for degrees 1..max_degree.
class FTable {
public:
  explicit FTable(int max_degree);
  double operator()(int x, int y) const { return table_[x * stride_ + y]; }
  int max_degree() const { return stride_ - 1; }

private:
  int stride_;
  std::vector<double> table_;
};

// ABC index of a tree: sum of edge contributions over all edges.
double abc_index(const Tree& t);

// ABC index evaluated with an explicit degree vector (degrees[v] must be
// the degree of v). Used to audit the cached-degree path against the
// recomputed path.
double abc_index_with_degrees(const Tree& t, const std::vector<int>& degrees);

}  // namespace abc
