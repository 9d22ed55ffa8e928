#include "abc/index.hpp"

#include <cmath>
#include <stdexcept>

namespace abc {

double edge_contribution(int x, int y) {
  if (x < 1 || y < 1)
    throw std::domain_error("edge contribution needs degrees >= 1");
  return std::sqrt(static_cast<double>(x + y - 2) /
                   (static_cast<double>(x) * static_cast<double>(y)));
}

double edge_contribution_real(double x, double y) {
  if (!(x >= 1.0) || !(y >= 1.0))
    throw std::domain_error("edge contribution needs degrees >= 1");
  return std::sqrt((x + y - 2.0) / (x * y));
}

FTable::FTable(int max_degree) : stride_(max_degree + 1) {
  if (max_degree < 1) throw std::domain_error("max_degree must be >= 1");
  table_.assign(static_cast<size_t>(stride_) * stride_, 0.0);
  for (int x = 1; x <= max_degree; ++x)
    for (int y = 1; y <= max_degree; ++y)
      table_[x * stride_ + y] = edge_contribution(x, y);
}

double abc_index(const Tree& t) {
  double sum = 0.0;
  for (int u = 0; u < t.size(); ++u)
    for (int v : t.neighbors(u))
      if (u < v) sum += edge_contribution(t.degree(u), t.degree(v));
  return sum;
}

double abc_index_with_degrees(const Tree& t, const std::vector<int>& degrees) {
  if (static_cast<int>(degrees.size()) != t.size())
    throw std::invalid_argument("degree vector size mismatch");
  double sum = 0.0;
  for (int u = 0; u < t.size(); ++u)
    for (int v : t.neighbors(u))
      if (u < v) sum += edge_contribution(degrees[u], degrees[v]);
  return sum;
}

}  // namespace abc
