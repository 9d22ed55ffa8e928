#include "abc/tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abc {

Tree Tree::from_edges(int n, const std::vector<Edge>& edges) {
  if (n <= 0) throw std::invalid_argument("tree must have at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1)
    throw std::invalid_argument("tree on n vertices needs exactly n-1 edges");
  Tree t;
  t.n_ = n;
  t.adj_.assign(n, {});
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop is not allowed");
    Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate edge");
    t.adj_[u].push_back(v);
    t.adj_[v].push_back(u);
  }
  // Connectivity: n-1 distinct edges + connected <=> tree.
  std::vector<int> stack{0};
  std::vector<char> visited(n, 0);
  visited[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.adj_[v])
      if (!visited[w]) {
        visited[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) throw std::invalid_argument("edge set is not connected");
  for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());
  return t;
}

Tree Tree::single_vertex() {
  Tree t;
  t.n_ = 1;
  t.adj_.assign(1, {});
  return t;
}

bool Tree::has_edge(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(n_ > 0 ? n_ - 1 : 0);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back({u, v});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Tree::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

bool Tree::degrees_consistent() const {
  long long sum = 0;
  for (int v = 0; v < n_; ++v) {
    if (static_cast<int>(adj_[v].size()) != degree(v)) return false;
    sum += degree(v);
  }
  return sum == 2LL * (n_ - 1);
}

}  // namespace abc
