#include "abc/io.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>

namespace abc {

Tree read_edge_list(std::istream& in) {
  int n;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
  if (n <= 0) throw std::invalid_argument("edge list: vertex count must be positive");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: truncated edge lines");
    edges.push_back({u, v});
  }
  return Tree::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Tree& t) {
  out << t.size() << '\n';
  for (auto [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

Tree read_parent_array(std::istream& in) {
  int n;
  if (!(in >> n))
    throw std::invalid_argument("parent array: missing vertex count");
  if (n <= 0)
    throw std::invalid_argument("parent array: vertex count must be positive");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 1; i < n; ++i) {
    int p;
    if (!(in >> p)) throw std::invalid_argument("parent array: truncated");
    if (p < 0 || p >= i)
      throw std::invalid_argument("parent array: parent must precede child");
    edges.push_back({p, i});
  }
  return Tree::from_edges(n, edges);
}

void write_parent_array(std::ostream& out, const Tree& t, int root) {
  int n = t.size();
  if (root < 0 || root >= n)
    throw std::invalid_argument("parent array: root out of range");
  // BFS relabeling so parents precede children.
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> parent_of(n, -1), label(n, -1);
  std::queue<int> q;
  q.push(root);
  label[root] = 0;
  order.push_back(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.neighbors(v))
      if (label[w] < 0 && w != root) {
        label[w] = static_cast<int>(order.size());
        parent_of[w] = v;
        order.push_back(w);
        q.push(w);
      }
  }
  out << n << '\n';
  for (int i = 1; i < n; ++i) {
    out << label[parent_of[order[i]]];
    out << (i + 1 < n ? ' ' : '\n');
  }
  if (n == 1) out << '\n';
}

Tree tree_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string tree_to_edge_list(const Tree& t) {
  std::ostringstream out;
  write_edge_list(out, t);
  return out.str();
}

Tree tree_from_parent_array(const std::string& text) {
  std::istringstream in(text);
  return read_parent_array(in);
}

std::string tree_to_parent_array(const Tree& t, int root) {
  std::ostringstream out;
  write_parent_array(out, t, root);
  return out.str();
}

}  // namespace abc
