#include "abc/canonical.hpp"

#include <algorithm>
#include <functional>

namespace abc {

std::vector<int> centroids(const Tree& t) {
  int n = t.size();
  if (n == 1) return {0};
  // subtree sizes via iterative post-order from vertex 0
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  {
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : t.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          stack.push_back(w);
        }
    }
  }
  std::vector<int> size(n, 1);
  for (int i = n - 1; i >= 1; --i) size[parent[order[i]]] += size[order[i]];
  std::vector<int> cs;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];  // component containing the parent
    for (int w : t.neighbors(v))
      if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
    if (heaviest <= n / 2) cs.push_back(v);
  }
  std::sort(cs.begin(), cs.end());
  return cs;
}

namespace {

std::string code_below(const Tree& t, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int w : t.neighbors(v))
    if (w != parent) child_codes.push_back(code_below(t, w, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (auto& c : child_codes) out += c;
  out += ")";
  return out;
}

}  // namespace

std::string rooted_code(const Tree& t, int root) {
  return code_below(t, root, -1);
}

std::string canonical_code(const Tree& t) {
  auto cs = centroids(t);
  if (cs.size() == 1) return "c:" + rooted_code(t, cs[0]);
  // Bicentroid: cut the central edge, code each half rooted at its end.
  std::string a = code_below(t, cs[0], cs[1]);
  std::string b = code_below(t, cs[1], cs[0]);
  if (b < a) std::swap(a, b);
  return "e:" + a + b;
}

bool isomorphic(const Tree& a, const Tree& b) {
  if (a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

int canonical_root(const Tree& t) {
  int maxdeg = 0;
  for (int v = 0; v < t.size(); ++v) maxdeg = std::max(maxdeg, t.degree(v));
  int best = -1;
  std::string best_code;
  for (int v = 0; v < t.size(); ++v) {
    if (t.degree(v) != maxdeg) continue;
    std::string c = rooted_code(t, v);
    if (best < 0 || c < best_code) {
      best = v;
      best_code = std::move(c);
    }
  }
  return best;
}

}  // namespace abc
