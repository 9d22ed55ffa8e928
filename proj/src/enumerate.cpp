#include "abc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "abc/canonical.hpp"
#include "abc/greedy.hpp"

namespace abc {

std::vector<int> LevelTree::parents() const {
  std::vector<int> par(n, -1);
  std::vector<int> stack;  // stack[level] = most recent vertex at that level
  int base = 0;
  for (int i = 0; i < n; ++i) {
    if (i == second_root) {
      stack.clear();
      base = i;
    }
    int lv = levels[i];
    stack.resize(lv + 1);
    stack[lv] = i;
    par[i] = (lv == 0) ? -1 : stack[lv - 1];
    (void)base;
  }
  return par;
}

std::vector<int> LevelTree::degrees() const {
  auto par = parents();
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    if (par[i] >= 0) {
      ++deg[i];
      ++deg[par[i]];
    }
  if (second_root >= 0) {
    ++deg[0];
    ++deg[second_root];
  }
  return deg;
}

Tree LevelTree::to_tree() const {
  auto par = parents();
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 0; i < n; ++i)
    if (par[i] >= 0) edges.push_back({par[i], i});
  if (second_root >= 0) edges.push_back({0, second_root});
  return Tree::from_edges(n, edges);
}

std::vector<int> initial_level_sequence(int n) {
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) l[i] = i;
  return l;
}

bool next_level_sequence(std::vector<int>& levels, int forced_position) {
  int n = static_cast<int>(levels.size());
  int p = forced_position;
  if (p < 0) {
    p = n - 1;
    while (p >= 1 && levels[p] <= 1) --p;
    if (p < 1) return false;  // star: no successor
  }
  if (levels[p] < 2)
    throw std::logic_error("successor rewrite point must have level >= 2");
  int q = p - 1;
  while (levels[q] != levels[p] - 1) --q;
  int d = p - q;
  for (int i = p; i < n; ++i) levels[i] = levels[i - d];
  return true;
}

void enumerate_rooted_level_sequences(
    int n, const std::function<void(const std::vector<int>&)>& cb) {
  if (n < 1) throw std::domain_error("need n >= 1");
  auto l = initial_level_sequence(n);
  if (n <= 2) {
    cb(l);
    return;
  }
  do {
    cb(l);
  } while (next_level_sequence(l));
}

namespace {

// Scans for a root-child subtree larger than cap. Returns the position at
// which the overflow is established (value >= 2 there), or -1 if none.
int subtree_cap_violation(const std::vector<int>& levels, int cap) {
  int n = static_cast<int>(levels.size());
  int start = -1;
  for (int i = 1; i < n; ++i) {
    if (levels[i] == 1) {
      start = i;
    } else if (i - start == cap) {
      return i;  // still inside the subtree after cap positions
    }
  }
  return -1;
}

}  // namespace

bool enumerate_unicentroid_from(
    int n, std::vector<int> start, bool include_start,
    const std::function<bool(const LevelTree&)>& cb) {
  if (n < 3) throw std::domain_error("need n >= 3");
  if (static_cast<int>(start.size()) != n || start[0] != 0)
    throw std::invalid_argument("malformed level sequence");
  for (int i = 1; i < n; ++i)
    if (start[i] < 1 || start[i] > start[i - 1] + 1)
      throw std::invalid_argument("malformed level sequence");
  int cap = (n + 1) / 2 - 1;  // unique-centroid bound on root subtrees
  std::vector<int> l = std::move(start);
  bool alive = true;
  if (!include_start && subtree_cap_violation(l, cap) < 0)
    alive = next_level_sequence(l);
  while (alive) {
    int p = subtree_cap_violation(l, cap);
    if (p < 0) {
      if (!cb(LevelTree{n, l, -1})) return false;
      alive = next_level_sequence(l);
    } else {
      alive = next_level_sequence(l, p);
    }
  }
  return true;
}

std::vector<std::vector<int>> rooted_level_sequences(int n) {
  std::vector<std::vector<int>> out;
  enumerate_rooted_level_sequences(
      n, [&](const std::vector<int>& h) { out.push_back(h); });
  return out;
}

void enumerate_free_trees(int n,
                          const std::function<void(const LevelTree&)>& cb) {
  if (n < 1) throw std::domain_error("need n >= 1");
  if (n == 1) {
    cb(LevelTree{1, {0}, -1});
    return;
  }
  if (n == 2) {
    cb(LevelTree{2, {0, 0}, 1});
    return;
  }
  enumerate_unicentroid_from(n, initial_level_sequence(n), true,
                             [&](const LevelTree& lt) {
                               cb(lt);
                               return true;
                             });
  if (n % 2 == 0) {
    // Trees with a centroid edge: unordered pairs of rooted trees on n/2
    // vertices joined at the roots.
    auto halves = rooted_level_sequences(n / 2);
    LevelTree lt;
    lt.n = n;
    lt.second_root = n / 2;
    for (size_t i = 0; i < halves.size(); ++i)
      for (size_t j = i; j < halves.size(); ++j) {
        lt.levels = halves[i];
        lt.levels.insert(lt.levels.end(), halves[j].begin(), halves[j].end());
        cb(lt);
      }
  }
}

void enumerate_trees(int n, const std::function<void(const Tree&)>& cb) {
  enumerate_free_trees(n, [&](const LevelTree& lt) { cb(lt.to_tree()); });
}

namespace {

// Rooted shapes for the degree-restricted generator.
struct ShapeNode {
  int degree = 1;  // degree in the final tree
  std::vector<ShapeNode> children;
  std::string code;
};

std::string shape_code(const ShapeNode& s) {
  std::vector<std::string> cs;
  cs.reserve(s.children.size());
  for (auto& c : s.children) cs.push_back(c.code);
  std::sort(cs.begin(), cs.end());
  std::string out = "(";
  for (auto& c : cs) out += c;
  out += ")";
  return out;
}

using Pool = std::map<int, int>;  // degree -> multiplicity

int pool_size(const Pool& p) {
  int s = 0;
  for (auto& [d, c] : p) s += c;
  return s;
}

void gen_subtrees(const Pool& pool, const std::string& bound,
                  std::vector<std::pair<ShapeNode, Pool>>& out);

// All ways to fill `slots` child positions from `pool`, children in
// non-increasing code order bounded above by `bound`.
void gen_forests(int slots, const Pool& pool, const std::string& bound,
                 std::vector<std::pair<std::vector<ShapeNode>, Pool>>& out) {
  if (slots == 0) {
    out.push_back({{}, pool});
    return;
  }
  if (pool_size(pool) < slots) return;
  std::vector<std::pair<ShapeNode, Pool>> firsts;
  gen_subtrees(pool, bound, firsts);
  for (auto& [first, rest] : firsts) {
    std::vector<std::pair<std::vector<ShapeNode>, Pool>> tails;
    gen_forests(slots - 1, rest, first.code, tails);
    for (auto& [tail, remaining] : tails) {
      std::vector<ShapeNode> forest;
      forest.reserve(tail.size() + 1);
      forest.push_back(first);
      for (auto& s : tail) forest.push_back(s);
      out.push_back({std::move(forest), remaining});
    }
  }
}

// All subtrees whose root consumes one pool entry of degree d (with d-1
// child slots), code <= bound.
void gen_subtrees(const Pool& pool, const std::string& bound,
                  std::vector<std::pair<ShapeNode, Pool>>& out) {
  for (auto& [d, count] : pool) {
    if (count <= 0) continue;
    Pool rest = pool;
    if (--rest[d] == 0) rest.erase(d);
    std::vector<std::pair<std::vector<ShapeNode>, Pool>> fills;
    gen_forests(d - 1, rest, std::string(), fills);
    for (auto& [childs, remaining] : fills) {
      ShapeNode node;
      node.degree = d;
      node.children = childs;
      node.code = shape_code(node);
      if (!bound.empty() && node.code > bound) continue;
      out.push_back({std::move(node), remaining});
    }
  }
}

void shape_to_edges(const ShapeNode& s, int parent, int& next_id,
                    std::vector<Edge>& edges) {
  int my_id = next_id++;
  if (parent >= 0) edges.push_back({parent, my_id});
  for (auto& c : s.children) shape_to_edges(c, my_id, next_id, edges);
}

}  // namespace

std::vector<Tree> trees_with_degree_sequence(const std::vector<int>& degrees) {
  if (!is_tree_degree_sequence(degrees))
    throw std::invalid_argument("not a tree degree sequence");
  int n = static_cast<int>(degrees.size());
  if (n > 26)
    throw std::domain_error(
        "degree-restricted generation supported through 26 vertices");
  if (n == 1) return {Tree::single_vertex()};
  if (n == 2) return {Tree::from_edges(2, {{0, 1}})};
  std::vector<int> d = degrees;
  std::sort(d.rbegin(), d.rend());
  if (d[0] <= 2) {
    // Path is the only tree with maximum degree 2.
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return {Tree::from_edges(n, edges)};
  }
  Pool pool;
  for (int i = 1; i < n; ++i) ++pool[d[i]];
  std::vector<std::pair<std::vector<ShapeNode>, Pool>> fills;
  gen_forests(d[0], pool, std::string(), fills);
  std::set<std::string> seen;
  std::vector<Tree> out;
  for (auto& [childs, remaining] : fills) {
    if (pool_size(remaining) != 0) continue;
    std::vector<Edge> edges;
    int next_id = 1;
    for (auto& c : childs) shape_to_edges(c, 0, next_id, edges);
    Tree t = Tree::from_edges(n, edges);
    if (seen.insert(canonical_code(t)).second) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace abc
