#include "abc/branches.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "abc/canonical.hpp"

namespace abc {

namespace {

// Parent array of a breadth-first traversal from root (parent[root] = -1).
std::vector<int> bfs_parents(const Tree& t, int root) {
  std::vector<int> par(t.size(), -2);
  std::queue<int> q;
  par[root] = -1;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.neighbors(v))
      if (par[w] == -2) {
        par[w] = v;
        q.push(w);
      }
  }
  return par;
}

std::vector<std::vector<int>> children_lists(const Tree& t,
                                             const std::vector<int>& par) {
  std::vector<std::vector<int>> ch(t.size());
  for (int v = 0; v < t.size(); ++v)
    if (par[v] >= 0) ch[par[v]].push_back(v);
  return ch;
}

}  // namespace

PathDecomposition decompose_paths(const Tree& t) {
  PathDecomposition out;
  const int n = t.size();
  bool any_big = false;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) > 2) any_big = true;
  if (!any_big) {
    out.whole_tree_is_path = true;
    return out;
  }
  for (int s = 0; s < n; ++s) {
    if (t.degree(s) <= 2) continue;
    for (int c : t.neighbors(s)) {
      if (t.degree(c) > 2) {
        if (s < c) out.internal_paths.push_back({s, c, 1});
        continue;
      }
      // Walk away from s through degree-2 vertices.
      int prev = s, cur = c, len = 1;
      while (t.degree(cur) == 2) {
        int nxt = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1]
                                              : t.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      if (t.degree(cur) == 1) {
        out.pendant_paths.push_back({s, cur, len});
      } else if (s < cur) {
        out.internal_paths.push_back({s, cur, len});
      }
    }
  }
  return out;
}

namespace {

// c is a hanging path of length 2 below its parent: degree 2, single
// child a leaf.
bool arm_type(const Tree& t, const std::vector<std::vector<int>>& ch, int c) {
  return t.degree(c) == 2 && ch[c].size() == 1 && t.degree(ch[c][0]) == 1;
}

// c is a hanging path of length 3 below its parent.
bool long_arm_type(const Tree& t, const std::vector<std::vector<int>>& ch,
                   int c) {
  if (t.degree(c) != 2 || ch[c].size() != 1) return false;
  int d = ch[c][0];
  return t.degree(d) == 2 && ch[d].size() == 1 && t.degree(ch[d][0]) == 1;
}

bool parent_has_big_child(const Tree& t,
                          const std::vector<std::vector<int>>& ch, int p) {
  for (int c : ch[p])
    if (t.degree(c) >= 3) return true;
  return false;
}

}  // namespace

BranchProfile classify_branches(const Tree& t, int root) {
  if (root < 0 || root >= t.size())
    throw std::invalid_argument("classify_branches: root out of range");
  BranchProfile prof;
  prof.root = root;
  const auto par = bfs_parents(t, root);
  const auto ch = children_lists(t, par);

  std::vector<int> branch_k(t.size(), 0);   // k if v is a B_k center
  std::vector<bool> is_star(t.size(), false);

  for (int w = 0; w < t.size(); ++w) {
    if (w == root) continue;
    if (t.degree(w) == 2 && ch[w].size() == 1) {
      if (!parent_has_big_child(t, ch, par[w])) continue;
      int c = ch[w][0];
      if (t.degree(c) == 1) {
        branch_k[w] = 1;
      } else if (t.degree(c) == 2 && ch[c].size() == 1 &&
                 t.degree(ch[c][0]) == 1) {
        branch_k[w] = 1;
        is_star[w] = true;
      }
      continue;
    }
    if (t.degree(w) < 3) continue;
    int k = static_cast<int>(ch[w].size());
    if (k != t.degree(w) - 1) continue;  // cannot happen for non-root
    int arms = 0, long_arms = 0;
    for (int c : ch[w]) {
      if (arm_type(t, ch, c))
        ++arms;
      else if (long_arm_type(t, ch, c))
        ++long_arms;
    }
    if (arms == k) {
      branch_k[w] = k;
    } else if (arms == k - 1 && long_arms == 1) {
      branch_k[w] = k;
      is_star[w] = true;
    }
  }

  for (int w = 0; w < t.size(); ++w) {
    if (branch_k[w] == 0) continue;
    int k = branch_k[w];
    if (is_star[w])
      prof.b_star_centers[k].push_back(w);
    else
      prof.b_centers[k].push_back(w);
    int p = par[w];
    auto& inv = prof.inventory[p];
    if (k >= 1 && k <= 4) {
      if (is_star[w])
        ++inv.b_star[k];
      else
        ++inv.b[k];
    }
  }

  for (int v = 0; v < t.size(); ++v) {
    if (v == root || t.degree(v) < 3) continue;
    bool all_branches = !ch[v].empty();
    bool has_b1 = false;
    for (int c : ch[v]) {
      if (branch_k[c] == 0) {
        all_branches = false;
        break;
      }
      if (branch_k[c] == 1) has_b1 = true;
    }
    if (all_branches && has_b1)
      prof.terminal_vertices.push_back({v, t.degree(v) - 1});
  }
  return prof;
}

bool tree_is_terminal_branch(const Tree& t, int root) {
  if (root < 0 || root >= t.size())
    throw std::invalid_argument("tree_is_terminal_branch: root out of range");
  if (t.degree(root) < 3) return false;
  BranchProfile prof = classify_branches(t, root);
  std::vector<bool> is_center(t.size(), false);
  bool has_b1 = false;
  for (const auto& [k, vs] : prof.b_centers)
    for (int v : vs) {
      is_center[v] = true;
      if (k == 1) has_b1 = true;
    }
  for (const auto& [k, vs] : prof.b_star_centers)
    for (int v : vs) {
      is_center[v] = true;
      if (k == 1) has_b1 = true;
    }
  for (int c : t.neighbors(root))
    if (!is_center[c]) return false;
  return has_b1;
}

std::vector<std::pair<int, int>> bfs_degree_order_violations(const Tree& t,
                                                             int root) {
  if (root < 0 || root >= t.size())
    throw std::invalid_argument(
        "bfs_degree_order_violations: root out of range");
  std::vector<int> order;
  std::vector<bool> seen(t.size(), false);
  std::queue<int> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    std::vector<int> nb;
    for (int w : t.neighbors(v))
      if (!seen[w]) nb.push_back(w);
    std::sort(nb.begin(), nb.end(), [&](int a, int b) {
      if (t.degree(a) != t.degree(b)) return t.degree(a) > t.degree(b);
      return a < b;
    });
    for (int w : nb) {
      seen[w] = true;
      q.push(w);
    }
  }
  std::vector<std::pair<int, int>> bad;
  std::vector<int> bigs;
  for (int v : order)
    if (t.degree(v) >= 3) bigs.push_back(v);
  for (size_t i = 0; i < bigs.size(); ++i)
    for (size_t j = i + 1; j < bigs.size(); ++j)
      if (t.degree(bigs[i]) < t.degree(bigs[j]))
        bad.push_back({bigs[i], bigs[j]});
  return bad;
}

namespace {

// Search over breadth-first orderings: within a sibling group the children
// of degree >= 3 must appear in descending degree (any other arrangement
// only hurts), so the branching is over equal-degree siblings whose
// subtrees differ.
struct BfsOrderSearch {
  const Tree& t;
  std::vector<int> par;
  std::vector<std::vector<int>> ch;
  std::vector<bool> relevant;          // subtree contains a degree->=3 vertex
  std::vector<std::string> code;       // rooted subtree code, for dedup
  long long budget = 10'000'000;

  explicit BfsOrderSearch(const Tree& tr, int root) : t(tr) {
    par = bfs_parents(t, root);
    ch = children_lists(t, par);
    relevant.assign(t.size(), false);
    code.assign(t.size(), "");
    fill(root);
  }

  void fill(int v) {
    std::vector<std::string> cc;
    bool rel = t.degree(v) >= 3;
    for (int c : ch[v]) {
      fill(c);
      if (relevant[c]) rel = true;
      cc.push_back(code[c]);
    }
    std::sort(cc.begin(), cc.end());
    std::string s = "(";
    for (auto& x : cc) s += x;
    s += ")";
    code[v] = std::move(s);
    relevant[v] = rel;
  }

  bool spend() {
    if (--budget < 0)
      throw std::runtime_error("bfs ordering search budget exceeded");
    return true;
  }

  // level: ordered list of this level's relevant vertices. last: smallest
  // degree->=3 value seen so far in the order.
  bool explore(const std::vector<int>& level, int last) {
    spend();
    if (level.empty()) return true;
    for (int v : level) {
      if (t.degree(v) < 3) continue;
      if (t.degree(v) > last) return false;
      last = t.degree(v);
    }
    // Build the next level parent group by parent group, branching over the
    // admissible arrangements of each group.
    return descend(level, 0, {}, last);
  }

  bool descend(const std::vector<int>& level, size_t idx,
               std::vector<int> next, int last) {
    spend();
    if (idx == level.size()) return explore(next, last);
    std::vector<int> kids;
    for (int c : ch[level[idx]])
      if (relevant[c]) kids.push_back(c);
    if (kids.empty()) return descend(level, idx + 1, std::move(next), last);
    // Arrangements: degree descending; equal-degree children ordered by
    // subtree code, cycled through all distinct permutations of the codes.
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      if (t.degree(a) != t.degree(b)) return t.degree(a) > t.degree(b);
      return code[a] < code[b];
    });
    return arrangements(level, idx, next, last, kids, 0);
  }

  // Recursively permute each run of equal-degree children (distinct
  // subtree codes only), then continue with the group appended.
  bool arrangements(const std::vector<int>& level, size_t idx,
                    std::vector<int>& next, int last, std::vector<int>& kids,
                    size_t from) {
    spend();
    size_t i = from;
    while (i < kids.size()) {
      size_t j = i + 1;
      while (j < kids.size() && t.degree(kids[j]) == t.degree(kids[i])) ++j;
      bool distinct = false;
      for (size_t a = i + 1; a < j; ++a)
        if (code[kids[a]] != code[kids[i]]) distinct = true;
      if (distinct && j - i > 1) {
        // Permute this run; runs beyond are handled recursively.
        std::vector<int> run(kids.begin() + i, kids.begin() + j);
        std::sort(run.begin(), run.end(),
                  [&](int a, int b) { return code[a] < code[b]; });
        std::vector<std::string> codes;
        for (int v : run) codes.push_back(code[v]);
        do {
          // Map codes back to vertices (equal codes interchangeable).
          std::vector<int> pool = run;
          for (size_t a = 0; a < codes.size(); ++a) {
            for (size_t b = 0; b < pool.size(); ++b)
              if (code[pool[b]] == codes[a]) {
                kids[i + a] = pool[b];
                pool.erase(pool.begin() + b);
                break;
              }
          }
          if (arrangements(level, idx, next, last, kids, j)) return true;
        } while (std::next_permutation(codes.begin(), codes.end()));
        return false;
      }
      i = j;
    }
    size_t base = next.size();
    next.insert(next.end(), kids.begin(), kids.end());
    std::vector<int> copy = next;
    if (descend(level, idx + 1, std::move(copy), last)) return true;
    next.resize(base);
    return false;
  }
};

}  // namespace

bool bfs_degree_order_feasible(const Tree& t, int root) {
  if (root < 0 || root >= t.size())
    throw std::invalid_argument("bfs_degree_order_feasible: root out of range");
  BfsOrderSearch s(t, root);
  int last = std::numeric_limits<int>::max();
  std::vector<int> level;
  if (s.relevant[root]) level.push_back(root);
  return s.explore(level, last);
}

namespace {

bool interleaved_non_decreasing(const std::vector<int>& deg) {
  // deg listed along the path; read front, back, front+1, back-1, ...
  std::vector<int> seq;
  int lo = 0, hi = static_cast<int>(deg.size()) - 1;
  while (lo <= hi) {
    seq.push_back(deg[lo]);
    if (hi != lo) seq.push_back(deg[hi]);
    ++lo;
    --hi;
  }
  for (size_t i = 1; i < seq.size(); ++i)
    if (seq[i] < seq[i - 1]) return false;
  return true;
}

}  // namespace

std::vector<PathWitness> path_degree_ordering_violations(const Tree& t) {
  std::vector<PathWitness> out;
  std::vector<int> leaves;
  for (int v = 0; v < t.size(); ++v)
    if (t.degree(v) == 1) leaves.push_back(v);
  for (size_t i = 0; i < leaves.size(); ++i) {
    auto par = bfs_parents(t, leaves[i]);
    for (size_t j = i + 1; j < leaves.size(); ++j) {
      std::vector<int> path;
      for (int v = leaves[j]; v != -1; v = par[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());  // runs leaf_a -> leaf_b
      std::vector<int> deg, rdeg;
      for (int v : path) deg.push_back(t.degree(v));
      rdeg.assign(deg.rbegin(), deg.rend());
      if (!interleaved_non_decreasing(deg) &&
          !interleaved_non_decreasing(rdeg))
        out.push_back({leaves[i], leaves[j], path});
    }
  }
  return out;
}

}  // namespace abc
