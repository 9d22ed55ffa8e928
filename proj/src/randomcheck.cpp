#include "abc/randomcheck.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace abc {

Tree random_tree(int n, std::mt19937& rng) {
  if (n < 2) throw std::invalid_argument("random_tree: need n >= 2");
  if (n == 2) return Tree::from_edges(2, {{0, 1}});
  std::vector<int> prufer(n - 2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int& x : prufer) x = pick(rng);
  std::vector<int> deg(n, 1);
  for (int x : prufer) ++deg[x];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 1) leaves.push(i);
  std::vector<Edge> es;
  for (int x : prufer) {
    int l = leaves.top();
    leaves.pop();
    es.push_back({std::min(l, x), std::max(l, x)});
    if (--deg[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  es.push_back({std::min(a, b), std::max(a, b)});
  return Tree::from_edges(n, es);
}

namespace {

int rnd(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Grows a tree downward from vertex 0.
struct Grow {
  std::vector<Edge> es;
  int next = 1;

  int add(int p) {
    es.push_back({p, next});
    return next++;
  }
  int arm(int p) {  // hanging 2-path
    int c = add(p);
    add(c);
    return c;
  }
  int b2(int p) {  // degree-3 center with two hanging 2-paths
    int c = add(p);
    arm(c);
    arm(c);
    return c;
  }
  int b3(int p) {  // degree-4 center with three hanging 2-paths
    int c = add(p);
    for (int i = 0; i < 3; ++i) arm(c);
    return c;
  }
  int quad(int p) {  // degree-5 center with four hanging 2-paths
    int c = add(p);
    for (int i = 0; i < 4; ++i) arm(c);
    return c;
  }
  Tree tree() const { return Tree::from_edges(next, es); }
};

// Random children that can never be mistaken for a degree-5 pattern
// center: a leaf, a hanging 2-path, or a small bush of degree 3..4.
void pad(Grow& g, std::mt19937& rng, int v, int count) {
  for (int i = 0; i < count; ++i) {
    switch (rnd(rng, 0, 2)) {
      case 0:
        g.add(v);
        break;
      case 1:
        g.arm(v);
        break;
      default: {
        int c = g.add(v);
        int leaves = rnd(rng, 2, 3);
        for (int j = 0; j < leaves; ++j) g.add(c);
        break;
      }
    }
  }
}

RandomTrial switch_trial(std::mt19937& rng) {
  for (;;) {
    Tree t = random_tree(rnd(rng, 8, 40), rng);
    auto es = t.edges();
    for (int k = 0; k < 400; ++k) {
      auto [a, b] = es[rnd(rng, 0, static_cast<int>(es.size()) - 1)];
      auto [c, d] = es[rnd(rng, 0, static_cast<int>(es.size()) - 1)];
      if (rnd(rng, 0, 1)) std::swap(a, b);
      if (rnd(rng, 0, 1)) std::swap(c, d);
      if (a == c || a == d || b == c || b == d) continue;
      if (t.has_edge(a, d) || t.has_edge(c, b)) continue;
      try {
        auto [after, rep] = apply_switch(t, a, b, c, d);
        RandomTrial trial;
        trial.id = TransformId::Switch;
        trial.n = t.size();
        trial.u = a;
        trial.v = b;
        trial.before = std::move(t);
        trial.after = std::move(after);
        trial.report = std::move(rep);
        return trial;
      } catch (const std::invalid_argument&) {
        continue;  // the swap disconnected the tree; try other edges
      }
    }
  }
}

RandomTrial arm_move_trial(std::mt19937& rng) {
  Grow g;
  int u, v;
  switch (rnd(rng, 0, 3)) {
    case 0: u = v = 0; break;
    case 1:
      u = 0;
      v = g.add(0);
      break;
    case 2:
      v = 0;
      u = g.add(0);
      break;
    default:
      u = g.add(0);
      v = g.add(0);
      break;
  }
  g.quad(u);
  g.b2(v);
  pad(g, rng, u, rnd(rng, 0, 3));
  if (v != u) pad(g, rng, v, rnd(rng, 0, 3));
  if (u != 0 || v != 0) pad(g, rng, 0, rnd(rng, 0, 2));
  Tree t = g.tree();
  auto [after, rep] = apply_case(t, TransformId::T, u, v, 0);
  RandomTrial trial;
  trial.id = TransformId::T;
  trial.n = t.size();
  trial.u = u;
  trial.v = v;
  trial.root = 0;
  trial.before = std::move(t);
  trial.after = std::move(after);
  trial.report = std::move(rep);
  return trial;
}

}  // namespace

RandomTrial random_transform_trial(TransformId id, std::mt19937& rng) {
  if (id == TransformId::Switch) return switch_trial(rng);
  if (id == TransformId::T) return arm_move_trial(rng);

  // Pick admitted (dv, n1); T7 draws its own shape.
  int dv, n1;
  if (id == TransformId::T7) {
    n1 = rnd(rng, 1, 4);
    int d_lo = std::max(4 - n1, 1);
    int big = d_lo + rnd(rng, 0, 2);
    dv = n1 + 1 + big;
  } else {
    auto table = case_parameter_table(id);
    auto [cdv, cn1] = table[rnd(rng, 0, static_cast<int>(table.size()) - 1)];
    dv = cdv;
    n1 = cn1;
  }

  Grow g;
  int u, v;
  int mode = rnd(rng, 0, 3);
  switch (mode) {
    case 0: {  // separate parents, both under the root
      int up = g.add(0);
      int vp = g.add(0);
      u = g.add(up);
      v = g.add(vp);
      pad(g, rng, up, rnd(rng, 0, 2));
      pad(g, rng, vp, rnd(rng, 0, 2));
      break;
    }
    case 1: {  // shared parent: the root
      u = g.add(0);
      v = g.add(0);
      break;
    }
    case 2: {  // v is a child of u; u under the root
      u = g.add(0);
      v = g.add(u);
      break;
    }
    default: {  // v is a child of u, u is the root
      u = 0;
      v = g.add(0);
      break;
    }
  }
  pad(g, rng, 0, rnd(rng, 0, 2));

  g.quad(u);
  for (int i = 0; i < n1; ++i) g.arm(v);
  if (id == TransformId::T7) {
    int big = dv - n1 - 1;
    for (int i = 0; i < big; ++i) g.b3(v);
  } else {
    int n2 = dv - n1 - 1;
    for (int i = 0; i < n2; ++i) g.b2(v);
  }

  // Raise d(u) to at least d(v), plus random slack.
  Tree probe = g.tree();
  int base = probe.degree(u);
  int target = dv + rnd(rng, 0, 5);
  pad(g, rng, u, std::max(0, target - base));

  Tree t = g.tree();
  auto [after, rep] = apply_case(t, id, u, v, 0);
  RandomTrial trial;
  trial.id = id;
  trial.n = t.size();
  trial.u = u;
  trial.v = v;
  trial.root = 0;
  trial.before = std::move(t);
  trial.after = std::move(after);
  trial.report = std::move(rep);
  return trial;
}

}  // namespace abc
