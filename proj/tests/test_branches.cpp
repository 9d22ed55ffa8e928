#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "abc/branches.hpp"
#include "abc/greedy.hpp"
#include "abc/tree.hpp"

using abc::Tree;

namespace {

// Edge-list builder growing downward from vertex 0.
struct B {
  std::vector<abc::Edge> es;
  int next = 1;
  int add(int p) {
    es.push_back({p, next});
    return next++;
  }
  int arm(int p) {
    int c = add(p);
    add(c);
    return c;
  }
  int long_arm(int p) {
    int c = add(p);
    int m = add(c);
    add(m);
    return c;
  }
  int branch(int p, int k) {
    int c = add(p);
    for (int i = 0; i < k; ++i) arm(c);
    return c;
  }
  int star_branch(int p, int k) {  // B_k*: k-1 arms and one long arm
    int c = add(p);
    for (int i = 0; i < k - 1; ++i) arm(c);
    long_arm(c);
    return c;
  }
  Tree tree() const { return Tree::from_edges(next, es); }
};

}  // namespace

TEST_CASE("spider paths decompose by length") {
  // Degree-3 center with hanging paths of lengths 2, 2 and 1.
  B b;
  b.arm(0);
  b.arm(0);
  b.add(0);
  Tree t = b.tree();
  auto pd = abc::decompose_paths(t);
  CHECK_FALSE(pd.whole_tree_is_path);
  CHECK(pd.internal_paths.empty());
  REQUIRE(pd.pendant_paths.size() == 3);
  std::vector<int> lens;
  for (const auto& p : pd.pendant_paths) {
    CHECK(p.start == 0);
    CHECK(t.degree(p.leaf) == 1);
    lens.push_back(p.length);
  }
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<int>{1, 2, 2});
}

TEST_CASE("internal path between two branch vertices") {
  // Two degree-3 vertices joined by a path of length 3.
  B b;
  b.add(0);
  b.add(0);
  int m1 = b.add(0);
  int m2 = b.add(m1);
  int other = b.add(m2);
  b.add(other);
  b.add(other);
  Tree t = b.tree();
  auto pd = abc::decompose_paths(t);
  REQUIRE(pd.internal_paths.size() == 1);
  CHECK(pd.internal_paths[0].length == 3);
  int a = pd.internal_paths[0].a, c = pd.internal_paths[0].b;
  CHECK(std::min(a, c) == 0);
  CHECK(std::max(a, c) == other);
  CHECK(pd.pendant_paths.size() == 4);
}

TEST_CASE("a star is all length-1 pendant paths") {
  Tree t = Tree::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto pd = abc::decompose_paths(t);
  CHECK(pd.pendant_paths.size() == 4);
  for (const auto& p : pd.pendant_paths) CHECK(p.length == 1);
  CHECK(pd.internal_paths.empty());
}

TEST_CASE("a path is flagged whole") {
  Tree t = Tree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto pd = abc::decompose_paths(t);
  CHECK(pd.whole_tree_is_path);
  CHECK(pd.pendant_paths.empty());
  CHECK(pd.internal_paths.empty());
}

TEST_CASE("B4 branches and a B1 under one parent") {
  // Root with one hanging 2-path and five B4 branches.
  B b;
  b.arm(0);
  std::vector<int> centers;
  for (int i = 0; i < 5; ++i) centers.push_back(b.branch(0, 4));
  Tree t = b.tree();
  auto prof = abc::classify_branches(t, 0);
  REQUIRE(prof.b_centers.count(4) == 1);
  CHECK(prof.b_centers.at(4) == centers);
  REQUIRE(prof.b_centers.count(1) == 1);
  CHECK(prof.b_centers.at(1).size() == 1);  // the 2-path, B4 siblings present
  CHECK(prof.inventory.at(0).b[4] == 5);
  CHECK(prof.inventory.at(0).b[1] == 1);
  CHECK(prof.b_star_centers.empty());
}

TEST_CASE("terminal vertices require a B1 or B1* child") {
  // v carries two B2 branches and one B3: no B1, so not terminal.
  B b;
  int v = b.add(0);
  b.branch(v, 2);
  b.branch(v, 2);
  b.branch(v, 3);
  Tree t = b.tree();
  auto prof = abc::classify_branches(t, 0);
  CHECK(prof.terminal_vertices.empty());
  CHECK_FALSE(abc::tree_is_terminal_branch(t, 0));

  // Adding a hanging 2-path under v makes v a 4-terminal vertex.
  B b2;
  int v2 = b2.add(0);
  b2.branch(v2, 2);
  b2.branch(v2, 2);
  b2.branch(v2, 3);
  b2.arm(v2);
  Tree t2 = b2.tree();
  auto prof2 = abc::classify_branches(t2, 0);
  REQUIRE(prof2.terminal_vertices.size() == 1);
  CHECK(prof2.terminal_vertices[0] == std::pair<int, int>{v2, 4});
}

TEST_CASE("the whole tree as one terminal branch") {
  B b;
  b.branch(0, 2);
  b.branch(0, 2);
  b.arm(0);  // the B1, assuming a sibling of degree >= 3
  Tree t = b.tree();
  CHECK(abc::tree_is_terminal_branch(t, 0));
  auto prof = abc::classify_branches(t, 0);
  CHECK(prof.inventory.at(0).b[1] == 1);
  CHECK(prof.inventory.at(0).b[2] == 2);
}

TEST_CASE("B1 needs a sibling subtree of degree >= 3") {
  // A hanging 2-path whose parent has only leaves otherwise: not a B1.
  B b;
  b.arm(0);
  b.add(0);
  b.add(0);
  Tree t = b.tree();
  auto prof = abc::classify_branches(t, 0);
  CHECK(prof.b_centers.count(1) == 0);

  B b2;
  b2.arm(0);
  b2.branch(0, 2);  // degree-3 sibling
  Tree t2 = b2.tree();
  auto prof2 = abc::classify_branches(t2, 0);
  REQUIRE(prof2.b_centers.count(1) == 1);
  CHECK(prof2.b_centers.at(1).size() == 1);
}

TEST_CASE("starred branches") {
  B b;
  int c3s = b.star_branch(0, 3);
  int c1s = b.long_arm(0);
  b.branch(0, 2);  // degree-3 sibling so the long arm counts as B1*
  Tree t = b.tree();
  auto prof = abc::classify_branches(t, 0);
  REQUIRE(prof.b_star_centers.count(3) == 1);
  CHECK(prof.b_star_centers.at(3) == std::vector<int>{c3s});
  REQUIRE(prof.b_star_centers.count(1) == 1);
  CHECK(prof.b_star_centers.at(1) == std::vector<int>{c1s});
  CHECK(prof.inventory.at(0).b_star[3] == 1);
  CHECK(prof.inventory.at(0).b_star[1] == 1);
  CHECK(prof.inventory.at(0).b[2] == 1);
}

TEST_CASE("breadth-first degree ordering diagnostics") {
  // Root(4): first child u(4) has a degree-3 child, second child w(4) has
  // a degree-4 child. The deterministic order (u before w) violates the
  // ordering, but swapping the equal-degree children repairs it.
  B b;
  int u = b.add(0);
  int w = b.add(0);
  b.add(0);
  b.add(0);
  int c = b.add(u);  // degree 3 below u
  b.add(c);
  b.add(c);
  b.add(u);
  b.add(u);
  int d = b.add(w);  // degree 4 below w
  b.add(d);
  b.add(d);
  b.add(d);
  b.add(w);
  b.add(w);
  Tree t = b.tree();
  REQUIRE(t.degree(0) == 4);
  REQUIRE(t.degree(u) == 4);
  REQUIRE(t.degree(w) == 4);
  REQUIRE(t.degree(c) == 3);
  REQUIRE(t.degree(d) == 4);
  CHECK_FALSE(abc::bfs_degree_order_violations(t, 0).empty());
  CHECK(abc::bfs_degree_order_feasible(t, 0));

  // A greedy tree is breadth-first ordered as built.
  Tree g = abc::greedy_tree({4, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1});
  CHECK(abc::bfs_degree_order_violations(g, 0).empty());
  CHECK(abc::bfs_degree_order_feasible(g, 0));

  // A degree-4 vertex strictly below a degree-3 one cannot be repaired.
  B bb;
  for (int i = 0; i < 4; ++i) bb.arm(0);
  int a = bb.add(0);
  bb.add(a);
  int z = bb.add(a);
  bb.arm(z);
  bb.arm(z);
  bb.arm(z);
  Tree t2 = bb.tree();
  REQUIRE(t2.degree(0) == 5);
  REQUIRE(t2.degree(a) == 3);
  REQUIRE(t2.degree(z) == 4);
  CHECK_FALSE(abc::bfs_degree_order_violations(t2, 0).empty());
  CHECK_FALSE(abc::bfs_degree_order_feasible(t2, 0));
}

TEST_CASE("leaf-to-leaf degree interleaving") {
  // Greedy trees satisfy the interleaving for every leaf pair.
  Tree g = abc::greedy_tree({4, 2, 2, 1, 1, 1, 1});
  CHECK(abc::path_degree_ordering_violations(g).empty());

  // Two separated branch vertices with a low-degree middle violate it.
  B b;
  b.arm(0);
  b.arm(0);
  int m = b.add(0);
  int other = b.add(m);
  b.arm(other);
  b.arm(other);
  Tree t = b.tree();
  auto bad = abc::path_degree_ordering_violations(t);
  CHECK_FALSE(bad.empty());
  for (const auto& w : bad) {
    CHECK(t.degree(w.leaf_a) == 1);
    CHECK(t.degree(w.leaf_b) == 1);
    CHECK(w.path.front() == w.leaf_a);
    CHECK(w.path.back() == w.leaf_b);
  }
}
