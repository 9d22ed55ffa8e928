#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "abc/branches.hpp"
#include "abc/canonical.hpp"
#include "abc/enumerate.hpp"
#include "abc/greedy.hpp"
#include "abc/index.hpp"
#include "abc/verify.hpp"

#include "oracles.hpp"

using abc::Tree;

TEST_CASE("degree sequence realizability") {
  CHECK(abc::is_tree_degree_sequence({0}));
  CHECK(abc::is_tree_degree_sequence({1, 1}));
  CHECK(abc::is_tree_degree_sequence({2, 1, 1}));
  CHECK(abc::is_tree_degree_sequence({4, 2, 2, 1, 1, 1, 1}));
  CHECK_FALSE(abc::is_tree_degree_sequence({1}));
  CHECK_FALSE(abc::is_tree_degree_sequence({2, 2}));
  CHECK_FALSE(abc::is_tree_degree_sequence({3, 3, 1, 1}));
  CHECK_FALSE(abc::is_tree_degree_sequence({0, 1, 1}));
}

TEST_CASE("greedy spider assigns long legs to the first slots") {
  Tree t = abc::greedy_tree({4, 2, 2, 1, 1, 1, 1});
  REQUIRE(t.size() == 7);
  CHECK(t.degree_sequence() == std::vector<int>{4, 2, 2, 1, 1, 1, 1});
  // A degree-4 center with two legs of length 2 and two of length 1.
  auto pd = abc::decompose_paths(t);
  REQUIRE(pd.pendant_paths.size() == 4);
  std::vector<int> lens;
  for (const auto& p : pd.pendant_paths) lens.push_back(p.length);
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<int>{1, 1, 2, 2});
  CHECK(pd.internal_paths.empty());
}

TEST_CASE("greedy output recognizes itself") {
  for (int n = 2; n <= 9; ++n)
    for (const auto& d : abc::tree_degree_sequences(n)) {
      Tree t = abc::greedy_tree(d);
      CHECK(t.degree_sequence() == d);
      CHECK(abc::is_greedy_tree(t));
      CHECK(abc::is_greedy_layout(t));
    }
}

TEST_CASE("separated centers are not the greedy realization") {
  // Two degree-3 vertices joined through a degree-2 vertex, two leaves on
  // each: degree sequence (3,3,2,1,1,1,1), but not the greedy tree of it.
  Tree t = Tree::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}});
  CHECK(t.degree_sequence() == std::vector<int>{3, 3, 2, 1, 1, 1, 1});
  CHECK_FALSE(abc::is_greedy_tree(t));
  CHECK_FALSE(abc::is_greedy_layout(t));
  Tree g = abc::greedy_tree({3, 3, 2, 1, 1, 1, 1});
  CHECK(abc::is_greedy_layout(g));
  CHECK_FALSE(abc::isomorphic(t, g));
}

TEST_CASE("the two greedy recognizers agree everywhere") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& [code, t] : testsupport::prufer_tree_set(n))
      CHECK(abc::is_greedy_tree(t) == abc::is_greedy_layout(t));
}

TEST_CASE("degree sequence counts follow the partition numbers") {
  // Sequences for order n correspond to partitions of n-2.
  const std::vector<std::size_t> want{1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 2; n <= 9; ++n)
    CHECK(abc::tree_degree_sequences(n).size() == want[n - 2]);
  CHECK(abc::tree_degree_sequences(1) ==
        std::vector<std::vector<int>>{{0}});
  for (const auto& d : abc::tree_degree_sequences(9)) {
    CHECK(abc::is_tree_degree_sequence(d));
    CHECK(std::is_sorted(d.rbegin(), d.rend()));
  }
}

TEST_CASE("greedy tree minimizes the index over its degree class") {
  for (int n = 4; n <= 9; ++n)
    for (const auto& d : abc::tree_degree_sequences(n)) {
      double best = std::numeric_limits<double>::infinity();
      for (const Tree& t : abc::trees_with_degree_sequence(d))
        best = std::min(best, abc::abc_index(t));
      double g = abc::abc_index(abc::greedy_tree(d));
      CHECK(g <= best + 1e-9);
      CHECK(g >= best - 1e-9);  // greedy is in the class, so equality
    }
}

TEST_CASE("full greedy optimality sweep through order 10") {
  CHECK(abc::verify_greedy_optimality(10).empty());
  CHECK_THROWS_AS(abc::verify_greedy_optimality(13), std::domain_error);
}
