#pragma once
// Local rewirings that relocate hanging paths between high-degree branch
// centers, together with closed-form expressions for the index change each
// one produces and upper-bound expressions depending only on a few degrees.
//
// Throughout, u is the parent of a degree-5 center u1 carrying four hanging
// 2-paths, and v is the parent of a prescribed mix of hanging 2-paths
// ("B1", counted by n1) and degree-3 centers with two hanging 2-paths each
// ("B2", counted by n2); case T7 instead has degree-4 centers with three
// hanging 2-paths ("B3") under v. Each case is valid for specific (dv, n1)
// pairs and requires d(u) >= d(v) >= 5.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

enum class TransformId { Switch, T, T1, T2, T3, T41, T42, T5, T6, T7 };

const char* to_string(TransformId id);
std::optional<TransformId> transform_from_string(std::string_view s);

// How v sits relative to u. The closed forms only differ when v is a child
// of u: the reweighted (u,v) edge then replaces the v-parent term.
enum class Relationship {
  AllDistinct,      // u, v and their parents pairwise distinct
  SharedParent,     // u and v are children of the same vertex
  ParentChild,      // v is a child of u
  ParentChildRoot,  // v is a child of u and u is the root
};

const char* to_string(Relationship rel);

struct ArmRef {
  int center = -1, tip = -1;  // hanging 2-path: parent - center - tip
};

struct B2Ref {
  int center = -1;  // degree-3 child of v
  ArmRef arm0, arm1;
};

struct B3Ref {
  int center = -1;  // degree-4 child of v
  ArmRef arms[3];
};

struct TransformCase {
  TransformId id = TransformId::T;
  Relationship rel = Relationship::AllDistinct;
  int root = -1;  // orientation vertex
  int u = -1, v = -1;
  int u_p = -1, v_p = -1;  // parents toward the root (-1 for the root)
  int u1 = -1;             // degree-5 center under u
  std::vector<ArmRef> u1_arms;
  std::vector<ArmRef> b1;  // hanging 2-paths under v
  std::vector<B2Ref> b2;   // degree-3 centers under v
  std::vector<B3Ref> b3;   // degree-4 centers under v
  std::vector<int> x;      // neighbors of u appearing in the generic sum
  int du = 0, dv = 0, n1 = 0, n2 = 0;
};

struct DeltaReport {
  // Index of the rewired tree minus index of the original, recomputed
  // from scratch.
  double structural_delta = 0.0;
  // The closed-form value; matches structural_delta to floating accuracy.
  double formula_delta = 0.0;
  // When v is a child of u (and the case is not T41): the closed form with
  // the original degree of u kept in the reweighted (u,v) edge term. An
  // upper bound on the true change.
  std::optional<double> formula_upper_delta;
  // The printed bound in du/dv/n1 alone, when (du, dv, n1) lies in the
  // bound's declared range.
  std::optional<double> bound_delta;
  TransformCase tcase;
};

// Degree-preserving switch: remove edges {a,b} and {c,d}, add {a,d} and
// {c,b}. All four vertices distinct; the result must again be a tree.
// The change equals f(da,dd) + f(dc,db) - f(da,db) - f(dc,dd).
std::pair<Tree, DeltaReport> apply_switch(const Tree& t, int a, int b, int c,
                                          int d);

// Move one hanging 2-path from the degree-5 center u1 (child of u) to a
// degree-3 center v1 (child of v). u == v is allowed. The change equals
// -f(du,5) + f(du,4) - f(dv,3) + f(dv,4).
std::pair<Tree, DeltaReport> apply_arm_move(const Tree& t, int u, int u1,
                                            int v, int v1);

// Identify all roles for the given case with u and v, rooted at `root`
// (canonical_root when -1). Throws std::invalid_argument when the tree
// does not have the required local structure.
TransformCase resolve_case(const Tree& t, TransformId id, int u, int v,
                           int root = -1);

// Perform the rewiring described by the case and report the change.
std::pair<Tree, DeltaReport> apply_case(const Tree& t, const TransformCase& c);
std::pair<Tree, DeltaReport> apply_case(const Tree& t, TransformId id, int u,
                                        int v, int root = -1);

// Smallest du admitted by the bounds below for a given dv in {5,6,7}.
int bound_du_min(int dv);

// The printed upper bound for the case, as a function of d(u), d(v) and
// (for T7) n1. Declared ranges: dv as admitted by the case, du >=
// bound_du_min(dv); for T7, 1 <= n1 <= 4, dv >= max(5, n1+2), du >= dv.
// For T1 the printed expression is pinned at the lower end of its range
// and is constant in du.
double evaluate_bound(TransformId id, int du, int dv, int n1 = 0);

// The bound sharpened by the term (du-2)(-f(4,du) + f(4,du+k)), where k is
// the degree gained by u. Defined for the cases whose plain bound has
// non-negative spots: T3 (k=2), T41, T5, T6 (k=1).
double evaluate_refined_bound(TransformId id, int du, int dv, int n1 = 0);

struct ExceptionWindow {
  int dv = 0, du_lo = 0, du_hi = 0;
};

// Integer (dv, du) ranges on which the plain bound fails to be negative.
std::vector<ExceptionWindow> exception_windows(TransformId id);

// The (dv, n1) pairs each case admits (n1 is -1 for T7, where any
// 1 <= n1 <= 4 with dv >= n1 + 2 works).
std::vector<std::pair<int, int>> case_parameter_table(TransformId id);

}  // namespace abc
