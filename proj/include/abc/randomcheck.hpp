#pragma once
// Randomized configurations for the transformation oracles: each trial
// grows a tree containing exactly the local pattern a case expects (over a
// randomly chosen relationship between u and v and randomized surrounding
// degrees), applies the rewiring, and reports the recomputed against the
// closed-form index change.

#include <random>

#include "abc/transforms.hpp"
#include "abc/tree.hpp"

namespace abc {

// Uniform random labeled tree on n >= 2 vertices (decoded random Prufer
// sequence).
Tree random_tree(int n, std::mt19937& rng);

struct RandomTrial {
  TransformId id = TransformId::T;
  int n = 0;
  int u = -1, v = -1, root = -1;
  Tree before, after;
  DeltaReport report;
};

// One randomized valid configuration for the transform, applied. For the
// case transforms the relationship of v to u (separate parents, shared
// parent, child of u, child of the root u) is drawn uniformly.
RandomTrial random_transform_trial(TransformId id, std::mt19937& rng);

}  // namespace abc
