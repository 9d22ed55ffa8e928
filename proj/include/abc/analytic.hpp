#pragma once
// Scalar analysis of the edge-weight function f(x,y) = sqrt((x+y-2)/(xy)):
// transfer terms for moving degree between endpoints, the net change g1 of
// relocating a hanging 2-path between branch centers, its integer
// thresholds, and monotonicity sweeps over real grids.

#include <optional>
#include <vector>

namespace abc {

// -f(x,y) + f(x+dx, y-dy): change of one edge weight when its endpoint
// degrees move apart. Requires x, y >= 2, dx >= 0, 0 <= dy < y and
// y - dy >= 1.
double g_value(double x, double y, double dx, double dy);

// -f(x,y) + f(x-dx, y+dy): the mirrored transfer. Requires x, y >= 2,
// dy >= 0, 0 <= dx < x and x - dx >= 1.
double g_mirror_value(double x, double y, double dx, double dy);

// -sqrt(1/a) + sqrt(1/b): limit of a transfer term as the common degree
// grows. Requires a, b > 0.
double degree_limit_term(double a, double b);

// Net index change of moving one hanging 2-path from a degree-5 branch
// center under u to a degree-3 branch center under v:
//   -f(du,5) + f(du,4) - f(dv,3) + f(dv,4).
// Requires du >= dv >= 5 (real-valued arguments allowed).
double g1_value(double du, double dv);

// Limit of g1_value(du, dv) as du -> infinity:
//   -sqrt(1/5) + sqrt(1/4) - f(dv,3) + f(dv,4).
double g1_limit(double dv);

struct ThresholdResult {
  // Least integer du >= dv with g1_value(du, dv) >= 0; empty when no such
  // du exists (the limit is <= 0, and g1 increases strictly toward it).
  std::optional<long long> du;
  // True when the deciding quantity was within 1e-12 of zero without being
  // exactly zero; such cases deserve a manual look.
  bool borderline = false;
  double deciding_value = 0.0;
};

// Requires dv >= 5.
ThresholdResult threshold_du(int dv);

struct GridSpec {
  double x_lo = 2.0, x_hi = 50.0;
  double y_lo = 2.0, y_hi = 50.0;
  double step = 0.5;
  std::vector<double> dx{0, 1, 2, 4};
  std::vector<double> dy{0, 1, 2};
};

struct GridViolation {
  double x, y, dx, dy;   // the grid point
  char axis;             // 'x' or 'y': direction of the failed step
  double value, next_value;
};

struct GridReport {
  long long comparisons = 0;
  std::vector<GridViolation> violations;
  // Comparisons whose difference was within 1e-12 of zero but not exactly
  // zero; counted as passing, listed for review.
  std::vector<GridViolation> borderline;
};

// Checks that g_value is non-decreasing in x and non-increasing in y along
// grid steps. Comparisons with either endpoint outside the domain are
// skipped.
GridReport check_transfer_monotone(const GridSpec& spec = {});

// Checks that g_mirror_value is non-increasing in x and non-decreasing in
// y along grid steps.
GridReport check_mirror_transfer_monotone(const GridSpec& spec = {});

struct GridValue {
  double x, y, dx, dy, value;
};

// Full evaluation of the transfer (mirror = false) or mirrored transfer
// (mirror = true) over the grid, for tabular output.
std::vector<GridValue> evaluate_transfer_grid(const GridSpec& spec,
                                              bool mirror);

}  // namespace abc
