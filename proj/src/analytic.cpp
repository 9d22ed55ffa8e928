#include "abc/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "abc/index.hpp"

namespace abc {

namespace {
constexpr double kBorderline = 1e-12;

bool transfer_domain_ok(double x, double y, double dx, double dy) {
  return x >= 2.0 && y >= 2.0 && dx >= 0.0 && dy >= 0.0 && dy < y &&
         y - dy >= 1.0;
}

bool mirror_domain_ok(double x, double y, double dx, double dy) {
  return x >= 2.0 && y >= 2.0 && dy >= 0.0 && dx >= 0.0 && dx < x &&
         x - dx >= 1.0;
}
}  // namespace

double g_value(double x, double y, double dx, double dy) {
  if (!transfer_domain_ok(x, y, dx, dy))
    throw std::domain_error("g_value: arguments out of domain");
  return -edge_contribution_real(x, y) + edge_contribution_real(x + dx, y - dy);
}

double g_mirror_value(double x, double y, double dx, double dy) {
  if (!mirror_domain_ok(x, y, dx, dy))
    throw std::domain_error("g_mirror_value: arguments out of domain");
  return -edge_contribution_real(x, y) + edge_contribution_real(x - dx, y + dy);
}

double degree_limit_term(double a, double b) {
  if (a <= 0.0 || b <= 0.0)
    throw std::domain_error("degree_limit_term: arguments must be positive");
  return -std::sqrt(1.0 / a) + std::sqrt(1.0 / b);
}

double g1_value(double du, double dv) {
  if (!(du >= dv && dv >= 5.0))
    throw std::domain_error("g1_value: need du >= dv >= 5");
  return -edge_contribution_real(du, 5) + edge_contribution_real(du, 4) -
         edge_contribution_real(dv, 3) + edge_contribution_real(dv, 4);
}

double g1_limit(double dv) {
  if (dv < 5.0) throw std::domain_error("g1_limit: need dv >= 5");
  return degree_limit_term(5, 4) - edge_contribution_real(dv, 3) +
         edge_contribution_real(dv, 4);
}

ThresholdResult threshold_du(int dv) {
  if (dv < 5) throw std::domain_error("threshold_du: need dv >= 5");
  ThresholdResult res;
  // The u-side part f(du,4) - f(du,5) increases strictly for du >= 5 and
  // tends to sqrt(1/4) - sqrt(1/5), so every finite value stays below the
  // limit: a non-positive limit rules the threshold out.
  double lim = g1_limit(dv);
  if (lim <= 0.0) {
    res.du = std::nullopt;
    res.deciding_value = lim;
    res.borderline = lim != 0.0 && std::fabs(lim) < kBorderline;
    return res;
  }
  for (long long du = dv;; ++du) {
    double v = g1_value(static_cast<double>(du), dv);
    if (v >= 0.0) {
      res.du = du;
      res.deciding_value = v;
      res.borderline = v != 0.0 && std::fabs(v) < kBorderline;
      return res;
    }
  }
}

namespace {

template <typename F, typename DomainOk>
GridReport sweep(const GridSpec& spec, F f, DomainOk ok, int x_sign,
                 int y_sign) {
  // x_sign/y_sign: +1 when the value must not decrease along the axis,
  // -1 when it must not increase.
  GridReport rep;
  auto record = [&](double x, double y, double dx, double dy, char axis,
                    double v1, double v2) {
    double diff = (axis == 'x' ? x_sign : y_sign) * (v2 - v1);
    ++rep.comparisons;
    if (diff < 0.0 && -diff > kBorderline) {
      rep.violations.push_back({x, y, dx, dy, axis, v1, v2});
    } else if (diff != 0.0 && std::fabs(diff) <= kBorderline) {
      rep.borderline.push_back({x, y, dx, dy, axis, v1, v2});
      // A borderline negative still counts as a violation.
      if (diff < 0.0) rep.violations.push_back({x, y, dx, dy, axis, v1, v2});
    }
  };
  for (double dx : spec.dx)
    for (double dy : spec.dy)
      for (double x = spec.x_lo; x <= spec.x_hi + 1e-9; x += spec.step)
        for (double y = spec.y_lo; y <= spec.y_hi + 1e-9; y += spec.step) {
          if (!ok(x, y, dx, dy)) continue;
          double v = f(x, y, dx, dy);
          double xn = x + spec.step, yn = y + spec.step;
          if (xn <= spec.x_hi + 1e-9 && ok(xn, y, dx, dy))
            record(x, y, dx, dy, 'x', v, f(xn, y, dx, dy));
          if (yn <= spec.y_hi + 1e-9 && ok(x, yn, dx, dy))
            record(x, y, dx, dy, 'y', v, f(x, yn, dx, dy));
        }
  return rep;
}

}  // namespace

GridReport check_transfer_monotone(const GridSpec& spec) {
  return sweep(
      spec, [](double x, double y, double dx, double dy) { return g_value(x, y, dx, dy); },
      transfer_domain_ok, +1, -1);
}

GridReport check_mirror_transfer_monotone(const GridSpec& spec) {
  return sweep(
      spec,
      [](double x, double y, double dx, double dy) { return g_mirror_value(x, y, dx, dy); },
      mirror_domain_ok, -1, +1);
}

std::vector<GridValue> evaluate_transfer_grid(const GridSpec& spec,
                                              bool mirror) {
  std::vector<GridValue> out;
  for (double dx : spec.dx)
    for (double dy : spec.dy)
      for (double x = spec.x_lo; x <= spec.x_hi + 1e-9; x += spec.step)
        for (double y = spec.y_lo; y <= spec.y_hi + 1e-9; y += spec.step) {
          bool ok = mirror ? mirror_domain_ok(x, y, dx, dy)
                           : transfer_domain_ok(x, y, dx, dy);
          if (!ok) continue;
          double v = mirror ? g_mirror_value(x, y, dx, dy)
                            : g_value(x, y, dx, dy);
          out.push_back({x, y, dx, dy, v});
        }
  return out;
}

}  // namespace abc
