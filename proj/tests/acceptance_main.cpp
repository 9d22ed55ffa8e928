// Acceptance gate: one pass/fail line per criterion, with enforced time
// budgets. Exit status 0 only when every criterion passes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "abc/analytic.hpp"
#include "abc/canonical.hpp"
#include "abc/counting.hpp"
#include "abc/enumerate.hpp"
#include "abc/index.hpp"
#include "abc/randomcheck.hpp"
#include "abc/transforms.hpp"
#include "abc/tree.hpp"
#include "abc/verify.hpp"
#include "oracles.hpp"

using abc::ClaimId;
using abc::TransformId;

namespace {

int g_failures = 0;

void run(const std::string& label, double budget_s,
         const std::function<bool(std::vector<std::string>&)>& fn) {
  std::vector<std::string> detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  bool in_budget = secs <= budget_s;
  bool pass = ok && in_budget;
  if (!pass) ++g_failures;
  std::printf("[%s] %s  (%.2fs, budget %.0fs)\n", pass ? "PASS" : "FAIL",
              label.c_str(), secs, budget_s);
  for (const std::string& d : detail) std::printf("       %s\n", d.c_str());
  if (ok && !in_budget) std::printf("       over budget\n");
  std::fflush(stdout);
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string fmt(const char* pattern, double v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

}  // namespace

int main() {
  run("1/9 integer thresholds (5->13, 6->25, 7->67, 8->none)", 1.0,
      [](std::vector<std::string>& out) {
        bool ok = true;
        const std::pair<int, long long> want[] = {{5, 13}, {6, 25}, {7, 67}};
        for (auto [dv, du] : want) {
          abc::ThresholdResult r = abc::threshold_du(dv);
          if (!r.du || *r.du != du || r.borderline) {
            out.push_back("dv=" + std::to_string(dv) + ": got " +
                          (r.du ? std::to_string(*r.du) : std::string("none")));
            ok = false;
          }
        }
        abc::ThresholdResult r8 = abc::threshold_du(8);
        if (r8.du || r8.borderline) {
          out.push_back("dv=8: expected none");
          ok = false;
        }
        return ok;
      });

  run("2/9 printed bound constants", 1.0, [](std::vector<std::string>& out) {
    struct Row {
      TransformId id;
      int du, dv;
      double want;
    };
    const Row rows[] = {{TransformId::T1, 67, 7, -0.0115077},
                        {TransformId::T2, 25, 6, -0.00664864},
                        {TransformId::T2, 67, 7, -0.0285403}};
    bool ok = true;
    for (const Row& r : rows) {
      double got = abc::evaluate_bound(r.id, r.du, r.dv);
      if (!near(got, r.want, 1e-6)) {
        out.push_back(std::string(abc::to_string(r.id)) + " du=" +
                      std::to_string(r.du) + ": got " + fmt("%.7f", got) +
                      ", want " + fmt("%.7f", r.want));
        ok = false;
      }
    }
    return ok;
  });

  run("3/9 closed-form deltas vs structural recomputation (100 per case)",
      30.0, [](std::vector<std::string>& out) {
        const TransformId ids[] = {TransformId::T,   TransformId::T1,
                                   TransformId::T2,  TransformId::T3,
                                   TransformId::T41, TransformId::T42,
                                   TransformId::T5,  TransformId::T6,
                                   TransformId::T7};
        bool ok = true;
        for (TransformId id : ids) {
          std::mt19937 rng(9001);
          double worst = 0.0;
          for (int i = 0; i < 100; ++i) {
            abc::RandomTrial tr = abc::random_transform_trial(id, rng);
            worst = std::max(worst,
                             std::fabs(tr.report.structural_delta -
                                       tr.report.formula_delta));
          }
          if (worst > 1e-9) {
            out.push_back(std::string(abc::to_string(id)) +
                          ": max |structural - formula| = " +
                          fmt("%.3e", worst));
            ok = false;
          }
        }
        return ok;
      });

  run("4/9 refined bounds close every exception window", 1.0,
      [](std::vector<std::string>& out) {
        bool ok = true;
        const TransformId ids[] = {TransformId::T3, TransformId::T41,
                                   TransformId::T5, TransformId::T6};
        for (TransformId id : ids) {
          for (const abc::ExceptionWindow& w : abc::exception_windows(id)) {
            int n1 = 0;
            for (auto [dv, cand] : abc::case_parameter_table(id))
              if (dv == w.dv) n1 = cand;
            for (int du = w.du_lo; du <= w.du_hi; ++du) {
              double b = abc::evaluate_refined_bound(id, du, w.dv, n1);
              if (!(b < 0.0)) {
                out.push_back(std::string(abc::to_string(id)) + " dv=" +
                              std::to_string(w.dv) + " du=" +
                              std::to_string(du) + ": refined bound " +
                              fmt("%.6f", b));
                ok = false;
              }
            }
          }
        }
        return ok;
      });

  run("5/9 greedy realization minimal for every degree sequence, n <= 12",
      300.0, [](std::vector<std::string>& out) {
        auto failures = abc::verify_greedy_optimality(12);
        for (const auto& f : failures) {
          std::string d = "degrees =";
          for (int x : f.degrees) d += " " + std::to_string(x);
          out.push_back(d + ": greedy " + fmt("%.12f", f.greedy_abc) +
                        " vs best " + fmt("%.12f", f.best_abc) + " (" +
                        f.best_code + ")");
        }
        return failures.empty();
      });

  run("6/9 structural claims on all minimizers, 10 <= n <= 22", 1800.0,
      [](std::vector<std::string>& out) {
        std::vector<ClaimId> claims = {
            ClaimId::THM2,  ClaimId::THM3,  ClaimId::THM4, ClaimId::THM5,
            ClaimId::THM6,  ClaimId::THM7,  ClaimId::THM9, ClaimId::THM10,
            ClaimId::COR1,  ClaimId::LEM2,  ClaimId::LEM3A,
            ClaimId::LEM3B, ClaimId::LEM4,  ClaimId::OBS1};
        abc::SearchOptions opt;
        if (const char* env = std::getenv("ABC_CHECKPOINT_DIR"))
          opt.checkpoint_dir = env;
        abc::VerifyReport rep = abc::run_verification(10, 22, claims, opt);
        std::size_t minimizers = 0;
        for (const auto& row : rep.rows) {
          minimizers += row.rec.codes.size();
          for (const auto& oc : row.claims)
            if (oc.status == abc::ClaimStatus::Fail)
              out.push_back("n=" + std::to_string(row.rec.n) + " " +
                            abc::to_string(oc.id) + ": " + oc.witness);
        }
        if (!rep.any_failure())
          out.push_back("13 orders, " + std::to_string(minimizers) +
                        " minimizers, 14 claims each");
        return !rep.any_failure();
      });

  run("7/9 enumeration matches the decoded-sequence oracle, n = 4..18",
      120.0, [](std::vector<std::string>& out) {
        bool ok = true;
        for (int n = 4; n <= 9; ++n) {
          auto oracle = testsupport::prufer_tree_set(n);
          std::set<std::string> got;
          bool dup = false;
          abc::enumerate_free_trees(n, [&](const abc::LevelTree& lt) {
            if (!got.insert(abc::canonical_code(lt.to_tree())).second)
              dup = true;
          });
          std::set<std::string> want;
          for (const auto& [code, t] : oracle) want.insert(code);
          if (dup || got != want) {
            out.push_back("n=" + std::to_string(n) + ": set mismatch (" +
                          std::to_string(got.size()) + " vs " +
                          std::to_string(want.size()) + (dup ? ", dup)" : ")"));
            ok = false;
          }
        }
        for (int n = 10; n <= 18; ++n) {
          std::uint64_t cnt = 0;
          abc::enumerate_free_trees(n, [&](const abc::LevelTree&) { ++cnt; });
          if (cnt != abc::free_tree_count(n) ||
              cnt != testsupport::kFreeCounts[n]) {
            out.push_back("n=" + std::to_string(n) + ": " +
                          std::to_string(cnt) + " enumerated, " +
                          std::to_string(abc::free_tree_count(n)) +
                          " counted, " +
                          std::to_string(testsupport::kFreeCounts[n]) +
                          " frozen");
            ok = false;
          }
        }
        return ok;
      });

  run("8/9 transfer monotonicity grids are violation-free", 10.0,
      [](std::vector<std::string>& out) {
        abc::GridReport fwd = abc::check_transfer_monotone();
        abc::GridReport mir = abc::check_mirror_transfer_monotone();
        for (const auto* rep : {&fwd, &mir})
          for (const abc::GridViolation& v : rep->violations)
            out.push_back("x=" + fmt("%.1f", v.x) + " y=" + fmt("%.1f", v.y) +
                          " dx=" + fmt("%.0f", v.dx) + " dy=" +
                          fmt("%.0f", v.dy) + " axis=" + v.axis);
        return fwd.comparisons > 0 && mir.comparisons > 0 &&
               fwd.violations.empty() && mir.violations.empty();
      });

  run("9/9 every claim checker flags its violating control tree", 1.0,
      [](std::vector<std::string>& out) {
        bool ok = true;
        for (ClaimId id : abc::all_claims()) {
          abc::Tree bad = abc::claim_violating_tree(id);
          abc::ClaimResult r = abc::check_claim(id, bad);
          if (r.status != abc::ClaimStatus::Fail) {
            out.push_back(std::string(abc::to_string(id)) + ": status " +
                          abc::to_string(r.status));
            ok = false;
          }
        }
        return ok;
      });

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
