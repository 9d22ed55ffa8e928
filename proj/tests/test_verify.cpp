#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "abc/branches.hpp"
#include "abc/canonical.hpp"
#include "abc/counting.hpp"
#include "abc/enumerate.hpp"
#include "abc/greedy.hpp"
#include "abc/index.hpp"
#include "abc/tree.hpp"
#include "abc/verify.hpp"
#include "oracles.hpp"

using abc::ClaimId;
using abc::ClaimStatus;
using abc::Tree;
namespace fs = std::filesystem;

namespace {

Tree path(int n) {
  std::vector<std::pair<int, int>> ed;
  for (int i = 0; i + 1 < n; ++i) ed.push_back({i, i + 1});
  return Tree::from_edges(n, ed);
}

Tree star(int n) {
  std::vector<std::pair<int, int>> ed;
  for (int i = 1; i < n; ++i) ed.push_back({0, i});
  return Tree::from_edges(n, ed);
}

struct Build {
  std::vector<std::pair<int, int>> ed;
  int next = 1;
  int child(int p) {
    ed.push_back({p, next});
    return next++;
  }
  int arm(int p) {  // hanging 2-path; returns its middle vertex
    int c = child(p);
    child(c);
    return c;
  }
  void long_arm(int p) { child(child(child(p))); }
  void b2(int p) {  // degree-3 center with two hanging 2-paths
    int c = child(p);
    arm(c);
    arm(c);
  }
  Tree tree() const { return Tree::from_edges(next, ed); }
};

fs::path fresh_dir(const char* tag) {
  fs::path d = fs::temp_directory_path() / tag;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("claim identifiers round trip") {
  CHECK(abc::all_claims().size() == 15);
  for (ClaimId id : abc::all_claims()) {
    auto back = abc::claim_from_string(abc::to_string(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(abc::claim_from_string("THM11").has_value());
  CHECK(std::string(abc::to_string(ClaimStatus::Pass)) == "pass");
  CHECK(std::string(abc::to_string(ClaimStatus::Fail)) == "fail");
  CHECK(std::string(abc::to_string(ClaimStatus::NotApplicable)) ==
        "not_applicable");
}

TEST_CASE("claims do not apply below their order floor") {
  Tree p9 = path(9);
  for (ClaimId id : abc::all_claims())
    CHECK(abc::check_claim(id, p9).status == ClaimStatus::NotApplicable);
  // The coexistence claim only speaks about orders beyond 18.
  CHECK(abc::check_claim(ClaimId::THM8, star(18)).status ==
        ClaimStatus::NotApplicable);
  CHECK(abc::check_claim(ClaimId::THM2, star(10)).status !=
        ClaimStatus::NotApplicable);
}

TEST_CASE("every checker flags its control tree") {
  for (ClaimId id : abc::all_claims()) {
    Tree bad = abc::claim_violating_tree(id);
    CHECK(bad.size() >= 10);
    abc::ClaimResult r = abc::check_claim(id, bad);
    CHECK(r.status == ClaimStatus::Fail);
    CHECK_FALSE(r.witness.empty());
  }
}

TEST_CASE("coexistence claim passes when only one side is present") {
  // Degree-3 centers but no pendant path of length 3.
  Build a;
  for (int i = 0; i < 3; ++i) a.b2(0);
  a.arm(0);
  a.child(0);
  Tree ta = a.tree();
  REQUIRE(ta.size() == 19);
  CHECK(abc::check_claim(ClaimId::THM8, ta).status == ClaimStatus::Pass);

  // A pendant path of length 3 but no degree-3 center.
  Build b;
  for (int i = 0; i < 7; ++i) b.arm(0);
  b.long_arm(0);
  b.child(0);
  Tree tb = b.tree();
  REQUIRE(tb.size() == 19);
  CHECK(abc::check_claim(ClaimId::THM8, tb).status == ClaimStatus::Pass);
}

TEST_CASE("minimizer search agrees with decoded-sequence brute force") {
  for (int n = 4; n <= 8; ++n) {
    auto brute = testsupport::prufer_tree_set(n);
    std::vector<Tree> all;
    for (auto& [code, t] : brute) all.push_back(t);

    double mn = std::numeric_limits<double>::infinity();
    for (const Tree& t : all) mn = std::min(mn, abc::abc_index(t));

    abc::MinimizerRecord rec = abc::find_minimal_abc_trees(n);
    CHECK(rec.n == n);
    CHECK(std::abs(rec.min_abc - mn) <= 1e-12);

    abc::MinimizerRecord direct = abc::minimize_trees(n, all);
    CHECK(direct.codes == rec.codes);
    CHECK(std::abs(direct.min_abc - rec.min_abc) <= 1e-12);
  }
}

TEST_CASE("retention is independent of visiting order") {
  auto brute = testsupport::prufer_tree_set(8);
  std::vector<Tree> all;
  for (auto& [code, t] : brute) all.push_back(t);
  abc::MinimizerRecord base = abc::minimize_trees(8, all);

  std::reverse(all.begin(), all.end());
  CHECK(abc::minimize_trees(8, all).codes == base.codes);

  std::mt19937 rng(7);
  std::shuffle(all.begin(), all.end(), rng);
  CHECK(abc::minimize_trees(8, all).codes == base.codes);

  CHECK_THROWS_AS(abc::minimize_trees(9, all), std::invalid_argument);
}

TEST_CASE("minimizer records are internally consistent") {
  for (int n = 2; n <= 14; ++n) {
    abc::MinimizerRecord rec = abc::find_minimal_abc_trees(n);
    CHECK(rec.n == n);
    REQUIRE_FALSE(rec.codes.empty());
    REQUIRE(rec.codes.size() == rec.witnesses.size());
    CHECK(std::is_sorted(rec.codes.begin(), rec.codes.end()));
    CHECK(std::adjacent_find(rec.codes.begin(), rec.codes.end()) ==
          rec.codes.end());
    for (std::size_t i = 0; i < rec.codes.size(); ++i) {
      CHECK(rec.witnesses[i].size() == n);
      CHECK(abc::canonical_code(rec.witnesses[i]) == rec.codes[i]);
      CHECK(std::abs(abc::abc_index(rec.witnesses[i]) - rec.min_abc) <= 1e-9);
    }
  }
}

TEST_CASE("worker pool and sequential scan give the same answer") {
  for (int n : {11, 12}) {
    abc::MinimizerRecord seq = abc::find_minimal_abc_trees(n);
    abc::SearchOptions par;
    par.workers = 2;
    abc::MinimizerRecord pl = abc::find_minimal_abc_trees(n, par);
    CHECK(pl.codes == seq.codes);
    CHECK(std::abs(pl.min_abc - seq.min_abc) <= 1e-12);
  }
}

TEST_CASE("a completed order is reloaded from its saved state") {
  fs::path dir = fresh_dir("abctrees_ckpt_done");
  abc::SearchOptions opt;
  opt.checkpoint_dir = dir.string();
  abc::MinimizerRecord first = abc::find_minimal_abc_trees(10, opt);

  fs::path file = dir / "minimize_n10.json";
  REQUIRE(fs::exists(file));
  std::ifstream in(file);
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j.at("phase") == "done");
  CHECK(j.at("n") == 10);

  abc::MinimizerRecord again = abc::find_minimal_abc_trees(10, opt);
  CHECK(again.codes == first.codes);
  CHECK(again.min_abc == first.min_abc);
  fs::remove_all(dir);
}

TEST_CASE("a scan resumes from a partial saved state") {
  const int n = 11;
  const double eps = 1e-9;
  // Fold the first hundred centroid-rooted sequences by hand, computing
  // each index through the reconstructed tree rather than the scanner's
  // level-sequence evaluation.
  struct Entry {
    double abc;
    std::vector<int> levels;
  };
  std::vector<Entry> kept;
  double mn = std::numeric_limits<double>::infinity();
  std::vector<int> last;
  int count = 0;
  abc::enumerate_unicentroid_from(
      n, abc::initial_level_sequence(n), true, [&](const abc::LevelTree& lt) {
        double a = abc::abc_index(lt.to_tree());
        if (!(a > mn + eps)) {
          if (a < mn) {
            mn = a;
            std::erase_if(kept,
                          [&](const Entry& e) { return e.abc > mn + eps; });
          }
          kept.push_back({a, lt.levels});
        }
        last = lt.levels;
        return ++count < 100;
      });
  REQUIRE(count == 100);

  nlohmann::json j;
  j["n"] = n;
  j["eps"] = eps;
  j["phase"] = "uni";
  j["min_abc"] = mn;
  j["seen"] = 100;
  j["next"] = last;
  nlohmann::json arr = nlohmann::json::array();
  for (const Entry& e : kept) {
    nlohmann::json k;
    k["abc"] = e.abc;
    k["second_root"] = -1;
    k["levels"] = e.levels;
    arr.push_back(std::move(k));
  }
  j["kept"] = std::move(arr);

  fs::path dir = fresh_dir("abctrees_ckpt_resume");
  std::ofstream(dir / ("minimize_n" + std::to_string(n) + ".json"))
      << j.dump() << "\n";

  abc::SearchOptions opt;
  opt.checkpoint_dir = dir.string();
  abc::MinimizerRecord resumed = abc::find_minimal_abc_trees(n, opt);
  abc::MinimizerRecord fresh = abc::find_minimal_abc_trees(n);
  CHECK(resumed.codes == fresh.codes);
  CHECK(std::abs(resumed.min_abc - fresh.min_abc) <= 1e-12);
  fs::remove_all(dir);
}

TEST_CASE("orders beyond the cap are refused with an estimate") {
  try {
    abc::find_minimal_abc_trees(27);
    FAIL("expected a refusal");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("exceeds the cap") != std::string::npos);
  }
  abc::SearchOptions opt;
  opt.hard_cap = 10;
  try {
    abc::find_minimal_abc_trees(11, opt);
    FAIL("expected a refusal");
  } catch (const std::domain_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("exceeds the cap") != std::string::npos);
    CHECK(msg.find("235") != std::string::npos);
  }
  CHECK_THROWS_AS(abc::find_minimal_abc_trees(1), std::domain_error);
}

TEST_CASE("verification run over three orders") {
  abc::VerifyReport rep = abc::run_verification(10, 12, abc::all_claims());
  REQUIRE(rep.rows.size() == 3);
  CHECK_FALSE(rep.any_failure());
  for (const auto& row : rep.rows) {
    REQUIRE(row.claims.size() == 15);
    for (const auto& oc : row.claims) {
      if (oc.id == ClaimId::THM8)
        CHECK(oc.status == ClaimStatus::NotApplicable);
      else
        CHECK(oc.status == ClaimStatus::Pass);
    }
  }

  std::string js = abc::verify_report_json(rep);
  nlohmann::json parsed = nlohmann::json::parse(js);
  REQUIRE(parsed.at("runs").size() == 3);
  CHECK(parsed["runs"][0]["n"] == 10);
  CHECK(parsed["runs"][0]["claims"].size() == 15);
  CHECK(parsed["runs"][2]["minimizer_codes"].size() ==
        rep.rows[2].rec.codes.size());

  // Reproducibility: a second full run serializes byte-identically.
  abc::VerifyReport rep2 = abc::run_verification(10, 12, abc::all_claims());
  CHECK(abc::verify_report_json(rep2) == js);

  std::string csv = abc::verify_report_csv(rep);
  CHECK(csv.rfind("n,min_abc,num_minimizers\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  CHECK_THROWS_AS(abc::run_verification(12, 10, abc::all_claims()),
                  std::invalid_argument);
}

TEST_CASE("tied minimizer layouts are judged per degree sequence") {
  // At order 16 the minimum is attained by two layouts of one degree
  // sequence: the greedy layout and a rewired one whose length-3 pendant
  // path hangs off-center. Their edge degree-pair multisets coincide, so
  // they tie exactly; only the greedy layout obeys the leaf-path degree
  // interleaving.
  abc::MinimizerRecord rec = abc::find_minimal_abc_trees(16);
  REQUIRE(rec.witnesses.size() >= 2);

  std::vector<std::size_t> breakers, conformers;
  for (std::size_t i = 0; i < rec.witnesses.size(); ++i) {
    if (abc::path_degree_ordering_violations(rec.witnesses[i]).empty())
      conformers.push_back(i);
    else
      breakers.push_back(i);
  }
  CHECK(!breakers.empty());
  CHECK(!conformers.empty());

  Tree g = abc::greedy_tree({4, 3, 3, 2, 2, 2, 2, 2, 2, 2,
                             1, 1, 1, 1, 1, 1});
  CHECK(abc::path_degree_ordering_violations(g).empty());
  CHECK(std::find(rec.codes.begin(), rec.codes.end(),
                  abc::canonical_code(g)) != rec.codes.end());

  abc::ClaimOutcome oc = abc::check_claim(ClaimId::LEM2, rec);
  CHECK(oc.status == ClaimStatus::Pass);

  // Alone, a chain-breaking layout is a genuine failure.
  abc::MinimizerRecord solo =
      abc::minimize_trees(16, {rec.witnesses[breakers.front()]});
  abc::ClaimOutcome bad = abc::check_claim(ClaimId::LEM2, solo);
  CHECK(bad.status == ClaimStatus::Fail);
  CHECK(bad.witness.find("tree=") != std::string::npos);
}

TEST_CASE("a chain break is excused only within its own degree sequence") {
  Tree bad = abc::claim_violating_tree(ClaimId::LEM2);
  Tree good = abc::greedy_tree({4, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1});
  REQUIRE(bad.size() == 11);
  REQUIRE(good.size() == 11);
  REQUIRE(!abc::path_degree_ordering_violations(bad).empty());
  REQUIRE(abc::path_degree_ordering_violations(good).empty());

  abc::MinimizerRecord rec;
  rec.n = 11;
  rec.min_abc = std::min(abc::abc_index(bad), abc::abc_index(good));
  rec.witnesses = {bad, good};
  rec.codes = {abc::canonical_code(bad), abc::canonical_code(good)};

  // The conforming spider has a different degree sequence, so it cannot
  // excuse the breaker.
  abc::ClaimOutcome oc = abc::check_claim(ClaimId::LEM2, rec);
  CHECK(oc.status == ClaimStatus::Fail);
  CHECK(oc.witness.find(rec.codes[0]) != std::string::npos);
}

TEST_CASE("record-level claims annotate failures and respect the floor") {
  abc::MinimizerRecord small = abc::minimize_trees(9, {path(9)});
  CHECK(abc::check_claim(ClaimId::LEM2, small).status ==
        ClaimStatus::NotApplicable);
  CHECK(abc::check_claim(ClaimId::THM2, small).status ==
        ClaimStatus::NotApplicable);

  Tree t = abc::claim_violating_tree(ClaimId::THM9);
  abc::MinimizerRecord solo = abc::minimize_trees(t.size(), {t});
  abc::ClaimOutcome oc = abc::check_claim(ClaimId::THM9, solo);
  CHECK(oc.status == ClaimStatus::Fail);
  CHECK(oc.witness.find("; tree=" + solo.codes[0]) != std::string::npos);
}
