// Command-line front end: index evaluation, exhaustive enumeration, greedy
// construction, structural analysis, transformations, bound tables, scalar
// analysis, and the minimizer verification pipeline.
//
// Exit codes: 0 success; 1 a checked property failed (claim violation,
// self-test or grid violation) or an internal error; 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "abc/analytic.hpp"
#include "abc/branches.hpp"
#include "abc/canonical.hpp"
#include "abc/enumerate.hpp"
#include "abc/greedy.hpp"
#include "abc/index.hpp"
#include "abc/io.hpp"
#include "abc/randomcheck.hpp"
#include "abc/transforms.hpp"
#include "abc/tree.hpp"
#include "abc/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Accepts both tree formats, told apart by token count: an edge list
// carries 2(n-1) integers after n, a parent array n-1.
abc::Tree read_tree_file(const std::string& path) {
  std::string text = slurp(path);
  std::istringstream is(text);
  long long n = 0, tokens = 0, x = 0;
  if (!(is >> n)) throw std::invalid_argument(path + ": missing order");
  while (is >> x) ++tokens;
  if (n == 1 && tokens == 0) return abc::Tree::single_vertex();
  if (tokens == 2 * (n - 1)) return abc::tree_from_edge_list(text);
  if (tokens == n - 1) return abc::tree_from_parent_array(text);
  throw std::invalid_argument(path + ": expected " +
                              std::to_string(2 * (n - 1)) + " (edge list) or " +
                              std::to_string(n - 1) +
                              " (parent array) integers after the order");
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " into place");
}

std::vector<int> parse_degseq(const std::string& s) {
  std::vector<int> d;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    try {
      d.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad degree '" + item + "' in --degseq");
    }
  }
  if (d.empty()) throw std::invalid_argument("--degseq is empty");
  return d;
}

std::string format_tree(const abc::Tree& t, const std::string& fmt) {
  return fmt == "parents" ? abc::tree_to_parent_array(t)
                          : abc::tree_to_edge_list(t);
}

std::string fixed10(double v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.10f", v);
  return buf;
}

int parse_root(const abc::Tree& t, const std::string& s) {
  if (s == "auto") return abc::canonical_root(t);
  int r;
  try {
    r = std::stoi(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("--root must be 'auto' or a vertex id");
  }
  if (r < 0 || r >= t.size())
    throw std::invalid_argument("--root out of range");
  return r;
}

json tree_json(const abc::Tree& t) {
  json j;
  j["n"] = t.size();
  json es = json::array();
  for (const auto& [a, b] : t.edges()) es.push_back(json::array({a, b}));
  j["edges"] = std::move(es);
  return j;
}

int run_abc(const std::string& file) {
  abc::Tree t = read_tree_file(file);
  std::cout << fixed10(abc::abc_index(t)) << "\n";
  return 0;
}

int run_enumerate(int n, const std::string& degseq, bool count_only,
                  const std::string& fmt) {
  if (!degseq.empty()) {
    std::vector<int> d = parse_degseq(degseq);
    if (static_cast<int>(d.size()) != n)
      throw std::invalid_argument("--degseq length differs from --n");
    auto ts = abc::trees_with_degree_sequence(d);
    if (count_only) {
      std::cout << "n,count\n" << n << "," << ts.size() << "\n";
      return 0;
    }
    for (const abc::Tree& t : ts) std::cout << format_tree(t, fmt) << "\n";
    return 0;
  }
  if (count_only) {
    std::uint64_t count = 0;
    abc::enumerate_free_trees(n, [&](const abc::LevelTree&) { ++count; });
    std::cout << "n,count\n" << n << "," << count << "\n";
    return 0;
  }
  abc::enumerate_free_trees(n, [&](const abc::LevelTree& lt) {
    std::cout << format_tree(lt.to_tree(), fmt) << "\n";
  });
  return 0;
}

int run_greedy(const std::string& degseq, const std::string& fmt,
               bool with_abc) {
  std::vector<int> d = parse_degseq(degseq);
  abc::Tree t = abc::greedy_tree(d);
  std::cout << format_tree(t, fmt);
  if (with_abc) std::cout << fixed10(abc::abc_index(t)) << "\n";
  return 0;
}

int run_analyze(const std::string& file, const std::string& root_s,
                bool as_json) {
  abc::Tree t = read_tree_file(file);
  int root = parse_root(t, root_s);
  auto pd = abc::decompose_paths(t);
  auto prof = abc::classify_branches(t, root);

  if (!as_json) {
    std::cout << "n " << t.size() << "  root " << root << "  abc "
              << fixed10(abc::abc_index(t)) << "\n";
    std::cout << "pendant paths " << pd.pendant_paths.size()
              << ", internal paths " << pd.internal_paths.size() << "\n";
    for (const auto& [k, vs] : prof.b_centers)
      std::cout << "B" << k << " centers: " << vs.size() << "\n";
    for (const auto& [k, vs] : prof.b_star_centers)
      std::cout << "B" << k << "* centers: " << vs.size() << "\n";
    std::cout << "terminal vertices: " << prof.terminal_vertices.size()
              << "\n";
    return 0;
  }

  json j;
  j["n"] = t.size();
  j["root"] = root;
  j["abc"] = abc::abc_index(t);
  json paths;
  paths["whole_tree_is_path"] = pd.whole_tree_is_path;
  json pend = json::array();
  for (const auto& p : pd.pendant_paths) {
    json e;
    e["start"] = p.start;
    e["leaf"] = p.leaf;
    e["length"] = p.length;
    pend.push_back(std::move(e));
  }
  paths["pendant"] = std::move(pend);
  json internal = json::array();
  for (const auto& p : pd.internal_paths) {
    json e;
    e["a"] = p.a;
    e["b"] = p.b;
    e["length"] = p.length;
    internal.push_back(std::move(e));
  }
  paths["internal"] = std::move(internal);
  j["paths"] = std::move(paths);

  json branches;
  json bc = json::object();
  for (const auto& [k, vs] : prof.b_centers) bc[std::to_string(k)] = vs;
  branches["b_centers"] = std::move(bc);
  json bs = json::object();
  for (const auto& [k, vs] : prof.b_star_centers) bs[std::to_string(k)] = vs;
  branches["b_star_centers"] = std::move(bs);
  json tv = json::array();
  for (const auto& [v, k] : prof.terminal_vertices)
    tv.push_back(json::array({v, k}));
  branches["terminal_vertices"] = std::move(tv);
  json inv = json::object();
  for (const auto& [p, b] : prof.inventory) {
    json e;
    e["b"] = std::vector<int>(b.b + 1, b.b + 5);
    e["b_star"] = std::vector<int>(b.b_star + 1, b.b_star + 5);
    inv[std::to_string(p)] = std::move(e);
  }
  branches["inventory"] = std::move(inv);
  j["branches"] = std::move(branches);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_transform_selftest(unsigned seed, int per_case) {
  std::mt19937 rng(seed);
  const double tol = 1e-9;
  bool all_ok = true;
  for (abc::TransformId id :
       {abc::TransformId::T, abc::TransformId::T1, abc::TransformId::T2,
        abc::TransformId::T3, abc::TransformId::T41, abc::TransformId::T42,
        abc::TransformId::T5, abc::TransformId::T6, abc::TransformId::T7,
        abc::TransformId::Switch}) {
    double worst = 0.0;
    bool upper_ok = true;
    for (int i = 0; i < per_case; ++i) {
      abc::RandomTrial trial = abc::random_transform_trial(id, rng);
      double diff = std::abs(trial.report.structural_delta -
                             trial.report.formula_delta);
      worst = std::max(worst, diff);
      if (trial.report.formula_upper_delta &&
          *trial.report.formula_upper_delta <
              trial.report.formula_delta - 1e-12)
        upper_ok = false;
    }
    bool ok = worst <= tol && upper_ok;
    all_ok = all_ok && ok;
    std::printf("[%s] %-6s %d trials, max |structural - formula| = %.3e%s\n",
                ok ? "PASS" : "FAIL", abc::to_string(id), per_case, worst,
                upper_ok ? "" : " (upper-bound variant below exact)");
  }
  return all_ok ? 0 : 1;
}

int run_transform(const std::string& file, const std::string& case_name,
                  int u, int v, int x, int y, int root,
                  const std::string& report) {
  auto id = abc::transform_from_string(case_name);
  if (!id) throw std::invalid_argument("unknown --case " + case_name);
  abc::Tree t = read_tree_file(file);
  std::pair<abc::Tree, abc::DeltaReport> res = [&] {
    if (*id == abc::TransformId::Switch) {
      if (x < 0 || y < 0)
        throw std::invalid_argument("--case SWITCH needs --x and --y");
      return abc::apply_switch(t, u, v, x, y);
    }
    return abc::apply_case(t, *id, u, v, root);
  }();
  if (report == "json") {
    const abc::DeltaReport& r = res.second;
    json j;
    j["case"] = abc::to_string(r.tcase.id);
    if (r.tcase.id != abc::TransformId::Switch) {
      j["relationship"] = abc::to_string(r.tcase.rel);
      j["root"] = r.tcase.root;
    }
    j["u"] = r.tcase.u;
    j["v"] = r.tcase.v;
    j["du"] = r.tcase.du;
    j["dv"] = r.tcase.dv;
    j["n1"] = r.tcase.n1;
    j["n2"] = r.tcase.n2;
    j["structural_delta"] = r.structural_delta;
    j["formula_delta"] = r.formula_delta;
    if (r.formula_upper_delta) j["formula_upper_delta"] = *r.formula_upper_delta;
    if (r.bound_delta) j["bound_delta"] = *r.bound_delta;
    j["tree"] = tree_json(res.first);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << abc::tree_to_edge_list(res.first);
    std::printf("delta %.10f\n", res.second.structural_delta);
  }
  return 0;
}

int run_bounds(const std::string& case_name) {
  std::vector<abc::TransformId> ids;
  if (case_name == "all") {
    ids = {abc::TransformId::T1, abc::TransformId::T2,  abc::TransformId::T3,
           abc::TransformId::T41, abc::TransformId::T42, abc::TransformId::T5,
           abc::TransformId::T6, abc::TransformId::T7};
  } else {
    auto id = abc::transform_from_string(case_name);
    if (!id || *id == abc::TransformId::Switch || *id == abc::TransformId::T)
      throw std::invalid_argument("no tabulated bound for --case " +
                                  case_name);
    ids = {*id};
  }
  const int span = 20;
  std::cout << "case,dv,n1,du,bound,refined\n";
  char buf[128];
  auto emit = [&](abc::TransformId id, int dv, int n1, int du) {
    double b = abc::evaluate_bound(id, du, dv, n1);
    std::snprintf(buf, sizeof(buf), "%.12g", b);
    std::cout << abc::to_string(id) << "," << dv << "," << n1 << "," << du
              << "," << buf;
    bool refined = id == abc::TransformId::T3 || id == abc::TransformId::T41 ||
                   id == abc::TransformId::T5 || id == abc::TransformId::T6;
    if (refined) {
      std::snprintf(buf, sizeof(buf), "%.12g",
                    abc::evaluate_refined_bound(id, du, dv, n1));
      std::cout << "," << buf << "\n";
    } else {
      std::cout << ",\n";
    }
  };
  for (abc::TransformId id : ids) {
    if (id == abc::TransformId::T7) {
      for (int n1 = 1; n1 <= 4; ++n1) {
        int dv_lo = std::max(5, n1 + 2);
        for (int dv = dv_lo; dv <= dv_lo + 2; ++dv)
          for (int du = dv; du < dv + span; ++du) emit(id, dv, n1, du);
      }
      continue;
    }
    for (auto [dv, n1] : abc::case_parameter_table(id)) {
      int lo = abc::bound_du_min(dv);
      for (int du = lo; du < lo + span; ++du) emit(id, dv, n1, du);
    }
  }
  return 0;
}

int run_thresholds() {
  std::cout << "dv,du_threshold\n";
  for (int dv = 5; dv <= 8; ++dv) {
    auto r = abc::threshold_du(dv);
    std::cout << dv << ",";
    if (r.du)
      std::cout << *r.du;
    else
      std::cout << "none";
    std::cout << "\n";
  }
  return 0;
}

int run_grid(int lemma, const std::string& out) {
  if (out != "csv") throw std::invalid_argument("--out supports only csv");
  bool mirror;
  if (lemma == 5)
    mirror = false;
  else if (lemma == 6)
    mirror = true;
  else
    throw std::invalid_argument("--lemma must be 5 or 6");
  abc::GridSpec spec;
  std::cout << "x,y,dx,dy,value\n";
  char buf[128];
  for (const auto& gv : abc::evaluate_transfer_grid(spec, mirror)) {
    std::snprintf(buf, sizeof(buf), "%g,%g,%g,%g,%.12g", gv.x, gv.y, gv.dx,
                  gv.dy, gv.value);
    std::cout << buf << "\n";
  }
  abc::GridReport rep = mirror ? abc::check_mirror_transfer_monotone(spec)
                               : abc::check_transfer_monotone(spec);
  std::cerr << rep.comparisons << " comparisons, " << rep.violations.size()
            << " violations, " << rep.borderline.size() << " borderline\n";
  for (const auto& v : rep.violations)
    std::fprintf(stderr,
                 "violation at x=%g y=%g dx=%g dy=%g axis=%c: %.12g -> %.12g\n",
                 v.x, v.y, v.dx, v.dy, v.axis, v.value, v.next_value);
  return rep.violations.empty() ? 0 : 1;
}

int run_verify(int n_min, int n_max, const std::string& claims_s,
               const std::string& out, const std::string& csv,
               const std::string& checkpoint, int workers, double eps) {
  std::vector<abc::ClaimId> claims;
  if (claims_s == "all") {
    claims = abc::all_claims();
  } else {
    std::istringstream is(claims_s);
    std::string item;
    while (std::getline(is, item, ',')) {
      if (item.empty()) continue;
      auto id = abc::claim_from_string(item);
      if (!id) throw std::invalid_argument("unknown claim " + item);
      claims.push_back(*id);
    }
    if (claims.empty()) throw std::invalid_argument("--claims is empty");
  }
  abc::SearchOptions opt;
  opt.workers = workers;
  opt.eps = eps;
  opt.checkpoint_dir = checkpoint;
  abc::VerifyReport rep = abc::run_verification(n_min, n_max, claims, opt);
  for (const auto& row : rep.rows) {
    int pass = 0, fail = 0, na = 0;
    for (const auto& oc : row.claims) {
      if (oc.status == abc::ClaimStatus::Pass) ++pass;
      if (oc.status == abc::ClaimStatus::Fail) ++fail;
      if (oc.status == abc::ClaimStatus::NotApplicable) ++na;
    }
    std::printf("n=%d min_abc=%s minimizers=%zu claims: %d pass, %d fail, "
                "%d n/a\n",
                row.rec.n, fixed10(row.rec.min_abc).c_str(),
                row.rec.codes.size(), pass, fail, na);
    for (const auto& oc : row.claims)
      if (oc.status == abc::ClaimStatus::Fail)
        std::printf("  FAIL %s: %s\n", abc::to_string(oc.id),
                    oc.witness.c_str());
  }
  if (!out.empty()) {
    write_file_atomic(out, abc::verify_report_json(rep));
    std::cout << "report written to " << out << "\n";
  }
  if (!csv.empty()) {
    write_file_atomic(csv, abc::verify_report_csv(rep));
    std::cout << "summary written to " << csv << "\n";
  }
  return rep.any_failure() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atom-bond connectivity index toolkit for trees"};
  app.require_subcommand(1);

  std::string tree_file, degseq, fmt = "edges", root_s = "auto";
  bool count_only = false, with_abc = false, as_json = false;
  int n = 0;

  auto* cmd_abc = app.add_subcommand("abc", "Evaluate the index of a tree");
  cmd_abc->add_option("--tree", tree_file, "tree file (edge list or parent array)")
      ->required();

  auto* cmd_enum =
      app.add_subcommand("enumerate", "Enumerate trees up to isomorphism");
  cmd_enum->add_option("--n", n, "number of vertices")->required();
  cmd_enum->add_option("--degseq", degseq,
                       "restrict to this degree sequence (comma separated)");
  cmd_enum->add_flag("--count-only", count_only, "print only the count");
  cmd_enum->add_option("--format", fmt, "edges|parents")
      ->check(CLI::IsMember({"edges", "parents"}));

  auto* cmd_greedy =
      app.add_subcommand("greedy", "Greedy tree of a degree sequence");
  cmd_greedy
      ->add_option("--degseq", degseq, "degree sequence (comma separated)")
      ->required();
  cmd_greedy->add_option("--format", fmt, "edges|parents")
      ->check(CLI::IsMember({"edges", "parents"}));
  cmd_greedy->add_flag("--abc", with_abc, "also print the index");

  auto* cmd_an = app.add_subcommand("analyze", "Paths and branch structure");
  cmd_an->add_option("--tree", tree_file, "tree file")->required();
  cmd_an->add_option("--root", root_s, "auto or a vertex id");
  cmd_an->add_flag("--json", as_json, "emit JSON");

  auto* cmd_tr = app.add_subcommand("transform", "Apply a rewiring case");
  std::string case_name, report;
  int tu = -1, tv = -1, tx = -1, ty = -1, troot = -1;
  bool selftest = false;
  unsigned seed = 12345;
  int per_case = 100;
  cmd_tr->add_option("--tree", tree_file, "tree file");
  cmd_tr->add_option("--case", case_name,
                     "T, T1, T2, T3, T41, T42, T5, T6, T7 or SWITCH");
  cmd_tr->add_option("--u", tu, "vertex u");
  cmd_tr->add_option("--v", tv, "vertex v");
  cmd_tr->add_option("--x", tx, "second edge endpoint (SWITCH)");
  cmd_tr->add_option("--y", ty, "second edge endpoint (SWITCH)");
  cmd_tr->add_option("--root", troot, "orientation vertex (default: auto)");
  cmd_tr->add_option("--report", report, "json for a JSON report")
      ->check(CLI::IsMember({"json"}));
  cmd_tr->add_flag("--selftest", selftest,
                   "randomized agreement check of every case");
  cmd_tr->add_option("--seed", seed, "selftest random seed");
  cmd_tr->add_option("--per-case", per_case, "selftest trials per case");

  auto* cmd_bounds = app.add_subcommand("bounds", "Tabulate the case bounds");
  std::string bounds_case = "all";
  bool table = false;
  cmd_bounds->add_option("--case", bounds_case, "case name or all");
  cmd_bounds->add_flag("--table", table, "emit the CSV table");

  auto* cmd_analytic = app.add_subcommand("analytic", "Scalar analysis");
  cmd_analytic->require_subcommand(1);
  auto* cmd_th = cmd_analytic->add_subcommand(
      "thresholds", "Least d(u) making the 2-path move non-negative");
  (void)cmd_th;
  auto* cmd_grid =
      cmd_analytic->add_subcommand("grid", "Monotonicity sweep of a lemma");
  int lemma = 0;
  std::string grid_out = "csv";
  cmd_grid->add_option("--lemma", lemma, "5 (transfer) or 6 (mirrored)")
      ->required();
  cmd_grid->add_option("--out", grid_out, "output format (csv)");

  auto* cmd_verify =
      app.add_subcommand("verify", "Minimizer search and claim checking");
  int n_min = 10, n_max = 22, workers = 1;
  double eps = 1e-9;
  std::string out_file, csv_file, checkpoint_dir;
  if (const char* env = std::getenv("ABC_CHECKPOINT_DIR"))
    checkpoint_dir = env;
  cmd_verify->add_option("--n-min", n_min, "smallest order");
  cmd_verify->add_option("--n-max", n_max, "largest order");
  std::string claims_s = "all";
  cmd_verify->add_option("--claims", claims_s,
                         "all or a comma-separated claim list");
  cmd_verify->add_option("--out", out_file, "JSON report path");
  cmd_verify->add_option("--csv", csv_file, "CSV summary path");
  cmd_verify->add_option("--checkpoint", checkpoint_dir,
                         "checkpoint directory (env ABC_CHECKPOINT_DIR)");
  cmd_verify->add_option("--workers", workers, "worker threads");
  cmd_verify->add_option("--eps", eps, "tie tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_abc)) return run_abc(tree_file);
    if (app.got_subcommand(cmd_enum))
      return run_enumerate(n, degseq, count_only, fmt);
    if (app.got_subcommand(cmd_greedy))
      return run_greedy(degseq, fmt, with_abc);
    if (app.got_subcommand(cmd_an))
      return run_analyze(tree_file, root_s, as_json);
    if (app.got_subcommand(cmd_tr)) {
      if (selftest) return run_transform_selftest(seed, per_case);
      if (tree_file.empty() || case_name.empty() || tu < 0 || tv < 0)
        throw std::invalid_argument(
            "transform needs --tree, --case, --u and --v (or --selftest)");
      return run_transform(tree_file, case_name, tu, tv, tx, ty, troot,
                           report);
    }
    if (app.got_subcommand(cmd_bounds)) return run_bounds(bounds_case);
    if (app.got_subcommand(cmd_analytic)) {
      if (cmd_analytic->got_subcommand(cmd_th)) return run_thresholds();
      return run_grid(lemma, grid_out);
    }
    if (app.got_subcommand(cmd_verify))
      return run_verify(n_min, n_max, claims_s, out_file, csv_file,
                        checkpoint_dir, workers, eps);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
