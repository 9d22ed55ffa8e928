#include "abc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <map>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "abc/branches.hpp"
#include "abc/canonical.hpp"
#include "abc/counting.hpp"
#include "abc/enumerate.hpp"
#include "abc/greedy.hpp"
#include "abc/index.hpp"

namespace abc {

using json = nlohmann::ordered_json;

const char* to_string(ClaimId id) {
  switch (id) {
    case ClaimId::THM2: return "THM2";
    case ClaimId::THM3: return "THM3";
    case ClaimId::THM4: return "THM4";
    case ClaimId::THM5: return "THM5";
    case ClaimId::THM6: return "THM6";
    case ClaimId::THM7: return "THM7";
    case ClaimId::THM8: return "THM8";
    case ClaimId::THM9: return "THM9";
    case ClaimId::THM10: return "THM10";
    case ClaimId::COR1: return "COR1";
    case ClaimId::LEM2: return "LEM2";
    case ClaimId::LEM3A: return "LEM3A";
    case ClaimId::LEM3B: return "LEM3B";
    case ClaimId::LEM4: return "LEM4";
    case ClaimId::OBS1: return "OBS1";
  }
  return "?";
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = {
      ClaimId::THM2,  ClaimId::THM3,  ClaimId::THM4,  ClaimId::THM5,
      ClaimId::THM6,  ClaimId::THM7,  ClaimId::THM8,  ClaimId::THM9,
      ClaimId::THM10, ClaimId::COR1,  ClaimId::LEM2,  ClaimId::LEM3A,
      ClaimId::LEM3B, ClaimId::LEM4,  ClaimId::OBS1,
  };
  return ids;
}

std::optional<ClaimId> claim_from_string(std::string_view s) {
  for (ClaimId id : all_claims())
    if (s == to_string(id)) return id;
  return std::nullopt;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

namespace {

// Index evaluation straight from a level sequence, reusing buffers.
struct LevelEval {
  FTable ft;
  std::vector<int> par, deg, stack;

  explicit LevelEval(int n)
      : ft(n), par(n), deg(n, 0), stack(n + 1, 0) {}

  double abc(const std::vector<int>& levels, int second_root) {
    const int n = static_cast<int>(levels.size());
    for (int i = 0; i < n; ++i) {
      par[i] = -1;
      deg[i] = 0;
    }
    for (int i = 0; i < n; ++i) {
      int lv = levels[i];
      stack[lv] = i;
      if (lv > 0) par[i] = stack[lv - 1];
    }
    for (int i = 0; i < n; ++i)
      if (par[i] >= 0) {
        ++deg[i];
        ++deg[par[i]];
      }
    if (second_root > 0) {
      ++deg[0];
      ++deg[second_root];
    }
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      if (par[i] >= 0) s += ft(deg[par[i]], deg[i]);
    if (second_root > 0) s += ft(deg[0], deg[second_root]);
    return s;
  }
};

struct Kept {
  double abc = 0.0;
  std::vector<int> levels;
  int second_root = -1;
};

struct ScanState {
  double min_abc = std::numeric_limits<double>::infinity();
  std::vector<Kept> kept;
  std::uint64_t seen = 0;

  void offer(double a, const std::vector<int>& levels, int second_root,
             double eps) {
    ++seen;
    if (a > min_abc + eps) return;
    if (a < min_abc) {
      min_abc = a;
      std::erase_if(kept,
                    [&](const Kept& k) { return k.abc > min_abc + eps; });
    }
    kept.push_back({a, levels, second_root});
  }

  void merge(const ScanState& o, double eps) {
    seen += o.seen;
    if (o.min_abc < min_abc) min_abc = o.min_abc;
    for (const Kept& k : o.kept)
      if (k.abc <= min_abc + eps) kept.push_back(k);
    std::erase_if(kept, [&](const Kept& k) { return k.abc > min_abc + eps; });
  }
};

// Per-order checkpoint file: progress of a sequential scan, written
// atomically (temp file + rename).
struct Checkpoint {
  bool active = false;
  std::string path;
  // Loaded state, when a usable file was present.
  bool loaded = false;
  std::string phase;  // "uni", "bi" or "done"
  std::vector<int> next_seq;
  std::size_t pair_i = 0, pair_j = 0;
  ScanState state;

  Checkpoint(const SearchOptions& opt, int n, double eps) {
    if (opt.checkpoint_dir.empty()) return;
    active = true;
    std::filesystem::create_directories(opt.checkpoint_dir);
    path = opt.checkpoint_dir + "/minimize_n" + std::to_string(n) + ".json";
    std::ifstream in(path);
    if (!in) return;
    try {
      json j = json::parse(in);
      if (j.at("n").get<int>() != n || j.at("eps").get<double>() != eps)
        return;
      phase = j.at("phase").get<std::string>();
      state.min_abc = j.at("min_abc").get<double>();
      state.seen = j.at("seen").get<std::uint64_t>();
      for (const auto& k : j.at("kept")) {
        Kept kp;
        kp.abc = k.at("abc").get<double>();
        kp.second_root = k.at("second_root").get<int>();
        kp.levels = k.at("levels").get<std::vector<int>>();
        state.kept.push_back(std::move(kp));
      }
      if (phase == "uni")
        next_seq = j.at("next").get<std::vector<int>>();
      if (phase == "bi") {
        pair_i = j.at("pair_i").get<std::size_t>();
        pair_j = j.at("pair_j").get<std::size_t>();
      }
      loaded = true;
    } catch (const std::exception&) {
      loaded = false;  // unusable file: recompute from scratch
    }
  }

  void save(int n, double eps, const std::string& ph,
            const std::vector<int>& next, std::size_t pi, std::size_t pj,
            const ScanState& st) const {
    if (!active) return;
    json j;
    j["n"] = n;
    j["eps"] = eps;
    j["phase"] = ph;
    j["min_abc"] = st.min_abc;
    j["seen"] = st.seen;
    if (ph == "uni") j["next"] = next;
    if (ph == "bi") {
      j["pair_i"] = pi;
      j["pair_j"] = pj;
    }
    json kept = json::array();
    for (const Kept& k : st.kept) {
      json e;
      e["abc"] = k.abc;
      e["second_root"] = k.second_root;
      e["levels"] = k.levels;
      kept.push_back(std::move(e));
    }
    j["kept"] = std::move(kept);
    std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << j.dump();
      if (!out) throw std::runtime_error("checkpoint write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
      throw std::runtime_error("checkpoint rename failed: " + path);
  }
};

MinimizerRecord finalize_record(int n, const ScanState& st, double eps) {
  MinimizerRecord rec;
  rec.n = n;
  rec.min_abc = st.min_abc;
  std::vector<std::pair<std::string, Tree>> items;
  for (const Kept& k : st.kept) {
    if (k.abc > st.min_abc + eps) continue;
    LevelTree lt{n, k.levels, k.second_root};
    Tree t = lt.to_tree();
    items.emplace_back(canonical_code(t), std::move(t));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [code, tree] : items) {
    if (!rec.codes.empty() && rec.codes.back() == code) continue;
    rec.codes.push_back(code);
    rec.witnesses.push_back(std::move(tree));
  }
  return rec;
}

// The centroid-edge pairs of an even order, as a flat loop body.
template <typename Fn>
void for_each_pair(const std::vector<std::vector<int>>& halves, int n,
                   std::size_t start_i, std::size_t start_j, Fn fn) {
  std::vector<int> levels;
  for (std::size_t i = start_i; i < halves.size(); ++i) {
    for (std::size_t j = (i == start_i ? start_j : i); j < halves.size();
         ++j) {
      levels = halves[i];
      levels.insert(levels.end(), halves[j].begin(), halves[j].end());
      fn(levels, i, j);
    }
  }
}

void parallel_scan(int n, int workers, double eps, ScanState& st) {
  struct Item {
    std::vector<int> levels;
    int second_root;
  };
  using Batch = std::vector<Item>;
  std::mutex mu;
  std::condition_variable cv_space, cv_data;
  std::deque<Batch> queue;
  bool producing = true;
  const std::size_t kQueueCap = 32;
  const std::size_t kBatch = 256;

  std::vector<ScanState> locals(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      LevelEval eval(n);
      for (;;) {
        Batch b;
        {
          std::unique_lock<std::mutex> lk(mu);
          cv_data.wait(lk, [&] { return !queue.empty() || !producing; });
          if (queue.empty()) return;
          b = std::move(queue.front());
          queue.pop_front();
          cv_space.notify_one();
        }
        for (const Item& it : b)
          locals[w].offer(eval.abc(it.levels, it.second_root),
                          it.levels, it.second_root, eps);
      }
    });
  }

  Batch cur;
  auto push = [&](const std::vector<int>& levels, int second_root) {
    cur.push_back({levels, second_root});
    if (cur.size() >= kBatch) {
      std::unique_lock<std::mutex> lk(mu);
      cv_space.wait(lk, [&] { return queue.size() < kQueueCap; });
      queue.push_back(std::move(cur));
      cur = Batch();
      cv_data.notify_one();
    }
  };

  enumerate_unicentroid_from(n, initial_level_sequence(n), true,
                             [&](const LevelTree& lt) {
                               push(lt.levels, -1);
                               return true;
                             });
  if (n % 2 == 0) {
    auto halves = rooted_level_sequences(n / 2);
    for_each_pair(halves, n, 0, 0,
                  [&](const std::vector<int>& levels, std::size_t,
                      std::size_t) { push(levels, n / 2); });
  }
  {
    std::unique_lock<std::mutex> lk(mu);
    if (!cur.empty()) {
      queue.push_back(std::move(cur));
      cv_data.notify_one();
    }
    producing = false;
    cv_data.notify_all();
  }
  for (auto& th : pool) th.join();
  for (const ScanState& l : locals) st.merge(l, eps);
}

}  // namespace

MinimizerRecord find_minimal_abc_trees(int n, const SearchOptions& opt) {
  if (n < 2) throw std::domain_error("find_minimal_abc_trees: need n >= 2");
  int cap = std::min(opt.hard_cap, 26);
  if (n > cap) {
    std::string est =
        n <= 26 ? std::to_string(free_tree_count(n)) + " trees to scan"
                : "well beyond 3e8 trees to scan";
    throw std::domain_error("find_minimal_abc_trees: order " +
                            std::to_string(n) + " exceeds the cap of " +
                            std::to_string(cap) + " (" + est + ")");
  }
  const double eps = opt.eps;
  if (n <= 3) {
    ScanState st;
    if (n == 2) {
      st.offer(0.0, {0, 0}, 1, eps);
    } else {
      LevelEval eval(3);
      std::vector<int> l{0, 1, 1};
      st.offer(eval.abc(l, -1), l, -1, eps);
    }
    return finalize_record(n, st, eps);
  }

  Checkpoint cp(opt, n, eps);
  if (cp.loaded && cp.phase == "done")
    return finalize_record(n, cp.state, eps);

  ScanState st;
  if (opt.workers > 1) {
    // Worker-pool scan: producer streams trees, workers hold local bests
    // that merge associatively. No intermediate checkpoints.
    parallel_scan(n, opt.workers, eps, st);
    cp.save(n, eps, "done", {}, 0, 0, st);
    return finalize_record(n, st, eps);
  }

  LevelEval eval(n);
  bool resume_bi = cp.loaded && cp.phase == "bi";
  if (cp.loaded) st = cp.state;

  if (!resume_bi) {
    std::vector<int> start = cp.loaded && cp.phase == "uni"
                                 ? cp.next_seq
                                 : initial_level_sequence(n);
    bool include_start = !(cp.loaded && cp.phase == "uni");
    enumerate_unicentroid_from(
        n, start, include_start, [&](const LevelTree& lt) {
          st.offer(eval.abc(lt.levels, -1), lt.levels, -1, eps);
          if (cp.active && st.seen % opt.checkpoint_every == 0)
            cp.save(n, eps, "uni", lt.levels, 0, 0, st);
          return true;
        });
  }
  if (n % 2 == 0) {
    auto halves = rooted_level_sequences(n / 2);
    std::size_t si = 0, sj = 0;
    if (resume_bi) {
      si = cp.pair_i;
      sj = cp.pair_j + 1;
      if (sj >= halves.size()) {
        ++si;
        sj = si;
      }
    }
    for_each_pair(halves, n, si, sj,
                  [&](const std::vector<int>& levels, std::size_t i,
                      std::size_t j) {
                    st.offer(eval.abc(levels, n / 2), levels, n / 2, eps);
                    if (cp.active && st.seen % opt.checkpoint_every == 0)
                      cp.save(n, eps, "bi", {}, i, j, st);
                  });
  }
  cp.save(n, eps, "done", {}, 0, 0, st);
  return finalize_record(n, st, eps);
}

MinimizerRecord minimize_trees(int n, const std::vector<Tree>& trees,
                               double eps) {
  ScanState st;
  for (const Tree& t : trees) {
    if (t.size() != n)
      throw std::invalid_argument("minimize_trees: order mismatch");
    // Route through the same retention logic; keep the tree via its edges.
    ++st.seen;
    double a = abc_index(t);
    if (a > st.min_abc + eps) continue;
    if (a < st.min_abc) {
      st.min_abc = a;
      std::erase_if(st.kept,
                    [&](const Kept& k) { return k.abc > st.min_abc + eps; });
    }
    Kept kp;
    kp.abc = a;
    kp.second_root = -1;
    // Store a DFS level sequence from vertex 0 (valid for to_tree).
    std::vector<int> levels(t.size());
    {
      std::vector<std::pair<int, int>> stack{{0, -1}};
      std::vector<int> lvl(t.size(), 0), order;
      std::vector<char> seen_v(t.size(), 0);
      seen_v[0] = 1;
      while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        order.push_back(v);
        lvl[v] = d + 1;
        for (int w : t.neighbors(v))
          if (!seen_v[w]) {
            seen_v[w] = 1;
            stack.push_back({w, d + 1});
          }
      }
      for (std::size_t i = 0; i < order.size(); ++i)
        levels[i] = lvl[order[i]];
    }
    kp.levels = std::move(levels);
    st.kept.push_back(std::move(kp));
  }
  return finalize_record(n, st, eps);
}

namespace {

std::vector<int> max_degree_roots(const Tree& t) {
  int md = 0;
  for (int v = 0; v < t.size(); ++v) md = std::max(md, t.degree(v));
  std::vector<int> roots;
  for (int v = 0; v < t.size(); ++v)
    if (t.degree(v) == md) roots.push_back(v);
  return roots;
}

int count_centers(const BranchProfile& p, int k, bool star) {
  const auto& m = star ? p.b_star_centers : p.b_centers;
  auto it = m.find(k);
  return it == m.end() ? 0 : static_cast<int>(it->second.size());
}

std::string fmt(const char* pattern, int a, int b = -1, int c = -1) {
  std::ostringstream os;
  for (const char* p = pattern; *p; ++p) {
    if (*p == '%') {
      os << a;
      a = b;
      b = c;
    } else {
      os << *p;
    }
  }
  return os.str();
}

// Evaluates a per-root condition over every maximum-degree root; the claim
// passes when some root satisfies it.
template <typename Fn>
ClaimResult any_root(ClaimId id, const Tree& t, Fn per_root) {
  ClaimResult res{id, ClaimStatus::Fail, ""};
  for (int r : max_degree_roots(t)) {
    std::optional<std::string> w = per_root(r);
    if (!w) return {id, ClaimStatus::Pass, ""};
    if (res.witness.empty()) res.witness = *w;
  }
  return res;
}

}  // namespace

ClaimResult check_claim(ClaimId id, const Tree& t) {
  const int n = t.size();
  if (n < 10 || (id == ClaimId::THM8 && n <= 18))
    return {id, ClaimStatus::NotApplicable, ""};

  switch (id) {
    case ClaimId::THM2: {
      auto pd = decompose_paths(t);
      if (pd.whole_tree_is_path)
        return {id, ClaimStatus::Fail, "tree is a path"};
      for (const auto& ip : pd.internal_paths)
        if (ip.length >= 2)
          return {id, ClaimStatus::Fail,
                  fmt("internal path %-% of length %", ip.a, ip.b, ip.length)};
      for (const auto& pp : pd.pendant_paths)
        if (pp.length >= 4)
          return {id, ClaimStatus::Fail,
                  fmt("pendant path %->% of length %", pp.start, pp.leaf,
                      pp.length)};
      return {id, ClaimStatus::Pass, ""};
    }
    case ClaimId::THM3: {
      auto pd = decompose_paths(t);
      if (pd.whole_tree_is_path)
        return {id, ClaimStatus::Fail, "tree is a path"};
      for (const auto& pp : pd.pendant_paths)
        if (pp.length != 2 && pp.length != 3)
          return {id, ClaimStatus::Fail,
                  fmt("pendant path %->% of length %", pp.start, pp.leaf,
                      pp.length)};
      return {id, ClaimStatus::Pass, ""};
    }
    case ClaimId::THM4: {
      auto pd = decompose_paths(t);
      int len3 = 0;
      for (const auto& pp : pd.pendant_paths)
        if (pp.length == 3) ++len3;
      if (len3 > 1)
        return {id, ClaimStatus::Fail,
                fmt("% pendant paths of length 3", len3)};
      return {id, ClaimStatus::Pass, ""};
    }
    case ClaimId::COR1: {
      std::vector<int> big;
      for (int v = 0; v < n; ++v)
        if (t.degree(v) > 2) big.push_back(v);
      if (big.size() <= 1) return {id, ClaimStatus::Pass, ""};
      std::vector<char> in_big(n, 0), seen(n, 0);
      for (int v : big) in_big[v] = 1;
      std::vector<int> stack{big[0]};
      seen[big[0]] = 1;
      int reached = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : t.neighbors(v))
          if (in_big[w] && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      if (reached != static_cast<int>(big.size()))
        return {id, ClaimStatus::Fail,
                "vertices of degree > 2 induce a disconnected subgraph"};
      return {id, ClaimStatus::Pass, ""};
    }
    case ClaimId::LEM2: {
      auto bad = path_degree_ordering_violations(t);
      if (!bad.empty())
        return {id, ClaimStatus::Fail,
                fmt("leaf pair %-% breaks the degree interleaving",
                    bad[0].leaf_a, bad[0].leaf_b)};
      return {id, ClaimStatus::Pass, ""};
    }
    case ClaimId::THM5:
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        auto prof = classify_branches(t, r);
        for (const auto& [k, vs] : prof.b_centers)
          if (k >= 5 && !vs.empty())
            return fmt("B% branch at vertex % (root %)", k, vs[0], r);
        return std::nullopt;
      });
    case ClaimId::THM6:
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        int c = count_centers(classify_branches(t, r), 4, false);
        if (c > 4) return fmt("% B4 branches (root %)", c, r);
        return std::nullopt;
      });
    case ClaimId::THM7:
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        int c = count_centers(classify_branches(t, r), 1, false);
        int limit = tree_is_terminal_branch(t, r) ? 3 : 4;
        if (c > limit)
          return fmt("% B1 branches with limit % (root %)", c, limit, r);
        return std::nullopt;
      });
    case ClaimId::THM8: {
      auto pd = decompose_paths(t);
      bool len3 = false;
      for (const auto& pp : pd.pendant_paths)
        if (pp.length == 3) len3 = true;
      if (!len3) return {id, ClaimStatus::Pass, ""};
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        int c = count_centers(classify_branches(t, r), 2, false);
        if (c > 0)
          return fmt("B2 branch coexists with a length-3 pendant path "
                     "(root %)",
                     r);
        return std::nullopt;
      });
    }
    case ClaimId::THM9:
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        auto prof = classify_branches(t, r);
        if (count_centers(prof, 4, false) > 0 &&
            count_centers(prof, 2, false) > 0)
          return fmt("B4 and B2 branches coexist (root %)", r);
        return std::nullopt;
      });
    case ClaimId::THM10:
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        auto prof = classify_branches(t, r);
        if (count_centers(prof, 4, false) > 0 &&
            count_centers(prof, 1, false) > 0)
          return fmt("B4 and B1 branches coexist (root %)", r);
        return std::nullopt;
      });
    case ClaimId::LEM3A:
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        auto prof = classify_branches(t, r);
        for (const auto& [p, inv] : prof.inventory)
          if (inv.b[1] >= 1 && inv.b[4] >= 1)
            return fmt("B1 and B4 branches share parent % (root %)", p, r);
        return std::nullopt;
      });
    case ClaimId::LEM3B:
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        auto prof = classify_branches(t, r);
        for (const auto& [p, inv] : prof.inventory)
          if (inv.b[2] >= 1 && inv.b[4] >= 1)
            return fmt("B2 and B4 branches share parent % (root %)", p, r);
        return std::nullopt;
      });
    case ClaimId::LEM4:
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        auto prof = classify_branches(t, r);
        for (const auto& [p, inv] : prof.inventory)
          if (inv.b[3] >= 1 && inv.b_star[1] >= 1)
            return fmt("B3 and B1* branches share parent % (root %)", p, r);
        return std::nullopt;
      });
    case ClaimId::OBS1:
      return any_root(id, t, [&](int r) -> std::optional<std::string> {
        if (bfs_degree_order_feasible(t, r)) return std::nullopt;
        return fmt("no breadth-first order at root % visits degrees >= 3 "
                   "non-increasingly",
                   r);
      });
  }
  return {id, ClaimStatus::NotApplicable, ""};
}

ClaimOutcome check_claim(ClaimId id, const MinimizerRecord& rec) {
  ClaimOutcome oc;
  oc.id = id;
  oc.status = ClaimStatus::NotApplicable;
  if (id != ClaimId::LEM2) {
    for (std::size_t i = 0; i < rec.witnesses.size(); ++i) {
      ClaimResult r = check_claim(id, rec.witnesses[i]);
      if (r.status == ClaimStatus::Fail) {
        oc.status = ClaimStatus::Fail;
        oc.witness = r.witness + "; tree=" + rec.codes[i];
        return oc;
      }
      if (r.status == ClaimStatus::Pass) oc.status = ClaimStatus::Pass;
    }
    return oc;
  }
  // LEM2: degree-preserving switches move between tied layouts of one
  // degree sequence without changing the index, so the interleaving is
  // demanded of each degree-sequence class, not of each layout.
  std::map<std::vector<int>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < rec.witnesses.size(); ++i) {
    const Tree& t = rec.witnesses[i];
    std::vector<int> ds(t.size());
    for (int v = 0; v < t.size(); ++v) ds[v] = t.degree(v);
    std::sort(ds.begin(), ds.end(), std::greater<int>());
    classes[std::move(ds)].push_back(i);
  }
  bool evaluated = false;
  for (const auto& [ds, members] : classes) {
    bool conforms = false;
    std::string first;
    for (std::size_t i : members) {
      ClaimResult r = check_claim(id, rec.witnesses[i]);
      if (r.status == ClaimStatus::NotApplicable) continue;
      evaluated = true;
      if (r.status == ClaimStatus::Pass) {
        conforms = true;
      } else if (first.empty()) {
        first = r.witness +
                " in every tied layout of its degree sequence; tree=" +
                rec.codes[i];
      }
    }
    if (!conforms && !first.empty()) {
      oc.status = ClaimStatus::Fail;
      oc.witness = std::move(first);
      return oc;
    }
  }
  oc.status = evaluated ? ClaimStatus::Pass : ClaimStatus::NotApplicable;
  return oc;
}

namespace {

// Small builder for the liveness controls.
struct Builder {
  std::vector<Edge> es;
  int next = 1;

  int add(int parent) {
    es.push_back({parent, next});
    return next++;
  }
  int arm(int p) {  // hanging 2-path; returns its middle vertex
    int c = add(p);
    add(c);
    return c;
  }
  int long_arm(int p) {  // hanging 3-path
    int c = add(p);
    int m = add(c);
    add(m);
    return c;
  }
  int branch(int p, int k) {  // B_k center under p
    int c = add(p);
    for (int i = 0; i < k; ++i) arm(c);
    return c;
  }
  Tree tree() const { return Tree::from_edges(next, es); }
};

}  // namespace

Tree claim_violating_tree(ClaimId id) {
  Builder b;
  switch (id) {
    case ClaimId::THM2:
    case ClaimId::COR1:
    case ClaimId::LEM2: {
      // Two degree-3 vertices joined by a 2-edge internal path, each
      // carrying two hanging 2-paths.
      b.arm(0);
      b.arm(0);
      int m = b.add(0);
      int B = b.add(m);
      b.arm(B);
      b.arm(B);
      return b.tree();
    }
    case ClaimId::THM3: {
      // Degree-5 center with four hanging 2-paths and one bare leaf.
      for (int i = 0; i < 4; ++i) b.arm(0);
      b.add(0);
      return b.tree();
    }
    case ClaimId::THM4: {
      for (int i = 0; i < 2; ++i) b.long_arm(0);
      for (int i = 0; i < 2; ++i) b.arm(0);
      return b.tree();
    }
    case ClaimId::THM5: {
      // Root of degree 7 over a degree-6 vertex carrying five 2-paths.
      for (int i = 0; i < 6; ++i) b.add(0);
      b.branch(0, 5);
      return b.tree();
    }
    case ClaimId::THM6: {
      b.arm(0);
      for (int i = 0; i < 5; ++i) b.branch(0, 4);
      return b.tree();
    }
    case ClaimId::THM7: {
      for (int i = 0; i < 5; ++i) b.arm(0);
      b.branch(0, 2);
      b.add(0);
      return b.tree();
    }
    case ClaimId::THM8: {
      for (int i = 0; i < 5; ++i) b.branch(0, 2);
      b.long_arm(0);
      b.arm(0);
      return b.tree();
    }
    case ClaimId::THM9: {
      b.branch(0, 4);
      for (int i = 0; i < 5; ++i) b.branch(0, 2);
      return b.tree();
    }
    case ClaimId::THM10: {
      b.branch(0, 4);
      for (int i = 0; i < 4; ++i) b.branch(0, 2);
      b.arm(0);
      b.add(0);
      return b.tree();
    }
    case ClaimId::LEM3A: {
      b.branch(0, 4);
      b.branch(0, 4);
      b.arm(0);
      b.branch(0, 2);
      b.branch(0, 2);
      b.add(0);
      return b.tree();
    }
    case ClaimId::LEM3B: {
      b.branch(0, 4);
      b.branch(0, 4);
      b.branch(0, 2);
      b.branch(0, 2);
      b.add(0);
      b.add(0);
      return b.tree();
    }
    case ClaimId::LEM4: {
      b.branch(0, 3);
      b.branch(0, 3);
      b.long_arm(0);
      b.add(0);
      b.add(0);
      return b.tree();
    }
    case ClaimId::OBS1: {
      // Root degree 5; a degree-3 child whose own child has degree 4.
      for (int i = 0; i < 4; ++i) b.arm(0);
      int a = b.add(0);
      b.add(a);
      b.branch(a, 3);
      return b.tree();
    }
  }
  throw std::logic_error("claim_violating_tree: unhandled claim");
}

std::vector<std::vector<int>> tree_degree_sequences(int n) {
  if (n < 1) throw std::domain_error("need n >= 1");
  if (n == 1) return {{0}};
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Non-increasing parts >= 1 of total 2(n-1) in exactly n slots.
  std::function<void(int, int, int)> rec = [&](int slots, int sum,
                                               int max_part) {
    if (slots == 0) {
      if (sum == 0) out.push_back(cur);
      return;
    }
    if (sum < slots || sum > slots * max_part) return;
    for (int d = std::min(max_part, sum - (slots - 1)); d >= 1; --d) {
      cur.push_back(d);
      rec(slots - 1, sum - d, d);
      cur.pop_back();
    }
  };
  rec(n, 2 * (n - 1), n - 1);
  return out;
}

std::vector<GreedyOptimalityFailure> verify_greedy_optimality(int n_max) {
  if (n_max > 12)
    throw std::domain_error(
        "verify_greedy_optimality: supported through order 12");
  std::vector<GreedyOptimalityFailure> failures;
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& d : tree_degree_sequences(n)) {
      auto ts = trees_with_degree_sequence(d);
      double best = std::numeric_limits<double>::infinity();
      const Tree* best_tree = nullptr;
      for (const Tree& t : ts) {
        double a = abc_index(t);
        if (a < best) {
          best = a;
          best_tree = &t;
        }
      }
      double g = abc_index(greedy_tree(d));
      if (g > best + 1e-9) {
        GreedyOptimalityFailure f;
        f.degrees = d;
        f.best_abc = best;
        f.greedy_abc = g;
        f.best_code = canonical_code(*best_tree);
        failures.push_back(std::move(f));
      }
    }
  }
  return failures;
}

bool VerifyReport::any_failure() const {
  for (const auto& row : rows)
    for (const auto& oc : row.claims)
      if (oc.status == ClaimStatus::Fail) return true;
  return false;
}

VerifyReport run_verification(int n_min, int n_max,
                              const std::vector<ClaimId>& claims,
                              const SearchOptions& opt) {
  if (n_min < 2 || n_min > n_max)
    throw std::invalid_argument("run_verification: bad order range");
  VerifyReport rep;
  for (int n = n_min; n <= n_max; ++n) {
    VerifyRow row;
    row.rec = find_minimal_abc_trees(n, opt);
    for (ClaimId id : claims) row.claims.push_back(check_claim(id, row.rec));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string verify_report_json(const VerifyReport& rep) {
  json out;
  json runs = json::array();
  for (const auto& row : rep.rows) {
    json r;
    r["n"] = row.rec.n;
    r["min_abc"] = row.rec.min_abc;
    r["minimizer_codes"] = row.rec.codes;
    json cs = json::array();
    for (const auto& oc : row.claims) {
      json c;
      c["id"] = to_string(oc.id);
      c["status"] = to_string(oc.status);
      if (oc.status == ClaimStatus::Fail) c["witness"] = oc.witness;
      cs.push_back(std::move(c));
    }
    r["claims"] = std::move(cs);
    runs.push_back(std::move(r));
  }
  out["runs"] = std::move(runs);
  return out.dump(2) + "\n";
}

std::string verify_report_csv(const VerifyReport& rep) {
  std::ostringstream os;
  os << "n,min_abc,num_minimizers\n";
  char buf[64];
  for (const auto& row : rep.rows) {
    std::snprintf(buf, sizeof(buf), "%.17g", row.rec.min_abc);
    os << row.rec.n << "," << buf << "," << row.rec.codes.size() << "\n";
  }
  return os.str();
}

}  // namespace abc
