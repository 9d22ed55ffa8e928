#pragma once
// Exhaustive minimizer search over all trees of a given order, structural
// claim checking on the minimizers, and report generation.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

struct MinimizerRecord {
  int n = 0;
  double min_abc = 0.0;
  // Canonical codes of all trees within eps of the minimum, sorted;
  // witnesses[i] realizes codes[i].
  std::vector<std::string> codes;
  std::vector<Tree> witnesses;
};

// Structural claims checked on minimizers. The names are stable external
// identifiers (CLI and report vocabulary).
enum class ClaimId {
  THM2,   // no internal path of length >= 2, no pendant path of length >= 4
  THM3,   // every pendant vertex lies on a pendant path of length 2 or 3
  THM4,   // at most one pendant path of length 3
  THM5,   // no B_k branch with k >= 5
  THM6,   // at most four B_4 branches
  THM7,   // at most four B_1 branches; three when the tree is one
          // terminal branch
  THM8,   // order > 18: no B_2 branch coexists with a length-3 pendant
          // path (the known exceptions lie beyond the desk range)
  THM9,   // no B_4 branch coexists with a B_2 branch
  THM10,  // no B_4 branch coexists with a B_1 branch
  COR1,   // the subgraph induced by degrees > 2 is a tree
  LEM2,   // leaf-to-leaf paths obey the two-ended degree interleaving
  LEM3A,  // no parent has both a B_1 and a B_4 child branch
  LEM3B,  // no parent has both a B_2 and a B_4 child branch
  LEM4,   // no parent has both a B_3 and a B_1* child branch
  OBS1,   // some breadth-first order visits degrees >= 3 non-increasingly
};

const char* to_string(ClaimId id);
std::optional<ClaimId> claim_from_string(std::string_view s);
const std::vector<ClaimId>& all_claims();

enum class ClaimStatus { Pass, Fail, NotApplicable };
const char* to_string(ClaimStatus s);

struct ClaimResult {
  ClaimId id{};
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::string witness;  // locus of the failure, empty otherwise
};

struct SearchOptions {
  int workers = 1;
  double eps = 1e-9;           // tie tolerance for retaining minimizers
  std::string checkpoint_dir;  // empty: no checkpointing
  // Trees between checkpoint writes (sequential scans only).
  std::uint64_t checkpoint_every = 1u << 22;
  int hard_cap = 26;           // refuse orders beyond this
};

// All trees of order n attaining the minimal index, up to isomorphism,
// ties within eps retained. Requires 2 <= n <= hard_cap; beyond the cap
// it throws std::domain_error naming the estimated tree count. The result
// is independent of visiting order and of the worker count. With a
// checkpoint directory set, progress is saved periodically (workers == 1)
// and a completed order is reloaded instead of recomputed.
MinimizerRecord find_minimal_abc_trees(int n, const SearchOptions& opt = {});

// The same minimum/ties retention applied to an explicit list of trees
// (used to confirm order independence).
MinimizerRecord minimize_trees(int n, const std::vector<Tree>& trees,
                               double eps = 1e-9);

// Evaluates one claim on one tree. Claims apply to orders >= 10 (THM8:
// > 18); below that the status is NotApplicable. Claims about rooted
// structure pass if any maximum-degree rooting satisfies them.
ClaimResult check_claim(ClaimId id, const Tree& t);

// A tree on >= 10 vertices violating the claim under every admissible
// rooting: a liveness control for the checker.
Tree claim_violating_tree(ClaimId id);

// Greedy optimality over every degree sequence of every order in
// [2, n_max] (n_max <= 12): the greedy tree must attain the minimal index
// among all trees with its degree sequence.
struct GreedyOptimalityFailure {
  std::vector<int> degrees;
  double best_abc = 0.0, greedy_abc = 0.0;
  std::string best_code;
};
std::vector<GreedyOptimalityFailure> verify_greedy_optimality(int n_max);

// All non-increasing degree sequences of trees on n vertices.
std::vector<std::vector<int>> tree_degree_sequences(int n);

struct ClaimOutcome {
  ClaimId id{};
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::string witness;
};

// Evaluates one claim over a whole record: every retained minimizer must
// satisfy it, and the first failure is reported with its canonical code.
// LEM2 is the exception. Co-minimizers sharing a degree sequence are
// interconvertible by index-preserving edge switches (the move that
// establishes the interleaving in the first place), so the interleaving
// can only be demanded of the class as a whole: a layout that breaks the
// chain passes if some retained co-minimizer with the same degree
// sequence obeys it. A degree-sequence class with no conforming layout
// fails.
ClaimOutcome check_claim(ClaimId id, const MinimizerRecord& rec);

struct VerifyRow {
  MinimizerRecord rec;
  std::vector<ClaimOutcome> claims;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool any_failure() const;
};

// Minimizer search plus claim evaluation for every order in
// [n_min, n_max]. A claim fails for an order when any minimizer of that
// order violates it; the witness names the tree and the locus.
VerifyReport run_verification(int n_min, int n_max,
                              const std::vector<ClaimId>& claims,
                              const SearchOptions& opt = {});

std::string verify_report_json(const VerifyReport& rep);
std::string verify_report_csv(const VerifyReport& rep);

}  // namespace abc
