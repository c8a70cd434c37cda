#pragma once

// Verification suites: each runs a family of exact congruence or identity
// checks and collects per-case verdicts into a deterministic report.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mzv/database.hpp"
#include "mzv/regularize.hpp"

namespace mzv {

struct SuiteOptions {
  int max_weight = 7;
  int n_max = 6;
  std::vector<Flavor> flavors = {Flavor::Harmonic, Flavor::Shuffle};
  double numeric_tol = 1e-3;
  long numeric_N = 100000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CaseResult {
  std::string id;
  std::string flavor;   // "star", "sh" or ""
  std::string modulus;  // label string, "" for exact identities
  std::string verdict;  // exact-equal | certified | not-certified | numeric-pass | numeric-fail
  nlohmann::json detail;

  bool ok() const { return verdict != "not-certified" && verdict != "numeric-fail"; }
  nlohmann::json to_json() const;
};

struct SuiteReport {
  std::string suite;
  nlohmann::json parameters;
  std::vector<CaseResult> cases;
  double seconds = 0;

  bool ok() const;
  std::size_t count(const std::string& verdict) const;
  nlohmann::json to_json(bool with_timings = false) const;
  /// Summary line plus every case that did not pass (all cases if verbose).
  std::string to_text(bool verbose = false) const;
};

const std::vector<std::string>& suite_names();

SuiteReport suite_parity(RelationDatabase& db, const SuiteOptions& o);
SuiteReport suite_theorem1(RelationDatabase& db, const SuiteOptions& o);
SuiteReport suite_theorem2(RelationDatabase& db, const SuiteOptions& o);
SuiteReport suite_table1(RelationDatabase& db, const SuiteOptions& o);
SuiteReport suite_corollary(RelationDatabase& db, const SuiteOptions& o);
SuiteReport suite_lemma33(RelationDatabase& db, const SuiteOptions& o);
SuiteReport suite_sumformulas(RelationDatabase& db, const SuiteOptions& o);
SuiteReport suite_weight6(RelationDatabase& db, const SuiteOptions& o);
SuiteReport suite_groupring(const SuiteOptions& o);
SuiteReport suite_regularization(RelationDatabase& db, const SuiteOptions& o);
/// Generating-function congruences (l <= max_weight) and the shuffle factorization
/// (l <= min(max_weight, 6)).
SuiteReport suite_genfun(RelationDatabase& db, const SuiteOptions& o);

/// Runs one named suite; "all" is handled by the caller.
SuiteReport run_suite(const std::string& name, RelationDatabase& db, const SuiteOptions& o);

/// Validates a stored database and checks every stored relation row of
/// weight <= 5 numerically.
SuiteReport check_database(RelationDatabase& db, const SuiteOptions& o);

/// Reference table rows: lhs and its listed right-hand sides. sign is +1, -1 or 0 for "±".
struct Table1Entry {
  int sign;
  Composition rhs;
};
struct Table1Row {
  int weight;
  int mod_depth;
  Composition lhs;
  std::vector<Table1Entry> entries;
};
const std::vector<Table1Row>& table1_rows();

/// Sum of zeta over depth-b compositions of weight l with first part >= a.
SymCombo restricted_sum(int l, int a, int b);
/// Sum of zeta(l_1, ..., l_p, 1^{q-1}) over l_1 >= 2 with l_1 + ... + l_p = l - q + 1.
SymCombo ones_tail_sum(int l, int p, int q);

}  // namespace mzv
