// Acceptance runner: one PASS/FAIL line per criterion, with wall time and the
// time limit that applies to it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mzv/groupring.hpp"
#include "mzv/numeric.hpp"
#include "mzv/suites.hpp"
#include "mzv/symbols.hpp"

using namespace mzv;

namespace {

constexpr double kNumericTol = 1e-3;
constexpr long kNumericN = 100000;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

SymCombo z(std::initializer_list<int> c, Rational q = 1) { return SymCombo::symbol(Composition(c), q); }

void require_suite(Outcome& out, const SuiteReport& r) {
  std::size_t bad = 0;
  for (const auto& c : r.cases) bad += c.ok() ? 0 : 1;
  if (bad > 0) {
    out.require(false, r.suite + ": " + std::to_string(bad) + " of " +
                           std::to_string(r.cases.size()) + " cases failed");
  } else if (r.cases.empty()) {
    out.require(false, r.suite + ": no cases ran");
  } else {
    if (!out.note.empty()) out.note += "; ";
    out.note += r.suite + " " + std::to_string(r.cases.size()) + " cases";
  }
}

SuiteOptions options(int max_weight) {
  SuiteOptions o;
  o.max_weight = max_weight;
  o.n_max = 6;
  o.numeric_tol = kNumericTol;
  o.numeric_N = kNumericN;
  return o;
}

Outcome displayed_values() {
  Outcome out;
  const SymCombo one = SymCombo::constant(1);
  TPoly t;
  t.add(1, one);
  out.require(zeta_poly({1}, Flavor::Harmonic) == t, "Z*(1;T) = T");
  out.require(zeta_poly({1}, Flavor::Shuffle) == t, "Zsh(1;T) = T");
  TPoly star11;
  star11.add(2, SymCombo::constant(Rational(1, 2)));
  star11.add(0, z({2}, Rational(-1, 2)));
  out.require(zeta_poly({1, 1}, Flavor::Harmonic) == star11, "Z*(1,1;T)");
  TPoly sh11;
  sh11.add(2, SymCombo::constant(Rational(1, 2)));
  out.require(zeta_poly({1, 1}, Flavor::Shuffle) == sh11, "Zsh(1,1;T)");
  out.require(zeta_star({1, 1}) == z({2}, Rational(-1, 2)), "z*(1,1)");
  out.require(zeta_star({1}).is_zero() && zeta_sh({1}).is_zero() && zeta_sh({1, 1}).is_zero(),
              "vanishing values");
  const auto g = gamma_coeffs(4);
  out.require(g[0] == ProductCombo::one(), "gamma_0");
  out.require(g[1].is_zero(), "gamma_1");
  out.require(g[2] == ProductCombo::monomial({{2}}, Rational(1, 2)), "gamma_2");
  out.require(g[3] == ProductCombo::monomial({{3}}, Rational(-1, 3)), "gamma_3");
  out.require(g[4] == ProductCombo::monomial({{4}}, Rational(1, 4)) +
                          ProductCombo::monomial({{2}, {2}}, Rational(1, 8)),
              "gamma_4");
  return out;
}

Outcome catalog() {
  Outcome out;
  int checks = 0;
  for (const auto& name : identity_names()) {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& c : check_identity(name, n)) {
        ++checks;
        out.require(c.holds, name + " n=" + std::to_string(n) + " " + c.name);
      }
    }
  }
  if (out.pass) out.note = std::to_string(identity_names().size()) + " families, " +
                           std::to_string(checks) + " sub-identities";
  return out;
}

Outcome relation_soundness() {
  Outcome out;
  int count = 0;
  for (int l = 2; l <= 5; ++l) {
    for (const auto& g : relation_generators(l)) {
      ++count;
      out.require(check_relation_numeric(g.value, kNumericTol, kNumericN), g.source);
    }
  }
  if (out.pass) out.note = std::to_string(count) + " generators";
  return out;
}

Outcome performance() {
  Outcome out;
  RelationDatabase fresh;
  const auto t0 = std::chrono::steady_clock::now();
  fresh.build(8);
  const double build = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.require(build <= 60.0, "database build exceeded 60 s");

  const auto t1 = std::chrono::steady_clock::now();
  RelationDatabase cold;
  bool ok = true;
  for (const auto& name : suite_names()) ok = run_suite(name, cold, options(7)).ok() && ok;
  const double suites = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  out.require(ok, "a suite failed");
  out.require(suites <= 600.0, "suites exceeded 10 min");
  char buf[128];
  std::snprintf(buf, sizeof buf, "build(8) %.2f s, all suites at weight <= 7 from cold %.2f s", build, suites);
  out.note = out.pass ? buf : out.note + "; " + buf;
  return out;
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: no stated limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  RelationDatabase db;
  const std::vector<Criterion> criteria = {
      {1, "displayed regularized values and gamma coefficients", 1.0, displayed_values},
      {2, "group-ring identity catalog, n = 2..6", 30.0, catalog},
      {3, "relation generators of weight <= 5 pass the numeric oracle", 120.0, relation_soundness},
      {4, "regularization suite (rho map, equations 1 and 2)", 120.0,
       [&] {
         Outcome o;
         require_suite(o, suite_regularization(db, options(7)));
         return o;
       }},
      {5, "reference table rows at weights 3..6", 60.0,
       [&] {
         Outcome o;
         require_suite(o, suite_table1(db, options(6)));
         return o;
       }},
      {6, "reversal and parity congruences, weight <= 7", 300.0,
       [&] {
         Outcome o;
         require_suite(o, suite_theorem1(db, options(7)));
         require_suite(o, suite_parity(db, options(7)));
         return o;
       }},
      {7, "distinguished-1 congruences, weight <= 7", 0.0,
       [&] {
         Outcome o;
         require_suite(o, suite_theorem2(db, options(7)));
         return o;
       }},
      {8, "generating-function congruences and shuffle factorization", 0.0,
       [&] {
         Outcome o;
         require_suite(o, suite_genfun(db, options(7)));
         return o;
       }},
      {9, "corollary, sum congruence, restricted sum and duality at even weight <= 8", 0.0,
       [&] {
         Outcome o;
         require_suite(o, suite_corollary(db, options(8)));
         require_suite(o, suite_lemma33(db, options(8)));
         require_suite(o, suite_sumformulas(db, options(8)));
         return o;
       }},
      {10, "weight-6 reducibility", 0.0,
       [&] {
         Outcome o;
         require_suite(o, suite_weight6(db, options(6)));
         return o;
       }},
      {11, "performance", 0.0, performance},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) o.require(false, "time limit exceeded");
    all = all && o.pass;
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::printf("%s criterion %2d: %s [%s] %s\n", o.pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                timing, o.note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
