#include "mzv/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "mzv/genfun.hpp"
#include "mzv/groupring.hpp"
#include "mzv/numeric.hpp"
#include "mzv/symbols.hpp"

namespace mzv {

nlohmann::json CaseResult::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  if (!flavor.empty()) j["flavor"] = flavor;
  j["modulus"] = modulus;
  j["verdict"] = verdict;
  if (!detail.is_null()) j["detail"] = detail;
  return j;
}

bool SuiteReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok(); });
}

std::size_t SuiteReport::count(const std::string& verdict) const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [&](const CaseResult& c) { return c.verdict == verdict; }));
}

namespace {

const std::vector<std::string> kVerdicts = {"exact-equal", "certified", "not-certified",
                                            "numeric-pass", "numeric-fail"};

}  // namespace

nlohmann::json SuiteReport::to_json(bool with_timings) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["parameters"] = parameters;
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& v : kVerdicts) {
    if (const auto k = count(v)) counts[v] = k;
  }
  j["counts"] = counts;
  j["ok"] = ok();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : cases) list.push_back(c.to_json());
  j["cases"] = std::move(list);
  if (with_timings) j["seconds"] = seconds;
  return j;
}

std::string SuiteReport::to_text(bool verbose) const {
  std::ostringstream out;
  out << suite << ": " << (ok() ? "OK" : "FAILED") << " (" << cases.size() << " cases";
  for (const auto& v : kVerdicts) {
    if (const auto k = count(v)) out << ", " << k << " " << v;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", seconds);
  out << "; " << buf << " s)\n";
  for (const auto& c : cases) {
    if (!verbose && c.ok()) continue;
    out << "  [" << c.verdict << "] " << c.id;
    if (!c.flavor.empty()) out << " {" << c.flavor << "}";
    if (!c.modulus.empty()) out << " mod " << c.modulus;
    if (!c.detail.is_null()) out << " " << c.detail.dump();
    out << "\n";
  }
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"parity", "thm1",   "thm2",      "cor",
                                                 "lemma33", "sums",  "weight6",   "groupring",
                                                 "reg",    "table1", "genfun"};
  return names;
}

namespace {

using Job = std::function<std::vector<CaseResult>()>;

// Runs independent jobs on a small pool; results keep the job order.
std::vector<CaseResult> run_jobs(const std::vector<Job>& jobs, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::vector<std::vector<CaseResult>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned t) {
    try {
      for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = jobs[i]();
    } catch (...) {
      errors[t] = std::current_exception();
      next = jobs.size();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<CaseResult> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

nlohmann::json flavor_list(const SuiteOptions& o) {
  nlohmann::json j = nlohmann::json::array();
  for (Flavor f : o.flavors) j.push_back(to_string(f));
  return j;
}

SubspaceLabel mod_label(std::vector<SubspaceLabel> first) {
  first.push_back(SubspaceLabel::product());
  first.push_back(SubspaceLabel::relation());
  return SubspaceLabel::sum(std::move(first));
}

std::string z_name(const Composition& c) { return "z(" + c.str() + ")"; }

// Verdict of v ∈ label at weight l.
std::string membership_verdict(RelationDatabase& db, const SymCombo& v, int l,
                               const SubspaceLabel& label) {
  if (v.is_zero()) return "exact-equal";
  return db.certify(v, l, label).certified ? "certified" : "not-certified";
}

CaseResult congruence(RelationDatabase& db, std::string id, Flavor f, const SymCombo& v, int l,
                      const SubspaceLabel& label) {
  CaseResult c;
  c.id = std::move(id);
  c.flavor = to_string(f);
  c.modulus = label.str();
  c.verdict = membership_verdict(db, v, l, label);
  return c;
}

template <class F>
SuiteReport timed(std::string name, nlohmann::json params, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = std::move(name);
  r.parameters = std::move(params);
  r.cases = body();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Composition concat(const std::vector<int>& a, int mid, const std::vector<int>& b) {
  std::vector<int> parts = a;
  parts.push_back(mid);
  parts.insert(parts.end(), b.begin(), b.end());
  return Composition(std::move(parts));
}

Rational sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

SuiteReport suite_parity(RelationDatabase& db, const SuiteOptions& o) {
  return timed("parity", {{"maxWeight", o.max_weight}, {"flavors", flavor_list(o)}}, [&] {
    std::vector<Job> jobs;
    for (int l = 2; l <= o.max_weight; ++l) {
      for (int n = 1; n <= l; ++n) {
        if ((l + n) % 2 == 0) continue;
        for (const auto& c : compositions(l, n)) {
          for (Flavor f : o.flavors) {
            jobs.push_back([&db, c, f, l, n] {
              return std::vector{congruence(db, z_name(c), f, zeta_reg(c, f), l,
                                            mod_label({SubspaceLabel::depth_below(n)}))};
            });
          }
        }
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport suite_theorem1(RelationDatabase& db, const SuiteOptions& o) {
  return timed("thm1", {{"maxWeight", o.max_weight}, {"flavors", flavor_list(o)}}, [&] {
    std::vector<Job> jobs;
    for (int l = 2; l <= o.max_weight; ++l) {
      for (const auto& c : compositions(l)) {
        for (Flavor f : o.flavors) {
          jobs.push_back([&db, c, f, l] {
            const int n = c.depth();
            const SymCombo v = zeta_reg(c, f) - sign_pow(l - 1) * zeta_reg(reverse(c), f);
            return std::vector{congruence(db, z_name(c) + " vs " + z_name(reverse(c)), f, v, l,
                                          mod_label({SubspaceLabel::depth(n - 1)}))};
          });
        }
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport suite_theorem2(RelationDatabase& db, const SuiteOptions& o) {
  return timed("thm2", {{"maxWeight", o.max_weight}, {"flavors", flavor_list(o)}}, [&] {
    std::vector<Job> jobs;
    for (int l = 2; l <= o.max_weight; ++l) {
      for (const auto& c : compositions(l)) {
        const auto& p = c.parts();
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (p[i] != 1) continue;
          for (Flavor f : o.flavors) {
            jobs.push_back([&db, c, f, l, i] {
              const auto& parts = c.parts();
              const std::vector<int> K(parts.begin(), parts.begin() + static_cast<long>(i));
              const std::vector<int> L(parts.begin() + static_cast<long>(i) + 1, parts.end());
              const std::vector<int> rK(K.rbegin(), K.rend());
              const std::vector<int> rL(L.rbegin(), L.rend());
              const SubspaceLabel mod = mod_label({SubspaceLabel::depth(c.depth() - 1)});
              const std::string at = " (i=" + std::to_string(i + 1) + ")";
              const Composition swapped = concat(L, 1, K);
              const Composition reversed = concat(rK, 1, rL);
              return std::vector{
                  congruence(db, z_name(c) + " ≡ " + z_name(swapped) + at, f,
                             zeta_reg(c, f) - zeta_reg(swapped, f), l, mod),
                  congruence(db, z_name(c) + " ≡ (-1)^(l-1) " + z_name(reversed) + at, f,
                             zeta_reg(c, f) - sign_pow(l - 1) * zeta_reg(reversed, f), l, mod)};
            });
          }
        }
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {3, 1, {2, 1}, {{1, {1, 2}}}},
      {4, 1, {3, 1}, {{-1, {3, 1}}, {1, {1, 3}}}},
      {4, 2, {2, 1, 1}, {{-1, {2, 1, 1}}, {0, {1, 2, 1}}, {1, {1, 1, 2}}}},
      {5, 1, {4, 1}, {{1, {1, 4}}}},
      {5, 2, {3, 1, 1}, {{1, {1, 3, 1}}, {1, {1, 1, 3}}}},
      {5, 2, {2, 2, 1}, {{1, {1, 2, 2}}}},
      {5, 3, {2, 1, 1, 1}, {{1, {1, 2, 1, 1}}, {1, {1, 1, 2, 1}}, {1, {1, 1, 1, 2}}}},
      {6, 1, {5, 1}, {{-1, {5, 1}}, {1, {1, 5}}}},
      {6, 2, {4, 1, 1}, {{-1, {4, 1, 1}}, {0, {1, 4, 1}}, {1, {1, 1, 4}}}},
      {6, 2, {3, 2, 1}, {{-1, {2, 3, 1}}, {1, {1, 3, 2}}}},
      {6, 2, {3, 1, 2}, {{-1, {3, 1, 2}}, {1, {2, 1, 3}}}},
      {6, 2, {2, 3, 1}, {{-1, {3, 2, 1}}, {1, {1, 2, 3}}}},
      {6, 2, {2, 1, 3}, {{1, {3, 1, 2}}, {-1, {2, 1, 3}}}},
      {6, 3, {3, 1, 1, 1}, {{-1, {3, 1, 1, 1}}, {0, {1, 3, 1, 1}}, {0, {1, 1, 3, 1}}, {1, {1, 1, 1, 3}}}},
      {6, 3, {2, 2, 1, 1}, {{-1, {2, 2, 1, 1}}, {0, {1, 2, 2, 1}}, {1, {1, 1, 2, 2}}}},
      {6, 3, {2, 1, 2, 1}, {{-1, {2, 1, 2, 1}}, {0, {2, 1, 1, 2}}, {1, {1, 2, 1, 2}}}},
      {6, 3, {2, 1, 1, 2}, {{0, {2, 1, 2, 1}}, {0, {1, 2, 1, 2}}}},
      {6, 4, {2, 1, 1, 1, 1},
       {{-1, {2, 1, 1, 1, 1}}, {0, {1, 2, 1, 1, 1}}, {0, {1, 1, 2, 1, 1}}, {0, {1, 1, 1, 2, 1}},
        {1, {1, 1, 1, 1, 2}}}},
  };
  return rows;
}

SuiteReport suite_table1(RelationDatabase& db, const SuiteOptions& o) {
  return timed("table1", {{"flavors", flavor_list(o)}}, [&] {
    std::vector<Job> jobs;
    for (const auto& row : table1_rows()) {
      for (const auto& entry : row.entries) {
        for (Flavor f : o.flavors) {
          jobs.push_back([&db, row, entry, f] {
            const SubspaceLabel mod = mod_label({SubspaceLabel::depth(row.mod_depth)});
            auto check = [&](int s) {
              const SymCombo v = zeta_reg(row.lhs, f) - Rational(s) * zeta_reg(entry.rhs, f);
              return membership_verdict(db, v, row.weight, mod);
            };
            const std::string sign = entry.sign > 0 ? "" : entry.sign < 0 ? "-" : "±";
            CaseResult c;
            c.id = z_name(row.lhs) + " ≡ " + sign + z_name(entry.rhs);
            c.flavor = to_string(f);
            c.modulus = mod.str();
            if (entry.sign != 0) {
              c.verdict = check(entry.sign);
            } else {
              const std::string plus = check(1);
              const std::string minus = check(-1);
              c.detail = {{"+", plus}, {"-", minus}};
              const bool p = plus != "not-certified";
              const bool m = minus != "not-certified";
              c.detail["holds"] = p && m ? "both" : p ? "+" : m ? "-" : "neither";
              c.verdict = p ? plus : m ? minus : "not-certified";
            }
            return std::vector{c};
          });
        }
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

SymCombo restricted_sum(int l, int a, int b) {
  SymCombo s;
  for (const auto& c : compositions(l, b)) {
    if (c[0] >= a) s += SymCombo::symbol(c);
  }
  return s;
}

SymCombo ones_tail_sum(int l, int p, int q) {
  SymCombo s;
  for (const auto& c : compositions(l - q + 1, p)) {
    if (c[0] < 2) continue;
    std::vector<int> parts = c.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(q - 1), 1);
    s += SymCombo::symbol(Composition(std::move(parts)));
  }
  return s;
}

namespace {

std::vector<int> even_weights(int max_weight) {
  std::vector<int> out;
  for (int l = 2; l <= max_weight; l += 2) out.push_back(l);
  return out;
}

std::string mn_id(const char* what, int l, int a, int b) {
  return std::string(what) + "(" + std::to_string(l) + "," + std::to_string(a) + "," +
         std::to_string(b) + ")";
}

}  // namespace

SuiteReport suite_corollary(RelationDatabase& db, const SuiteOptions& o) {
  return timed("cor", {{"evenWeightsUpTo", o.max_weight}}, [&] {
    std::vector<Job> jobs;
    for (int l : even_weights(o.max_weight)) {
      for (int m = 1; m < l; ++m) {
        for (int n = 1; m + n <= l; ++n) {
          jobs.push_back([&db, l, m, n] {
            const SymCombo s = restricted_sum(l, m + 1, n);
            const std::string id = "sum_{l1>=" + std::to_string(m + 1) + "} depth " +
                                   std::to_string(n) + " weight " + std::to_string(l);
            std::vector<CaseResult> out;
            for (int d : {m, n}) {
              if (d == n && m == n && !out.empty()) break;
              CaseResult c = congruence(db, id + " (d=" + std::to_string(d) + ")", Flavor::Harmonic,
                                        s, l, mod_label({SubspaceLabel::depth(d + 1)}));
              c.flavor.clear();
              out.push_back(std::move(c));
            }
            if (m + 1 < n) {
              CaseResult c = congruence(db, id + " (depth < n)", Flavor::Harmonic, s, l,
                                        mod_label({SubspaceLabel::depth_below(n)}));
              c.flavor.clear();
              out.push_back(std::move(c));
            }
            return out;
          });
        }
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport suite_lemma33(RelationDatabase& db, const SuiteOptions& o) {
  return timed("lemma33", {{"evenWeightsUpTo", o.max_weight}}, [&] {
    std::vector<Job> jobs;
    for (int l : even_weights(o.max_weight)) {
      for (int p = 1; p < l; ++p) {
        for (int q = 1; p + q <= l; ++q) {
          jobs.push_back([&db, l, p, q] {
            CaseResult c = congruence(db, mn_id("S", l, p, q), Flavor::Harmonic, ones_tail_sum(l, p, q),
                                      l, mod_label({SubspaceLabel::depth(p + q - 2)}));
            c.flavor.clear();
            return std::vector{c};
          });
        }
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport suite_sumformulas(RelationDatabase& db, const SuiteOptions& o) {
  return timed("sums", {{"maxWeight", o.max_weight}}, [&] {
    std::vector<Job> jobs;
    const SubspaceLabel rel = SubspaceLabel::relation();
    for (int l = 2; l <= o.max_weight; ++l) {
      for (int m = 1; m < l; ++m) {
        for (int n = 1; m + n <= l; ++n) {
          jobs.push_back([&db, l, m, n, rel] {
            const SymCombo r = restricted_sum(l, m + 1, n);
            CaseResult a;
            a.id = mn_id("R", l, m + 1, n) + " = " + mn_id("S", l, l - m - n + 1, n);
            a.modulus = rel.str();
            a.verdict = membership_verdict(db, r - ones_tail_sum(l, l - m - n + 1, n), l, rel);
            CaseResult b;
            b.id = mn_id("R", l, m + 1, n) + " = " + mn_id("R", l, n + 1, m);
            b.modulus = rel.str();
            b.verdict = membership_verdict(db, r - restricted_sum(l, n + 1, m), l, rel);
            return std::vector{a, b};
          });
        }
      }
      for (const auto& k : admissible_compositions(l)) {
        const Composition d = dual(k);
        if (d < k) continue;
        jobs.push_back([&db, l, k, d, rel] {
          CaseResult c;
          c.id = z_name(k) + " = " + z_name(d) + " (duality)";
          c.modulus = rel.str();
          c.verdict = membership_verdict(db, SymCombo::symbol(k) - SymCombo::symbol(d), l, rel);
          return std::vector{c};
        });
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport suite_weight6(RelationDatabase& db, const SuiteOptions& o) {
  return timed("weight6", nlohmann::json::object(), [&] {
    std::vector<Job> jobs;
    for (const auto& c : admissible_compositions(6)) {
      const int n = c.depth();
      if (n < 2 || n > 5) continue;
      jobs.push_back([&db, c, n] {
        CaseResult r = congruence(db, z_name(c), Flavor::Harmonic, SymCombo::symbol(c), 6,
                                  mod_label({SubspaceLabel::depth(n - 1)}));
        r.flavor.clear();
        return std::vector{r};
      });
    }
    // The two product expansions displayed for the pivotal cases, exactly.
    jobs.push_back([] {
      const SymCombo z3 = SymCombo::symbol({3});
      const SymCombo v = expand_pair(z3, z3, Flavor::Harmonic) - SymCombo::symbol({6}) -
                         Rational(2) * SymCombo::symbol({3, 3});
      CaseResult r{"2 z(3,3) = z(3)^2 - z(6)", "", "", v.is_zero() ? "exact-equal" : "not-certified", {}};
      return std::vector{r};
    });
    jobs.push_back([] {
      const SymCombo v = expand_pair(SymCombo::symbol({2}), SymCombo::symbol({2, 2}), Flavor::Harmonic) -
                         SymCombo::symbol({4, 2}) - SymCombo::symbol({2, 4}) -
                         Rational(3) * SymCombo::symbol({2, 2, 2});
      CaseResult r{"3 z(2,2,2) = z(2) z(2,2) - z(4,2) - z(2,4)", "", "",
                   v.is_zero() ? "exact-equal" : "not-certified", {}};
      return std::vector{r};
    });
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport suite_groupring(const SuiteOptions& o) {
  return timed("groupring", {{"nMax", o.n_max}}, [&] {
    std::vector<Job> jobs;
    for (const auto& name : identity_names()) {
      for (int n = 2; n <= o.n_max; ++n) {
        jobs.push_back([name, n] {
          std::vector<CaseResult> out;
          for (const auto& chk : check_identity(name, n)) {
            CaseResult c;
            c.id = name + " n=" + std::to_string(n) + ": " + chk.name;
            c.verdict = chk.holds ? "exact-equal" : "not-certified";
            out.push_back(std::move(c));
          }
          return out;
        });
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport suite_regularization(RelationDatabase& db, const SuiteOptions& o) {
  return timed("reg", {{"maxWeight", o.max_weight}}, [&] {
    std::vector<Job> jobs;
    for (int l = 1; l <= o.max_weight; ++l) {
      for (const auto& c : compositions(l)) {
        jobs.push_back([&db, c, l] {
          std::vector<CaseResult> out;
          // rho(Z*(w;T)) - Z_sh(w;T), coefficientwise in T.
          ProductTPoly diff = rho_apply(zeta_poly(c, Flavor::Harmonic));
          const TPoly sh = zeta_poly(c, Flavor::Shuffle);
          for (const auto& [k, coeff] : sh.coeffs) diff.add(k, ProductCombo::from_symbols(coeff) * Rational(-1));
          const int deg = std::max(zeta_poly(c, Flavor::Harmonic).degree(), sh.degree());
          for (int k = 0; k <= std::max(deg, 0); ++k) {
            const SymCombo v = expand_product(diff.coeff(k), Flavor::Harmonic);
            const int w = l - k;
            CaseResult r;
            r.id = "rho " + z_name(c) + " [T^" + std::to_string(k) + "]";
            r.modulus = SubspaceLabel::relation().str();
            if (v.is_zero()) {
              r.verdict = "exact-equal";
            } else if (w < 2 || v.weight() != w) {
              r.verdict = "not-certified";
            } else {
              r.verdict = membership_verdict(db, v, w, SubspaceLabel::relation());
            }
            out.push_back(std::move(r));
          }
          if (l >= 2) {
            const SymCombo star = zeta_star(c);
            const SymCombo shv = zeta_sh(c);
            CaseResult e1 = congruence(db, "eq1 " + z_name(c), Flavor::Harmonic, star - shv, l,
                                       mod_label({}));
            e1.flavor.clear();
            out.push_back(std::move(e1));
            const SubspaceLabel m2 = mod_label({SubspaceLabel::depth(c.depth())});
            out.push_back(congruence(db, "eq2 " + z_name(c), Flavor::Harmonic, star, l, m2));
            out.push_back(congruence(db, "eq2 " + z_name(c), Flavor::Shuffle, shv, l, m2));
          }
          return out;
        });
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport suite_genfun(RelationDatabase& db, const SuiteOptions& o) {
  return timed("genfun", {{"maxWeight", o.max_weight}, {"flavors", flavor_list(o)}}, [&] {
    std::vector<Job> jobs;
    auto from_report = [](const GenfunReport& g) {
      CaseResult c;
      c.id = g.check + " l=" + std::to_string(g.l) + " n=" + std::to_string(g.n) +
             (g.j ? " j=" + std::to_string(*g.j) : "");
      c.flavor = g.flavor;
      c.modulus = g.modulus;
      c.verdict = g.verdict;
      if (!g.failures.empty()) c.detail = {{"failures", g.failures}};
      return c;
    };
    for (int l = 2; l <= o.max_weight; ++l) {
      for (int n = 2; n <= l; ++n) {
        for (Flavor f : o.flavors) {
          jobs.push_back([&db, l, n, f, from_report] {
            std::vector<CaseResult> out;
            for (const auto& g : check_genfun_shuffle(l, n, f, db)) out.push_back(from_report(g));
            for (const auto& g : check_genfun_harmonic(l, n, f, db)) out.push_back(from_report(g));
            return out;
          });
        }
      }
      if (l <= std::min(o.max_weight, 6)) {
        for (int n = 2; n <= l; ++n) {
          for (int j = 1; j < n; ++j) {
            jobs.push_back([l, n, j] {
              CaseResult c;
              c.id = "shuffle.factorization l=" + std::to_string(l) + " n=" + std::to_string(n) +
                     " j=" + std::to_string(j);
              c.flavor = to_string(Flavor::Shuffle);
              c.verdict = check_shuffle_factorization(l, n, j) ? "exact-equal" : "not-certified";
              return std::vector{c};
            });
          }
        }
      }
      for (const auto& c : compositions(l)) {
        if (c.depth() < 2) continue;
        jobs.push_back([c] {
          CaseResult r;
          r.id = "insertion.merge " + z_name(c);
          r.flavor = to_string(Flavor::Harmonic);
          r.verdict = insertion_merge_defect(c).is_zero() ? "exact-equal" : "not-certified";
          return std::vector{r};
        });
      }
    }
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport check_database(RelationDatabase& db, const SuiteOptions& o) {
  return timed("db-check", {{"numericTol", o.numeric_tol}, {"numericN", o.numeric_N}}, [&] {
    std::vector<Job> jobs;
    for (int l = 2; l <= db.max_weight(); ++l) {
      jobs.push_back([&db, l, &o] {
        std::vector<CaseResult> out;
        const SubspaceBasis& rel = db.relation(l);
        const SubspaceBasis& prod = db.product(l);
        CaseResult inv;
        inv.id = "weight " + std::to_string(l) + " echelon invariants";
        inv.verdict = "exact-equal";
        inv.detail = {{"relationDim", rel.dim()}, {"productDim", prod.dim()},
                      {"ambientDim", ambient_dim(l)}};
        try {
          rel.check_invariants();
          prod.check_invariants();
        } catch (const std::exception& e) {
          inv.verdict = "not-certified";
          inv.detail["error"] = e.what();
        }
        out.push_back(std::move(inv));
        if (l <= 5) {
          const SymbolIndex index(l);
          for (int r = 0; r < rel.dim(); ++r) {
            const auto res = relation_residual(index.to_combo(rel.rows()[static_cast<std::size_t>(r)]),
                                               o.numeric_tol, o.numeric_N);
            CaseResult c;
            c.id = "weight " + std::to_string(l) + " relation row " + std::to_string(r);
            c.modulus = "";
            c.verdict = res.pass ? "numeric-pass" : "numeric-fail";
            c.detail = {{"residual", static_cast<double>(res.residual)},
                        {"errorBound", static_cast<double>(res.error_bound)}};
            out.push_back(std::move(c));
          }
        }
        return out;
      });
    }
    return run_jobs(jobs, o.threads);
  });
}

SuiteReport run_suite(const std::string& name, RelationDatabase& db, const SuiteOptions& o) {
  if (name == "parity") return suite_parity(db, o);
  if (name == "thm1") return suite_theorem1(db, o);
  if (name == "thm2") return suite_theorem2(db, o);
  if (name == "cor") return suite_corollary(db, o);
  if (name == "lemma33") return suite_lemma33(db, o);
  if (name == "sums") return suite_sumformulas(db, o);
  if (name == "weight6") return suite_weight6(db, o);
  if (name == "groupring") return suite_groupring(o);
  if (name == "reg") return suite_regularization(db, o);
  if (name == "table1") return suite_table1(db, o);
  if (name == "genfun") return suite_genfun(db, o);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace mzv
