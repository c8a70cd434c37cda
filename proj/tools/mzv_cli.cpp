// Command-line harness: relation database, verification suites, reduction
// modulo named subspaces and numerical evaluation.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mzv/database.hpp"
#include "mzv/numeric.hpp"
#include "mzv/suites.hpp"
#include "mzv/symbols.hpp"

namespace {

using namespace mzv;

constexpr int kDefaultMaxWeight = 8;
constexpr int kOptInWeight = 9;

struct Globals {
  std::string format = "text";
  std::string db_path;
  double numeric_tol = 1e-3;
  long numeric_N = 100000;
  bool allow_weight9 = false;
};

void check_weight_cap(int w, const Globals& g) {
  if (w > kOptInWeight || (w > kDefaultMaxWeight && !g.allow_weight9)) {
    throw std::invalid_argument("weight " + std::to_string(w) +
                                " is above the supported range (weight 9 needs --allow-weight-9)");
  }
}

std::unique_ptr<RelationDatabase> open_db(const Globals& g) {
  if (!g.db_path.empty()) return RelationDatabase::load(g.db_path);
  return std::make_unique<RelationDatabase>();
}

int emit(const std::vector<SuiteReport>& reports, const Globals& g, bool timings, bool verbose) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (g.format == "json") {
    nlohmann::json doc;
    doc["ok"] = ok;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : reports) list.push_back(r.to_json(timings));
    doc["reports"] = std::move(list);
    std::cout << doc.dump(1) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.to_text(verbose);
    std::cout << (ok ? "all checks passed" : "some checks did not pass") << "\n";
  }
  return ok ? 0 : 1;
}

std::vector<Flavor> parse_flavors(const std::string& s) {
  if (s == "star") return {Flavor::Harmonic};
  if (s == "sh") return {Flavor::Shuffle};
  return {Flavor::Harmonic, Flavor::Shuffle};
}

nlohmann::json combo_json(const SymCombo& s) { return s.is_zero() ? "0" : s.str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of congruences among multiple zeta values"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--db", g.db_path, "Load subspaces from a stored database");
  app.add_option("--numeric-tol", g.numeric_tol, "Tolerance of numerical relation checks")
      ->capture_default_str();
  app.add_option("--numeric-N", g.numeric_N, "Truncation bound of numerical evaluation")
      ->capture_default_str();
  app.add_flag("--allow-weight-9", g.allow_weight9, "Permit weight 9");

  // db build / db check
  auto* db_cmd = app.add_subcommand("db", "Build or check a relation database");
  db_cmd->require_subcommand(1);
  int build_weight = kDefaultMaxWeight;
  std::string build_out;
  auto* db_build = db_cmd->add_subcommand("build", "Compute and store P_l and R_l");
  db_build->add_option("--max-weight", build_weight, "Highest weight")->capture_default_str();
  db_build->add_option("--out", build_out, "Output file")->required();
  std::string check_path;
  auto* db_check = db_cmd->add_subcommand("check", "Validate a stored database");
  db_check->add_option("file", check_path, "Database file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite;
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
  SuiteOptions opts;
  verify->add_option("--max-weight", opts.max_weight, "Highest weight")->capture_default_str();
  verify->add_option("--n-max", opts.n_max, "Largest group-ring dimension")->capture_default_str();
  std::string flavor = "both";
  verify->add_option("--flavor", flavor, "Regularization flavor")
      ->check(CLI::IsMember({"star", "sh", "both"}))
      ->capture_default_str();
  verify->add_option("--threads", opts.threads, "Worker threads (0: all cores)");
  bool timings = false;
  bool verbose = false;
  verify->add_flag("--timings", timings, "Include timings in JSON output");
  verify->add_flag("--verbose", verbose, "List every case in text output");

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a combination modulo a subspace sum");
  int reduce_weight = 0;
  std::string expr;
  std::string mod = "P,R";
  reduce_cmd->add_option("--weight", reduce_weight, "Weight")->required();
  reduce_cmd->add_option("expr", expr, "Combination such as \"z(2,1) - z(3)\"")->required();
  reduce_cmd->add_option("--mod", mod, "Subspaces, e.g. \"Zd:2,P,R\"")->capture_default_str();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a combination or regularized value");
  std::string eval_expr;
  bool numeric = false;
  long eval_N = 0;
  std::string eval_flavor = "star";
  eval_cmd->add_option("expr", eval_expr, "z(...) combination, or a single z(...) to regularize")
      ->required();
  eval_cmd->add_flag("--numeric", numeric, "Truncated nested-sum evaluation");
  eval_cmd->add_option("--N", eval_N, "Truncation bound (defaults to --numeric-N)");
  eval_cmd->add_option("--flavor", eval_flavor, "Regularization flavor for symbolic evaluation")
      ->check(CLI::IsMember({"star", "sh"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (db_build->parsed()) {
      check_weight_cap(build_weight, g);
      const auto t0 = std::chrono::steady_clock::now();
      RelationDatabase db;
      db.build(build_weight);
      db.save(build_out);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (g.format == "json") {
        std::cout << nlohmann::json{{"maxWeight", build_weight}, {"out", build_out}, {"seconds", secs}}.dump()
                  << "\n";
      } else {
        std::printf("built weights 2..%d into %s in %.2f s\n", build_weight, build_out.c_str(), secs);
      }
      return 0;
    }
    if (db_check->parsed()) {
      auto db = RelationDatabase::load(check_path);
      opts.numeric_tol = g.numeric_tol;
      opts.numeric_N = g.numeric_N;
      return emit({check_database(*db, opts)}, g, timings, verbose);
    }
    if (verify->parsed()) {
      check_weight_cap(opts.max_weight, g);
      opts.flavors = parse_flavors(flavor);
      opts.numeric_tol = g.numeric_tol;
      opts.numeric_N = g.numeric_N;
      auto db = open_db(g);
      std::vector<SuiteReport> reports;
      if (suite == "all") {
        for (const auto& name : suite_names()) reports.push_back(run_suite(name, *db, opts));
      } else {
        reports.push_back(run_suite(suite, *db, opts));
      }
      return emit(reports, g, timings, verbose);
    }
    if (reduce_cmd->parsed()) {
      check_weight_cap(reduce_weight, g);
      const SymCombo v = SymCombo::parse(expr);
      const SubspaceLabel label = SubspaceLabel::parse(mod);
      auto db = open_db(g);
      const SubspaceSum& sum = db->sum(reduce_weight, label);
      const SymbolIndex index(reduce_weight);
      const auto cert = db->certify(v, reduce_weight, label);
      if (!sum.verify(cert, index.to_vector(v))) throw std::logic_error("certificate failed to verify");
      const SymCombo residue = index.to_combo(cert.residue);
      nlohmann::json components = nlohmann::json::object();
      if (cert.certified) {
        for (std::size_t p = 0; p < sum.parts().size(); ++p) {
          Vector comp(static_cast<std::size_t>(index.dim()));
          const auto& rows = sum.parts()[p].rows();
          for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t k = 0; k < comp.size(); ++k) comp[k] += cert.coefficients[p][r] * rows[r][k];
          }
          components[sum.parts()[p].label().str()] = combo_json(index.to_combo(comp));
        }
      }
      if (g.format == "json") {
        nlohmann::json out{{"input", combo_json(v)},
                           {"weight", reduce_weight},
                           {"modulus", label.str()},
                           {"certified", cert.certified},
                           {"residue", combo_json(residue)}};
        if (cert.certified) out["components"] = components;
        std::cout << out.dump(1) << "\n";
      } else {
        std::cout << "modulus:   " << label.str() << "\n"
                  << "residue:   " << (residue.is_zero() ? "0" : residue.str()) << "\n"
                  << "certified: " << (cert.certified ? "yes" : "no") << "\n";
        for (const auto& [k, c] : components.items()) {
          std::cout << "  " << k << " part: " << c.get<std::string>() << "\n";
        }
      }
      return cert.certified ? 0 : 1;
    }
    if (eval_cmd->parsed()) {
      if (numeric) {
        const long N = eval_N > 0 ? eval_N : g.numeric_N;
        const SymCombo v = SymCombo::parse(eval_expr);
        long double value = 0;
        long double bound = 0;
        for (const auto& [w, q] : v.terms()) {
          if (w.empty()) {
            value += q.get_d();
            continue;
          }
          const NumericValue nv = mzv_numeric(word_to_composition(w), N);
          value += q.get_d() * nv.value;
          bound += std::fabs(q.get_d()) * nv.error_bound;
        }
        if (g.format == "json") {
          std::cout << nlohmann::json{{"expr", eval_expr}, {"N", N},
                                      {"value", static_cast<double>(value)},
                                      {"errorBound", static_cast<double>(bound)}}
                           .dump()
                    << "\n";
        } else {
          std::printf("%.18Lg ± %.3Lg\n", value, bound);
        }
        return 0;
      }
      std::string inner = eval_expr;
      if (inner.rfind("z(", 0) != 0 || inner.back() != ')') {
        throw ParseError("symbolic evaluation expects a single z(...)");
      }
      const Composition c = Composition::parse(inner.substr(2, inner.size() - 3));
      const Flavor f = eval_flavor == "sh" ? Flavor::Shuffle : Flavor::Harmonic;
      const TPoly p = zeta_poly(c, f);
      const SymCombo at0 = zeta_reg(c, f);
      if (g.format == "json") {
        nlohmann::json coeffs = nlohmann::json::object();
        for (const auto& [k, v] : p.coeffs) coeffs[std::to_string(k)] = combo_json(v);
        std::cout << nlohmann::json{{"expr", eval_expr}, {"flavor", to_string(f)},
                                    {"polynomial", coeffs}, {"value", combo_json(at0)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "Z(" << c.str() << "; T) = " << p.str() << "\n"
                  << "value at T=0: " << (at0.is_zero() ? "0" : at0.str()) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
