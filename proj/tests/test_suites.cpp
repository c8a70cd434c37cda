#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/suites.hpp"
#include "mzv/symbols.hpp"

using namespace mzv;

namespace {

const CaseResult* find_case(const SuiteReport& r, const std::string& id, const std::string& flavor = "") {
  for (const auto& c : r.cases) {
    if (c.id == id && (flavor.empty() || c.flavor == flavor)) return &c;
  }
  return nullptr;
}

SuiteOptions small() {
  SuiteOptions o;
  o.max_weight = 6;
  o.n_max = 4;
  return o;
}

}  // namespace

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(names.size() == 11);
  RelationDatabase db;
  CHECK_THROWS(run_suite("nope", db, small()));
}

TEST_CASE("reports are deterministic across thread counts") {
  RelationDatabase db;
  SuiteOptions one = small();
  one.threads = 1;
  SuiteOptions many = small();
  many.threads = 4;
  for (const std::string name : {"table1", "thm1", "parity", "groupring"}) {
    CAPTURE(name);
    const auto a = run_suite(name, db, one);
    const auto b = run_suite(name, db, many);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.ok());
    CHECK_FALSE(a.to_json().contains("seconds"));
    CHECK(a.to_json(true).contains("seconds"));
  }
}

TEST_CASE("parity cases") {
  RelationDatabase db;
  const SuiteReport r = suite_parity(db, small());
  CHECK(r.ok());
  CHECK(find_case(r, "z(2,1)", "star") != nullptr);
  CHECK(find_case(r, "z(1,4)", "sh") != nullptr);
  CHECK(find_case(r, "z(2,2)") == nullptr);
}

TEST_CASE("reference table suite") {
  RelationDatabase db;
  const SuiteReport r = suite_table1(db, small());
  CHECK(r.ok());
  CHECK(r.cases.size() >= table1_rows().size());
}

TEST_CASE("weight 6 closing computation") {
  RelationDatabase db;
  const SuiteReport r = suite_weight6(db, small());
  CHECK(r.ok());
  CHECK(find_case(r, "z(3,2,1)") != nullptr);
}

TEST_CASE("sum formulas") {
  RelationDatabase db;
  // restricted sum at (l, a, b) = (4, 2, 2): z(3,1) + z(2,2) = z(4)
  CHECK(restricted_sum(4, 2, 2) == SymCombo::parse("z(3,1) + z(2,2)"));
  CHECK(db.certify(restricted_sum(4, 2, 2) - SymCombo::parse("z(4)"), 4, SubspaceLabel::relation()).certified);
  CHECK(ones_tail_sum(4, 1, 2) == SymCombo::parse("z(3,1)"));
  SuiteOptions o = small();
  o.max_weight = 6;
  CHECK(suite_sumformulas(db, o).ok());
  CHECK(suite_corollary(db, o).ok());
  CHECK(suite_lemma33(db, o).ok());
}

TEST_CASE("text output") {
  RelationDatabase db;
  const SuiteReport r = suite_table1(db, small());
  const std::string t = r.to_text();
  CHECK(t.find("table1") != std::string::npos);
  CHECK(r.count("not-certified") == 0);
}

TEST_CASE("database check") {
  RelationDatabase db;
  db.build(5);
  CHECK(check_database(db, small()).ok());
}
