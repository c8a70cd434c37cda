#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "mzv/database.hpp"

using namespace mzv;

TEST_CASE("build caches the product and relation subspaces") {
  RelationDatabase db;
  db.build(6);
  CHECK(db.max_weight() == 6);
  for (int l = 2; l <= 6; ++l) {
    CHECK(db.relation(l) == relation_subspace(l));
    CHECK(db.product(l) == product_subspace(l));
  }
}

TEST_CASE("JSON round trip preserves bases and verdicts") {
  RelationDatabase db;
  db.build(6);
  const nlohmann::json doc = db.to_json();
  CHECK(doc.at("format") == RelationDatabase::kFormat);
  auto copy = RelationDatabase::from_json(doc);
  CHECK(copy->to_json() == doc);
  const SymCombo v = SymCombo::parse("2·z(5,1)");
  const auto label = SubspaceLabel::parse("Zd:1,P,R");
  CHECK(db.certify(v, 6, label).certified == copy->certify(v, 6, label).certified);

  const std::string path = "test_database_roundtrip.json";
  db.save(path);
  auto loaded = RelationDatabase::load(path);
  CHECK(loaded->to_json() == doc);
  std::remove(path.c_str());
}

TEST_CASE("malformed documents are rejected") {
  RelationDatabase db;
  db.build(4);
  nlohmann::json doc = db.to_json();

  nlohmann::json bad_format = doc;
  bad_format["format"] = "other/0";
  CHECK_THROWS_AS(RelationDatabase::from_json(bad_format), DatabaseError);

  CHECK_THROWS_AS(RelationDatabase::from_json(nlohmann::json::array()), DatabaseError);
  CHECK_THROWS_AS(RelationDatabase::from_json(nlohmann::json{{"format", RelationDatabase::kFormat}}),
                  DatabaseError);
  CHECK_THROWS(RelationDatabase::load("/nonexistent/path/db.json"));

  const std::string path = "test_database_garbage.json";
  std::ofstream(path) << "{not json";
  CHECK_THROWS(RelationDatabase::load(path));
  std::remove(path.c_str());
}

TEST_CASE("resolve and sums") {
  RelationDatabase db;
  const SubspaceBasis b = db.resolve(4, SubspaceLabel::parse("Zd:1,P"));
  CHECK(b.dim() == 2);
  const SubspaceSum& s = db.sum(4, SubspaceLabel::parse("Zd:1,P,R"));
  CHECK(s.parts().size() == 3);
  CHECK(&s == &db.sum(4, SubspaceLabel::parse("Zd:1+P+R")));
  CHECK(db.certify(SymCombo::parse("z(3,1)"), 4, SubspaceLabel::parse("Zd:1,P,R")).certified);
  CHECK_FALSE(db.certify(SymCombo::parse("z(2,2)"), 4, SubspaceLabel::parse("Zd:1")).certified);
}
