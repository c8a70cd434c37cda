#include "mzv/database.hpp"

#include <fstream>
#include <future>

namespace mzv {

void RelationDatabase::build(int max_weight) {
  std::vector<std::future<void>> tasks;
  for (int l = 2; l <= max_weight; ++l) {
    tasks.push_back(std::async(std::launch::async, [this, l] {
      product(l);
      relation(l);
    }));
  }
  for (auto& t : tasks) t.get();
}

const SubspaceBasis& RelationDatabase::relation(int weight) {
  {
    std::lock_guard lock(mutex_);
    auto it = relations_.find(weight);
    if (it != relations_.end()) return *it->second;
  }
  auto basis = std::make_shared<const SubspaceBasis>(relation_subspace(weight));
  std::lock_guard lock(mutex_);
  return *relations_.try_emplace(weight, std::move(basis)).first->second;
}

const SubspaceBasis& RelationDatabase::product(int weight) {
  {
    std::lock_guard lock(mutex_);
    auto it = products_.find(weight);
    if (it != products_.end()) return *it->second;
  }
  auto basis = std::make_shared<const SubspaceBasis>(product_subspace(weight));
  std::lock_guard lock(mutex_);
  return *products_.try_emplace(weight, std::move(basis)).first->second;
}

std::vector<SubspaceBasis> RelationDatabase::parts_for(int weight, const SubspaceLabel& label) {
  using Kind = SubspaceLabel::Kind;
  switch (label.kind) {
    case Kind::DepthSpan:
      return {depth_subspace(weight, label.param)};
    case Kind::DepthSpanBelow:
      return {depth_below_subspace(weight, label.param)};
    case Kind::ProductSpan:
      return {product(weight)};
    case Kind::RelationSpan:
      return {relation(weight)};
    case Kind::Sum: {
      std::vector<SubspaceBasis> out;
      for (const auto& p : label.parts) {
        auto sub = parts_for(weight, p);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
  }
  return {};
}

SubspaceBasis RelationDatabase::resolve(int weight, const SubspaceLabel& label) {
  if (label.kind != SubspaceLabel::Kind::Sum) return parts_for(weight, label).front();
  return sum(weight, label).basis();
}

const SubspaceSum& RelationDatabase::sum(int weight, const SubspaceLabel& label) {
  auto key = std::make_pair(weight, label.str());
  {
    std::lock_guard lock(mutex_);
    auto it = sums_.find(key);
    if (it != sums_.end()) return *it->second;
  }
  auto s = std::make_shared<const SubspaceSum>(weight, parts_for(weight, label));
  std::lock_guard lock(mutex_);
  return *sums_.try_emplace(std::move(key), std::move(s)).first->second;
}

MembershipCertificate RelationDatabase::certify(const SymCombo& v, int weight,
                                                const SubspaceLabel& label) {
  if (!v.is_zero() && v.weight() != weight) throw std::invalid_argument("weight mismatch");
  return sum(weight, label).certify(SymbolIndex(weight).to_vector(v));
}

int RelationDatabase::max_weight() const {
  std::lock_guard lock(mutex_);
  int m = 0;
  for (const auto& [l, b] : relations_) m = std::max(m, l);
  for (const auto& [l, b] : products_) m = std::max(m, l);
  return m;
}

namespace {

nlohmann::json rows_to_json(const SubspaceBasis& b) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : b.rows()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& q : r) row.push_back(to_string(q));
    rows.push_back(std::move(row));
  }
  return rows;
}

SubspaceBasis rows_from_json(int weight, const SubspaceLabel& label, const nlohmann::json& rows) {
  const int dim = ambient_dim(weight);
  std::vector<Vector> out;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw DatabaseError("row length does not match ambient dimension at weight " +
                          std::to_string(weight));
    }
    Vector v;
    for (const auto& q : row) {
      if (!q.is_string()) throw DatabaseError("rational entries must be strings");
      try {
        v.push_back(parse_rational(q.get<std::string>()));
      } catch (const ParseError& e) {
        throw DatabaseError(e.what());
      }
    }
    out.push_back(std::move(v));
  }
  SubspaceBasis b = SubspaceBasis::from_rows(weight, label, out);
  // The stored rows must already be the reduced echelon basis.
  if (b.rows() != out) {
    throw DatabaseError("stored rows are not in reduced echelon form at weight " +
                        std::to_string(weight));
  }
  try {
    b.check_invariants();
  } catch (const std::runtime_error& e) {
    throw DatabaseError(e.what());
  }
  return b;
}

}  // namespace

nlohmann::json RelationDatabase::to_json() const {
  std::lock_guard lock(mutex_);
  nlohmann::json doc;
  doc["format"] = kFormat;
  nlohmann::json weights = nlohmann::json::array();
  std::map<int, bool> present;
  for (const auto& [l, b] : relations_) present[l] = true;
  for (const auto& [l, b] : products_) present[l] = true;
  for (const auto& [l, unused] : present) {
    nlohmann::json rec;
    rec["weight"] = l;
    nlohmann::json order = nlohmann::json::array();
    for (const auto& c : admissible_compositions(l)) order.push_back(c.str());
    rec["basisOrder"] = std::move(order);
    nlohmann::json subspaces = nlohmann::json::array();
    if (auto it = products_.find(l); it != products_.end()) {
      subspaces.push_back({{"label", "P"}, {"rows", rows_to_json(*it->second)}});
    }
    if (auto it = relations_.find(l); it != relations_.end()) {
      subspaces.push_back({{"label", "R"}, {"rows", rows_to_json(*it->second)}});
    }
    rec["subspaces"] = std::move(subspaces);
    weights.push_back(std::move(rec));
  }
  doc["weights"] = std::move(weights);
  return doc;
}

std::unique_ptr<RelationDatabase> RelationDatabase::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string()) {
    throw DatabaseError("missing format header");
  }
  if (doc["format"].get<std::string>() != kFormat) {
    throw DatabaseError("unsupported format version: " + doc["format"].get<std::string>());
  }
  if (!doc.contains("weights") || !doc["weights"].is_array()) {
    throw DatabaseError("missing weights array");
  }
  auto db = std::make_unique<RelationDatabase>();
  try {
    for (const auto& rec : doc["weights"]) {
      const int l = rec.at("weight").get<int>();
      if (l < 2) throw DatabaseError("weights start at 2");
      const auto expected = admissible_compositions(l);
      const auto& order = rec.at("basisOrder");
      if (!order.is_array() || order.size() != expected.size()) {
        throw DatabaseError("basisOrder has wrong size at weight " + std::to_string(l));
      }
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (Composition::parse(order[i].get<std::string>()) != expected[i]) {
          throw DatabaseError("basisOrder differs from canonical order at weight " +
                              std::to_string(l));
        }
      }
      for (const auto& sub : rec.at("subspaces")) {
        const std::string label = sub.at("label").get<std::string>();
        if (label == "P") {
          db->products_[l] = std::make_shared<const SubspaceBasis>(
              rows_from_json(l, SubspaceLabel::product(), sub.at("rows")));
        } else if (label == "R") {
          db->relations_[l] = std::make_shared<const SubspaceBasis>(
              rows_from_json(l, SubspaceLabel::relation(), sub.at("rows")));
        } else {
          throw DatabaseError("unknown stored subspace label: " + label);
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DatabaseError(std::string("malformed database: ") + e.what());
  } catch (const ParseError& e) {
    throw DatabaseError(std::string("malformed database: ") + e.what());
  }
  return db;
}

void RelationDatabase::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DatabaseError("cannot open for writing: " + path);
  out << to_json().dump(1) << '\n';
  if (!out) throw DatabaseError("write failed: " + path);
}

std::unique_ptr<RelationDatabase> RelationDatabase::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatabaseError("cannot open: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DatabaseError(std::string("not a JSON document: ") + e.what());
  }
  return from_json(doc);
}

}  // namespace mzv
