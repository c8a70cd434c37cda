#pragma once

// Per-weight cache of the product and relation subspaces, with on-disk
// persistence in the "mzvrel/1" JSON format.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "json.hpp"

#include "mzv/symbols.hpp"

namespace mzv {

class DatabaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RelationDatabase {
 public:
  static constexpr const char* kFormat = "mzvrel/1";

  RelationDatabase() = default;
  RelationDatabase(const RelationDatabase&) = delete;
  RelationDatabase& operator=(const RelationDatabase&) = delete;

  /// Computes the product and relation subspaces for weights 2..max_weight,
  /// one task per weight.
  void build(int max_weight);

  const SubspaceBasis& relation(int weight);
  const SubspaceBasis& product(int weight);
  /// Basis of a named subspace (sums are echelonized).
  SubspaceBasis resolve(int weight, const SubspaceLabel& label);
  /// Cached sum of the label's parts (a non-sum label is a one-part sum).
  const SubspaceSum& sum(int weight, const SubspaceLabel& label);

  MembershipCertificate certify(const SymCombo& v, int weight, const SubspaceLabel& label);

  /// Highest weight with stored subspaces (0 when empty).
  int max_weight() const;

  nlohmann::json to_json() const;
  static std::unique_ptr<RelationDatabase> from_json(const nlohmann::json& doc);
  void save(const std::string& path) const;
  static std::unique_ptr<RelationDatabase> load(const std::string& path);

 private:
  std::vector<SubspaceBasis> parts_for(int weight, const SubspaceLabel& label);

  mutable std::mutex mutex_;
  std::map<int, std::shared_ptr<const SubspaceBasis>> relations_;
  std::map<int, std::shared_ptr<const SubspaceBasis>> products_;
  std::map<std::pair<int, std::string>, std::shared_ptr<const SubspaceSum>> sums_;
};

}  // namespace mzv
