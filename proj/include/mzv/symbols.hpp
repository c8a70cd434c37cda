#pragma once

// The free Q-vector space on admissible MZV symbols of a fixed weight, its
// distinguished subspaces, and exact membership certification.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/regularize.hpp"

namespace mzv {

using Vector = std::vector<Rational>;

/// Admissible words of weight l in canonical (graded lexicographic) order.
/// Weight 0 has the single basis element 1; weight 1 has none.
class SymbolIndex {
 public:
  explicit SymbolIndex(int weight);

  int weight() const { return weight_; }
  int dim() const { return static_cast<int>(words_.size()); }
  const Word& word(int i) const { return words_[static_cast<std::size_t>(i)]; }
  const std::vector<Word>& words() const { return words_; }
  /// Position of an admissible word of this weight.
  int index_of(const Word& w) const;

  Vector to_vector(const SymCombo& s) const;
  SymCombo to_combo(const Vector& v) const;

 private:
  int weight_;
  std::vector<Word> words_;
};

/// Number of admissible compositions of weight l.
int ambient_dim(int weight);
/// Admissible compositions of weight l (in the canonical symbol order) and
/// all compositions of weight l with the given depth (lexicographic).
std::vector<Composition> admissible_compositions(int weight);
std::vector<Composition> compositions(int weight, int depth);
std::vector<Composition> compositions(int weight);

/// Which subspace a basis spans.
struct SubspaceLabel {
  enum class Kind { DepthSpan, DepthSpanBelow, ProductSpan, RelationSpan, Sum };

  Kind kind = Kind::Sum;
  int param = 0;
  std::vector<SubspaceLabel> parts;

  static SubspaceLabel depth(int d) { return {Kind::DepthSpan, d, {}}; }
  static SubspaceLabel depth_below(int n) { return {Kind::DepthSpanBelow, n, {}}; }
  static SubspaceLabel product() { return {Kind::ProductSpan, 0, {}}; }
  static SubspaceLabel relation() { return {Kind::RelationSpan, 0, {}}; }
  static SubspaceLabel sum(std::vector<SubspaceLabel> parts) {
    return {Kind::Sum, 0, std::move(parts)};
  }

  /// "Zd:2", "Zlt:3", "P", "R", sums joined by '+'.
  std::string str() const;
  /// Accepts the str() form with '+' or ',' separators.
  static SubspaceLabel parse(std::string_view text);

  bool operator==(const SubspaceLabel&) const = default;
};

/// Reduced row-echelon basis of a subspace of the weight-l symbol space.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  SubspaceBasis(int weight, SubspaceLabel label);
  /// Echelonizes arbitrary generator rows (pivot order = symbol order).
  static SubspaceBasis from_rows(int weight, SubspaceLabel label, std::vector<Vector> rows);
  static SubspaceBasis from_combos(int weight, SubspaceLabel label,
                                   const std::vector<SymCombo>& gens);

  int weight() const { return weight_; }
  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const SubspaceLabel& label() const { return label_; }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Canonical residue modulo the subspace.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  /// Throws std::runtime_error unless rows are in reduced echelon form with
  /// strictly increasing pivots.
  void check_invariants() const;

  bool operator==(const SubspaceBasis& o) const {
    return weight_ == o.weight_ && rows_ == o.rows_;
  }

 private:
  int weight_ = 0;
  int ambient_dim_ = 0;
  SubspaceLabel label_;
  std::vector<Vector> rows_;
  std::vector<int> pivots_;
};

/// Sum of several subspaces with the bookkeeping needed to express any member
/// as a combination of the parts' basis rows.
class SubspaceSum {
 public:
  SubspaceSum(int weight, std::vector<SubspaceBasis> parts);

  int weight() const { return weight_; }
  const std::vector<SubspaceBasis>& parts() const { return parts_; }
  const SubspaceBasis& basis() const { return basis_; }

  struct Certificate {
    bool certified = false;
    /// coefficients[p][r] multiplies row r of part p.
    std::vector<Vector> coefficients;
    /// Canonical residue of the query (zero iff certified).
    Vector residue;
  };

  Certificate certify(const Vector& v) const;
  /// Exact check that the parts' combination plus the residue equals v.
  bool verify(const Certificate& cert, const Vector& v) const;

 private:
  int weight_;
  std::vector<SubspaceBasis> parts_;
  SubspaceBasis basis_;
  // transform_[i] expresses basis_.rows()[i] over the stacked part rows.
  std::vector<Vector> transform_;
};

using MembershipCertificate = SubspaceSum::Certificate;

/// Expands every monomial by iterated products of its words in the given flavor.
SymCombo expand_product(const ProductCombo& p, Flavor mode);

SubspaceBasis depth_subspace(int weight, int depth);
SubspaceBasis depth_below_subspace(int weight, int n);
SubspaceBasis product_subspace(int weight);

/// Generators of the known-relation space at weight l, each tagged with its
/// origin: "ds" (finite double shuffle), "hoffman" (regularized depth-1), "dual".
struct RelationGenerator {
  std::string kind;
  std::string source;
  SymCombo value;
};
std::vector<RelationGenerator> relation_generators(int weight);
SubspaceBasis relation_subspace(int weight);

/// Exact membership of v in the sum of the given subspaces.
MembershipCertificate membership(const SymCombo& v, const std::vector<SubspaceBasis>& parts);
/// Residue of v modulo a basis.
SymCombo reduce(const SymCombo& v, const SubspaceBasis& basis);

}  // namespace mzv
