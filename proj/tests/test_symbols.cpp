#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/symbols.hpp"

using namespace mzv;

namespace {

SymCombo z(std::initializer_list<int> c, Rational q = 1) { return SymCombo::symbol(Composition(c), q); }

bool in_span(const SymCombo& v, int l, const std::vector<SubspaceBasis>& parts) {
  return membership(v, parts).certified;
}

}  // namespace

TEST_CASE("symbol index") {
  CHECK(ambient_dim(2) == 1);
  CHECK(ambient_dim(6) == 16);
  const SymbolIndex idx(4);
  CHECK(idx.dim() == 4);
  const SymCombo v = z({3, 1}, 2) - z({4});
  CHECK(idx.to_combo(idx.to_vector(v)) == v);
  CHECK(SymbolIndex(0).dim() == 1);
  CHECK(SymbolIndex(1).dim() == 0);
  CHECK_THROWS(idx.to_vector(z({2})));
}

TEST_CASE("compositions") {
  CHECK(compositions(4, 2).size() == 3);
  CHECK(compositions(5).size() == 16);
  CHECK(admissible_compositions(5).size() == 8);
}

TEST_CASE("depth subspaces") {
  CHECK(depth_subspace(4, 1).dim() == 1);
  CHECK(depth_subspace(4, 1).contains(SymbolIndex(4).to_vector(z({4}))));
  const SubspaceBasis z62 = depth_subspace(6, 2);
  CHECK(z62.dim() == 4);
  for (auto c : {Composition{5, 1}, Composition{4, 2}, Composition{3, 3}, Composition{2, 4}}) {
    CHECK(z62.contains(SymbolIndex(6).to_vector(SymCombo::symbol(c))));
  }
  CHECK(depth_subspace(3, 2).dim() == 1);
  CHECK(depth_below_subspace(6, 3).dim() == 5);
  CHECK(depth_subspace(6, 2).label().str() == "Zd:2");
  CHECK(depth_below_subspace(6, 3).label().str() == "Zlt:3");
}

TEST_CASE("product subspaces") {
  CHECK(product_subspace(2).dim() == 1);
  CHECK(product_subspace(3).dim() == 1);
  CHECK(product_subspace(3).contains(SymbolIndex(3).to_vector(z({3}))));
  const SubspaceBasis p4 = product_subspace(4);
  CHECK(p4.dim() == 2);
  CHECK(p4.contains(SymbolIndex(4).to_vector(z({2, 2}, 2) + z({4}))));
  CHECK_FALSE(p4.contains(SymbolIndex(4).to_vector(z({3, 1}))));
}

TEST_CASE("product expansion") {
  CHECK(expand_product(ProductCombo::monomial({{3}, {3}}), Flavor::Harmonic) == z({3, 3}, 2) + z({6}));
  CHECK(expand_product(ProductCombo::monomial({{2}, {2, 2}}), Flavor::Harmonic) ==
        z({2, 2, 2}, 3) + z({2, 4}) + z({4, 2}));
  CHECK(expand_product(ProductCombo::one(), Flavor::Harmonic) == SymCombo::constant(1));
  CHECK(expand_product(ProductCombo::monomial({{2}, {2}}), Flavor::Shuffle) ==
        z({2, 2}, 2) + z({3, 1}, 4));
}

TEST_CASE("relation subspaces") {
  CHECK(relation_subspace(2).dim() == 0);
  CHECK(relation_subspace(3).contains(SymbolIndex(3).to_vector(z({2, 1}) - z({3}))));
  CHECK(relation_subspace(4).contains(SymbolIndex(4).to_vector(z({4}) - z({3, 1}, 4))));
  CHECK(relation_subspace(4).dim() == 3);
  CHECK(relation_subspace(6).contains(SymbolIndex(6).to_vector(z({2, 3, 1}) - z({3, 1, 2}))));
  for (const auto& g : relation_generators(5)) {
    CHECK(g.value.weight() == 5);
    CHECK((g.kind == "ds" || g.kind == "hoffman" || g.kind == "dual"));
  }
}

TEST_CASE("relation space has the expected codimension") {
  // Codimension sequence 1, 1, 1, 2, 2, 3, 4, 5 for weights 2..9.
  const std::vector<int> codim = {1, 1, 1, 2, 2, 3, 4, 5};
  for (int l = 2; l <= 9; ++l) {
    CAPTURE(l);
    CHECK(relation_subspace(l).dim() == (1 << (l - 2)) - codim[static_cast<std::size_t>(l - 2)]);
  }
}

TEST_CASE("membership and certificates") {
  CHECK(in_span(z({2, 1}) - z({3}), 3, {relation_subspace(3)}));
  CHECK_FALSE(in_span(z({4}), 4, {depth_subspace(4, 2)}));
  const std::vector<SubspaceBasis> parts = {depth_subspace(4, 1), product_subspace(4),
                                            relation_subspace(4)};
  CHECK(in_span(z({3, 1}), 4, parts));
  const SubspaceSum sum(4, parts);
  const Vector v = SymbolIndex(4).to_vector(z({3, 1}) + z({2, 2}, 3));
  const auto cert = sum.certify(v);
  CHECK(cert.certified);
  CHECK(sum.verify(cert, v));
  const Vector w = SymbolIndex(4).to_vector(z({2, 2}));
  const auto cert2 = SubspaceSum(4, {depth_subspace(4, 1)}).certify(w);
  CHECK_FALSE(cert2.certified);
  CHECK(SubspaceSum(4, {depth_subspace(4, 1)}).verify(cert2, w));
}

TEST_CASE("reduction") {
  const SymCombo r = reduce(z({2, 1}), relation_subspace(3));
  CHECK(r == reduce(z({3}), relation_subspace(3)));
  CHECK_FALSE(r.is_zero());
  CHECK(reduce(SymCombo{}, relation_subspace(5)).is_zero());
  const SubspaceBasis empty = SubspaceBasis::from_rows(4, SubspaceLabel::relation(), {});
  CHECK(reduce(z({3, 1}), empty) == z({3, 1}));
}

TEST_CASE("echelon form invariants") {
  for (int l = 2; l <= 7; ++l) {
    CHECK_NOTHROW(relation_subspace(l).check_invariants());
    CHECK_NOTHROW(product_subspace(l).check_invariants());
  }
  SubspaceBasis b = SubspaceBasis::from_rows(
      3, SubspaceLabel::relation(), {{Rational(2), Rational(4)}, {Rational(1), Rational(2)}});
  CHECK(b.dim() == 1);
  CHECK(b.rows()[0] == Vector{Rational(1), Rational(2)});
}

TEST_CASE("labels") {
  const SubspaceLabel l = SubspaceLabel::parse("Zd:2,P,R");
  CHECK(l.str() == "Zd:2+P+R");
  CHECK(SubspaceLabel::parse(l.str()) == l);
  CHECK(SubspaceLabel::parse("Zlt:3").str() == "Zlt:3");
  CHECK_THROWS(SubspaceLabel::parse("Q"));
  CHECK_THROWS(SubspaceLabel::parse("Zd:x"));
}
