#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/regularize.hpp"
#include "mzv/symbols.hpp"

using namespace mzv;

namespace {

SymCombo z(std::initializer_list<int> c, Rational q = 1) { return SymCombo::symbol(Composition(c), q); }

TPoly tpoly(std::initializer_list<std::pair<int, SymCombo>> terms) {
  TPoly p;
  for (const auto& [k, c] : terms) p.add(k, c);
  return p;
}

ProductTPoly ptpoly(std::initializer_list<std::pair<int, ProductCombo>> terms) {
  ProductTPoly p;
  for (const auto& [k, c] : terms) p.add(k, c);
  return p;
}

WordSum product(const WordSum& a, const WordSum& b, Flavor f) {
  return f == Flavor::Harmonic ? harmonic_product(a, b) : shuffle_product(a, b);
}

// Rebuilds w from its expansion: sum_k by_power[k] ⋄ y^{⋄k}.
WordSum reconstruct(const RegExpansion& e) {
  WordSum out;
  for (const auto& [k, coeff_words] : e.by_power) {
    WordSum ypow = WordSum::one();
    for (int i = 0; i < k; ++i) ypow = product(ypow, WordSum(Word("y")), e.flavor);
    out += product(coeff_words, ypow, e.flavor);
  }
  return out;
}

}  // namespace

TEST_CASE("expansion examples") {
  CHECK(reg_harmonic(Word("xyy")).by_power == std::map<int, WordSum>{{0, WordSum(Word("xyy"))}});
  CHECK(reg_harmonic(Word("y")).by_power == std::map<int, WordSum>{{1, WordSum::one()}});
  const RegExpansion yy = reg_harmonic(Word("yy"));
  CHECK(yy.by_power.at(2) == WordSum(Word(), Rational(1, 2)));
  CHECK(yy.by_power.at(0) == WordSum(Word("xy"), Rational(-1, 2)));
  CHECK(reg_shuffle(Word("yy")).by_power ==
        std::map<int, WordSum>{{2, WordSum(Word(), Rational(1, 2))}});
  const RegExpansion yxy = reg_shuffle(Word("yxy"));
  CHECK(yxy.by_power.at(1) == WordSum(Word("xy")));
  CHECK(yxy.by_power.at(0) == WordSum(Word("xyy"), -2));
  CHECK_THROWS(reg_harmonic(Word("yx")));
}

TEST_CASE("displayed regularized polynomials and values") {
  const SymCombo one = SymCombo::constant(1);
  CHECK(zeta_poly({1}, Flavor::Harmonic) == tpoly({{1, one}}));
  CHECK(zeta_poly({1}, Flavor::Shuffle) == tpoly({{1, one}}));
  CHECK(zeta_poly({1, 1}, Flavor::Harmonic) ==
        tpoly({{2, SymCombo::constant(Rational(1, 2))}, {0, z({2}, Rational(-1, 2))}}));
  CHECK(zeta_poly({1, 1}, Flavor::Shuffle) == tpoly({{2, SymCombo::constant(Rational(1, 2))}}));
  CHECK(zeta_star({1, 1}) == z({2}, Rational(-1, 2)));
  CHECK(zeta_star({1}).is_zero());
  CHECK(zeta_sh({1}).is_zero());
  CHECK(zeta_sh({1, 1}).is_zero());
  CHECK(zeta_star({2, 1}) == z({2, 1}));
  CHECK(zeta_star({1, 2}) == z({2, 1}, -1) - z({3}));
}

TEST_CASE("gamma coefficients") {
  const auto g = gamma_coeffs(4);
  REQUIRE(g.size() == 5);
  CHECK(g[0] == ProductCombo::one());
  CHECK(g[1].is_zero());
  CHECK(g[2] == ProductCombo::monomial({{2}}, Rational(1, 2)));
  CHECK(g[3] == ProductCombo::monomial({{3}}, Rational(-1, 3)));
  CHECK(g[4] == ProductCombo::monomial({{4}}, Rational(1, 4)) +
                    ProductCombo::monomial({{2}, {2}}, Rational(1, 8)));
}

TEST_CASE("rho on powers of T") {
  CHECK(rho_apply(tpoly({{0, SymCombo::constant(1)}})) == ptpoly({{0, ProductCombo::one()}}));
  CHECK(rho_apply(tpoly({{1, SymCombo::constant(1)}})) == ptpoly({{1, ProductCombo::one()}}));
  CHECK(rho_apply(tpoly({{2, SymCombo::constant(1)}})) ==
        ptpoly({{2, ProductCombo::one()}, {0, ProductCombo::monomial({{2}})}}));
}

TEST_CASE("rho maps the harmonic polynomial of (1,1) to the shuffle one") {
  const ProductTPoly lhs = rho_apply(zeta_poly({1, 1}, Flavor::Harmonic));
  const TPoly rhs = zeta_poly({1, 1}, Flavor::Shuffle);
  ProductTPoly rhs_p;
  for (const auto& [k, c] : rhs.coeffs) rhs_p.add(k, ProductCombo::from_symbols(c));
  CHECK(lhs == rhs_p);
}

TEST_CASE("shuffle closed form") {
  CHECK(shuffle_reg_closed_form({2, 1}) == z({2, 1}));
  CHECK(shuffle_reg_closed_form({1, 2}) == z({2, 1}, -2));
  CHECK(shuffle_reg_closed_form({1, 2}) == zeta_sh({1, 2}));
  for (int l = 1; l <= 7; ++l) {
    for (const auto& c : compositions(l)) {
      CAPTURE(c.str());
      CHECK(shuffle_reg_closed_form(c) == zeta_sh(c));
    }
  }
}

TEST_CASE("expansions reconstruct the word in both flavors") {
  for (int l = 1; l <= 7; ++l) {
    for (const auto& c : compositions(l)) {
      const Word w = composition_to_word(c);
      for (Flavor f : {Flavor::Harmonic, Flavor::Shuffle}) {
        CAPTURE(c.str());
        const RegExpansion e = regularize(w, f);
        for (const auto& [k, ws] : e.by_power) CHECK(ws.all_admissible());
        CHECK(reconstruct(e) == WordSum(w));
      }
    }
  }
}

TEST_CASE("admissible indices are fixed by both regularizations") {
  for (int l = 2; l <= 6; ++l) {
    for (const auto& c : admissible_compositions(l)) {
      CHECK(zeta_star(c) == SymCombo::symbol(c));
      CHECK(zeta_sh(c) == SymCombo::symbol(c));
    }
  }
}

TEST_CASE("symbol combinations parse and print") {
  const SymCombo s = SymCombo::parse("2·z(3,3) + z(6) - 1/2");
  CHECK(s.coeff({3, 3}) == 2);
  CHECK(s.coeff({6}) == 1);
  CHECK(SymCombo::parse(s.str()) == s);
  CHECK(z({3, 3}).weight() == 6);
  CHECK(s.weight() == -1);
  CHECK_THROWS(SymCombo::parse("z(1,2)"));
  CHECK_THROWS_AS(SymCombo::parse("z(2"), ParseError);
}
