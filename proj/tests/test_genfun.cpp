#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/genfun.hpp"

using namespace mzv;

namespace {

SymCombo z(std::initializer_list<int> c, Rational q = 1) { return SymCombo::symbol(Composition(c), q); }

RatPoly monomial(int n, const Exponent& e, Rational c = 1) {
  int d = 0;
  for (int k : e) d += k;
  RatPoly p(n, d);
  p.add(e, c);
  return p;
}

RatPoly linear(const std::vector<Rational>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  RatPoly p(n, 1);
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add(e, coeffs[static_cast<std::size_t>(i)]);
  }
  return p;
}

// 2x_1^3 - 1/3 x_1 x_n^2 + 5 x_1 x_2 x_n (exponents merge when n = 2).
RatPoly sample(int n) {
  const auto un = static_cast<std::size_t>(n - 1);
  RatPoly f(n, 3);
  Exponent a(static_cast<std::size_t>(n), 0);
  a[0] = 3;
  f.add(a, 2);
  Exponent b(static_cast<std::size_t>(n), 0);
  b[0] = 1;
  b[un] += 2;
  f.add(b, Rational(-1, 3));
  Exponent c(static_cast<std::size_t>(n), 0);
  c[0] = 1;
  c[1] += 1;
  c[un] += 1;
  f.add(c, 5);
  return f;
}

}  // namespace

TEST_CASE("homogeneous polynomials") {
  RatPoly p(2, 2);
  p.add({1, 1}, 3);
  CHECK_THROWS(p.add({1, 0}, 1));
  CHECK_THROWS(p.add({2}, 1));
  p.add({1, 1}, -3);
  CHECK(p.is_zero());
  CHECK_THROWS(RatPoly(2, 1) + RatPoly(2, 2));
}

TEST_CASE("substitution") {
  const RatPoly f = monomial(1, {1});
  CHECK(substitute_affine(f, {{Rational(1)}}, 1) == f);
  CHECK(substitute_affine(f, {{Rational(1), Rational(-1)}}, 2) == linear({1, -1}));
  CHECK_THROWS(substitute_affine(f, {{Rational(1)}, {Rational(1)}}, 1));
}

TEST_CASE("right action examples") {
  for (int n = 2; n <= 4; ++n) {
    const RatPoly f = sample(n);
    CHECK(act(f, named(n, Named::Identity)) == f);
    // (x_1)|sigma = x_{sigma^{-1}(1)}
    for (const auto& s : {Permutation::cycle(n, {1, 2}), Permutation::cycle(n, {1, n})}) {
      Exponent e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(s.inverse()(0))] = 1;
      Exponent x1(static_cast<std::size_t>(n), 0);
      x1[0] = 1;
      CHECK(act(monomial(n, x1), GroupRingElem(s)) == monomial(n, e));
    }
    Exponent x1(static_cast<std::size_t>(n), 0);
    x1[0] = 1;
    CHECK(act(monomial(n, x1), named(n, Named::TauPrimeProj)) ==
          linear(std::vector<Rational>(static_cast<std::size_t>(n), Rational(-1))));
  }
}

TEST_CASE("action law") {
  const RatPoly f = sample(3);
  const GroupRingElem p = named(3, Named::P);
  const GroupRingElem tau = named(3, Named::Tau, 0);
  CHECK(act_law_check(f, p, tau));
  CHECK(act_law_check(f, named(3, Named::Identity), named(3, Named::Identity)));
  CHECK(act_law_check(f, named(3, Named::Shuffle, 1), p + tau));
  const GroupRingElem a = GroupRingElem(Permutation::cycle(4, {1, 3, 2}));
  const GroupRingElem b = GroupRingElem(Permutation::cycle(4, {2, 4}));
  CHECK(act_law_check(sample(4), a, b));
}

TEST_CASE("homogeneity: f|eps = (-1)^deg f") {
  for (int n = 2; n <= 4; ++n) {
    const RatPoly f = sample(n);
    CHECK(act(f, named(n, Named::Epsilon)) == f * Rational(-1));
  }
}

TEST_CASE("generating functions") {
  CHECK(build_genfun(2, 2, Flavor::Shuffle).poly.is_zero());
  const SymPoly z32 = build_genfun(3, 2, Flavor::Harmonic).poly;
  CHECK(z32.coeff({1, 0}) == z({2, 1}));
  CHECK(z32.coeff({0, 1}) == z({2, 1}, -1) - z({3}));
  CHECK(z32.terms().size() == 2);
  for (int l = 2; l <= 6; ++l) {
    const SymPoly g = build_genfun(l, 1, Flavor::Harmonic).poly;
    CHECK(g.terms().size() == 1);
    CHECK(g.coeff({l - 1}) == z({l}));
  }
  CHECK(exponent_of({3, 1, 2}) == Exponent{2, 0, 1});
  CHECK(composition_of({2, 0, 1}) == Composition{3, 1, 2});
}

TEST_CASE("generating-function congruences at small (l, n)") {
  RelationDatabase db;
  for (auto [l, n] : {std::pair{3, 2}, {4, 2}, {6, 3}}) {
    for (Flavor f : {Flavor::Harmonic, Flavor::Shuffle}) {
      for (const auto& r : check_genfun_shuffle(l, n, f, db)) CHECK(r.ok());
    }
  }
  for (auto [l, n] : {std::pair{4, 3}, {6, 3}}) {
    for (Flavor f : {Flavor::Harmonic, Flavor::Shuffle}) {
      for (const auto& r : check_genfun_harmonic(l, n, f, db)) CHECK(r.ok());
    }
  }
}

TEST_CASE("insertion and merge identity") {
  CHECK(insertion_merge_defect({2, 2}).is_zero());
  CHECK(expand_pair(z({2}), z({2}), Flavor::Harmonic) == z({2, 2}, 2) + z({4}));
  for (int l = 3; l <= 7; ++l) {
    for (const auto& c : compositions(l)) {
      if (c.depth() < 2) continue;
      CAPTURE(c.str());
      CHECK(insertion_merge_defect(c).is_zero());
    }
  }
}

TEST_CASE("shuffle factorization") {
  CHECK(check_shuffle_factorization(3, 2, 1));
  CHECK(check_shuffle_factorization(5, 3, 1));
  CHECK(check_shuffle_factorization(5, 3, 2));
  CHECK(shuffle_factorization_defect(4, 2, 1).is_zero());
}

TEST_CASE("certify_poly reports failing exponents") {
  RelationDatabase db;
  SymPoly p(2, 2);
  p.add({1, 1}, z({2, 2}));
  const GenfunReport r = certify_poly(p, 4, SubspaceLabel::parse("Zd:1"), db);
  CHECK(r.verdict == "not-certified");
  CHECK(r.failures == std::vector<Exponent>{{1, 1}});
  const GenfunReport ok = certify_poly(p, 4, SubspaceLabel::parse("Zd:2"), db);
  CHECK(ok.verdict == "certified");
}
