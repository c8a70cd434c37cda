#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mzv/genfun.hpp"
#include "mzv/groupring.hpp"
#include "mzv/symbols.hpp"

using namespace mzv;

namespace {

constexpr unsigned kSeed = 20240611;
constexpr int kTrials = 60;

Composition random_composition(std::mt19937& rng, int max_weight, bool admissible) {
  std::uniform_int_distribution<int> weight(admissible ? 2 : 1, max_weight);
  const int w = weight(rng);
  std::vector<int> parts;
  int left = w;
  while (left > 0) {
    std::uniform_int_distribution<int> part(1, left);
    parts.push_back(part(rng));
    left -= parts.back();
  }
  if (admissible && parts[0] == 1) {
    if (parts.size() == 1) return Composition{2};
    parts[0] += parts.back();
    parts.pop_back();
    if (parts[0] == 1) parts[0] = 2;
  }
  return Composition(parts);
}

Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::bernoulli_distribution coin;
  std::string s;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) s.push_back(coin(rng) ? 'y' : 'x');
  return Word(s);
}

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

GroupRingElem random_elem(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  GroupRingElem out(n);
  const Named pool[] = {Named::P, Named::Pinv, Named::Epsilon, Named::CyclicProj, Named::TauPrimeProj};
  for (int k = 0; k < 3; ++k) {
    out += GroupRingElem(random_perm(rng, n), coeff(rng));
    out += named(n, pool[static_cast<std::size_t>(rng() % 5)]) * coeff(rng);
  }
  return out;
}

RatPoly random_poly(std::mt19937& rng, int n, int degree) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  RatPoly f(n, degree);
  for (int k = 0; k < 4; ++k) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (int d = 0; d < degree; ++d) ++e[rng() % static_cast<unsigned>(n)];
    f.add(e, coeff(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("products are commutative and associative") {
  std::mt19937 rng(kSeed);
  for (int t = 0; t < kTrials; ++t) {
    const Word a = composition_to_word(random_composition(rng, 4, false));
    const Word b = composition_to_word(random_composition(rng, 4, false));
    const Word c = composition_to_word(random_composition(rng, 3, false));
    CHECK(harmonic_product(a, b) == harmonic_product(b, a));
    CHECK(harmonic_product(harmonic_product(WordSum(a), WordSum(b)), WordSum(c)) ==
          harmonic_product(WordSum(a), harmonic_product(WordSum(b), WordSum(c))));
    const Word u = random_word(rng, 4);
    const Word v = random_word(rng, 4);
    const Word w = random_word(rng, 3);
    CHECK(shuffle_product(u, v) == shuffle_product(v, u));
    CHECK(shuffle_product(shuffle_product(WordSum(u), WordSum(v)), WordSum(w)) ==
          shuffle_product(WordSum(u), shuffle_product(WordSum(v), WordSum(w))));
    CHECK(shuffle_product(Word(), u) == WordSum(u));
    CHECK(harmonic_product(Word(), a) == WordSum(a));
  }
}

TEST_CASE("products preserve weight and coefficient mass") {
  std::mt19937 rng(kSeed + 1);
  for (int t = 0; t < kTrials; ++t) {
    const Word u = random_word(rng, 5);
    const Word v = random_word(rng, 5);
    const WordSum s = shuffle_product(u, v);
    Rational mass = 0;
    for (const auto& [w, c] : s.terms()) {
      CHECK(w.weight() == u.weight() + v.weight());
      mass += c;
    }
    // binomial(|u| + |v|, |u|) interleavings
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), u.size() + v.size(), u.size());
    CHECK(mass == Rational(b));
  }
}

TEST_CASE("reverse and dual are involutions; dual preserves weight") {
  std::mt19937 rng(kSeed + 2);
  for (int t = 0; t < kTrials; ++t) {
    const Composition c = random_composition(rng, 9, true);
    CAPTURE(c.str());
    CHECK(reverse(reverse(c)) == c);
    CHECK(dual(dual(c)) == c);
    CHECK(dual(c).weight() == c.weight());
    CHECK(dual(c).depth() == c.weight() - c.depth());
  }
}

TEST_CASE("regularized values of random compositions lie in the symbol space of their weight") {
  std::mt19937 rng(kSeed + 3);
  for (int t = 0; t < kTrials; ++t) {
    const Composition c = random_composition(rng, 7, false);
    for (Flavor f : {Flavor::Harmonic, Flavor::Shuffle}) {
      const SymCombo v = zeta_reg(c, f);
      CHECK((v.is_zero() || v.weight() == c.weight()));
      const TPoly p = zeta_poly(c, f);
      CHECK(p.degree() <= composition_to_word(c).leading_y());
    }
  }
}

TEST_CASE("group ring: associativity, distributivity, anti-automorphisms") {
  std::mt19937 rng(kSeed + 4);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const GroupRingElem a = random_elem(rng, n);
    const GroupRingElem b = random_elem(rng, n);
    const GroupRingElem c = random_elem(rng, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(involution_i(a * b) == involution_i(b) * involution_i(a));
    CHECK(involution_t(a * b) == involution_t(b) * involution_t(a));
    const Permutation s = random_perm(rng, n);
    CHECK(involution_i(GroupRingElem(s)) == involution_t(GroupRingElem(s)));
  }
}

TEST_CASE("projection is a homomorphism on random permutations") {
  std::mt19937 rng(kSeed + 5);
  for (int t = 0; t < kTrials; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Permutation a = random_perm(rng, n + 1);
    const Permutation b = random_perm(rng, n + 1);
    CHECK(project_Sn1(a * b) == project_Sn1(a) * project_Sn1(b));
    CHECK(std::llabs(project_Sn1(a).determinant()) == 1);
  }
}

TEST_CASE("right action law on random data") {
  std::mt19937 rng(kSeed + 6);
  for (int t = 0; t < 15; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const RatPoly f = random_poly(rng, n, 1 + static_cast<int>(rng() % 3));
    const GroupRingElem r = random_elem(rng, n);
    const GroupRingElem s = random_elem(rng, n);
    CHECK(act_law_check(f, r, s));
  }
}

TEST_CASE("reduction is idempotent and subtracts a member of the subspace") {
  std::mt19937 rng(kSeed + 7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int l = 3; l <= 7; ++l) {
    const SubspaceBasis r = relation_subspace(l);
    const auto comps = admissible_compositions(l);
    for (int t = 0; t < 10; ++t) {
      SymCombo v;
      for (int k = 0; k < 3; ++k) {
        v += SymCombo::symbol(comps[rng() % comps.size()], coeff(rng));
      }
      const SymCombo red = reduce(v, r);
      CHECK(reduce(red, r) == red);
      CHECK(r.contains(SymbolIndex(l).to_vector(v - red)));
    }
  }
}
