#pragma once

// Homogeneous polynomials with exact coefficients, the right action of the
// group ring on them, and generating functions of regularized MZVs.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "mzv/database.hpp"
#include "mzv/groupring.hpp"
#include "mzv/regularize.hpp"

namespace mzv {

using Exponent = std::vector<int>;

inline bool coeff_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool coeff_is_zero(const SymCombo& s) { return s.is_zero(); }
inline bool coeff_is_zero(const ProductCombo& p) { return p.is_zero(); }

inline std::string coeff_str(const Rational& q) { return to_string(q); }
inline std::string coeff_str(const SymCombo& s) { return s.str(); }
inline std::string coeff_str(const ProductCombo& p) { return p.str(); }

/// Homogeneous polynomial of a fixed degree in x_1..x_n.
template <class C>
class HomogPoly {
 public:
  using Terms = std::map<Exponent, C>;

  HomogPoly() = default;
  HomogPoly(int n, int degree) : n_(n), degree_(degree) {
    if (n < 0 || degree < 0) throw std::invalid_argument("negative polynomial shape");
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }

  void add(const Exponent& e, const C& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length");
    int total = 0;
    for (int k : e) {
      if (k < 0) throw std::invalid_argument("negative exponent");
      total += k;
    }
    if (total != degree_) throw std::invalid_argument("inhomogeneous term");
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  HomogPoly& operator+=(const HomogPoly& o) {
    check_shape(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  HomogPoly& operator-=(const HomogPoly& o) {
    check_shape(o);
    for (const auto& [e, c] : o.terms_) {
      C neg = c;
      neg *= Rational(-1);
      add(e, neg);
    }
    return *this;
  }
  HomogPoly& operator*=(const Rational& q) {
    if (sgn(q) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= q;
    return *this;
  }
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator*(HomogPoly a, const Rational& q) { return a *= q; }
  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + coeff_str(c) + ")";
      for (int i = 0; i < n_; ++i) {
        if (e[static_cast<std::size_t>(i)] == 0) continue;
        out += "·x" + std::to_string(i + 1);
        if (e[static_cast<std::size_t>(i)] > 1) out += "^" + std::to_string(e[static_cast<std::size_t>(i)]);
      }
    }
    return out;
  }

 private:
  void check_shape(const HomogPoly& o) const {
    if (o.n_ != n_ || o.degree_ != degree_) throw std::invalid_argument("polynomial shape mismatch");
  }

  int n_ = 0;
  int degree_ = 0;
  Terms terms_;
};

using RatPoly = HomogPoly<Rational>;
using SymPoly = HomogPoly<SymCombo>;
using ProductPoly = HomogPoly<ProductCombo>;

/// Linear form sum_i coeffs[i] y_i in the target variables.
using LinearForm = std::vector<Rational>;

/// Expansion of prod_j forms[j]^{e_j} over m target variables.
RatPoly expand_monomial(const Exponent& e, const std::vector<LinearForm>& forms, int m);

/// f(x_1 -> forms[0], ..., x_n -> forms[n-1]) over m target variables.
template <class C>
HomogPoly<C> substitute_affine(const HomogPoly<C>& f, const std::vector<LinearForm>& forms, int m) {
  if (static_cast<int>(forms.size()) != f.n()) throw std::invalid_argument("one form per variable");
  for (const auto& form : forms) {
    if (static_cast<int>(form.size()) != m) throw std::invalid_argument("form length");
  }
  HomogPoly<C> out(m, f.degree());
  for (const auto& [e, c] : f.terms()) {
    const RatPoly expanded = expand_monomial(e, forms, m);
    for (const auto& [ee, q] : expanded.terms()) {
      C term = c;
      term *= q;
      out.add(ee, term);
    }
  }
  return out;
}

/// Substitution forms of a unimodular matrix: x_j -> sum_i (M^{-1})_{ij} x_i,
/// i.e. (x_1, ..., x_n) times M^{-1}.
std::vector<LinearForm> action_forms(const IntMatrix& m);

/// f|S = sum a_j f((x) S_j^{-1}).
template <class C>
HomogPoly<C> act(const HomogPoly<C>& f, const GroupRingElem& s) {
  if (s.n() != f.n()) throw std::invalid_argument("dimension mismatch in group action");
  HomogPoly<C> out(f.n(), f.degree());
  for (const auto& [m, a] : s.terms()) {
    HomogPoly<C> g = substitute_affine(f, action_forms(m), f.n());
    g *= Rational(static_cast<long>(a));
    out += g;
  }
  return out;
}

/// f|(RS) == (f|R)|S.
template <class C>
bool act_law_check(const HomogPoly<C>& f, const GroupRingElem& r, const GroupRingElem& s) {
  return act(f, r * s) == act(act(f, r), s);
}

/// Generating function of the weight-l, depth-n regularized values at T = 0:
/// the coefficient of x^{(l_1-1, ..., l_n-1)} is zeta^R(l_1, ..., l_n).
struct GenFun {
  int weight = 0;
  int depth = 0;
  Flavor flavor = Flavor::Harmonic;
  SymPoly poly;
};

GenFun build_genfun(int l, int n, Flavor flavor);

/// Exponent (l_1 - 1, ..., l_n - 1) and back.
Exponent exponent_of(const Composition& c);
Composition composition_of(const Exponent& e);

/// Outcome of a coefficientwise check of a polynomial identity or congruence.
struct GenfunReport {
  std::string check;
  int l = 0;
  int n = 0;
  std::optional<int> j;
  std::string flavor;
  std::string modulus;  // "" for exact checks
  std::string verdict;  // exact-equal | certified | not-certified
  std::vector<Exponent> failures;

  bool ok() const { return verdict != "not-certified"; }
  nlohmann::json to_json() const;
};

/// Certifies every coefficient of p in the labelled subspace of weight l.
GenfunReport certify_poly(const SymPoly& p, int l, const SubspaceLabel& label,
                          RelationDatabase& db);

/// Z|P(e + (-1)^n tau) and each Z|P sh_j modulo P_l; falls back to P_l + R_l
/// and reports the modulus that sufficed.
std::vector<GenfunReport> check_genfun_shuffle(int l, int n, Flavor flavor, RelationDatabase& db);

/// Z|(e - eps tau P tau P^-1) and Z|sh_1 modulo Z_l^{n-1} + P_l + R_l.
std::vector<GenfunReport> check_genfun_harmonic(int l, int n, Flavor flavor,
                                                 RelationDatabase& db);

/// zeta*(l_1) zeta*(l_2..l_n) minus the insertion and merge sums, with the
/// left side expanded by the harmonic product. Zero iff the identity holds.
SymCombo insertion_merge_defect(const Composition& c);

/// (Z^sh|P)|sh_j minus the product of the two lower generating functions
/// (products expanded by the shuffle product); zero iff the identity holds.
SymPoly shuffle_factorization_defect(int l, int n, int j);
bool check_shuffle_factorization(int l, int n, int j);

/// Product of two symbol combinations expanded in the given flavor.
SymCombo expand_pair(const SymCombo& a, const SymCombo& b, Flavor mode);

}  // namespace mzv
