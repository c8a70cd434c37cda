#pragma once

// Harmonic and shuffle regularization of words in Q + h y, the symbol space
// of admissible MZVs, and the correction map between the two regularizations.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/words.hpp"

namespace mzv {

enum class Flavor { Harmonic, Shuffle };

std::string to_string(Flavor f);

/// Rational combination of admissible MZV symbols z(l_1,...,l_n). The empty
/// word plays the role of the constant 1 (weight 0).
class SymCombo {
 public:
  using Terms = WordSum::Terms;

  SymCombo() = default;
  /// Single symbol; the composition must be admissible.
  static SymCombo symbol(const Composition& c, const Rational& coeff = 1);
  static SymCombo constant(const Rational& c) { return from_words(WordSum(Word(), c)); }
  /// Evaluation map on Q + x h y: each admissible word goes to its symbol.
  static SymCombo from_words(const WordSum& admissible_words);
  /// Parses "2·z(3,3) + z(6) - 1/2"; a bare number is a multiple of 1.
  static SymCombo parse(std::string_view text);

  const Terms& terms() const { return words_.terms(); }
  const WordSum& words() const { return words_; }
  Rational coeff(const Composition& c) const;
  bool is_zero() const { return words_.is_zero(); }
  /// Common weight, or -1 when empty or inhomogeneous.
  int weight() const;

  SymCombo& operator+=(const SymCombo& o) { words_ += o.words_; return *this; }
  SymCombo& operator-=(const SymCombo& o) { words_ -= o.words_; return *this; }
  SymCombo& operator*=(const Rational& c) { words_ *= c; return *this; }
  friend SymCombo operator+(SymCombo a, const SymCombo& b) { return a += b; }
  friend SymCombo operator-(SymCombo a, const SymCombo& b) { return a -= b; }
  friend SymCombo operator*(SymCombo a, const Rational& c) { return a *= c; }
  friend SymCombo operator*(const Rational& c, SymCombo a) { return a *= c; }
  friend bool operator==(const SymCombo&, const SymCombo&) = default;

  std::string str() const;

 private:
  WordSum words_;
};

/// "z(2,1)" for an admissible nonempty word.
std::string symbol_name(const Word& admissible_word);

/// Commutative monomial in MZV symbols, as a sorted list of admissible words.
using Monomial = std::vector<Word>;

/// Rational combination of products of MZV symbols.
class ProductCombo {
 public:
  using Terms = std::map<Monomial, Rational>;

  ProductCombo() = default;
  static ProductCombo one() { return constant(1); }
  static ProductCombo constant(const Rational& c);
  /// Canonical inclusion of a symbol combination as degree <= 1 monomials.
  static ProductCombo from_symbols(const SymCombo& s);
  static ProductCombo monomial(std::vector<Composition> factors, const Rational& c = 1);

  void add(Monomial m, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common total weight, or -1 when empty or inhomogeneous.
  int weight() const;

  ProductCombo& operator+=(const ProductCombo& o);
  ProductCombo& operator-=(const ProductCombo& o);
  ProductCombo& operator*=(const Rational& c);
  friend ProductCombo operator+(ProductCombo a, const ProductCombo& b) { return a += b; }
  friend ProductCombo operator-(ProductCombo a, const ProductCombo& b) { return a -= b; }
  friend ProductCombo operator*(ProductCombo a, const Rational& c) { return a *= c; }
  friend ProductCombo operator*(const ProductCombo& a, const ProductCombo& b);
  friend bool operator==(const ProductCombo&, const ProductCombo&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

/// w = sum_k by_power[k] ⋄ y^{⋄k}, where ⋄ is the flavor's product and every
/// by_power word is admissible.
struct RegExpansion {
  Flavor flavor = Flavor::Harmonic;
  std::map<int, WordSum> by_power;

  bool operator==(const RegExpansion&) const = default;
};

/// Polynomial in T with coefficients in C (SymCombo or ProductCombo).
template <class C>
struct TPolyOf {
  std::map<int, C> coeffs;

  const C& coeff(int k) const {
    static const C zero{};
    auto it = coeffs.find(k);
    return it == coeffs.end() ? zero : it->second;
  }
  void add(int k, const C& c) {
    C& slot = coeffs[k];
    slot += c;
    if (slot.is_zero()) coeffs.erase(k);
  }
  int degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
  bool operator==(const TPolyOf&) const = default;

  std::string str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      if (!out.empty()) out += " + ";
      const std::string c = it->second.str();
      if (it->first == 0) {
        out += "(" + c + ")";
      } else {
        if (c != "1") out += "(" + c + ")·";
        out += it->first == 1 ? "T" : "T^" + std::to_string(it->first);
      }
    }
    return out;
  }
};

using TPoly = TPolyOf<SymCombo>;
using ProductTPoly = TPolyOf<ProductCombo>;

RegExpansion reg_harmonic(const Word& w);
RegExpansion reg_shuffle(const Word& w);
RegExpansion regularize(const Word& w, Flavor f);

/// Substitutes each admissible word by its symbol and y by T.
TPoly evaluate_reg(const RegExpansion& e);

/// Regularized value at T = 0.
SymCombo zeta_star(const Composition& c);
SymCombo zeta_sh(const Composition& c);
SymCombo zeta_reg(const Composition& c, Flavor f);
/// The full regularized polynomial Z(l; T).
TPoly zeta_poly(const Composition& c, Flavor f);

/// gamma_0, ..., gamma_{i_max}: coefficients of exp(sum_{m>=2} (-1)^m z(m) u^m / m).
std::vector<ProductCombo> gamma_coeffs(int i_max);

/// rho(T^j)/j! = sum_i gamma_i T^{j-i}/(j-i)!, extended linearly.
ProductTPoly rho_apply(const TPoly& p);

/// Shuffle-regularized value at T = 0 through y^m x w0' -> (-1)^m x (y^m ш w0').
SymCombo shuffle_reg_closed_form(const Composition& c);

void clear_regularization_memo();

}  // namespace mzv
