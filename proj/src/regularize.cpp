#include "mzv/regularize.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "mzv/text.hpp"

namespace mzv {

std::string to_string(Flavor f) {
  return f == Flavor::Harmonic ? "star" : "sh";
}

// ---------------------------------------------------------------------------
// SymCombo

std::string symbol_name(const Word& w) {
  if (w.empty()) return "1";
  return "z(" + word_to_composition(w).str() + ")";
}

SymCombo SymCombo::symbol(const Composition& c, const Rational& coeff) {
  if (!c.admissible()) throw std::invalid_argument("symbol index must be admissible: " + c.str());
  return from_words(WordSum(composition_to_word(c), coeff));
}

SymCombo SymCombo::from_words(const WordSum& words) {
  if (!words.all_admissible()) {
    throw std::invalid_argument("evaluation map needs admissible words: " + words.str());
  }
  SymCombo out;
  out.words_ = words;
  return out;
}

SymCombo SymCombo::parse(std::string_view text) {
  SymCombo out;
  for (auto& [c, atom] : split_linear_terms(text)) {
    if (atom.empty() || atom == "1") {
      out += constant(c);
      continue;
    }
    std::string_view a = atom;
    if (a.size() < 4 || a.front() != 'z' || a[1] != '(' || a.back() != ')') {
      throw ParseError("expected z(l_1,...,l_n), got: " + atom);
    }
    Composition k = Composition::parse(a.substr(2, a.size() - 3));
    if (!k.admissible()) throw ParseError("symbol index must be admissible: " + atom);
    out += symbol(k, c);
  }
  return out;
}

Rational SymCombo::coeff(const Composition& c) const {
  return words_.coeff(composition_to_word(c));
}

int SymCombo::weight() const {
  if (words_.is_zero() || !words_.is_homogeneous()) return -1;
  return words_.terms().begin()->first.weight();
}

std::string SymCombo::str() const {
  return format_linear(words_.terms(), [](const Word& w) {
    return w.empty() ? std::string() : symbol_name(w);
  });
}

// ---------------------------------------------------------------------------
// ProductCombo

ProductCombo ProductCombo::constant(const Rational& c) {
  ProductCombo out;
  out.add({}, c);
  return out;
}

ProductCombo ProductCombo::from_symbols(const SymCombo& s) {
  ProductCombo out;
  for (const auto& [w, c] : s.terms()) {
    out.add(w.empty() ? Monomial{} : Monomial{w}, c);
  }
  return out;
}

ProductCombo ProductCombo::monomial(std::vector<Composition> factors, const Rational& c) {
  Monomial m;
  for (const auto& f : factors) {
    if (!f.admissible()) throw std::invalid_argument("factor must be admissible: " + f.str());
    m.push_back(composition_to_word(f));
  }
  ProductCombo out;
  out.add(std::move(m), c);
  return out;
}

void ProductCombo::add(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int ProductCombo::weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) {
    int mw = 0;
    for (const auto& f : m) mw += f.weight();
    if (w >= 0 && mw != w) return -1;
    w = mw;
  }
  return w;
}

ProductCombo& ProductCombo::operator+=(const ProductCombo& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ProductCombo& ProductCombo::operator-=(const ProductCombo& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ProductCombo& ProductCombo::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

ProductCombo operator*(const ProductCombo& a, const ProductCombo& b) {
  ProductCombo out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(std::move(m), ca * cb);
    }
  }
  return out;
}

std::string ProductCombo::str() const {
  return format_linear(terms_, [](const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) s += "·";
      s += symbol_name(m[i]);
    }
    return s;
  });
}

// ---------------------------------------------------------------------------
// Regularization

namespace {

using Expansion = std::map<int, WordSum>;

void accumulate(Expansion& into, const Expansion& from, const Rational& c, int shift = 0) {
  for (const auto& [k, ws] : from) {
    WordSum& slot = into[k + shift];
    slot += ws * c;
    if (slot.is_zero()) into.erase(k + shift);
  }
}

class RegMemo {
 public:
  bool lookup(const Word& w, Expansion& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(w.str());
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void store(const Word& w, const Expansion& e) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(w.str(), e);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Expansion> table_;
};

RegMemo& memo_for(Flavor f) {
  static RegMemo harmonic;
  static RegMemo shuffle;
  return f == Flavor::Harmonic ? harmonic : shuffle;
}

// Peels one leading y (= z_1) using y ⋄ (y^{m-1} u) = m y^m u + (terms with
// fewer leading y's), so the recursion terminates on the leading-y count.
Expansion regularize_word(const Word& w, Flavor f) {
  const int m = w.leading_y();
  if (m == 0) return Expansion{{0, WordSum(w)}};
  Expansion result;
  if (memo_for(f).lookup(w, result)) return result;

  const Word rest = w.substr(1);
  const Word y = Word::z(1);
  WordSum others =
      f == Flavor::Harmonic ? harmonic_product(y, rest) : shuffle_product(y, rest);
  others.add(w, -Rational(m));

  accumulate(result, regularize_word(rest, f), 1, 1);
  for (const auto& [v, c] : others.terms()) {
    accumulate(result, regularize_word(v, f), -c);
  }
  const Rational inv(1, m);
  for (auto& [k, ws] : result) ws *= inv;

  memo_for(f).store(w, result);
  return result;
}

}  // namespace

RegExpansion regularize(const Word& w, Flavor f) {
  if (!w.in_h1()) throw std::invalid_argument("regularization needs a word ending in y: " + w.str());
  return RegExpansion{f, regularize_word(w, f)};
}

RegExpansion reg_harmonic(const Word& w) {
  return regularize(w, Flavor::Harmonic);
}

RegExpansion reg_shuffle(const Word& w) {
  return regularize(w, Flavor::Shuffle);
}

TPoly evaluate_reg(const RegExpansion& e) {
  TPoly p;
  for (const auto& [k, ws] : e.by_power) p.add(k, SymCombo::from_words(ws));
  return p;
}

TPoly zeta_poly(const Composition& c, Flavor f) {
  return evaluate_reg(regularize(composition_to_word(c), f));
}

SymCombo zeta_reg(const Composition& c, Flavor f) {
  const Expansion e = regularize(composition_to_word(c), f).by_power;
  auto it = e.find(0);
  return it == e.end() ? SymCombo() : SymCombo::from_words(it->second);
}

SymCombo zeta_star(const Composition& c) {
  return zeta_reg(c, Flavor::Harmonic);
}

SymCombo zeta_sh(const Composition& c) {
  return zeta_reg(c, Flavor::Shuffle);
}

std::vector<ProductCombo> gamma_coeffs(int i_max) {
  if (i_max < 0) throw std::invalid_argument("gamma_coeffs needs i_max >= 0");
  // g = exp(A) with A = sum_{m>=2} (-1)^m z(m) u^m / m satisfies g' = A' g:
  // i gamma_i = sum_{m=2}^{i} (-1)^m z(m) gamma_{i-m}.
  std::vector<ProductCombo> g(static_cast<std::size_t>(i_max) + 1);
  g[0] = ProductCombo::one();
  for (int i = 1; i <= i_max; ++i) {
    ProductCombo acc;
    for (int m = 2; m <= i; ++m) {
      ProductCombo zm = ProductCombo::monomial({Composition{m}}, m % 2 == 0 ? 1 : -1);
      acc += zm * g[static_cast<std::size_t>(i - m)];
    }
    g[static_cast<std::size_t>(i)] = acc * Rational(1, i);
  }
  return g;
}

ProductTPoly rho_apply(const TPoly& p) {
  ProductTPoly out;
  const int deg = p.degree();
  if (deg < 0) return out;
  const auto gamma = gamma_coeffs(deg);
  for (const auto& [j, c] : p.coeffs) {
    const ProductCombo pc = ProductCombo::from_symbols(c);
    // j!/(j-i)!
    Rational falling = 1;
    for (int i = 0; i <= j; ++i) {
      if (i > 0) falling *= (j - i + 1);
      out.add(j - i, pc * gamma[static_cast<std::size_t>(i)] * falling);
    }
  }
  return out;
}

SymCombo shuffle_reg_closed_form(const Composition& c) {
  const Word w = composition_to_word(c);
  const int m = w.leading_y();
  if (m == static_cast<int>(w.size())) {
    // Pure y^m: the value is the constant term of T^m/m!.
    return m == 0 ? SymCombo::constant(1) : SymCombo();
  }
  const Word tail = w.substr(static_cast<std::size_t>(m) + 1);  // w0' with w = y^m x w0'
  WordSum inner = shuffle_product(Word::y_power(m), tail).prepended(Word("x"));
  if (m % 2 == 1) inner *= -1;
  return SymCombo::from_words(inner);
}

void clear_regularization_memo() {
  memo_for(Flavor::Harmonic).clear();
  memo_for(Flavor::Shuffle).clear();
}

}  // namespace mzv
