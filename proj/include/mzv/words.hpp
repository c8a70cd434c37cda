#pragma once

// Words over {x, y}, their rational linear combinations, and the harmonic
// (stuffle) and shuffle products on them.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mzv {

using Rational = mpq_class;

/// Formats a rational as "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Letter : char { X = 'x', Y = 'y' };

/// Index set (l_1, ..., l_n) of positive integers, n >= 1.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  /// "2,1,1" (whitespace tolerated, optional surrounding parentheses).
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const;
  int depth() const { return static_cast<int>(parts_.size()); }
  bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }
  bool empty() const { return parts_.empty(); }

  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// A word over {x, y}. The empty word is the unit for both products.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);
  static Word parse(std::string_view text) { return Word(std::string(text)); }

  /// z_l = x^{l-1} y
  static Word z(int l);
  static Word y_power(int m);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }

  /// Empty or ending in y (the word lies in Q + h y).
  bool in_h1() const { return letters_.empty() || letters_.back() == 'y'; }
  /// Empty or of the form x...y (the word lies in Q + x h y).
  bool admissible() const {
    return letters_.empty() || (letters_.front() == 'x' && letters_.back() == 'y');
  }
  int weight() const { return static_cast<int>(letters_.size()); }
  int y_degree() const;
  /// Number of leading y letters.
  int leading_y() const;

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len), Trusted{});
  }
  friend Word operator+(const Word& a, const Word& b) {
    return Word(a.letters_ + b.letters_, Trusted{});
  }

  friend bool operator==(const Word&, const Word&) = default;
  /// Graded lexicographic order with x < y.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() <=> b.letters_.size();
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  struct Trusted {};
  Word(std::string letters, Trusted) : letters_(std::move(letters)) {}
  std::string letters_;
};

Word composition_to_word(const Composition& c);
/// Requires a nonempty word ending in y.
Composition word_to_composition(const Word& w);

Composition reverse(const Composition& c);
/// Dual index of an admissible composition via its (a_i + 1, 1^{b_i - 1}) blocks.
Composition dual(const Composition& c);

/// Sparse exact linear combination of words, sorted graded-lexicographically.
class WordSum {
 public:
  using Terms = std::map<Word, Rational>;

  WordSum() = default;
  WordSum(const Word& w, Rational c = 1) { add(w, std::move(c)); }
  static WordSum one() { return WordSum(Word()); }
  /// Parses "2·xyy - 1/2·xy + y"; accepts '*' for '·' and U+2212 for '-'.
  static WordSum parse(std::string_view text);

  void add(const Word& w, const Rational& c);
  const Terms& terms() const { return terms_; }
  Rational coeff(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_homogeneous() const;
  bool all_in_h1() const;
  bool all_admissible() const;

  WordSum& operator+=(const WordSum& o);
  WordSum& operator-=(const WordSum& o);
  WordSum& operator*=(const Rational& c);
  friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
  friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
  friend WordSum operator*(WordSum a, const Rational& c) { return a *= c; }
  friend WordSum operator*(const Rational& c, WordSum a) { return a *= c; }
  friend bool operator==(const WordSum&, const WordSum&) = default;

  /// prefix·w for every word w
  WordSum prepended(const Word& prefix) const;

  std::string str() const;

 private:
  Terms terms_;
};

/// Harmonic product. Every word of both arguments must lie in Q + h y.
WordSum harmonic_product(const WordSum& a, const WordSum& b);
WordSum harmonic_product(const Word& a, const Word& b);
/// Shuffle product, defined for all words.
WordSum shuffle_product(const WordSum& a, const WordSum& b);
WordSum shuffle_product(const Word& a, const Word& b);

/// Products whose total weight exceeds the cap are recomputed instead of cached.
void set_product_memo_cap(int max_total_weight);
int product_memo_cap();
void clear_product_memo();

}  // namespace mzv
