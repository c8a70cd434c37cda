#include "mzv/words.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "mzv/text.hpp"

namespace mzv {

std::string to_string(const Rational& q) {
  return q.get_str(10);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw ParseError("malformed rational: " + s);
    }
  }
  if (!digits) throw ParseError("malformed rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("malformed rational: " + s);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }
}

Composition Composition::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) {
          return std::isdigit(static_cast<unsigned char>(ch)) != 0;
        })) {
      throw ParseError("malformed composition: " + std::string(text));
    }
    int v = std::stoi(tok);
    if (v < 1) throw ParseError("composition parts must be positive: " + std::string(text));
    parts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

int Composition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

std::string Composition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char ch : letters_) {
    if (ch != 'x' && ch != 'y') throw ParseError("words are strings over {x,y}: " + letters_);
  }
}

Word Word::z(int l) {
  if (l < 1) throw std::invalid_argument("z_l requires l >= 1");
  std::string s(static_cast<std::size_t>(l - 1), 'x');
  s.push_back('y');
  return Word(std::move(s), Trusted{});
}

Word Word::y_power(int m) {
  return Word(std::string(static_cast<std::size_t>(m), 'y'), Trusted{});
}

int Word::y_degree() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'y'));
}

int Word::leading_y() const {
  auto it = std::find(letters_.begin(), letters_.end(), 'x');
  return static_cast<int>(it - letters_.begin());
}

Word composition_to_word(const Composition& c) {
  Word w;
  for (int p : c.parts()) w = w + Word::z(p);
  return w;
}

Composition word_to_composition(const Word& w) {
  if (w.empty()) throw std::invalid_argument("the empty word has no composition");
  if (!w.in_h1()) throw std::invalid_argument("word must end in y: " + w.str());
  std::vector<int> parts;
  int run = 0;
  for (char ch : w.str()) {
    ++run;
    if (ch == 'y') {
      parts.push_back(run);
      run = 0;
    }
  }
  return Composition(std::move(parts));
}

Composition reverse(const Composition& c) {
  std::vector<int> parts(c.parts().rbegin(), c.parts().rend());
  return Composition(std::move(parts));
}

Composition dual(const Composition& c) {
  if (!c.admissible()) throw std::invalid_argument("dual requires an admissible index: " + c.str());
  // blocks (a_i + 1, 1^{b_i - 1})
  std::vector<std::pair<int, int>> blocks;
  for (int p : c.parts()) {
    if (p >= 2) {
      blocks.emplace_back(p - 1, 1);
    } else {
      ++blocks.back().second;
    }
  }
  std::vector<int> parts;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    parts.push_back(it->second + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(it->first - 1), 1);
  }
  return Composition(std::move(parts));
}

// ---------------------------------------------------------------------------
// WordSum

void WordSum::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational WordSum::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool WordSum::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

bool WordSum::all_in_h1() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_h1(); });
}

bool WordSum::all_admissible() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.admissible(); });
}

WordSum& WordSum::operator+=(const WordSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WordSum& WordSum::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

WordSum WordSum::prepended(const Word& prefix) const {
  WordSum out;
  // Prepending a fixed prefix preserves the graded lexicographic order.
  for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), prefix + w, c);
  return out;
}

std::string WordSum::str() const {
  return format_linear(terms_, [](const Word& w) { return w.empty() ? std::string() : w.str(); });
}

WordSum WordSum::parse(std::string_view text) {
  WordSum out;
  for (auto& [c, atom] : split_linear_terms(text)) {
    out.add(atom.empty() || atom == "1" ? Word() : Word(atom), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products

namespace {

std::atomic<int> g_memo_cap{12};

struct PairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const {
    std::hash<std::string> h;
    return h(p.first.str()) * 1000003u ^ h(p.second.str());
  }
};

class ProductMemo {
 public:
  bool lookup(const std::pair<Word, Word>& key, WordSum& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void store(std::pair<Word, Word> key, const WordSum& value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(std::move(key), value);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::pair<Word, Word>, WordSum, PairHash> table_;
};

ProductMemo& harmonic_memo() {
  static ProductMemo memo;
  return memo;
}

ProductMemo& shuffle_memo() {
  static ProductMemo memo;
  return memo;
}

// Length of the leading z_k block of a nonempty word ending in y.
std::size_t head_length(const Word& w) {
  return w.str().find('y') + 1;
}

WordSum harmonic_words(const Word& a_in, const Word& b_in) {
  if (a_in.empty()) return WordSum(b_in);
  if (b_in.empty()) return WordSum(a_in);
  const bool swap = b_in < a_in;
  const Word& a = swap ? b_in : a_in;
  const Word& b = swap ? a_in : b_in;
  const bool cacheable = static_cast<int>(a.size() + b.size()) <= g_memo_cap.load();
  std::pair<Word, Word> key;
  WordSum result;
  if (cacheable) {
    key = {a, b};
    if (harmonic_memo().lookup(key, result)) return result;
  }
  const std::size_t ka = head_length(a);
  const std::size_t kb = head_length(b);
  const Word ra = a.substr(ka);
  const Word rb = b.substr(kb);
  result = harmonic_words(ra, b).prepended(a.substr(0, ka));
  result += harmonic_words(a, rb).prepended(b.substr(0, kb));
  result += harmonic_words(ra, rb).prepended(Word::z(static_cast<int>(ka + kb)));
  if (cacheable) harmonic_memo().store(std::move(key), result);
  return result;
}

WordSum shuffle_words(const Word& a_in, const Word& b_in) {
  if (a_in.empty()) return WordSum(b_in);
  if (b_in.empty()) return WordSum(a_in);
  const bool swap = b_in < a_in;
  const Word& a = swap ? b_in : a_in;
  const Word& b = swap ? a_in : b_in;
  const bool cacheable = static_cast<int>(a.size() + b.size()) <= g_memo_cap.load();
  std::pair<Word, Word> key;
  WordSum result;
  if (cacheable) {
    key = {a, b};
    if (shuffle_memo().lookup(key, result)) return result;
  }
  result = shuffle_words(a.substr(1), b).prepended(a.substr(0, 1));
  result += shuffle_words(a, b.substr(1)).prepended(b.substr(0, 1));
  if (cacheable) shuffle_memo().store(std::move(key), result);
  return result;
}

}  // namespace

WordSum harmonic_product(const Word& a, const Word& b) {
  if (!a.in_h1() || !b.in_h1()) {
    throw std::invalid_argument("harmonic product needs words ending in y");
  }
  return harmonic_words(a, b);
}

WordSum harmonic_product(const WordSum& a, const WordSum& b) {
  if (!a.all_in_h1() || !b.all_in_h1()) {
    throw std::invalid_argument("harmonic product needs words ending in y");
  }
  WordSum out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Rational c = ca * cb;
      const WordSum prod = harmonic_words(wa, wb);
      for (const auto& [w, k] : prod.terms()) out.add(w, c * k);
    }
  }
  return out;
}

WordSum shuffle_product(const Word& a, const Word& b) {
  return shuffle_words(a, b);
}

WordSum shuffle_product(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Rational c = ca * cb;
      const WordSum prod = shuffle_words(wa, wb);
      for (const auto& [w, k] : prod.terms()) out.add(w, c * k);
    }
  }
  return out;
}

void set_product_memo_cap(int max_total_weight) {
  g_memo_cap.store(max_total_weight);
}

int product_memo_cap() {
  return g_memo_cap.load();
}

void clear_product_memo() {
  harmonic_memo().clear();
  shuffle_memo().clear();
}

}  // namespace mzv
