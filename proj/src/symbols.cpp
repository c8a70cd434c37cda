#include "mzv/symbols.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzv {

namespace {

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

int leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

// row -= c * other
void axpy(Vector& row, const Rational& c, const Vector& other) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (sgn(other[i]) != 0) row[i] -= c * other[i];
  }
}

// Incremental reduced row echelon form with optional transform tracking.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<int> pivots;
  std::vector<Vector> transform;

  void insert(Vector row, Vector* coords) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational a = row[static_cast<std::size_t>(pivots[i])];
      if (sgn(a) == 0) continue;
      axpy(row, a, rows[i]);
      if (coords) axpy(*coords, a, transform[i]);
    }
    const int p = leading_index(row);
    if (p < 0) return;
    const Rational inv = 1 / row[static_cast<std::size_t>(p)];
    for (auto& q : row) q *= inv;
    if (coords) {
      for (auto& q : *coords) q *= inv;
    }
    // Clear the new pivot column from the existing rows.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational a = rows[i][static_cast<std::size_t>(p)];
      if (sgn(a) == 0) continue;
      axpy(rows[i], a, row);
      if (coords) axpy(transform[i], a, *coords);
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin());
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), p);
    if (coords) transform.insert(transform.begin() + static_cast<std::ptrdiff_t>(pos), *coords);
  }
};

void collect_compositions(int remaining, int depth, std::vector<int>& prefix,
                          std::vector<Composition>& out) {
  if (depth == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  for (int p = 1; p <= remaining - (depth - 1); ++p) {
    prefix.push_back(p);
    collect_compositions(remaining - p, depth - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SymbolIndex

SymbolIndex::SymbolIndex(int weight) : weight_(weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  if (weight == 0) {
    words_.emplace_back();
    return;
  }
  if (weight == 1) return;
  const int middle = weight - 2;
  const std::size_t count = std::size_t{1} << middle;
  words_.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits) {
    std::string s = "x";
    for (int i = middle - 1; i >= 0; --i) s.push_back(((bits >> i) & 1u) ? 'y' : 'x');
    s.push_back('y');
    words_.emplace_back(std::move(s));
  }
}

int SymbolIndex::index_of(const Word& w) const {
  if (w.weight() != weight_ || !w.admissible()) {
    throw std::invalid_argument("word " + w.str() + " is not an admissible word of weight " +
                                std::to_string(weight_));
  }
  if (weight_ == 0) return 0;
  int idx = 0;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) idx = 2 * idx + (w.str()[i] == 'y' ? 1 : 0);
  return idx;
}

Vector SymbolIndex::to_vector(const SymCombo& s) const {
  Vector v(static_cast<std::size_t>(dim()));
  for (const auto& [w, c] : s.terms()) v[static_cast<std::size_t>(index_of(w))] = c;
  return v;
}

SymCombo SymbolIndex::to_combo(const Vector& v) const {
  WordSum ws;
  for (std::size_t i = 0; i < v.size(); ++i) ws.add(words_[i], v[i]);
  return SymCombo::from_words(ws);
}

int ambient_dim(int weight) {
  if (weight == 0) return 1;
  if (weight < 2) return 0;
  return 1 << (weight - 2);
}

std::vector<Composition> admissible_compositions(int weight) {
  std::vector<Composition> out;
  if (weight < 2) return out;
  const SymbolIndex index(weight);
  for (const auto& w : index.words()) out.push_back(word_to_composition(w));
  return out;
}

std::vector<Composition> compositions(int weight, int depth) {
  std::vector<Composition> out;
  if (depth < 1 || weight < depth) return out;
  std::vector<int> prefix;
  collect_compositions(weight, depth, prefix, out);
  return out;
}

std::vector<Composition> compositions(int weight) {
  std::vector<Composition> out;
  for (int d = 1; d <= weight; ++d) {
    auto part = compositions(weight, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// SubspaceLabel

std::string SubspaceLabel::str() const {
  switch (kind) {
    case Kind::DepthSpan:
      return "Zd:" + std::to_string(param);
    case Kind::DepthSpanBelow:
      return "Zlt:" + std::to_string(param);
    case Kind::ProductSpan:
      return "P";
    case Kind::RelationSpan:
      return "R";
    case Kind::Sum: {
      std::string out;
      for (const auto& p : parts) {
        if (!out.empty()) out += "+";
        out += p.str();
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

SubspaceLabel SubspaceLabel::parse(std::string_view text) {
  std::vector<SubspaceLabel> parts;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) throw ParseError("empty subspace label in: " + std::string(text));
    if (tok == "P") {
      parts.push_back(product());
    } else if (tok == "R") {
      parts.push_back(relation());
    } else if (tok.rfind("Zd:", 0) == 0) {
      parts.push_back(depth(std::stoi(tok.substr(3))));
    } else if (tok.rfind("Zlt:", 0) == 0) {
      parts.push_back(depth_below(std::stoi(tok.substr(4))));
    } else {
      throw ParseError("unknown subspace label: " + tok);
    }
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == '+' || ch == ',') {
      flush();
    } else {
      tok.push_back(ch);
    }
  }
  flush();
  if (parts.size() == 1) return parts.front();
  return sum(std::move(parts));
}

// ---------------------------------------------------------------------------
// SubspaceBasis

SubspaceBasis::SubspaceBasis(int weight, SubspaceLabel label)
    : weight_(weight), ambient_dim_(mzv::ambient_dim(weight)), label_(std::move(label)) {}

SubspaceBasis SubspaceBasis::from_rows(int weight, SubspaceLabel label, std::vector<Vector> rows) {
  SubspaceBasis b(weight, std::move(label));
  Echelon e;
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != b.ambient_dim_) {
      throw std::invalid_argument("generator row has wrong length");
    }
    e.insert(std::move(r), nullptr);
  }
  b.rows_ = std::move(e.rows);
  b.pivots_ = std::move(e.pivots);
  return b;
}

SubspaceBasis SubspaceBasis::from_combos(int weight, SubspaceLabel label,
                                         const std::vector<SymCombo>& gens) {
  const SymbolIndex index(weight);
  std::vector<Vector> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(index.to_vector(g));
  return from_rows(weight, std::move(label), std::move(rows));
}

Vector SubspaceBasis::reduce(Vector v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) throw std::invalid_argument("weight mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational a = v[static_cast<std::size_t>(pivots_[i])];
    if (sgn(a) != 0) axpy(v, a, rows_[i]);
  }
  return v;
}

bool SubspaceBasis::contains(const Vector& v) const {
  return is_zero(reduce(v));
}

void SubspaceBasis::check_invariants() const {
  if (ambient_dim_ != mzv::ambient_dim(weight_)) throw std::runtime_error("ambient dimension mismatch");
  if (pivots_.size() != rows_.size()) throw std::runtime_error("pivot bookkeeping mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(rows_[i].size()) != ambient_dim_) throw std::runtime_error("row length");
    const int p = leading_index(rows_[i]);
    if (p < 0 || p != pivots_[i]) throw std::runtime_error("row pivot mismatch");
    if (i > 0 && pivots_[i] <= pivots_[i - 1]) throw std::runtime_error("pivots not increasing");
    if (rows_[i][static_cast<std::size_t>(p)] != 1) throw std::runtime_error("pivot not 1");
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (j != i && sgn(rows_[j][static_cast<std::size_t>(p)]) != 0) {
        throw std::runtime_error("pivot column not cleared");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// SubspaceSum

SubspaceSum::SubspaceSum(int weight, std::vector<SubspaceBasis> parts)
    : weight_(weight), parts_(std::move(parts)) {
  std::vector<SubspaceLabel> labels;
  std::size_t total = 0;
  for (const auto& p : parts_) {
    if (p.weight() != weight) throw std::invalid_argument("weight mismatch among summands");
    labels.push_back(p.label());
    total += p.rows().size();
  }
  Echelon e;
  std::size_t k = 0;
  for (const auto& p : parts_) {
    for (const auto& r : p.rows()) {
      Vector coords(total);
      coords[k++] = 1;
      e.insert(r, &coords);
    }
  }
  // Re-inserting rows that are already in reduced echelon form leaves them unchanged.
  basis_ = SubspaceBasis::from_rows(weight, SubspaceLabel::sum(std::move(labels)), e.rows);
  transform_ = std::move(e.transform);
}

SubspaceSum::Certificate SubspaceSum::certify(const Vector& v) const {
  if (static_cast<int>(v.size()) != mzv::ambient_dim(weight_)) {
    throw std::invalid_argument("weight mismatch");
  }
  Certificate cert;
  Vector r = v;
  std::size_t total = 0;
  for (const auto& p : parts_) total += p.rows().size();
  Vector stacked(total);
  const auto& rows = basis_.rows();
  const auto& piv = basis_.pivots();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational a = r[static_cast<std::size_t>(piv[i])];
    if (sgn(a) == 0) continue;
    axpy(r, a, rows[i]);
    for (std::size_t j = 0; j < total; ++j) {
      if (sgn(transform_[i][j]) != 0) stacked[j] += a * transform_[i][j];
    }
  }
  cert.certified = is_zero(r);
  cert.residue = std::move(r);
  std::size_t k = 0;
  for (const auto& p : parts_) {
    Vector c(p.rows().size());
    for (auto& q : c) q = stacked[k++];
    cert.coefficients.push_back(std::move(c));
  }
  return cert;
}

bool SubspaceSum::verify(const Certificate& cert, const Vector& v) const {
  if (cert.coefficients.size() != parts_.size() || cert.residue.size() != v.size()) return false;
  if (cert.certified != is_zero(cert.residue)) return false;
  Vector acc = cert.residue;
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    const auto& rows = parts_[p].rows();
    if (cert.coefficients[p].size() != rows.size()) return false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& c = cert.coefficients[p][r];
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * rows[r][i];
    }
  }
  return acc == v;
}

// ---------------------------------------------------------------------------
// Named subspaces

SymCombo expand_product(const ProductCombo& p, Flavor mode) {
  if (!p.is_zero() && p.weight() < 0) {
    throw std::invalid_argument("product expansion needs a homogeneous combination");
  }
  WordSum out;
  for (const auto& [m, c] : p.terms()) {
    WordSum acc = WordSum::one();
    for (const auto& w : m) {
      if (w.empty() || !w.admissible()) {
        throw std::invalid_argument("product factors must be admissible");
      }
      acc = mode == Flavor::Harmonic ? harmonic_product(acc, WordSum(w))
                                     : shuffle_product(acc, WordSum(w));
    }
    out += acc * c;
  }
  return SymCombo::from_words(out);
}

SubspaceBasis depth_subspace(int weight, int depth) {
  const SymbolIndex index(weight);
  std::vector<Vector> rows;
  if (weight >= 2) {
    for (int i = 0; i < index.dim(); ++i) {
      if (index.word(i).y_degree() == depth) {
        Vector v(static_cast<std::size_t>(index.dim()));
        v[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(v));
      }
    }
  }
  return SubspaceBasis::from_rows(weight, SubspaceLabel::depth(depth), std::move(rows));
}

SubspaceBasis depth_below_subspace(int weight, int n) {
  const SymbolIndex index(weight);
  std::vector<Vector> rows;
  if (weight >= 2) {
    for (int i = 0; i < index.dim(); ++i) {
      if (index.word(i).y_degree() < n) {
        Vector v(static_cast<std::size_t>(index.dim()));
        v[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(v));
      }
    }
  }
  return SubspaceBasis::from_rows(weight, SubspaceLabel::depth_below(n), std::move(rows));
}

SubspaceBasis product_subspace(int weight) {
  if (weight < 2) throw std::invalid_argument("product subspace needs weight >= 2");
  std::vector<SymCombo> gens;
  gens.push_back(SymCombo::symbol(Composition{weight}));
  for (int k = 2; k + 2 <= weight; ++k) {
    const auto left = admissible_compositions(k);
    const auto right = admissible_compositions(weight - k);
    for (const auto& a : left) {
      for (const auto& b : right) {
        if (k == weight - k && b < a) continue;
        gens.push_back(expand_product(ProductCombo::monomial({a, b}), Flavor::Harmonic));
      }
    }
  }
  return SubspaceBasis::from_combos(weight, SubspaceLabel::product(), gens);
}

std::vector<RelationGenerator> relation_generators(int weight) {
  std::vector<RelationGenerator> out;
  if (weight < 3) return out;
  // (a) finite double shuffle: z(w1 * w2 - w1 ш w2)
  for (int k = 2; k + 2 <= weight; ++k) {
    if (2 * k > weight) break;
    const auto left = SymbolIndex(k).words();
    const auto right = SymbolIndex(weight - k).words();
    for (const auto& a : left) {
      for (const auto& b : right) {
        if (2 * k == weight && b < a) continue;
        SymCombo v = SymCombo::from_words(harmonic_product(a, b) - shuffle_product(a, b));
        if (!v.is_zero()) {
          out.push_back({"ds", symbol_name(a) + "*" + symbol_name(b), std::move(v)});
        }
      }
    }
  }
  // (b) regularized depth-1 relations: reg_sh(z_1 * w - z_1 ш w) at T = 0
  const Word y = Word::z(1);
  const SymbolIndex lower(weight - 1);
  for (const auto& w : lower.words()) {
    const WordSum diff = harmonic_product(y, w) - shuffle_product(y, w);
    WordSum constant;
    for (const auto& [v, c] : diff.terms()) {
      const auto e = reg_shuffle(v).by_power;
      auto it = e.find(0);
      if (it != e.end()) constant += it->second * c;
    }
    SymCombo s = SymCombo::from_words(constant);
    if (!s.is_zero()) out.push_back({"hoffman", symbol_name(w), std::move(s)});
  }
  // (c) duality
  for (const auto& k : admissible_compositions(weight)) {
    const Composition d = dual(k);
    if (d == k) continue;
    out.push_back({"dual", "z(" + k.str() + ")",
                   SymCombo::symbol(k) - SymCombo::symbol(d)});
  }
  return out;
}

SubspaceBasis relation_subspace(int weight) {
  std::vector<SymCombo> gens;
  for (auto& g : relation_generators(weight)) gens.push_back(std::move(g.value));
  return SubspaceBasis::from_combos(weight, SubspaceLabel::relation(), gens);
}

MembershipCertificate membership(const SymCombo& v, const std::vector<SubspaceBasis>& parts) {
  if (parts.empty()) throw std::invalid_argument("membership needs at least one subspace");
  const int weight = parts.front().weight();
  if (!v.is_zero() && v.weight() != weight) throw std::invalid_argument("weight mismatch");
  SubspaceSum sum(weight, parts);
  return sum.certify(SymbolIndex(weight).to_vector(v));
}

SymCombo reduce(const SymCombo& v, const SubspaceBasis& basis) {
  if (!v.is_zero() && v.weight() != basis.weight()) throw std::invalid_argument("weight mismatch");
  const SymbolIndex index(basis.weight());
  return index.to_combo(basis.reduce(index.to_vector(v)));
}

}  // namespace mzv
