#include "mzv/genfun.hpp"

#include "mzv/symbols.hpp"

namespace mzv {

RatPoly expand_monomial(const Exponent& e, const std::vector<LinearForm>& forms, int m) {
  int degree = 0;
  for (int k : e) degree += k;
  RatPoly acc(m, 0);
  acc.add(Exponent(static_cast<std::size_t>(m), 0), Rational(1));
  int d = 0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    for (int rep = 0; rep < e[j]; ++rep) {
      RatPoly next(m, d + 1);
      for (const auto& [ex, c] : acc.terms()) {
        for (int i = 0; i < m; ++i) {
          const Rational& a = forms[j][static_cast<std::size_t>(i)];
          if (sgn(a) == 0) continue;
          Exponent ee = ex;
          ++ee[static_cast<std::size_t>(i)];
          next.add(ee, Rational(c * a));
        }
      }
      acc = std::move(next);
      ++d;
    }
  }
  if (d != degree) throw std::logic_error("degree bookkeeping");
  return acc;
}

std::vector<LinearForm> action_forms(const IntMatrix& m) {
  const IntMatrix inv = m.inverse();
  const int n = m.n();
  std::vector<LinearForm> forms(static_cast<std::size_t>(n), LinearForm(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) forms[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<long>(inv(i, j));
  }
  return forms;
}

Exponent exponent_of(const Composition& c) {
  Exponent e;
  for (int p : c.parts()) e.push_back(p - 1);
  return e;
}

Composition composition_of(const Exponent& e) {
  std::vector<int> parts;
  for (int k : e) parts.push_back(k + 1);
  return Composition(std::move(parts));
}

GenFun build_genfun(int l, int n, Flavor flavor) {
  if (n < 1 || l < n) throw std::invalid_argument("build_genfun needs l >= n >= 1");
  GenFun g{l, n, flavor, SymPoly(n, l - n)};
  for (const auto& c : compositions(l, n)) g.poly.add(exponent_of(c), zeta_reg(c, flavor));
  return g;
}

nlohmann::json GenfunReport::to_json() const {
  nlohmann::json j_out;
  j_out["check"] = check;
  j_out["l"] = l;
  j_out["n"] = n;
  if (j) j_out["j"] = *j;
  j_out["flavor"] = flavor;
  j_out["modulus"] = modulus;
  j_out["verdict"] = verdict;
  j_out["failures"] = failures;
  return j_out;
}

GenfunReport certify_poly(const SymPoly& p, int l, const SubspaceLabel& label,
                          RelationDatabase& db) {
  GenfunReport r;
  r.l = l;
  r.n = p.n();
  r.modulus = label.str();
  bool all_zero = true;
  for (const auto& [e, c] : p.terms()) {
    all_zero = false;
    if (!db.certify(c, l, label).certified) r.failures.push_back(e);
  }
  r.verdict = all_zero ? "exact-equal" : (r.failures.empty() ? "certified" : "not-certified");
  return r;
}

namespace {

GroupRingElem sign_elem(int n) {
  return n % 2 == 0 ? named(n, Named::Identity) : -named(n, Named::Identity);
}

// Tries the smallest modulus first and records which one sufficed.
GenfunReport certify_escalating(const SymPoly& p, int l, const std::vector<SubspaceLabel>& labels,
                                RelationDatabase& db) {
  GenfunReport r;
  for (const auto& label : labels) {
    r = certify_poly(p, l, label, db);
    if (r.ok()) break;
  }
  return r;
}

}  // namespace

std::vector<GenfunReport> check_genfun_shuffle(int l, int n, Flavor flavor, RelationDatabase& db) {
  if (n < 2 || n > l) throw std::invalid_argument("the generating-function checks need 2 <= n <= l");
  const SymPoly z = build_genfun(l, n, flavor).poly;
  const GroupRingElem P = named(n, Named::P);
  const GroupRingElem tau = named(n, Named::Tau, 0);
  const std::vector<SubspaceLabel> mods = {
      SubspaceLabel::product(),
      SubspaceLabel::sum({SubspaceLabel::product(), SubspaceLabel::relation()})};

  std::vector<GenfunReport> out;
  GenfunReport main = certify_escalating(act(z, P * (named(n, Named::Identity) + sign_elem(n) * tau)),
                                         l, mods, db);
  main.check = "genfun.shuffle";
  main.flavor = to_string(flavor);
  out.push_back(std::move(main));
  for (int j = 1; j <= n - 1; ++j) {
    GenfunReport r = certify_escalating(act(z, P * named(n, Named::Shuffle, j)), l, mods, db);
    r.check = "genfun.shuffle.sh";
    r.j = j;
    r.flavor = to_string(flavor);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GenfunReport> check_genfun_harmonic(int l, int n, Flavor flavor,
                                                 RelationDatabase& db) {
  if (n < 2 || n > l) throw std::invalid_argument("the generating-function checks need 2 <= n <= l");
  const SymPoly z = build_genfun(l, n, flavor).poly;
  const GroupRingElem e = named(n, Named::Identity);
  const GroupRingElem eps = named(n, Named::Epsilon);
  const GroupRingElem tau = named(n, Named::Tau, 0);
  const GroupRingElem P = named(n, Named::P);
  const GroupRingElem Pi = named(n, Named::Pinv);
  const SubspaceLabel mod = SubspaceLabel::sum(
      {SubspaceLabel::depth(n - 1), SubspaceLabel::product(), SubspaceLabel::relation()});

  std::vector<GenfunReport> out;
  GenfunReport main = certify_poly(act(z, e - eps * tau * P * tau * Pi), l, mod, db);
  main.check = "genfun.harmonic";
  main.flavor = to_string(flavor);
  out.push_back(std::move(main));
  GenfunReport sh = certify_poly(act(z, named(n, Named::Shuffle, 1)), l, mod, db);
  sh.check = "genfun.harmonic.sh1";
  sh.j = 1;
  sh.flavor = to_string(flavor);
  out.push_back(std::move(sh));
  return out;
}

SymCombo expand_pair(const SymCombo& a, const SymCombo& b, Flavor mode) {
  const WordSum w = mode == Flavor::Harmonic ? harmonic_product(a.words(), b.words())
                                             : shuffle_product(a.words(), b.words());
  return SymCombo::from_words(w);
}

SymCombo insertion_merge_defect(const Composition& c) {
  if (c.depth() < 2) throw std::invalid_argument("insertion/merge identity needs depth >= 2");
  const auto& p = c.parts();
  const int n = c.depth();
  const std::vector<int> rest(p.begin() + 1, p.end());
  SymCombo defect = expand_pair(zeta_star(Composition{p[0]}), zeta_star(Composition(rest)),
                                Flavor::Harmonic);
  // Insert l_1 after l_2..l_j.
  for (int j = 1; j <= n; ++j) {
    std::vector<int> ins(p.begin() + 1, p.begin() + j);
    ins.push_back(p[0]);
    ins.insert(ins.end(), p.begin() + j, p.end());
    defect -= zeta_star(Composition(ins));
  }
  // Merge l_1 into l_j.
  for (int j = 2; j <= n; ++j) {
    std::vector<int> mer(p.begin() + 1, p.begin() + (j - 1));
    mer.push_back(p[0] + p[static_cast<std::size_t>(j - 1)]);
    mer.insert(mer.end(), p.begin() + j, p.end());
    defect -= zeta_star(Composition(mer));
  }
  return defect;
}

SymPoly shuffle_factorization_defect(int l, int n, int j) {
  if (j < 1 || j > n - 1 || n > l) throw std::invalid_argument("factorization needs 1 <= j < n <= l");
  const SymPoly lhs = act(act(build_genfun(l, n, Flavor::Shuffle).poly, named(n, Named::P)),
                          named(n, Named::Shuffle, j));
  SymPoly rhs(n, l - n);
  for (int l1 = j; l1 <= l - (n - j); ++l1) {
    const SymPoly a = act(build_genfun(l1, j, Flavor::Shuffle).poly, named(j, Named::P));
    const SymPoly b = act(build_genfun(l - l1, n - j, Flavor::Shuffle).poly, named(n - j, Named::P));
    for (const auto& [ea, ca] : a.terms()) {
      for (const auto& [eb, cb] : b.terms()) {
        Exponent e = ea;
        e.insert(e.end(), eb.begin(), eb.end());
        rhs.add(e, expand_pair(ca, cb, Flavor::Shuffle));
      }
    }
  }
  return lhs - rhs;
}

bool check_shuffle_factorization(int l, int n, int j) {
  return shuffle_factorization_defect(l, n, j).is_zero();
}

}  // namespace mzv
