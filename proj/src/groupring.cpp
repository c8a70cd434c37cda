#include "mzv/groupring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

namespace mzv {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("group ring coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group ring coefficient overflow");
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw std::invalid_argument("matrix must be square");
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
  const int n = a.n_;
  IntMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::int64_t IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<__int128> m(a_.begin(), a_.end());
  auto at = [&](int i, int j) -> __int128& { return m[static_cast<std::size_t>(i * n_ + j)]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n_; ++i) {
        if (at(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return static_cast<std::int64_t>(sign * at(n_ - 1, n_ - 1));
}

IntMatrix IntMatrix::inverse() const {
  const int n = n_;
  std::vector<mpq_class> m(static_cast<std::size_t>(n * 2 * n));
  auto at = [&](int i, int j) -> mpq_class& { return m[static_cast<std::size_t>(i * 2 * n + j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = static_cast<long>((*this)(i, j));
    at(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i) {
      if (sgn(at(i, col)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col) {
      for (int j = 0; j < 2 * n; ++j) std::swap(at(piv, j), at(col, j));
    }
    const mpq_class inv = 1 / at(col, col);
    for (int j = 0; j < 2 * n; ++j) at(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || sgn(at(i, col)) == 0) continue;
      const mpq_class f = at(i, col);
      for (int j = 0; j < 2 * n; ++j) at(i, j) -= f * at(col, j);
    }
  }
  IntMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const mpq_class& q = at(i, n + j);
      if (q.get_den() != 1) throw std::domain_error("matrix is not unimodular");
      out(i, j) = q.get_num().get_si();
    }
  }
  return out;
}

std::string IntMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += std::to_string((*this)(i, j));
    }
    s += "]";
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const int from = points[k] - 1;
    const int to = points[(k + 1) % points.size()] - 1;
    if (from < 0 || from >= n || to < 0 || to >= n) throw std::out_of_range("cycle point");
    im[static_cast<std::size_t>(from)] = to;
  }
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> im(b.images_.size());
  for (std::size_t j = 0; j < im.size(); ++j) im[j] = a(b(static_cast<int>(j)));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t j = 0; j < im.size(); ++j) im[static_cast<std::size_t>(images_[j])] = static_cast<int>(j);
  return Permutation(std::move(im));
}

Permutation Permutation::extended() const {
  std::vector<int> im = images_;
  im.push_back(static_cast<int>(im.size()));
  return Permutation(std::move(im));
}

IntMatrix Permutation::matrix() const {
  IntMatrix m(n());
  for (int j = 0; j < n(); ++j) m((*this)(j), j) = 1;
  return m;
}

// ---------------------------------------------------------------------------
// GroupRingElem

GroupRingElem::GroupRingElem(const IntMatrix& m, std::int64_t c) : n_(m.n()) {
  const std::int64_t d = m.determinant();
  if (d != 1 && d != -1) throw std::invalid_argument("group ring terms must be unimodular");
  add(m, c);
}

std::int64_t GroupRingElem::coeff(const IntMatrix& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void GroupRingElem::add(const IntMatrix& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("group ring dimension mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("group ring dimension mismatch");
  for (const auto& [m, c] : o.terms_) add(m, checked_mul(c, -1));
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second = checked_mul(t.second, c);
  return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("group ring dimension mismatch");
  GroupRingElem out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, checked_mul(ca, cb));
  }
  return out;
}

std::string GroupRingElem::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) s += std::to_string(mag) + "·";
    s += m.str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Named elements

namespace {

GroupRingElem shuffle_element(int n, int j) {
  GroupRingElem out(n);
  // Choose the images of 1..j; both blocks are then filled increasingly.
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + j, true);
  do {
    std::vector<int> im;
    for (int v = 0; v < n; ++v) {
      if (pick[static_cast<std::size_t>(v)]) im.push_back(v);
    }
    for (int v = 0; v < n; ++v) {
      if (!pick[static_cast<std::size_t>(v)]) im.push_back(v);
    }
    out += GroupRingElem(Permutation(im));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Permutation tau_permutation(int n, int j) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = k < j ? k : n - 1 + j - k;
  return Permutation(std::move(im));
}

}  // namespace

GroupRingElem named(int n, Named which, int j) {
  if (n < 1) throw std::out_of_range("dimension must be positive");
  switch (which) {
    case Named::Identity:
      return GroupRingElem(IntMatrix::identity(n));
    case Named::Epsilon: {
      IntMatrix m(n);
      for (int i = 0; i < n; ++i) m(i, i) = -1;
      return GroupRingElem(m);
    }
    case Named::Tau:
      if (j < 0 || j > n - 1) throw std::out_of_range("tau_j needs 0 <= j <= n-1");
      return GroupRingElem(tau_permutation(n, j));
    case Named::P: {
      IntMatrix m = IntMatrix::identity(n);
      for (int i = 1; i < n; ++i) m(i, i - 1) = -1;
      return GroupRingElem(m);
    }
    case Named::Pinv: {
      IntMatrix m(n);
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= i; ++k) m(i, k) = 1;
      }
      return GroupRingElem(m);
    }
    case Named::Shuffle:
      if (j < 1 || j > n - 1) throw std::out_of_range("sh_j needs 1 <= j <= n-1");
      return shuffle_element(n, j);
    case Named::Cyclic: {
      std::vector<int> pts(static_cast<std::size_t>(n));
      std::iota(pts.begin(), pts.end(), 1);
      return GroupRingElem(Permutation::cycle(n, pts));
    }
    case Named::CyclicProj:
    case Named::CyclicProjInv: {
      std::vector<int> pts(static_cast<std::size_t>(n + 1));
      std::iota(pts.begin(), pts.end(), 1);
      const IntMatrix c = project_Sn1(Permutation::cycle(n + 1, pts));
      return GroupRingElem(which == Named::CyclicProj ? c : c.inverse());
    }
    case Named::TauPrimeProj:
      return GroupRingElem(project_Sn1(Permutation::cycle(n + 1, {1, n + 1})));
  }
  throw std::out_of_range("unknown named element");
}

GroupRingElem involution_i(const GroupRingElem& s) {
  GroupRingElem out(s.n());
  for (const auto& [m, c] : s.terms()) out += GroupRingElem(m.inverse(), c);
  return out;
}

GroupRingElem involution_t(const GroupRingElem& s) {
  GroupRingElem out(s.n());
  for (const auto& [m, c] : s.terms()) out += GroupRingElem(m.transpose(), c);
  return out;
}

IntMatrix project_Sn1(const Permutation& sigma) {
  const int n = sigma.n() - 1;
  if (n < 1) throw std::invalid_argument("projection needs a permutation of degree >= 2");
  const Permutation inv = sigma.inverse();
  // Column j of the inverse matrix is the linear form substituted for x_j:
  // y_{sigma^{-1}(j)}, with y_{n+1} = -(x_1 + ... + x_n).
  IntMatrix minv(n);
  for (int j = 0; j < n; ++j) {
    const int k = inv(j);
    if (k < n) {
      minv(k, j) = 1;
    } else {
      for (int i = 0; i < n; ++i) minv(i, j) = -1;
    }
  }
  return minv.inverse();
}

// ---------------------------------------------------------------------------
// Identity catalog

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "prop22.first",   "prop22.crucial",   "ikz.cyclic",    "proj.factor",
      "proj.inverse",   "shuffle.cyclic",   "key.projected", "key.restated",
      "involution.image", "key.alternate",    "reversal.decomposition",
  };
  return names;
}

namespace {

struct Gens {
  int n;
  std::int64_t sg;  // (-1)^n
  GroupRingElem e, eps, tau, P, Pi, sh1, shn1, cn, C, Ci, tp;

  explicit Gens(int n_)
      : n(n_),
        sg(n_ % 2 == 0 ? 1 : -1),
        e(named(n_, Named::Identity)),
        eps(named(n_, Named::Epsilon)),
        tau(named(n_, Named::Tau, 0)),
        P(named(n_, Named::P)),
        Pi(named(n_, Named::Pinv)),
        sh1(named(n_, Named::Shuffle, 1)),
        shn1(named(n_, Named::Shuffle, n_ - 1)),
        cn(named(n_, Named::Cyclic)),
        C(named(n_, Named::CyclicProj)),
        Ci(named(n_, Named::CyclicProjInv)),
        tp(named(n_, Named::TauPrimeProj)) {}

  GroupRingElem sh(int j) const { return named(n, Named::Shuffle, j); }
  GroupRingElem tauj(int j) const { return named(n, Named::Tau, j); }
  GroupRingElem mat(const std::function<std::int64_t(int, int)>& f) const {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = f(i, j);
    }
    return GroupRingElem(m);
  }
};

GroupRingElem ti(const GroupRingElem& s) {
  return involution_t(involution_i(s));
}

std::vector<IdentityCheck> catalog(const std::string& name, int n) {
  const Gens g(n);
  const auto& [nn, sg, e, eps, tau, P, Pi, sh1, shn1, cn, C, Ci, tp] = g;
  (void)nn;
  std::vector<IdentityCheck> out;
  auto check = [&](std::string what, const GroupRingElem& lhs, const GroupRingElem& rhs) {
    out.push_back({std::move(what), lhs == rhs});
  };

  if (name == "prop22.first") {
    GroupRingElem rhs(n);
    for (int j = 1; j <= n - 1; ++j) {
      const std::int64_t s = (n - j - 1) % 2 == 0 ? 1 : -1;
      rhs += s * (g.sh(j) * g.tauj(j));
    }
    check("e + (-1)^n tau = sum_j (-1)^{n-j-1} sh_j tau_j", e + sg * tau, rhs);
  } else if (name == "prop22.crucial") {
    const GroupRingElem lhs = e - eps * tau * P * tau * Pi;
    const GroupRingElem rhs =
        sh1 * (e + sg * (eps * P * tau * Pi * tau * P * tau * Pi)) -
        sg * (eps * P * (e + sg * tau) * Pi * sh1 * P * tau * Pi * tau * P * tau * Pi);
    check("e - eps tau P tau P^-1 = sh_1(...) - (-1)^n eps P(e + (-1)^n tau)P^-1 sh_1 ...", lhs,
          rhs);
  } else if (name == "ikz.cyclic") {
    const int m = n + 1;
    std::vector<int> pts(static_cast<std::size_t>(m));
    std::iota(pts.begin(), pts.end(), 1);
    const GroupRingElem big_e(IntMatrix::identity(m));
    const GroupRingElem c(Permutation::cycle(m, pts));
    const GroupRingElem t1(Permutation::cycle(m, {1, m}));
    GroupRingElem sh1_big(m);
    GroupRingElem sh1_proj(n);
    for (const auto& [mat, coeff] : sh1.terms()) {
      std::vector<int> im(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          if (mat(i, j) == 1) im[static_cast<std::size_t>(j)] = i;
        }
      }
      const Permutation ext = Permutation(im).extended();
      sh1_big += GroupRingElem(ext, coeff);
      sh1_proj += GroupRingElem(project_Sn1(ext), coeff);
    }
    check("e + sh_1 c = c(e + sh_1 (1 n+1)) in Z[S_{n+1}]", big_e + sh1_big * c,
          c * (big_e + sh1_big * t1));
    check("embedded sh_1 projects to sh_1", sh1_proj, sh1);
    check("projected: e + sh_1 C = C(e + sh_1 tau')", e + sh1 * C, C * (e + sh1 * tp));
  } else if (name == "proj.factor") {
    check("tau' = eps c_n P^-1 tau P tau", tp, eps * cn * Pi * tau * P * tau);
    check("C = eps tau P^-1 tau P", C, eps * tau * Pi * tau * P);
    const GroupRingElem d1 = g.mat([n](int i, int j) -> std::int64_t {
      if (j == 0) return 1;
      return (j == i + 1 && i < n - 1) ? -1 : 0;
    });
    check("P^-1 tau P tau = display", Pi * tau * P * tau, d1);
    check("c_n P^-1 tau P tau = eps tau'", cn * Pi * tau * P * tau, eps * tp);
    check("tau P^-1 tau P = (P^-1 tau P tau)^-1 = eps C", tau * Pi * tau * P, involution_i(d1));
    check("tau P^-1 tau P = eps C", tau * Pi * tau * P, eps * C);
  } else if (name == "proj.inverse") {
    check("tau'^-1 = tau'", tp * tp, e);
    const GroupRingElem ci_display = g.mat([](int i, int j) -> std::int64_t {
      if (j == 0) return -1;
      return j == i + 1 ? 1 : 0;
    });
    check("C^-1 = display", Ci, ci_display);
    check("C^-1 = tau C tau", Ci, tau * C * tau);
    check("C C^-1 = e", C * Ci, e);
    check("eps tau P tau P^-1 = t(C)", eps * tau * P * tau * Pi, involution_t(C));
    const GroupRingElem last = g.mat([](int i, int j) -> std::int64_t {
      if (i == 0) return -1;
      return j == i - 1 ? 1 : 0;
    });
    check("i(eps tau P tau P^-1) = t(C^-1) = display", involution_i(eps * tau * P * tau * Pi),
          last);
  } else if (name == "shuffle.cyclic") {
    GroupRingElem down(n);
    GroupRingElem up(n);
    for (int j = 1; j <= n; ++j) {
      std::vector<int> d;
      for (int k = j; k >= 1; --k) d.push_back(k);
      std::vector<int> u;
      for (int k = j; k <= n; ++k) u.push_back(k);
      down += GroupRingElem(Permutation::cycle(n, d));
      up += GroupRingElem(Permutation::cycle(n, u));
    }
    check("sh_1 = sum_j (j j-1 ... 1)", sh1, down);
    check("sh_{n-1} = sum_j (j j+1 ... n)", shn1, up);
    check("sh_1 c_n = sh_{n-1}", sh1 * cn, shn1);
  } else if (name == "key.projected") {
    check("e + eps sh_1 tau P^-1 tau P = eps tau P^-1 tau P (e + eps sh_{n-1} P^-1 tau P tau)",
          e + eps * sh1 * tau * Pi * tau * P,
          eps * tau * Pi * tau * P * (e + eps * shn1 * Pi * tau * P * tau));
  } else if (name == "key.restated") {
    check("e - eps P^-1 tau P tau = sh_1 - eps tau P^-1 tau P sh_{n-1} P^-1 tau P tau P^-1 tau P tau",
          e - eps * Pi * tau * P * tau,
          sh1 - eps * tau * Pi * tau * P * shn1 * Pi * tau * P * tau * Pi * tau * P * tau);
  } else if (name == "involution.image") {
    check("t(P) = tau P tau", involution_t(P), tau * P * tau);
    check("t(P^-1) = tau P^-1 tau", involution_t(Pi), tau * Pi * tau);
    check("tau sh_{n-1} tau = sh_1", tau * shn1 * tau, sh1);
    for (int j = 1; j <= n - 1; ++j) {
      check("t(i(sh_" + std::to_string(j) + ")) = sh_" + std::to_string(j), ti(g.sh(j)), g.sh(j));
    }
    const GroupRingElem origin_lhs = e - eps * tau * P * tau * Pi;
    const GroupRingElem origin_rhs = sh1 - eps * P * tau * Pi * sh1 * P * tau * Pi * tau * P * tau * Pi;
    check("t i(e - eps P^-1 tau P tau) = e - eps tau P tau P^-1", ti(e - eps * Pi * tau * P * tau),
          origin_lhs);
    check("t i(restated rhs) = sh_1 - eps P tau P^-1 sh_1 P tau P^-1 tau P tau P^-1",
          ti(sh1 - eps * tau * Pi * tau * P * shn1 * Pi * tau * P * tau * Pi * tau * P * tau),
          origin_rhs);
    check("e - eps tau P tau P^-1 = sh_1 - eps P tau P^-1 sh_1 P tau P^-1 tau P tau P^-1",
          origin_lhs, origin_rhs);
    const GroupRingElem tail = sh1 * P * tau * Pi * tau * P * tau * Pi;
    check("second-term expansion", eps * P * tau * Pi * tail,
          -sg * (eps * tail) + sg * (eps * P * (e + sg * tau) * Pi * tail));
  } else if (name == "key.alternate") {
    check("tau sh_1 tau = sh_{n-1}", tau * sh1 * tau, shn1);
    const GroupRingElem lhs = eps * P * tau - tau * P;
    check("eps P tau - tau P = -P sh_{n-1} P^-1 tau P + eps tau P sh_{n-1} P^-1 tau P tau", lhs,
          -(P * shn1 * Pi * tau * P) + eps * tau * P * shn1 * Pi * tau * P * tau);
    check("eps P tau - tau P = (-1)^n eps (P(e + (-1)^n tau) - (e + (-1)^n eps tau)P)", lhs,
          sg * (eps * (P * (e + sg * tau) - (e + sg * eps * tau) * P)));
    const GroupRingElem tail = P * shn1 * Pi * tau * P * tau;
    check("eps tau P sh_{n-1} P^-1 tau P tau expansion", eps * tau * tail,
          -sg * (eps * tail) + sg * (eps * (e + sg * tau) * tail));
    check("(e + (-1)^n eps tau)P = ...", (e + sg * eps * tau) * P,
          sg * (eps * P * shn1 * Pi * tau * P * (e + sg * eps * tau)) -
              (e + sg * tau) * P * shn1 * Pi * tau * P * tau + P * (e + sg * tau));
  } else if (name == "reversal.decomposition") {
    check("e + (-1)^n eps tau = P(e + (-1)^n tau)P^-1 - (-1)^n (e - eps tau P tau P^-1) P tau P^-1",
          e + sg * eps * tau,
          P * (e + sg * tau) * Pi - sg * ((e - eps * tau * P * tau * Pi) * P * tau * Pi));
  } else {
    throw std::invalid_argument("unknown identity: " + name);
  }
  return out;
}

}  // namespace

std::vector<IdentityCheck> check_identity(const std::string& name, int n) {
  if (n < 2) throw std::invalid_argument("identity checks need n >= 2");
  return catalog(name, n);
}

bool verify_identity(const std::string& name, int n) {
  const auto checks = check_identity(name, n);
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

}  // namespace mzv
