#pragma once

// Integer group ring of GL_n(Z) with the permutation, reflection and
// bidiagonal elements used by the reversal congruences.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mzv {

/// Dense n×n integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int n() const { return n_; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  IntMatrix transpose() const;
  /// Exact determinant (Bareiss elimination).
  std::int64_t determinant() const;
  /// Integer inverse; throws std::domain_error unless the matrix is unimodular.
  IntMatrix inverse() const;

  std::string str() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Permutation of {0, ..., n-1}; images[j] is the image of j.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Cycle (a_1 a_2 ... a_k) on 1-based points: a_1 -> a_2 -> ... -> a_k -> a_1.
  static Permutation cycle(int n, const std::vector<int>& points);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }
  /// (a * b)(j) = a(b(j))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  /// The same permutation on one more point, fixing the new last point.
  Permutation extended() const;
  /// Matrix (δ_{i σ(j)}).
  IntMatrix matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Formal integer combination of unimodular n×n matrices.
class GroupRingElem {
 public:
  using Terms = std::map<IntMatrix, std::int64_t>;

  GroupRingElem() = default;
  explicit GroupRingElem(int n) : n_(n) {}
  /// Single term; the matrix must have determinant ±1.
  GroupRingElem(const IntMatrix& m, std::int64_t c = 1);
  GroupRingElem(const Permutation& p, std::int64_t c = 1) : GroupRingElem(p.matrix(), c) {}

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(const IntMatrix& m) const;

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  GroupRingElem& operator*=(std::int64_t c);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator-(GroupRingElem a) { return a *= -1; }
  friend GroupRingElem operator*(GroupRingElem a, std::int64_t c) { return a *= c; }
  friend GroupRingElem operator*(std::int64_t c, GroupRingElem a) { return a *= c; }
  /// Convolution; throws std::invalid_argument on dimension mismatch.
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

  std::string str() const;

 private:
  void add(const IntMatrix& m, std::int64_t c);

  int n_ = 0;
  Terms terms_;
};

enum class Named {
  Identity,
  Epsilon,       // -I
  Tau,           // tau_j: fixes 1..j, reverses j+1..n; tau_0 is the anti-diagonal
  P,             // 1 on the diagonal, -1 below it
  Pinv,          // lower triangular ones
  Shuffle,       // sh_j: permutations increasing on 1..j and on j+1..n
  Cyclic,        // the n-cycle (1 2 ... n) in S_n
  CyclicProj,    // image of (1 2 ... n+1) under the projection from S_{n+1}
  CyclicProjInv,
  TauPrimeProj,  // image of the transposition (1 n+1)
};

/// Throws std::out_of_range for an invalid index j.
GroupRingElem named(int n, Named which, int j = 0);

/// Coefficientwise matrix inverse / transpose (ring anti-automorphisms).
GroupRingElem involution_i(const GroupRingElem& s);
GroupRingElem involution_t(const GroupRingElem& s);

/// n×n matrix acting on polynomials in x_1..x_n the way sigma in S_{n+1}
/// acts on Q[y_1..y_{n+1}]/(y_1 + ... + y_{n+1}) with y_i = x_i.
IntMatrix project_Sn1(const Permutation& sigma);

/// Stable keys of the identity catalog.
const std::vector<std::string>& identity_names();

struct IdentityCheck {
  std::string name;  // sub-identity description
  bool holds = false;
};

/// Every sub-identity of a catalog family at dimension n (n >= 2).
/// Throws std::invalid_argument for an unknown name.
std::vector<IdentityCheck> check_identity(const std::string& name, int n);
bool verify_identity(const std::string& name, int n);

}  // namespace mzv
