#include "mzv/numeric.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

namespace mzv {

namespace {

struct Kahan {
  long double sum = 0;
  long double comp = 0;
  void add(long double x) {
    const long double y = x - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// f(t) = (1 + log t)^k / (k! t^s) bounds the m_1-th term: the inner nested sum over
// m_1 > m_2 > ... > m_n > 0 is at most e_{k}(1, 1/2, ..., 1/(m_1 - 1)) <=
// H^k / k! with H <= 1 + log m_1.
long double tail_term(long double t, int k, int s) {
  return std::pow(1 + std::log(t), static_cast<long double>(k)) / std::tgamma(static_cast<long double>(k + 1)) /
         std::pow(t, static_cast<long double>(s));
}

// Upper bound on sum_{m > N} f(m). f decreases once 1 + log t > k / s; up to
// that point the terms are summed directly, beyond it the sum is bounded by
// the integral, which has the closed form
//   int_M^inf f = M^{1-s} sum_{i<=k} x^i / i! / (s-1)^{k+1},  x = (s-1)(1 + log M).
long double tail_bound(long N, int k, int s) {
  long M = N;
  const long double turn = std::exp(static_cast<long double>(k) / s - 1);
  Kahan direct;
  while (static_cast<long double>(M) < turn + 1) {
    ++M;
    direct.add(tail_term(static_cast<long double>(M), k, s));
  }
  const long double sm1 = s - 1;
  const long double x = sm1 * (1 + std::log(static_cast<long double>(M)));
  long double series = 0;
  long double pw = 1;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) pw *= x / i;
    series += pw;
  }
  const long double integral =
      std::pow(static_cast<long double>(M), -sm1) * series / std::pow(sm1, static_cast<long double>(k + 1));
  return direct.sum + integral;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<Composition, long>, NumericValue>& cache() {
  static std::map<std::pair<Composition, long>, NumericValue> c;
  return c;
}

}  // namespace

std::string NumericValue::str() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.18Lg ± %.3Lg", value, error_bound);
  return buf;
}

NumericValue mzv_numeric(const Composition& c, long N) {
  if (!c.admissible()) throw std::invalid_argument("divergent (non-admissible) index: " + c.str());
  const int n = c.depth();
  if (N < n) throw std::invalid_argument("truncation bound must be at least the depth");
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find({c, N});
    if (it != cache().end()) return it->second;
  }

  // below[m] holds the nested sum over m > m_{k+1} > ... > m_n > 0 for the
  // current level k, built from the innermost index outwards.
  std::vector<long double> below(static_cast<std::size_t>(N + 1), 1.0L);
  for (int k = n - 1; k >= 1; --k) {
    std::vector<long double> next(static_cast<std::size_t>(N + 1), 0.0L);
    Kahan prefix;
    for (long m = 1; m <= N; ++m) {
      next[static_cast<std::size_t>(m)] = prefix.sum;
      const long double term =
          below[static_cast<std::size_t>(m)] / std::pow(static_cast<long double>(m), c[static_cast<std::size_t>(k)]);
      prefix.add(term);
    }
    below = std::move(next);
  }
  Kahan total;
  for (long m = 1; m <= N; ++m) {
    total.add(below[static_cast<std::size_t>(m)] / std::pow(static_cast<long double>(m), c[0]));
  }

  NumericValue out;
  out.value = total.sum;
  // Rounding: every admissible MZV and every partial sum is below zeta(2) < 2,
  // each term carries O(n) relative rounding and compensated summation adds
  // O(eps) per level, so 64 n eps is a generous N-independent allowance.
  out.error_bound = tail_bound(N, n - 1, c[0]) + 64.0L * n * LDBL_EPSILON;

  std::lock_guard lock(cache_mutex());
  cache().emplace(std::make_pair(c, N), out);
  return out;
}

RelationResidual relation_residual(const SymCombo& v, double tol, long N) {
  RelationResidual r;
  for (const auto& [w, q] : v.terms()) {
    const long double coeff = q.get_d();
    const long double mag = std::fabs(coeff);
    if (w.empty()) {
      r.residual += coeff;
      continue;
    }
    const NumericValue nv = mzv_numeric(word_to_composition(w), N);
    r.residual += coeff * nv.value;
    r.error_bound += mag * nv.error_bound;
  }
  r.pass = std::fabs(r.residual) <= static_cast<long double>(tol) + r.error_bound;
  return r;
}

bool check_relation_numeric(const SymCombo& v, double tol, long N) {
  return relation_residual(v, tol, N).pass;
}

void clear_numeric_cache() {
  std::lock_guard lock(cache_mutex());
  cache().clear();
}

}  // namespace mzv
