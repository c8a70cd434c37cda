#pragma once

// Truncated nested-sum evaluation of MZVs with a rigorous tail bound, used as
// a floating-point cross-check of exact relations.

#include <string>

#include "mzv/regularize.hpp"

namespace mzv {

struct NumericValue {
  long double value = 0;
  long double error_bound = 0;

  std::string str() const;
};

/// Sum over N >= m_1 > ... > m_n > 0 plus an upper bound on the dropped tail.
/// Throws std::invalid_argument for a non-admissible index or N < depth.
NumericValue mzv_numeric(const Composition& c, long N);

struct RelationResidual {
  long double residual = 0;
  long double error_bound = 0;
  bool pass = false;
};

/// |sum c_i zeta(k_i)| <= tol + sum |c_i| error_i
RelationResidual relation_residual(const SymCombo& v, double tol, long N);
bool check_relation_numeric(const SymCombo& v, double tol, long N = 100000);

void clear_numeric_cache();

}  // namespace mzv
