// The relative class number via the +-1 determinant attached to the short
// basis, together with the exact upper-bound values it is measured against.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "stickelberger/conductor.hpp"
#include "stickelberger/exact_linalg.hpp"

namespace stk {

// Rows b in M'_m (ascending), columns the units s < m/2 (ascending);
// A[b][s] = coefficient of sigma_s in alpha_m(b), an 0/1 matrix with
// A[b][s] + A[b][m-s] == 1.
struct CoefficientMatrix {
  long m = 0;
  std::vector<long> row_labels;
  std::vector<long> col_labels;
  IntMatrix A;
};
CoefficientMatrix coefficient_matrix(const Conductor& c);

// [A_m : S_m] = |det(2A - J)| / 2^{n-1} with n = phi(m)/2 (J all-ones).
mpz_class index_A_S(const Conductor& c);

struct ClassNumberReport {
  long m = 0;
  long n = 0;              // phi(m)/2
  mpz_class det_abs;       // |det(2A - J)|
  mpz_class index;         // [A_m : S_m] = 2^a * h
  mpz_class h;             // relative class number
};
ClassNumberReport h_minus_det(const Conductor& c);

// Exact nonnegative value scale * sqrt(radicand) with radicand squarefree;
// radicand == 1 for rational values.  Comparisons square, the decimal
// rendering truncates after the requested significant digits.
struct BoundValue {
  mpq_class scale;
  long radicand = 1;

  bool is_rational() const { return radicand == 1; }
  std::string decimal(int significant_digits = 50) const;
};

// 2^{1-a} * (phi/8)^{phi/4}; a half-integral exponent contributes the
// square-root part.
BoundValue upper_bound(const Conductor& c);

// 8 * sqrt(p) * (p/16)^{(p-1)/2} for odd primes p (conductor 4p).
BoundValue louboutin_bound_4p(long p);

// value <= bound, exactly (squares both sides).
bool bound_at_least(const BoundValue& bound, const mpq_class& value);
// x <= y, exactly.
bool bound_leq(const BoundValue& x, const BoundValue& y);

}  // namespace stk
