// Exact integer / rational linear algebra: row-style Hermite normal form,
// fraction-free (Bareiss) determinants and solves, integer row kernels, and
// intersection of a rational row span with Z^n.  No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace stk {

struct IntMatrix {
  long rows = 0, cols = 0;
  std::vector<mpz_class> a;  // row-major

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), a(r * c) {}
  mpz_class& at(long i, long j) { return a[i * cols + j]; }
  const mpz_class& at(long i, long j) const { return a[i * cols + j]; }
  static IntMatrix identity(long n);
  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

struct RatMatrix {
  long rows = 0, cols = 0;
  std::vector<mpq_class> a;  // row-major

  RatMatrix() = default;
  RatMatrix(long r, long c) : rows(r), cols(c), a(r * c) {}
  mpq_class& at(long i, long j) { return a[i * cols + j]; }
  const mpq_class& at(long i, long j) const { return a[i * cols + j]; }
};

// Least common multiple of all denominators (1 for an integral matrix).
mpz_class denominator_lcm(const RatMatrix& m);
// scale * m, which must be integral.
IntMatrix scale_to_integer(const RatMatrix& m, const mpz_class& scale);
RatMatrix to_rational(const IntMatrix& m);

// Row-style Hermite normal form of the lattice generated by the rows:
// row-echelon, positive pivots, entries above each pivot reduced into
// [0, pivot).  Zero rows are dropped, so the result has rank(in) rows.
IntMatrix hnf(const IntMatrix& in);

// True if v lies in the lattice generated by the rows of a row-HNF basis.
bool lattice_contains(const IntMatrix& hnf_basis, const std::vector<mpz_class>& v);

// Determinant by fraction-free Gaussian elimination (square matrices).
mpz_class det_bareiss(const IntMatrix& in);

// Basis (as rows) of { x : x * m == 0 }.
IntMatrix left_kernel(const IntMatrix& m);

// Rank over Q.
long rank_of(const IntMatrix& in);

// Solves A * X == d * B exactly for square nonsingular A, where d is the
// (sign-adjusted) determinant of A.  Throws std::domain_error if A is
// singular.
std::pair<mpz_class, IntMatrix> solve_scaled(const IntMatrix& A, const IntMatrix& B);

// HNF basis of  (Z-span of the rows of `span_rows`)  intersected with  Z^n:
// the integral sublattice of a rational lattice.  Rows must be Q-linearly
// independent; the result has the same row count.
IntMatrix lattice_intersect_integral(const RatMatrix& span_rows);

// Determinant of the change-of-basis matrix T with  to == T * from,  where
// both matrices list basis vectors of the same Q-row-space as rows.  Throws
// std::domain_error if either row set is dependent or the spans differ.
mpq_class transition_determinant(const RatMatrix& from, const RatMatrix& to);

}  // namespace stk
