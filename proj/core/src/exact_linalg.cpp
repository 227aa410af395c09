#include "stickelberger/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace stk {

namespace {

// dst -= q * src over a row range.
void row_submul(IntMatrix& m, long dst, long src, const mpz_class& q, long from_col) {
  if (q == 0) return;
  for (long j = from_col; j < m.cols; ++j)
    mpz_submul(m.at(dst, j).get_mpz_t(), q.get_mpz_t(), m.at(src, j).get_mpz_t());
}

void row_swap(IntMatrix& m, long i, long k) {
  if (i == k) return;
  for (long j = 0; j < m.cols; ++j) std::swap(m.at(i, j), m.at(k, j));
}

void row_negate(IntMatrix& m, long i) {
  for (long j = 0; j < m.cols; ++j)
    mpz_neg(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t());
}

// Exact division with verification; the fraction-free recurrences guarantee
// divisibility, this guards the implementation.
mpz_class checked_div(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("exact_linalg: inexact division in fraction-free step");
  return q;
}

// In-place row HNF (Euclidean staircase).  Row operations are mirrored on the
// optional companion matrix, so callers can recover the transformation.
void hnf_engine(IntMatrix& m, IntMatrix* companion) {
  auto op_submul = [&](long dst, long src, const mpz_class& q) {
    row_submul(m, dst, src, q, 0);
    if (companion) row_submul(*companion, dst, src, q, 0);
  };
  auto op_swap = [&](long i, long k) {
    row_swap(m, i, k);
    if (companion) row_swap(*companion, i, k);
  };
  auto op_negate = [&](long i) {
    row_negate(m, i);
    if (companion) row_negate(*companion, i);
  };

  long r = 0;
  for (long j = 0; j < m.cols && r < m.rows; ++j) {
    // Euclidean elimination below row r in column j.
    for (;;) {
      long best = -1;
      for (long i = r; i < m.rows; ++i) {
        if (m.at(i, j) == 0) continue;
        if (best < 0 || mpz_cmpabs(m.at(i, j).get_mpz_t(), m.at(best, j).get_mpz_t()) < 0)
          best = i;
      }
      if (best < 0) break;  // column has no pivot
      op_swap(r, best);
      bool clean = true;
      for (long i = r + 1; i < m.rows; ++i) {
        if (m.at(i, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(r, j).get_mpz_t());
        op_submul(i, r, q);
        if (m.at(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m.at(r, j) == 0) continue;
    if (m.at(r, j) < 0) op_negate(r);
    // Reduce entries above the pivot into [0, pivot).
    for (long i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(r, j).get_mpz_t());
      op_submul(i, r, q);
    }
    ++r;
  }
}

bool row_is_zero(const IntMatrix& m, long i) {
  for (long j = 0; j < m.cols; ++j)
    if (m.at(i, j) != 0) return false;
  return true;
}

// Forward fraction-free elimination with column pivot selection.  Returns the
// pivot columns; `m` ends upper-echelon on those columns.
std::vector<long> bareiss_forward(IntMatrix& m) {
  std::vector<long> pivots;
  mpz_class prev = 1;
  long r = 0;
  for (long j = 0; j < m.cols && r < m.rows; ++j) {
    long sel = -1;
    for (long i = r; i < m.rows; ++i)
      if (m.at(i, j) != 0) { sel = i; break; }
    if (sel < 0) continue;
    row_swap(m, sel, r);
    for (long i = r + 1; i < m.rows; ++i) {
      for (long j2 = j + 1; j2 < m.cols; ++j2)
        m.at(i, j2) = checked_div(m.at(i, j2) * m.at(r, j) - m.at(i, j) * m.at(r, j2), prev);
      m.at(i, j) = 0;
    }
    prev = m.at(r, j);
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

mpz_class denominator_lcm(const RatMatrix& m) {
  mpz_class den = 1;
  for (const auto& q : m.a) {
    mpz_class d = q.get_den(), g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  return den;
}

IntMatrix scale_to_integer(const RatMatrix& m, const mpz_class& scale) {
  IntMatrix out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    mpq_class v = m.a[i] * mpq_class(scale);
    if (v.get_den() != 1)
      throw std::invalid_argument("scale_to_integer: scale does not clear denominators");
    out.a[i] = v.get_num();
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = mpq_class(m.a[i]);
  return out;
}

IntMatrix hnf(const IntMatrix& in) {
  IntMatrix work = in;
  hnf_engine(work, nullptr);
  long nonzero = 0;
  for (long i = 0; i < work.rows; ++i)
    if (!row_is_zero(work, i)) ++nonzero;
  IntMatrix out(nonzero, work.cols);
  for (long i = 0; i < nonzero; ++i)
    for (long j = 0; j < work.cols; ++j) out.at(i, j) = work.at(i, j);
  return out;
}

bool lattice_contains(const IntMatrix& hnf_basis, const std::vector<mpz_class>& v) {
  if (static_cast<long>(v.size()) != hnf_basis.cols)
    throw std::invalid_argument("lattice_contains: dimension mismatch");
  std::vector<mpz_class> rem = v;
  for (long i = 0; i < hnf_basis.rows; ++i) {
    long p = 0;
    while (p < hnf_basis.cols && hnf_basis.at(i, p) == 0) ++p;
    if (p == hnf_basis.cols) continue;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[p].get_mpz_t(), hnf_basis.at(i, p).get_mpz_t());
    if (r != 0) return false;
    if (q != 0)
      for (long j = p; j < hnf_basis.cols; ++j)
        mpz_submul(rem[j].get_mpz_t(), q.get_mpz_t(), hnf_basis.at(i, j).get_mpz_t());
  }
  for (const auto& x : rem)
    if (x != 0) return false;
  return true;
}

mpz_class det_bareiss(const IntMatrix& in) {
  if (in.rows != in.cols) throw std::invalid_argument("det_bareiss: matrix not square");
  long n = in.rows;
  if (n == 0) return 1;
  IntMatrix w = in;
  mpz_class prev = 1;
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      long sel = -1;
      for (long i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { sel = i; break; }
      if (sel < 0) return 0;
      row_swap(w, sel, k);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j)
        w.at(i, j) = checked_div(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

IntMatrix left_kernel(const IntMatrix& m) {
  IntMatrix work = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  hnf_engine(work, &u);
  std::vector<long> zero_rows;
  for (long i = 0; i < work.rows; ++i)
    if (row_is_zero(work, i)) zero_rows.push_back(i);
  IntMatrix out(static_cast<long>(zero_rows.size()), m.rows);
  for (size_t k = 0; k < zero_rows.size(); ++k)
    for (long j = 0; j < m.rows; ++j) out.at(k, j) = u.at(zero_rows[k], j);
  return out;
}

long rank_of(const IntMatrix& in) {
  IntMatrix work = in;
  return static_cast<long>(bareiss_forward(work).size());
}

std::pair<mpz_class, IntMatrix> solve_scaled(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows != A.cols || B.rows != A.rows)
    throw std::invalid_argument("solve_scaled: shape mismatch");
  long n = A.rows, k = B.cols;
  IntMatrix aug(n, n + k);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    for (long j = 0; j < k; ++j) aug.at(i, n + j) = B.at(i, j);
  }
  // Single-sweep fraction-free Gauss-Jordan: after step p the processed part
  // of the diagonal carries the leading minors; at the end the left block is
  // d * I and the right block is d * A^{-1} B.
  mpz_class prev = 1;
  for (long p = 0; p < n; ++p) {
    if (aug.at(p, p) == 0) {
      long sel = -1;
      for (long i = p + 1; i < n; ++i)
        if (aug.at(i, p) != 0) { sel = i; break; }
      if (sel < 0) throw std::domain_error("solve_scaled: singular matrix");
      row_swap(aug, sel, p);
    }
    for (long i = 0; i < n; ++i) {
      if (i == p) continue;
      for (long j = p + 1; j < n + k; ++j)
        aug.at(i, j) = checked_div(aug.at(p, p) * aug.at(i, j) - aug.at(i, p) * aug.at(p, j), prev);
      aug.at(i, p) = 0;
    }
    prev = aug.at(p, p);
  }
  mpz_class d = aug.at(n - 1, n - 1);
  IntMatrix x(n, k);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < k; ++j) x.at(i, j) = aug.at(i, n + j);
  return {d, x};
}

IntMatrix lattice_intersect_integral(const RatMatrix& span_rows) {
  long k = span_rows.rows, n = span_rows.cols;
  if (k == 0 || n == 0) throw std::invalid_argument("lattice_intersect_integral: empty input");
  mpz_class d = denominator_lcm(span_rows);
  IntMatrix c = scale_to_integer(span_rows, d);
  if (rank_of(c) != k)
    throw std::invalid_argument("lattice_intersect_integral: rows are Q-dependent");

  // v = (x/d) * C is integral iff x * C == 0 (mod d); solve by taking the
  // left kernel of [C ; d*I_n] and projecting kernel rows onto the x part.
  IntMatrix stacked(k + n, n);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < n; ++j) stacked.at(i, j) = c.at(i, j);
  for (long j = 0; j < n; ++j) stacked.at(k + j, j) = d;
  IntMatrix ker = left_kernel(stacked);
  if (ker.rows != k) throw std::logic_error("lattice_intersect_integral: unexpected kernel rank");

  IntMatrix rows(k, n);
  for (long i = 0; i < k; ++i) {
    for (long j = 0; j < n; ++j) {
      mpz_class acc = 0;
      for (long l = 0; l < k; ++l)
        mpz_addmul(acc.get_mpz_t(), ker.at(i, l).get_mpz_t(), c.at(l, j).get_mpz_t());
      rows.at(i, j) = checked_div(acc, d);
    }
  }
  return hnf(rows);
}

mpq_class transition_determinant(const RatMatrix& from, const RatMatrix& to) {
  if (from.rows != to.rows || from.cols != to.cols || from.rows == 0)
    throw std::invalid_argument("transition_determinant: shape mismatch");
  long k = from.rows, n = from.cols;

  mpz_class dl = denominator_lcm(from);
  {
    mpz_class dt = denominator_lcm(to), g;
    mpz_gcd(g.get_mpz_t(), dl.get_mpz_t(), dt.get_mpz_t());
    dl = dl / g * dt;
  }
  IntMatrix ai = scale_to_integer(from, dl);
  IntMatrix bi = scale_to_integer(to, dl);

  IntMatrix work = ai;
  std::vector<long> cols = bareiss_forward(work);
  if (static_cast<long>(cols.size()) != k)
    throw std::domain_error("transition_determinant: first basis rows are dependent");

  IntMatrix a2(k, k), b2(k, k);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) {
      a2.at(i, j) = ai.at(i, cols[j]);
      b2.at(i, j) = bi.at(i, cols[j]);
    }
  mpz_class det_a = det_bareiss(a2);
  mpz_class det_b = det_bareiss(b2);
  if (det_b == 0)
    throw std::domain_error("transition_determinant: second basis rows are dependent");

  // T = B2 * A2^{-1}; verify T * from == to on the full matrices.
  IntMatrix a2t(k, k), b2t(k, k);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) {
      a2t.at(i, j) = a2.at(j, i);
      b2t.at(i, j) = b2.at(j, i);
    }
  auto [d, xt] = solve_scaled(a2t, b2t);  // A2^T * xt == d * B2^T
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < n; ++j) {
      mpz_class acc = 0;
      for (long l = 0; l < k; ++l)
        mpz_addmul(acc.get_mpz_t(), xt.at(l, i).get_mpz_t(), ai.at(l, j).get_mpz_t());
      if (acc != d * bi.at(i, j))
        throw std::domain_error("transition_determinant: bases span different spaces");
    }

  mpq_class result(det_b, det_a);
  result.canonicalize();
  return result;
}

}  // namespace stk
