#include "stickelberger/class_number.hpp"

#include <stdexcept>
#include <unordered_map>

#include "stickelberger/stickelberger.hpp"

namespace stk {

namespace {

mpz_class pow10_z(unsigned long k) {
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, k);
  return t;
}

mpq_class mpq_pow(const mpq_class& base, unsigned long e) {
  mpq_class b = base;
  b.canonicalize();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// Pull the largest square out of rad into scale.
void normalize_radicand(mpq_class& scale, long& rad) {
  if (rad < 0) throw std::invalid_argument("negative radicand");
  for (long d = 2; d * d <= rad; ++d) {
    while (rad % (d * d) == 0) {
      rad /= d * d;
      scale *= d;
    }
  }
  scale.canonicalize();
}

}  // namespace

CoefficientMatrix coefficient_matrix(const Conductor& c) {
  CoefficientMatrix out;
  out.m = c.m;
  out.row_labels = index_set(c, IndexSetKind::MPrime);
  for (long s = 1; 2 * s < c.m; ++s)
    if (gcd_ll(s, c.m) == 1) out.col_labels.push_back(s);
  const std::size_t n = out.row_labels.size();
  if (out.col_labels.size() != n)
    throw std::logic_error("coefficient_matrix: |M'| != phi/2");

  std::unordered_map<long, std::size_t> col_of;
  for (std::size_t j = 0; j < n; ++j) col_of.emplace(out.col_labels[j], j);

  out.A = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    ShortElement e = alpha(c, out.row_labels[i]);
    for (long s : e.support) {
      auto it = col_of.find(s);
      if (it != col_of.end()) out.A.at(i, it->second) = 1;
    }
  }
  return out;
}

mpz_class index_A_S(const Conductor& c) {
  CoefficientMatrix cm = coefficient_matrix(c);
  const std::size_t n = cm.A.rows;
  IntMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M.at(i, j) = 2 * cm.A.at(i, j) - 1;
  mpz_class det = det_bareiss(M);
  mpz_class det_abs = abs(det);
  if (n >= 1 && mpz_divisible_2exp_p(det_abs.get_mpz_t(), n - 1) == 0)
    throw std::logic_error("index_A_S: determinant not divisible by 2^(n-1)");
  mpz_class index;
  mpz_fdiv_q_2exp(index.get_mpz_t(), det_abs.get_mpz_t(), n - 1);
  return index;
}

ClassNumberReport h_minus_det(const Conductor& c) {
  ClassNumberReport r;
  r.m = c.m;
  r.n = c.phi / 2;

  CoefficientMatrix cm = coefficient_matrix(c);
  const std::size_t n = cm.A.rows;
  IntMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M.at(i, j) = 2 * cm.A.at(i, j) - 1;
  r.det_abs = abs(det_bareiss(M));
  if (n >= 1 && mpz_divisible_2exp_p(r.det_abs.get_mpz_t(), n - 1) == 0)
    throw std::logic_error("h_minus_det: determinant not divisible by 2^(n-1)");
  mpz_fdiv_q_2exp(r.index.get_mpz_t(), r.det_abs.get_mpz_t(), n - 1);

  if (mpz_divisible_2exp_p(r.index.get_mpz_t(), c.a) == 0)
    throw std::logic_error("h_minus_det: index not divisible by 2^a");
  mpz_fdiv_q_2exp(r.h.get_mpz_t(), r.index.get_mpz_t(), c.a);
  return r;
}

std::string BoundValue::decimal(int significant_digits) const {
  if (significant_digits < 1)
    throw std::invalid_argument("need at least one significant digit");
  if (scale < 0) throw std::invalid_argument("negative bound value");
  if (scale == 0) return "0";

  // V = sqrt(P) / den with P = num^2 * radicand.
  mpz_class num = scale.get_num();
  mpz_class den = scale.get_den();
  mpz_class P = num * num * radicand;

  // Smallest e with V < 10^e, i.e. P < den^2 * 10^(2e).
  auto lt_pow10 = [&](long e) {
    mpz_class lhs = P, rhs = den * den;
    if (e >= 0)
      rhs *= pow10_z(2 * static_cast<unsigned long>(e));
    else
      lhs *= pow10_z(2 * static_cast<unsigned long>(-e));
    return lhs < rhs;
  };
  long e = static_cast<long>(mpz_sizeinbase(P.get_mpz_t(), 10)) / 2 -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 2;
  while (!lt_pow10(e)) ++e;
  while (lt_pow10(e - 1)) --e;

  // floor(V * 10^(sig - e)) has exactly `sig` digits; floors commute with
  // the square root, so isqrt of the floored quotient is exact.
  long j = significant_digits - e;
  mpz_class T = P;
  if (j >= 0)
    T *= pow10_z(2 * static_cast<unsigned long>(j));
  else
    T /= pow10_z(2 * static_cast<unsigned long>(-j));
  T /= den * den;
  mpz_class sig;
  mpz_sqrt(sig.get_mpz_t(), T.get_mpz_t());

  std::string digits = sig.get_str();
  if (digits.size() != static_cast<std::size_t>(significant_digits))
    throw std::logic_error("decimal rendering produced wrong digit count");
  std::string out;
  out += digits[0];
  if (digits.size() > 1) {
    out += '.';
    out += digits.substr(1);
  }
  long exp10 = e - 1;
  out += 'e';
  out += (exp10 < 0) ? '-' : '+';
  std::string es = std::to_string(exp10 < 0 ? -exp10 : exp10);
  if (es.size() < 2) es.insert(es.begin(), '0');
  out += es;
  return out;
}

BoundValue upper_bound(const Conductor& c) {
  BoundValue b;
  mpq_class two_pow;  // 2^(1-a)
  if (c.a <= 0) {
    two_pow = 2;
  } else {
    mpz_class p2 = 1;
    mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), c.a - 1);
    two_pow = mpq_class(1, p2);
    two_pow.canonicalize();
  }
  mpq_class base(c.phi, 8);
  base.canonicalize();

  if (c.phi % 4 == 0) {
    b.scale = two_pow * mpq_pow(base, c.phi / 4);
    b.radicand = 1;
  } else {
    // (phi/8)^(phi/4) = (phi/8)^((phi-2)/4) * sqrt(phi/2) / 2.
    b.scale = two_pow * mpq_pow(base, (c.phi - 2) / 4) / 2;
    b.radicand = c.phi / 2;
  }
  b.scale.canonicalize();
  normalize_radicand(b.scale, b.radicand);
  return b;
}

BoundValue louboutin_bound_4p(long p) {
  if (p <= 2 || !is_prime_small(p))
    throw std::invalid_argument("louboutin_bound_4p needs an odd prime");
  BoundValue b;
  b.scale = 8 * mpq_pow(mpq_class(p, 16), (p - 1) / 2);
  b.radicand = p;
  normalize_radicand(b.scale, b.radicand);
  return b;
}

bool bound_at_least(const BoundValue& bound, const mpq_class& value) {
  if (value <= 0) return true;
  return value * value <= bound.scale * bound.scale * bound.radicand;
}

bool bound_leq(const BoundValue& x, const BoundValue& y) {
  return x.scale * x.scale * x.radicand <= y.scale * y.scale * y.radicand;
}

}  // namespace stk
