// Exact arithmetic in Z[zeta_n] = Z[x]/Phi_n(x): cyclotomic polynomials,
// Galois action, and integral norms.
#pragma once

#include <gmpxx.h>

#include <memory>
#include <utility>
#include <vector>

namespace stk {

// Coefficients of Phi_n, constant term first; degree phi(n), monic.
std::vector<mpz_class> cyclotomic_polynomial(long n);

// Shared per-n data: Phi_n plus reduction rows for x^k, phi <= k <= K with
// K = max(n-1, 2*phi-2), covering both products and the Galois action.
class CyclotomicContext {
 public:
  explicit CyclotomicContext(long n);

  long n() const { return n_; }
  long phi() const { return phi_; }
  const std::vector<mpz_class>& poly() const { return poly_; }

  // acc += coeff * (x^k mod Phi_n), 0 <= k <= max(n-1, 2*phi-2).
  void add_power(std::vector<mpz_class>& acc, long k,
                 const mpz_class& coeff) const;

 private:
  long n_;
  long phi_;
  std::vector<mpz_class> poly_;
  std::vector<std::vector<mpz_class>> rows_;  // x^(phi+i) mod Phi_n
};

std::shared_ptr<const CyclotomicContext> cyclotomic_context(long n);

class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;
  explicit CyclotomicInteger(std::shared_ptr<const CyclotomicContext> ctx);

  static CyclotomicInteger from_exponents(
      std::shared_ptr<const CyclotomicContext> ctx,
      const std::vector<std::pair<mpz_class, long>>& terms);

  const std::shared_ptr<const CyclotomicContext>& context() const {
    return ctx_;
  }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& coeff(std::size_t i) const { return c_.at(i); }

  bool is_zero() const;
  bool is_rational_integer() const;  // all nonconstant coefficients zero

  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger& operator-=(const CyclotomicInteger& o);
  CyclotomicInteger& operator*=(const mpz_class& k);
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-() const;
  bool operator==(const CyclotomicInteger& o) const;

  // zeta -> zeta^j for gcd(j, n) = 1.
  CyclotomicInteger galois(long j) const;

  // Product over all conjugates; throws if the result is not rational.
  mpz_class norm() const;

 private:
  std::shared_ptr<const CyclotomicContext> ctx_;
  std::vector<mpz_class> c_;
};

}  // namespace stk
