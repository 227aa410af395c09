#include "stickelberger/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "stickelberger/conductor.hpp"

namespace stk {

namespace {

// num / den for monic den, remainder must vanish.
std::vector<mpz_class> divide_exact(const std::vector<mpz_class>& num,
                                    const std::vector<mpz_class>& den) {
  if (den.empty() || den.back() != 1)
    throw std::logic_error("divide_exact: divisor not monic");
  if (num.size() < den.size())
    throw std::logic_error("divide_exact: degree underflow");
  std::vector<mpz_class> rem = num;
  std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
  for (std::size_t qi = quot.size(); qi-- > 0;) {
    mpz_class lead = rem[qi + den.size() - 1];
    quot[qi] = lead;
    if (lead != 0)
      for (std::size_t j = 0; j < den.size(); ++j)
        rem[qi + j] -= lead * den[j];
  }
  for (const mpz_class& r : rem)
    if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

std::map<long, std::vector<mpz_class>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<mpz_class> phi_poly_unlocked(long n) {
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<mpz_class> p(n + 1, mpz_class(0));
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, phi_poly_unlocked(d));
  g_phi_cache.emplace(n, p);
  return p;
}

std::map<long, std::shared_ptr<const CyclotomicContext>> g_ctx_cache;
std::mutex g_ctx_mutex;

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n < 1");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return phi_poly_unlocked(n);
}

CyclotomicContext::CyclotomicContext(long n)
    : n_(n), phi_(euler_phi(n)), poly_(cyclotomic_polynomial(n)) {
  const long top = std::max(n_ - 1, 2 * phi_ - 2);
  if (top < phi_) return;
  rows_.reserve(top - phi_ + 1);
  // x^phi = -(poly without its leading term).
  std::vector<mpz_class> row(phi_);
  for (long i = 0; i < phi_; ++i) row[i] = -poly_[i];
  rows_.push_back(row);
  for (long k = phi_ + 1; k <= top; ++k) {
    const std::vector<mpz_class>& prev = rows_.back();
    std::vector<mpz_class> next(phi_, mpz_class(0));
    const mpz_class& carry = prev[phi_ - 1];
    for (long i = 1; i < phi_; ++i) next[i] = prev[i - 1];
    if (carry != 0)
      for (long i = 0; i < phi_; ++i) next[i] += carry * rows_[0][i];
    rows_.push_back(std::move(next));
  }
}

void CyclotomicContext::add_power(std::vector<mpz_class>& acc, long k,
                                  const mpz_class& coeff) const {
  if (k < 0 || k > std::max(n_ - 1, 2 * phi_ - 2))
    throw std::out_of_range("add_power: exponent outside reduction table");
  if (coeff == 0) return;
  if (k < phi_) {
    acc[k] += coeff;
    return;
  }
  const std::vector<mpz_class>& row = rows_[k - phi_];
  for (long i = 0; i < phi_; ++i)
    if (row[i] != 0) acc[i] += coeff * row[i];
}

std::shared_ptr<const CyclotomicContext> cyclotomic_context(long n) {
  std::lock_guard<std::mutex> lock(g_ctx_mutex);
  auto it = g_ctx_cache.find(n);
  if (it != g_ctx_cache.end()) return it->second;
  auto ctx = std::make_shared<const CyclotomicContext>(n);
  g_ctx_cache.emplace(n, ctx);
  return ctx;
}

CyclotomicInteger::CyclotomicInteger(
    std::shared_ptr<const CyclotomicContext> ctx)
    : ctx_(std::move(ctx)), c_(ctx_->phi(), mpz_class(0)) {}

CyclotomicInteger CyclotomicInteger::from_exponents(
    std::shared_ptr<const CyclotomicContext> ctx,
    const std::vector<std::pair<mpz_class, long>>& terms) {
  CyclotomicInteger z(std::move(ctx));
  const long n = z.ctx_->n();
  for (const auto& [coeff, k] : terms)
    z.ctx_->add_power(z.c_, mod_reduce(k, n), coeff);
  return z;
}

bool CyclotomicInteger::is_zero() const {
  for (const mpz_class& x : c_)
    if (x != 0) return false;
  return true;
}

bool CyclotomicInteger::is_rational_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  if (ctx_->n() != o.ctx_->n()) throw std::invalid_argument("mixed moduli");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
  if (ctx_->n() != o.ctx_->n()) throw std::invalid_argument("mixed moduli");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const mpz_class& k) {
  for (mpz_class& x : c_) x *= k;
  return *this;
}

CyclotomicInteger CyclotomicInteger::operator*(
    const CyclotomicInteger& o) const {
  if (ctx_->n() != o.ctx_->n()) throw std::invalid_argument("mixed moduli");
  const long phi = ctx_->phi();
  std::vector<mpz_class> prod(2 * phi - 1, mpz_class(0));
  for (long i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < phi; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  CyclotomicInteger out(ctx_);
  for (long k = 0; k < phi; ++k) out.c_[k] = prod[k];
  for (long k = phi; k < 2 * phi - 1; ++k)
    ctx_->add_power(out.c_, k, prod[k]);
  return out;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger out(ctx_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

bool CyclotomicInteger::operator==(const CyclotomicInteger& o) const {
  return ctx_->n() == o.ctx_->n() && c_ == o.c_;
}

CyclotomicInteger CyclotomicInteger::galois(long j) const {
  const long n = ctx_->n();
  if (gcd_ll(mod_reduce(j, n), n) != 1)
    throw std::invalid_argument("galois: exponent not a unit");
  CyclotomicInteger out(ctx_);
  const long phi = ctx_->phi();
  for (long i = 0; i < phi; ++i)
    ctx_->add_power(out.c_, mod_reduce(i * j, n), c_[i]);
  return out;
}

mpz_class CyclotomicInteger::norm() const {
  const long n = ctx_->n();
  CyclotomicInteger acc = *this;
  for (long j = 2; j < n; ++j)
    if (gcd_ll(j, n) == 1) acc = acc * galois(j);
  if (!acc.is_rational_integer())
    throw std::logic_error("norm: product of conjugates is not rational");
  return acc.coeff(0);
}

}  // namespace stk
