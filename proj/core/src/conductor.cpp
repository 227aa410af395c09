#include "stickelberger/conductor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stk {

long gcd_ll(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long r = a % b;
    a = b;
    b = r;
  }
  return a;
}

long mod_reduce(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long mul_mod(long a, long b, long m) {
  a = mod_reduce(a, m);
  b = mod_reduce(b, m);
  return static_cast<long>((static_cast<__int128>(a) * b) % m);
}

long pow_mod(long a, long e, long m) {
  if (m == 1) return 0;
  long base = mod_reduce(a, m);
  long acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return acc;
}

long inv_mod(long a, long m) {
  a = mod_reduce(a, m);
  long r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1)
    throw std::invalid_argument("inv_mod: " + std::to_string(a) +
                                " is not a unit mod " + std::to_string(m));
  return mod_reduce(s0, m);
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime_small(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long multiplicative_order(long a, long m) {
  if (gcd_ll(a, m) != 1)
    throw std::invalid_argument("multiplicative_order: arguments not coprime");
  long cur = mod_reduce(a, m);
  long ord = 1;
  while (cur != 1 % m) {
    cur = mul_mod(cur, a, m);
    ++ord;
  }
  return ord;
}

bool is_valid_conductor(long m) { return m > 1 && m % 4 != 2; }

Conductor parse_conductor(long m) {
  if (m <= 1)
    throw std::invalid_argument("conductor must exceed 1, got " +
                                std::to_string(m));
  if (m % 4 == 2)
    throw std::invalid_argument(
        "conductor " + std::to_string(m) +
        " is 2 mod 4; use the odd conductor m/2 instead");
  Conductor c;
  c.m = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      long q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      c.primes.push_back(p);
      c.factors.push_back(q);
    }
  }
  if (n > 1) {
    c.primes.push_back(n);
    c.factors.push_back(n);
  }
  c.t = static_cast<int>(c.factors.size());
  c.phi = 1;
  for (int i = 0; i < c.t; ++i)
    c.phi *= c.factors[i] - c.factors[i] / c.primes[i];
  c.w = (m % 2 != 0) ? 2 * m : m;
  c.a = (c.t == 1) ? 0 : (1L << (c.t - 2)) - 1;
  return c;
}

std::vector<long> valid_conductors_up_to(long bound) {
  std::vector<long> out;
  for (long m = 2; m <= bound; ++m)
    if (is_valid_conductor(m)) out.push_back(m);
  return out;
}

std::pair<long, long> bezout_pair(long u, long v) {
  if (u <= 1 || v <= 1 || gcd_ll(u, v) != 1)
    throw std::invalid_argument("bezout_pair: need coprime u, v > 1");
  // u*x = -1 (mod v) with 0 <= x < v, then y = -(1 + u*x) / v.
  long x = mod_reduce(-inv_mod(u, v), v);
  long y = -(1 + u * x) / v;
  return {x, y};
}

}  // namespace stk
