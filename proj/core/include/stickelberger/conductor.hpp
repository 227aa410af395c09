// Conductor validation and factorization data for cyclotomic fields, plus the
// small modular-arithmetic helpers shared by the rest of the library.
#pragma once

#include <utility>
#include <vector>

namespace stk {

// A valid cyclotomic conductor: m > 1 and m != 2 (mod 4), so that distinct m
// give distinct fields Q(zeta_m).  m factors as q_1 * ... * q_t into pairwise
// coprime prime powers > 2, ordered by ascending prime.
struct Conductor {
  long m = 0;
  std::vector<long> factors;  // q_i, ascending p_i
  std::vector<long> primes;   // p_i with q_i = p_i^{e_i}
  int t = 0;                  // number of prime-power factors
  long phi = 0;               // Euler phi(m)
  long w = 0;                 // 2m for odd m, m for even m
  long a = 0;                 // 0 if t == 1, 2^{t-2} - 1 if t >= 2
};

// Validates and factors m.  Throws std::invalid_argument if m <= 1 or
// m == 2 (mod 4).
Conductor parse_conductor(long m);

bool is_valid_conductor(long m);

// All valid conductors in [2, bound], ascending.
std::vector<long> valid_conductors_up_to(long bound);

// Solves u*x + v*y = -1 for coprime u, v > 1 with 0 <= x < v (forcing y < 0).
// Throws std::invalid_argument if gcd(u, v) != 1.
std::pair<long, long> bezout_pair(long u, long v);

// Modular helpers.  All take nonnegative moduli and reduce their arguments;
// products go through 128-bit intermediates so any machine-word m is safe.
long mod_reduce(long a, long m);   // least nonnegative residue
long mul_mod(long a, long b, long m);
long pow_mod(long a, long e, long m);
long inv_mod(long a, long m);      // throws std::invalid_argument if not a unit
long gcd_ll(long a, long b);
long euler_phi(long n);
bool is_prime_small(long n);       // deterministic trial division
long multiplicative_order(long a, long m);  // requires gcd(a, m) == 1

}  // namespace stk
