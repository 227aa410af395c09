// Dirichlet characters mod m with exact values in Z[zeta_n], and the
// analytic relative class number computed from generalized Bernoulli
// numbers B_{1,chi}, one Galois orbit at a time.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <vector>

#include "stickelberger/conductor.hpp"
#include "stickelberger/cyclotomic.hpp"

namespace stk {

// (Z/m)^* as a product of cyclic groups with explicit generators: one
// primitive root per odd prime power, <-1> and <5> for 8 | m, <-1> for
// 4 || m.  Discrete logs are tabulated for every unit.
struct UnitGroupStructure {
  long m = 0;
  std::vector<long> prime_powers;   // q_i = p_i^{e_i}, ascending by p_i
  std::vector<long> gens;           // CRT-lifted generators mod m
  std::vector<long> orders;         // d_i = order of gens[i]
  std::vector<std::size_t> factor_q;  // index into prime_powers per factor
  long lambda = 1;                  // lcm of the d_i
  std::vector<long> dlog_pack;      // mixed-radix exponent tuple, -1 if not a unit

  bool is_unit(long u) const;
  std::vector<long> exps_of(long u) const;
};

std::shared_ptr<const UnitGroupStructure> unit_group(long m);

// chi(gens[i]) = zeta_{d_i}^{exps[i]}.
struct DirichletCharacter {
  std::shared_ptr<const UnitGroupStructure> G;
  std::vector<long> exps;
  long order = 1;
  long conductor = 1;
  bool odd = false;

  long modulus() const { return G->m; }
  // e with chi(a) = zeta_order^e; a must be a unit mod the modulus.
  long value_exponent(long a) const;
  // The associated primitive character at its conductor f, defined for any
  // a coprime to f (a is lifted across the CRT away from f).
  long primitive_value_exponent(long a) const;
};

std::vector<DirichletCharacter> all_characters(long m);
std::vector<DirichletCharacter> odd_characters(long m);

// Indices grouped by Galois orbit (chi ~ chi^k, gcd(k, order) = 1).
std::vector<std::vector<std::size_t>> character_orbits(
    const std::vector<DirichletCharacter>& chars);

// z = sum_{a<f, (a,f)=1} a * chi*(a) in Z[zeta_order]; B_{1,chi} = z / f.
CyclotomicInteger b1_numerator(const DirichletCharacter& chi);

// h^- = Q w prod_{chi odd} (-B_{1,chi}/2), evaluated exactly per orbit as
// +-Norm(z) / (2f)^{phi(order)}.
mpz_class h_minus_analytic(const Conductor& c);

}  // namespace stk
