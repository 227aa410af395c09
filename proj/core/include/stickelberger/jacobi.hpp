// Residue fields F_ell[x]/(g) with g a canonical factor of Phi_m mod ell,
// power-residue characters, Jacobi sums as exact elements of Z[zeta_m], and
// the valuation / norm checks matching them to the short basis elements.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "stickelberger/conductor.hpp"
#include "stickelberger/cyclotomic.hpp"
#include "stickelberger/stickelberger.hpp"

namespace stk {

// F_q, q = ell^f with f the order of ell mod m.  Elements are packed as
// base-ell digit strings (value sum c_i ell^i < q).  The arithmetic model is
// F_ell[y]/(h) for a primitive h; the canonical defining polynomial g | Phi_m
// and the root eta (class of x in F_ell[x]/(g)) are carried alongside, with
// eta realized in the model as eta_pack.  chi_k[u] is the exponent k with
// u^((q-1)/m) = eta^k, the character underlying every Jacobi sum here.
struct ResidueField {
  long m = 0;
  long ell = 0;
  long f = 0;
  long q = 0;

  std::vector<long> defining_poly;  // g: constant term first, monic, length f+1
  std::vector<long> field_poly;     // h: the arithmetic modulus, length f+1
  long eta_pack = 0;                // eta inside F_ell[y]/(h)
  long eta_exponent = 0;            // eta = zeta0^{j0}, the smallest j0 in its orbit
  long gamma_pack = 0;              // generator of F^*; the walk multiplies by it

  std::vector<std::uint32_t> chi_k;        // size q; chi_k[0] == m (sentinel)
  std::vector<std::vector<long>> pair_counts;  // m x m: #{w: k(w)=i, k(1-w)=j}

  long mul(long a, long b) const;
  long mul_by_gamma(long a) const;  // O(f) shift-multiply, for full-group walks
  long pow_pack(long a, long e) const;
  // Evaluate an integer-coefficient polynomial (constant first) at a point.
  long eval(const std::vector<mpz_class>& coeffs, long point) const;

  long chi_exponent(long pack) const;

 private:
  friend ResidueField residue_field(long m, long ell, long max_q);
  std::vector<std::vector<long>> red_rows_;  // y^(f+i) mod h
};

// Builds the field; throws std::domain_error if ell^f exceeds max_q and
// std::invalid_argument if ell is not prime or divides m.  For f = 1 the
// canonical g = x - eta uses the smallest root eta of Phi_m mod ell;
// otherwise g has the lexicographically least coefficients (constant first)
// among the irreducible factors of Phi_m mod ell.
ResidueField residue_field(long m, long ell, long max_q = 10000000);

// J(b, c) = -sum_{w != 0,1} chi^b(w) chi^c(1-w) in Z[zeta_m]; requires
// b, c, b + c all nonzero mod m.
CyclotomicInteger jacobi_sum(const ResidueField& F, long b, long c);

// The Jacobi sum generating L^{alpha_m(b)}, with arguments chosen by the
// same three-way split as the alpha decomposition.
struct JacobiGenerator {
  long b = 0;
  int kind = 0;
  long arg1 = 0;
  long arg2 = 0;
  CyclotomicInteger value;
};
JacobiGenerator generator_for_alpha(const ResidueField& F, long b);

// Proves (J) = L^alpha = prod_{s in supp alpha} sigma_s(L) three ways:
// exact Z-lattice equality of the two ideals (L = (ell, g(zeta))), the
// evaluation zero set {s : J(eta^{s^{-1}}) = 0} against its prediction (the
// union of <ell>-orbits meeting the support, which is the support itself
// when ell splits completely), and |Norm(J)| = ell^{f phi(m)/2}.
struct JacobiVerification {
  bool ideal_ok = false;
  bool zero_set_ok = false;
  bool norm_ok = false;
  std::vector<long> zero_set;
  std::vector<long> predicted_zero_set;
  mpz_class norm_abs;
  bool ok() const { return ideal_ok && zero_set_ok && norm_ok; }
};
JacobiVerification verify_generator(const ResidueField& F, long b);

// Gauss sums as exact vectors over Z[x]/(x^{m ell} - 1) (index = exponent of
// x, with zeta_m = x^ell and zeta_ell = x^m); only for m * ell <= 200.
std::vector<mpz_class> gauss_sum_vector(const ResidueField& F, long b);
// g(chi^b) g(chi^c) + J(b,c) g(chi^{b+c}) == 0 (mod Phi_{m ell}).
bool gauss_jacobi_identity(const ResidueField& F, long b, long c);
// g(chi^b) g(chi^{-b}) == chi^b(-1) q (mod Phi_{m ell}).
bool gauss_norm_identity(const ResidueField& F, long b);

// The `count` smallest primes ell < ell_bound, coprime to m, whose residue
// field fits under max_q; `skipped` lists smaller qualifying primes whose
// field would be too large.
struct SmallPrimeSelection {
  std::vector<long> chosen;
  std::vector<long> skipped;
};
SmallPrimeSelection small_unramified_primes(long m, std::size_t count,
                                            long ell_bound,
                                            long max_q = 10000000);

}  // namespace stk
