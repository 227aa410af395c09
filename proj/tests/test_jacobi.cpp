#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "stickelberger/conductor.hpp"
#include "stickelberger/jacobi.hpp"
#include "stickelberger/stickelberger.hpp"

using namespace stk;

TEST_CASE("residue field construction, split case") {
  ResidueField F = residue_field(3, 7);
  CHECK(F.f == 1);
  CHECK(F.q == 7);
  // g = x - 2 for the smallest root 2 of Phi_3 mod 7.
  CHECK(F.defining_poly == std::vector<long>{5, 1});
  CHECK(F.eta_pack == 2);
  CHECK(F.chi_k[3] == 1u);
  CHECK(F.chi_k[6] == 0u);
  CHECK(F.chi_k[0] == 3u);  // sentinel == m

  // chi is a character: chi(ab) == chi(a) chi(b).
  for (long a = 1; a < 7; ++a)
    for (long b = 1; b < 7; ++b)
      CHECK((F.chi_exponent(a) + F.chi_exponent(b)) % 3 ==
            F.chi_exponent(F.mul(a, b)));
}

TEST_CASE("residue field construction, inert case") {
  ResidueField F = residue_field(5, 2);
  CHECK(F.f == 4);
  CHECK(F.q == 16);
  CHECK(F.defining_poly == std::vector<long>{1, 1, 1, 1, 1});

  // eta is a primitive m-th root: eta^5 == 1, eta != 1.
  long e5 = F.pow_pack(F.eta_pack, 5);
  CHECK(e5 == 1);
  CHECK(F.eta_pack != 1);

  // pair_counts tallies all w except 0 and 1.
  long total = 0;
  for (long i = 0; i < 5; ++i)
    for (long j = 0; j < 5; ++j) total += F.pair_counts[i][j];
  CHECK(total == F.q - 2);
}

TEST_CASE("residue field rejects bad parameters") {
  CHECK_THROWS_AS(residue_field(5, 5), std::invalid_argument);   // ramified
  CHECK_THROWS_AS(residue_field(5, 4), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(residue_field(45, 7), std::domain_error);      // 7^12 too big
  CHECK_THROWS_AS(residue_field(7, 2, 4), std::domain_error);    // 2^3 > 4
}

TEST_CASE("jacobi sums") {
  ResidueField F = residue_field(3, 7);
  CyclotomicInteger j = jacobi_sum(F, 1, 1);
  REQUIRE(j.coeffs().size() == 2);
  CHECK(j.coeff(0) == 1);
  CHECK(j.coeff(1) == 3);   // J == 1 + 3 zeta_3
  CHECK(j.norm() == 7);     // q == ell for a degree-1 prime

  CHECK_THROWS_AS(jacobi_sum(F, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_sum(F, 1, 2), std::invalid_argument);  // b + c == 0

  // J(b, c) is symmetric.
  ResidueField F7 = residue_field(7, 2);
  for (long b = 1; b < 7; ++b)
    for (long c = 1; c < 7; ++c) {
      if ((b + c) % 7 == 0) continue;
      CHECK(jacobi_sum(F7, b, c) == jacobi_sum(F7, c, b));
    }
}

TEST_CASE("generator dispatch mirrors the alpha decomposition") {
  ResidueField F5 = residue_field(5, 2);
  JacobiGenerator g = generator_for_alpha(F5, 1);
  CHECK(g.kind == 3);
  CHECK(g.arg1 == 2);
  CHECK(g.arg2 == 2);
  g = generator_for_alpha(F5, 2);
  CHECK(g.kind == 2);
  CHECK(g.arg1 == 1);
  CHECK(g.arg2 == 1);

  ResidueField F15 = residue_field(15, 2);
  g = generator_for_alpha(F15, 7);
  CHECK(g.kind == 1);
  CHECK(g.arg1 == 3);
  CHECK(g.arg2 == 5);

  for (long m : {5L, 7L, 9L, 15L}) {
    ResidueField F = residue_field(m, 2);
    Conductor c = parse_conductor(m);
    for (long b : index_set(c, IndexSetKind::MPrime)) {
      JacobiGenerator gen = generator_for_alpha(F, b);
      AlphaDecomposition d = alpha_decomposition(c, b);
      CHECK(gen.kind == d.kind);
    }
  }
}

TEST_CASE("verified generators across split and inert primes") {
  // 2 is inert in the 5th cyclotomic field; 11 splits completely.
  for (long ell : {2L, 11L}) {
    ResidueField F = residue_field(5, ell);
    for (long b : {1L, 2L}) {
      JacobiVerification v = verify_generator(F, b);
      CHECK(v.ideal_ok);
      CHECK(v.zero_set_ok);
      CHECK(v.norm_ok);
      mpz_class expect;
      mpz_ui_pow_ui(expect.get_mpz_t(), ell, F.f * 2);
      CHECK(v.norm_abs == expect);
    }
  }

  // Split case: the zero set is exactly the support of alpha.
  ResidueField F = residue_field(7, 29);
  JacobiVerification v = verify_generator(F, 2);
  CHECK(v.ok());
  CHECK(v.zero_set == std::vector<long>{1, 4, 5});
  CHECK(v.zero_set == alpha(parse_conductor(7), 2).support);

  // Inert case: the zero set is a union of <ell>-orbits.
  v = verify_generator(residue_field(5, 2), 1);
  CHECK(v.ok());
  CHECK(v.zero_set == std::vector<long>{1, 2, 3, 4});
  CHECK(v.predicted_zero_set == v.zero_set);
}

TEST_CASE("gauss sum identities") {
  ResidueField F37 = residue_field(3, 7);
  for (long b = 1; b < 3; ++b) {
    CHECK(gauss_norm_identity(F37, b));
    for (long c = 1; c < 3; ++c) {
      if ((b + c) % 3 == 0) continue;
      CHECK(gauss_jacobi_identity(F37, b, c));
    }
  }

  ResidueField F72 = residue_field(7, 2);
  CHECK(gauss_jacobi_identity(F72, 1, 2));
  CHECK(gauss_norm_identity(F72, 3));

  CHECK_THROWS_AS(gauss_sum_vector(residue_field(45, 181), 1),
                  std::domain_error);  // m * ell > 200
  CHECK_THROWS_AS(gauss_sum_vector(F37, 0), std::invalid_argument);
}

TEST_CASE("small unramified prime selection") {
  SmallPrimeSelection sel = small_unramified_primes(5, 3, 100);
  REQUIRE(sel.chosen.size() == 3);
  CHECK(sel.chosen == std::vector<long>{2, 3, 7});
  CHECK(sel.skipped.empty());

  // Primes whose residue field would be too large are reported, not chosen.
  sel = small_unramified_primes(45, 3, 100, 10000);
  for (long ell : sel.skipped) {
    long f = multiplicative_order(ell, 45);
    double q = 1;
    for (long i = 0; i < f; ++i) q *= static_cast<double>(ell);
    CHECK(q > 10000);
  }
  for (long ell : sel.chosen) {
    long f = multiplicative_order(ell, 45);
    long q = 1;
    for (long i = 0; i < f; ++i) q *= ell;
    CHECK(q <= 10000);
  }
  // Everything below the bound is accounted for, in order.
  std::vector<long> all = sel.chosen;
  all.insert(all.end(), sel.skipped.begin(), sel.skipped.end());
  std::sort(all.begin(), all.end());
  long last = all.empty() ? 2 : all.back();
  for (long p = 2; p <= last; ++p) {
    if (!is_prime_small(p) || 45 % p == 0) continue;
    CHECK(std::find(all.begin(), all.end(), p) != all.end());
  }
}
