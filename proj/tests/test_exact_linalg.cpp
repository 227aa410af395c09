#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stickelberger/exact_linalg.hpp"

using namespace stk;

namespace {

IntMatrix make(long r, long c, std::initializer_list<long> v) {
  IntMatrix m(r, c);
  long i = 0;
  for (long x : v) m.a[i++] = x;
  return m;
}

IntMatrix random_matrix(long r, long c, std::mt19937& rng) {
  std::uniform_int_distribution<long> dist(-9, 9);
  IntMatrix m(r, c);
  for (auto& x : m.a) x = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("hnf canonical form") {
  IntMatrix h = hnf(make(2, 2, {4, 2, 2, 0}));
  CHECK(h == make(2, 2, {2, 0, 0, 2}));

  // Zero rows are dropped; the result is idempotent.
  IntMatrix r = make(3, 2, {1, 2, 2, 4, 3, 6});
  IntMatrix h2 = hnf(r);
  CHECK(h2.rows == 1);
  CHECK(h2 == make(1, 2, {1, 2}));
  CHECK(hnf(h2) == h2);
}

TEST_CASE("hnf generates the same lattice") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(4, 5, rng);
    IntMatrix h = hnf(m);
    CHECK(hnf(h) == h);
    for (long i = 0; i < m.rows; ++i) {
      std::vector<mpz_class> row(m.cols);
      for (long j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
      CHECK(lattice_contains(h, row));
    }
    for (long i = 0; i < h.rows; ++i) {
      // Pivots positive, entries above reduced.
      long p = 0;
      while (p < h.cols && h.at(i, p) == 0) ++p;
      REQUIRE(p < h.cols);
      CHECK(h.at(i, p) > 0);
      for (long k = 0; k < i; ++k) {
        CHECK(h.at(k, p) >= 0);
        CHECK(h.at(k, p) < h.at(i, p));
      }
    }
  }
}

TEST_CASE("lattice_contains") {
  IntMatrix h = hnf(make(2, 2, {2, 0, 0, 3}));
  CHECK(lattice_contains(h, {4, 9}));
  CHECK_FALSE(lattice_contains(h, {1, 3}));
  CHECK(lattice_contains(h, {0, 0}));
}

TEST_CASE("det_bareiss") {
  CHECK(det_bareiss(IntMatrix::identity(5)) == 1);
  CHECK(det_bareiss(make(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(det_bareiss(make(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1})) == 5);
  CHECK(det_bareiss(make(2, 2, {1, 2, 2, 4})) == 0);

  // det(A^T A) >= 0 sanity on random matrices against expansion by minors.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_matrix(3, 3, rng);
    mpz_class d = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                  m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                  m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    CHECK(det_bareiss(m) == d);
  }
}

TEST_CASE("left_kernel and rank") {
  IntMatrix m = make(2, 2, {1, 2, 2, 4});
  CHECK(rank_of(m) == 1);
  IntMatrix k = left_kernel(m);
  REQUIRE(k.rows == 1);
  // x * m == 0.
  CHECK(k.at(0, 0) * m.at(0, 0) + k.at(0, 1) * m.at(1, 0) == 0);
  CHECK(k.at(0, 0) * m.at(0, 1) + k.at(0, 1) * m.at(1, 1) == 0);

  CHECK(rank_of(IntMatrix::identity(4)) == 4);
  CHECK(left_kernel(IntMatrix::identity(4)).rows == 0);
}

TEST_CASE("solve_scaled") {
  IntMatrix a = make(2, 2, {2, 1, 1, 1});
  auto [d, x] = solve_scaled(a, IntMatrix::identity(2));
  REQUIRE(d == 1);
  CHECK(x == make(2, 2, {1, -1, -1, 2}));  // d * A^{-1}
  CHECK_THROWS_AS(solve_scaled(make(2, 2, {1, 2, 2, 4}), IntMatrix::identity(2)),
                  std::domain_error);
}

TEST_CASE("lattice_intersect_integral") {
  // Z-multiples of (1/2, 1/2) meet Z^2 in the lattice generated by (1, 1).
  RatMatrix r(1, 2);
  r.at(0, 0) = mpq_class(1, 2);
  r.at(0, 1) = mpq_class(1, 2);
  IntMatrix h = lattice_intersect_integral(r);
  CHECK(h == make(1, 2, {1, 1}));

  // An integral lattice is its own integral sublattice.
  RatMatrix r2 = to_rational(make(2, 2, {2, 0, 0, 3}));
  CHECK(lattice_intersect_integral(r2) == make(2, 2, {2, 0, 0, 3}));

  // (1/2)e1 and (1/3)e2 generate a superlattice of Z^2.
  RatMatrix r3(2, 2);
  r3.at(0, 0) = mpq_class(1, 2);
  r3.at(1, 1) = mpq_class(1, 3);
  CHECK(lattice_intersect_integral(r3) == IntMatrix::identity(2));

  // Mixed denominators inside one row.
  RatMatrix r4(1, 2);
  r4.at(0, 0) = mpq_class(1, 2);
  r4.at(0, 1) = mpq_class(1, 3);
  CHECK(lattice_intersect_integral(r4) == make(1, 2, {3, 2}));
}

TEST_CASE("rational scaling helpers") {
  RatMatrix r(1, 3);
  r.at(0, 0) = mpq_class(1, 2);
  r.at(0, 1) = mpq_class(2, 3);
  r.at(0, 2) = 1;
  CHECK(denominator_lcm(r) == 6);
  IntMatrix s = scale_to_integer(r, 6);
  CHECK(s == make(1, 3, {3, 4, 6}));
}

TEST_CASE("transition_determinant") {
  RatMatrix from = to_rational(IntMatrix::identity(2));
  RatMatrix to = to_rational(make(2, 2, {2, 1, 1, 1}));
  CHECK(transition_determinant(from, to) == 1);
  CHECK(transition_determinant(to, from) == 1);

  RatMatrix half(2, 2);
  half.at(0, 0) = mpq_class(1, 2);
  half.at(1, 1) = 1;
  CHECK(transition_determinant(from, half) == mpq_class(1, 2));

  // Different spans and shape mismatches are rejected.
  RatMatrix e1 = to_rational(make(1, 2, {1, 0}));
  RatMatrix e2 = to_rational(make(1, 2, {0, 1}));
  CHECK_THROWS_AS(transition_determinant(e1, e2), std::domain_error);
  CHECK_THROWS_AS(transition_determinant(from, e1), std::invalid_argument);
}
