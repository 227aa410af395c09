#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>
#include <stdexcept>

#include "stickelberger/conductor.hpp"

using namespace stk;

TEST_CASE("parse_conductor factors valid conductors") {
  Conductor c = parse_conductor(45);
  CHECK(c.m == 45);
  CHECK(c.factors == std::vector<long>{9, 5});
  CHECK(c.primes == std::vector<long>{3, 5});
  CHECK(c.t == 2);
  CHECK(c.phi == 24);
  CHECK(c.w == 90);
  CHECK(c.a == 0);

  c = parse_conductor(12);
  CHECK(c.factors == std::vector<long>{4, 3});
  CHECK(c.phi == 4);
  CHECK(c.w == 12);
  CHECK(c.a == 0);

  c = parse_conductor(5);
  CHECK(c.t == 1);
  CHECK(c.w == 10);
  CHECK(c.a == 0);

  CHECK(parse_conductor(60).a == 1);    // t = 3
  CHECK(parse_conductor(420).a == 3);   // t = 4
}

TEST_CASE("parse_conductor rejects invalid moduli") {
  CHECK_THROWS_AS(parse_conductor(1), std::invalid_argument);
  CHECK_THROWS_AS(parse_conductor(2), std::invalid_argument);
  CHECK_THROWS_AS(parse_conductor(6), std::invalid_argument);
  CHECK_THROWS_AS(parse_conductor(10), std::invalid_argument);
  CHECK_THROWS_AS(parse_conductor(-3), std::invalid_argument);
  CHECK_THROWS_AS(parse_conductor(0), std::invalid_argument);
}

TEST_CASE("valid conductor enumeration") {
  CHECK(valid_conductors_up_to(16) ==
        std::vector<long>{3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16});
  for (long m = 2; m <= 200; ++m)
    CHECK(is_valid_conductor(m) == (m > 1 && m % 4 != 2));
}

TEST_CASE("bezout_pair solves ux + vy == -1 with 0 <= x < v") {
  CHECK(bezout_pair(3, 5) == std::pair<long, long>{3, -2});
  CHECK(bezout_pair(2, 3) == std::pair<long, long>{1, -1});
  CHECK(bezout_pair(4, 9) == std::pair<long, long>{2, -1});
  CHECK_THROWS_AS(bezout_pair(4, 6), std::invalid_argument);

  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> dist(2, 2000);
  int found = 0;
  while (found < 200) {
    long u = dist(rng), v = dist(rng);
    if (gcd_ll(u, v) != 1) continue;
    auto [x, y] = bezout_pair(u, v);
    CHECK(u * x + v * y == -1);
    CHECK(0 <= x);
    CHECK(x < v);
    CHECK(y < 0);
    ++found;
  }
}

TEST_CASE("modular helpers") {
  CHECK(mod_reduce(-1, 7) == 6);
  CHECK(mod_reduce(14, 7) == 0);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(7, 0, 13) == 1);
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS_AS(inv_mod(6, 9), std::invalid_argument);
  CHECK(gcd_ll(12, 18) == 6);
  CHECK(gcd_ll(0, 5) == 5);

  // mul_mod must survive products overflowing 64 bits.
  long big = 3037000499L;  // ~ 2^31.5, big^2 > 2^63
  CHECK(mul_mod(big, big, 1000000007L) ==
        mpz_class(mpz_class(big) * big % 1000000007L).get_si());
}

TEST_CASE("euler_phi, primality, multiplicative order") {
  long phis[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (long n = 1; n <= 12; ++n) CHECK(euler_phi(n) == phis[n]);

  CHECK(is_prime_small(2));
  CHECK(is_prime_small(97));
  CHECK_FALSE(is_prime_small(1));
  CHECK_FALSE(is_prime_small(91));

  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 5) == 4);
  CHECK(multiplicative_order(1, 9) == 1);

  std::mt19937 rng(777);
  std::uniform_int_distribution<long> dist(3, 500);
  for (int i = 0; i < 100; ++i) {
    long m = dist(rng), a = dist(rng) % m;
    if (a < 2 || gcd_ll(a, m) != 1) continue;
    long d = multiplicative_order(a, m);
    CHECK(pow_mod(a, d, m) == 1);
    CHECK(euler_phi(m) % d == 0);
  }
}
