#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stickelberger/conductor.hpp"
#include "stickelberger/group_ring.hpp"

using namespace stk;

namespace {

GroupRingElement random_element(long m, std::mt19937& rng) {
  GroupRingElement x(m);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  for (long u : unit_table(m)->units) {
    mpq_class v(num(rng), den(rng));
    v.canonicalize();
    x.set_coeff(u, v);
  }
  return x;
}

}  // namespace

TEST_CASE("unit tables") {
  auto t12 = unit_table(12);
  CHECK(t12->units == std::vector<long>{1, 5, 7, 11});
  CHECK(t12->phi() == 4);
  CHECK(t12->position(17) == 1);   // 17 == 5 (mod 12)
  CHECK(t12->position(-1) == 3);
  CHECK(t12->position(4) == -1);
  for (int i = 0; i < t12->phi(); ++i)
    CHECK(t12->inverse[i] == i);   // every unit mod 12 is an involution

  auto t1 = unit_table(1);
  CHECK(t1->units == std::vector<long>{0});
}

TEST_CASE("element arithmetic and accessors") {
  GroupRingElement x(5);
  x.set_coeff(2, mpq_class(1, 3));
  x.set_coeff(3, -2);
  CHECK(x.coeff(7) == mpq_class(1, 3));  // reduced mod 5
  CHECK(x.coefficient_sum() == mpq_class(-5, 3));
  CHECK(x.common_denominator() == 3);
  CHECK_FALSE(x.is_zero());

  GroupRingElement y = x - x;
  CHECK(y.is_zero());
  CHECK((x + x) == x * mpq_class(2));
  CHECK((-x) * mpq_class(-1) == x);

  GroupRingElement n = norm_element(5);
  for (long u : unit_table(5)->units) CHECK(n.coeff(u) == 1);
  CHECK(half_norm_element(5) * mpq_class(2) == n);
  CHECK(zero_element(7).is_zero());
}

TEST_CASE("sigma action is a group action") {
  std::mt19937 rng(99);
  for (long m : {5L, 12L, 45L}) {
    GroupRingElement x = random_element(m, rng);
    for (long s : unit_table(m)->units)
      for (long t : unit_table(m)->units)
        CHECK(sigma_apply(s, sigma_apply(t, x)) ==
              sigma_apply(mul_mod(s, t, m), x));
    CHECK(sigma_apply(1, x) == x);
  }
}

TEST_CASE("conj_sum") {
  std::mt19937 rng(7);
  GroupRingElement x = random_element(45, rng);
  GroupRingElement c = conj_sum(x);
  CHECK(c == x + sigma_apply(45 - 1, x));
  CHECK(conj_sum(norm_element(45)) == norm_element(45) * mpq_class(2));
}

TEST_CASE("restriction is a ring map to the quotient level") {
  GroupRingElement x(15);
  x.set_coeff(2, 3);
  x.set_coeff(13, mpq_class(1, 2));
  GroupRingElement r = restriction(x, 5);
  CHECK(r.modulus() == 5);
  CHECK(r.coeff(2) == 3);
  CHECK(r.coeff(3) == mpq_class(1, 2));

  // d == 1 collapses to the coefficient sum.
  GroupRingElement s = restriction(x, 1);
  CHECK(s.modulus() == 1);
  CHECK(s.coeff(0) == x.coefficient_sum());
}

TEST_CASE("restriction of corestriction scales by the fiber size") {
  std::mt19937 rng(4242);
  for (long m : {12L, 15L, 45L, 60L}) {
    for (long d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      GroupRingElement x = random_element(d, rng);
      GroupRingElement lifted = corestriction(x, m);
      CHECK(lifted.modulus() == m);
      CHECK(restriction(lifted, d) ==
            x * mpq_class(euler_phi(m) / euler_phi(d)));
    }
  }
}

TEST_CASE("corestriction spreads over fibers") {
  GroupRingElement x(5);
  x.set_coeff(2, 1);
  GroupRingElement lifted = corestriction(x, 15);
  // Units of Z/15 over 2 (mod 5): 2 and 7.
  CHECK(lifted.coeff(2) == 1);
  CHECK(lifted.coeff(7) == 1);
  CHECK(lifted.coeff(1) == 0);
  CHECK(lifted.coefficient_sum() == 2);
}

TEST_CASE("to_string names group elements") {
  GroupRingElement x(5);
  x.set_coeff(1, mpq_class(4, 5));
  CHECK(x.to_string().find("s1") != std::string::npos);
  CHECK(x.to_string().find("4/5") != std::string::npos);
}
