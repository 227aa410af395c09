#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "stickelberger/class_number.hpp"
#include "stickelberger/conductor.hpp"
#include "stickelberger/stickelberger.hpp"

using namespace stk;

TEST_CASE("coefficient matrix") {
  CoefficientMatrix cm = coefficient_matrix(parse_conductor(5));
  CHECK(cm.row_labels == std::vector<long>{1, 2});
  CHECK(cm.col_labels == std::vector<long>{1, 2});
  REQUIRE(cm.A.rows == 2);
  CHECK(cm.A.at(0, 0) == 1);
  CHECK(cm.A.at(0, 1) == 1);
  CHECK(cm.A.at(1, 0) == 1);
  CHECK(cm.A.at(1, 1) == 0);
}

TEST_CASE("coefficient matrix columns pair up to 1") {
  for (long m : valid_conductors_up_to(60)) {
    Conductor c = parse_conductor(m);
    CoefficientMatrix cm = coefficient_matrix(c);
    std::vector<long> bs = index_set(c, IndexSetKind::MPrime);
    REQUIRE(cm.row_labels == bs);
    for (std::size_t i = 0; i < bs.size(); ++i) {
      ShortElement e = alpha(c, bs[i]);
      for (long j = 0; j < cm.A.cols; ++j) {
        long s = cm.col_labels[j];
        bool in_support =
            std::find(e.support.begin(), e.support.end(), s) != e.support.end();
        bool other_in =
            std::find(e.support.begin(), e.support.end(), m - s) != e.support.end();
        CHECK(cm.A.at(i, j) == (in_support ? 1 : 0));
        CHECK(in_support + other_in == 1);
      }
    }
  }
}

TEST_CASE("determinant route at anchor conductors") {
  auto rep = h_minus_det(parse_conductor(5));
  CHECK(rep.n == 2);
  CHECK(rep.det_abs == 2);
  CHECK(rep.index == 1);
  CHECK(rep.h == 1);

  CHECK(h_minus_det(parse_conductor(3)).h == 1);
  CHECK(h_minus_det(parse_conductor(4)).h == 1);
  CHECK(h_minus_det(parse_conductor(12)).det_abs == 2);
  CHECK(h_minus_det(parse_conductor(12)).h == 1);

  rep = h_minus_det(parse_conductor(23));
  CHECK(rep.n == 11);
  CHECK(rep.det_abs == 3072);
  CHECK(rep.index == 3);
  CHECK(rep.h == 3);

  rep = h_minus_det(parse_conductor(39));
  CHECK(rep.det_abs == 4096);
  CHECK(rep.h == 2);

  CHECK(index_A_S(parse_conductor(23)) == 3);

  // h == 1 below the first nontrivial conductor.
  for (long m : valid_conductors_up_to(22))
    CHECK(h_minus_det(parse_conductor(m)).h == 1);
}

TEST_CASE("index accounts for the 2-power factor") {
  // t == 3 gives a == 1, so index == 2 * h there.
  Conductor c = parse_conductor(60);
  REQUIRE(c.a == 1);
  auto rep = h_minus_det(c);
  CHECK(rep.index == rep.h * 2);
  CHECK(rep.h == 1);
}

TEST_CASE("upper bound values") {
  BoundValue b5 = upper_bound(parse_conductor(5));
  CHECK(b5.is_rational());
  CHECK(b5.scale == 1);
  CHECK(b5.decimal(10) == "1.000000000e+00");

  BoundValue b23 = upper_bound(parse_conductor(23));
  CHECK_FALSE(b23.is_rational());
  CHECK(b23.radicand == 11);
  CHECK(b23.scale == mpq_class(161051, 1024));
  CHECK(b23.decimal(10) == "5.216266983e+02");
  CHECK(b23.decimal(50) ==
        "5.2162669835110107529278225798198316516908353257393e+02");

  BoundValue lb = louboutin_bound_4p(23);
  CHECK(lb.radicand == 23);
  CHECK(lb.decimal(10) == "2.077974874e+03");

  // phi == 0 mod 4 keeps the bound rational.
  CHECK(upper_bound(parse_conductor(92)).is_rational());
}

TEST_CASE("exact bound comparisons") {
  BoundValue b23 = upper_bound(parse_conductor(23));
  CHECK(bound_at_least(b23, 3));
  CHECK(bound_at_least(b23, 521));
  CHECK_FALSE(bound_at_least(b23, 522));
  CHECK(bound_at_least(upper_bound(parse_conductor(5)), 1));
  CHECK_FALSE(bound_at_least(upper_bound(parse_conductor(5)), 2));

  CHECK(bound_leq(upper_bound(parse_conductor(5)), b23));
  CHECK_FALSE(bound_leq(b23, upper_bound(parse_conductor(5))));
  CHECK(bound_leq(b23, b23));
  CHECK(bound_leq(b23, louboutin_bound_4p(23)));
}

TEST_CASE("decimal rendering is exact truncation") {
  BoundValue v;
  v.scale = mpq_class(1, 3);
  v.radicand = 1;
  CHECK(v.decimal(5) == "3.3333e-01");
  v.scale = 2;
  v.radicand = 2;  // 2 sqrt(2) = 2.8284271...
  CHECK(v.decimal(8) == "2.8284271e+00");
  v.scale = mpq_class(1, 100);
  v.radicand = 1;
  CHECK(v.decimal(3) == "1.00e-02");
  v.scale = 0;
  CHECK(v.decimal(4) == "0");
  v.scale = -1;
  CHECK_THROWS_AS(v.decimal(4), std::invalid_argument);
}
