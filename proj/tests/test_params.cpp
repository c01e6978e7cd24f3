#include <doctest.h>

#include <stdexcept>

#include "scangame/params.hpp"

using namespace scangame;

namespace {

NetworkParams base() {
  NetworkParams p;
  p.U = 1.0;
  p.V = 1.0;
  p.C_S = 0.4;
  p.C_I = 0.1;
  p.F = 0.3;
  p.a = 0.01;
  p.b = 0.3;
  p.c = 0.3;
  p.q0 = 0.9;
  return p;
}

}  // namespace

TEST_CASE("validation accepts the default scenario parameters") {
  CHECK_NOTHROW(base().ensure_valid());
}

TEST_CASE("validation rejects each violated bound with a message") {
  auto expect_reject = [](NetworkParams p) {
    CHECK_THROWS_AS(p.ensure_valid(), std::domain_error);
  };
  NetworkParams p = base();
  p.U = 0.0;
  expect_reject(p);
  p = base();
  p.F = -0.1;
  expect_reject(p);
  p = base();
  p.a = 0.0;
  expect_reject(p);
  p = base();
  p.a = 0.2;
  p.c = 0.1;  // a <= c violated
  expect_reject(p);
  p = base();
  p.c = 0.35;  // c <= b violated
  expect_reject(p);
  p = base();
  p.b = 0.5;
  p.c = 0.5;  // b < 1/2 violated
  expect_reject(p);
  p = base();
  p.q0 = 1.5;
  expect_reject(p);
}

TEST_CASE("derived thresholds are pure functions of the parameters") {
  NetworkParams p = base();
  const DerivedQuantities d = derive(p);
  CHECK(d.T == doctest::Approx((1.0 - 0.3 - 0.1) / 1.0).epsilon(0));
  CHECK(d.R == doctest::Approx((0.4 - 0.3) / 1.0).epsilon(0));
  REQUIRE(d.R_q0.has_value());
  CHECK(*d.R_q0 == doctest::Approx((0.1 - 0.01 * 0.1) / 0.9).epsilon(0));
  // Recomputation round-trips exactly.
  const DerivedQuantities again = derive(p);
  CHECK(d.T == again.T);
  CHECK(d.R == again.R);
  CHECK(*d.R_q0 == *again.R_q0);
}

TEST_CASE("R_q0 is rejected at q0 = 0, not divided by zero") {
  NetworkParams p = base();
  p.q0 = 0.0;
  CHECK_NOTHROW(p.ensure_valid());
  CHECK(!derive(p).R_q0.has_value());
  CHECK_THROWS_WITH_AS(require_r_q0(p),
                       "R_q0 undefined: q0 = 0 (threshold requires q0 > 0)",
                       std::domain_error);
}

TEST_CASE("response line L(x) = (T-x)/2") {
  NetworkParams p = base();
  p.F = 0.2;  // T = 0.7
  CHECK(response_line(p, 0.7) == doctest::Approx(0.0));
  CHECK(response_line(p, 0.3) == doctest::Approx(0.2));
  // strictly decreasing with slope -1/2
  CHECK(response_line(p, 0.1) - response_line(p, 0.2) == doctest::Approx(0.05));
}

TEST_CASE("invader payoff: hand-evaluated values") {
  NetworkParams p = base();
  p.F = 0.0;
  p.C_S = 0.4;
  p.C_I = 0.1;
  // all terms vanish at x = y = 0 (ranges widened to allow the origin probe)
  NetworkParams wide = p;
  wide.a = 1e-9;
  CHECK(payoff_invader(wide, 1e-9, 1e-9) == doctest::Approx(0.0).epsilon(1e-8));

  p = base();
  p.F = 0.2;
  p.C_I = 0.1;
  // U(1-x-y)y - F(x+y) - C_I y = 0.5*0.2 - 0.2*0.5 - 0.1*0.2
  CHECK(payoff_invader(p, 0.3, 0.2) == doctest::Approx(-0.02).epsilon(1e-12));
}

TEST_CASE("scanner payoff: hand-evaluated values and affinity in x") {
  NetworkParams p = base();
  p.F = 0.2;
  CHECK(payoff_scanner(p, 0.3, 0.2) == doctest::Approx(-0.12).epsilon(1e-12));

  // slope in x equals F + V y - C_S (finite differences)
  const double h = 1e-6;
  for (double y : {0.01, 0.1, 0.25}) {
    const double slope = (payoff_scanner(p, 0.2 + h, y) - payoff_scanner(p, 0.2 - h, y)) / (2 * h);
    CHECK(slope == doctest::Approx(p.F + p.V * y - p.C_S).epsilon(1e-6));
    // second difference vanishes: affine
    const double second = payoff_scanner(p, 0.2 + h, y) + payoff_scanner(p, 0.2 - h, y) -
                          2 * payoff_scanner(p, 0.2, y);
    CHECK(second == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("invader payoff is strictly concave in y with the known vertex") {
  NetworkParams p = base();
  p.F = 0.2;
  p.b = 0.49;
  p.c = 0.45;  // keep the vertex probes inside [a,c]
  const double h = 1e-4;
  for (double x : {0.01, 0.15, 0.3}) {
    const double second = payoff_invader(p, x, 0.15 + h) + payoff_invader(p, x, 0.15 - h) -
                          2 * payoff_invader(p, x, 0.15);
    CHECK(second < 0.0);
    // vertex of the quadratic at (U(1-x)-F-C_I)/(2U)
    const double vertex = (p.U * (1.0 - x) - p.F - p.C_I) / (2.0 * p.U);
    const double slope_at_vertex =
        (payoff_invader(p, x, vertex + h) - payoff_invader(p, x, vertex - h)) / (2 * h);
    CHECK(slope_at_vertex == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("payoff range checks name the violated bound") {
  NetworkParams p = base();
  CHECK_THROWS_AS(payoff_invader(p, 0.4, 0.2), std::domain_error);
  CHECK_THROWS_AS(payoff_invader(p, 0.2, 0.35), std::domain_error);
  CHECK_THROWS_AS(payoff_scanner(p, 0.005, 0.2), std::domain_error);
}
