#include <doctest.h>

#include <cmath>

#include "scangame/bayesian.hpp"
#include "scangame/linear_equilibria.hpp"
#include "scangame/payoffs.hpp"
#include "scangame/rng.hpp"

using namespace scangame;

namespace {

NetworkParams section_v(double F, double q0) {
  NetworkParams p;
  p.U = 1.0;
  p.V = 1.0;
  p.C_S = 0.4;
  p.C_I = 0.1;
  p.F = F;
  p.a = 0.01;
  p.b = 0.3;
  p.c = 0.3;
  p.q0 = q0;
  return p;
}

NetworkParams random_params(SplitMix64& rng) {
  NetworkParams p;
  p.U = 0.5 + 1.5 * rng.uniform01();
  p.V = 0.5 + 1.5 * rng.uniform01();
  p.C_S = 0.05 + 1.2 * rng.uniform01();
  p.C_I = 0.05 + 0.8 * rng.uniform01();
  p.F = rng.uniform01();
  p.a = 0.005 + 0.1 * rng.uniform01();
  p.b = p.a + 0.05 + (0.48 - p.a - 0.05) * rng.uniform01();
  p.c = p.b;
  p.q0 = 0.05 + 0.95 * rng.uniform01();
  return p;
}

TypeDistribution random_pieces(SplitMix64& rng, double a, double b) {
  const int n = 1 + static_cast<int>(rng.bounded(3));
  // random cut points inside [a,b]
  std::vector<double> cuts{a, b};
  for (int i = 1; i < n; ++i) cuts.push_back(a + (b - a) * rng.uniform01());
  std::sort(cuts.begin(), cuts.end());
  std::vector<TypePiece> pieces;
  double mass = 0.0;
  for (int i = 0; i < n; ++i) {
    const double density = 0.1 + rng.uniform01();
    pieces.push_back({cuts[i], cuts[i + 1], density});
    mass += density * (cuts[i + 1] - cuts[i]);
  }
  for (TypePiece& pc : pieces) pc.density /= mass;
  return TypeDistribution::pieces(std::move(pieces));
}

// Brute-force quadrature of the aggregate response, one million panels.
double aggregate_by_quadrature(const NetworkParams& p, const TypeDistribution& q, double x) {
  const double level = std::max(p.a, response_line(p, x));
  double acc = 0.0;
  for (const TypePiece& pc : q.piece_list()) {
    const long n = 1000000;
    const double h = (pc.hi - pc.lo) / n;
    double piece = 0.0;
    for (long i = 0; i < n; ++i) piece += std::min(pc.lo + (i + 0.5) * h, level);
    acc += pc.density * piece * h;
  }
  return acc;
}

}  // namespace

TEST_CASE("aggregate response: point mass reduces to the single-type response") {
  const NetworkParams p = section_v(0.2, 0.9);
  const TypeDistribution q = TypeDistribution::point(0.22);
  for (double x : {0.01, 0.17, 0.3})
    CHECK(aggregate_best_response(p, q, x) ==
          doctest::Approx(best_response_invader(p, x, 0.22)).epsilon(1e-15));
}

TEST_CASE("aggregate response: worked uniform-prior value at x = b") {
  const NetworkParams p = section_v(0.3, 0.9);  // T = 0.6, L(0.3) = 0.15
  const TypeDistribution q = TypeDistribution::uniform(0.039, 0.3);
  const double expect =
      ((0.15 * 0.15 - 0.039 * 0.039) / 2.0 + 0.15 * (0.3 - 0.15)) / (0.3 - 0.039);
  CHECK(aggregate_best_response(p, q, 0.3) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(expect == doctest::Approx(0.12639).epsilon(1e-4));
  // closed form against the million-panel oracle
  CHECK(aggregate_best_response(p, q, 0.3) ==
        doctest::Approx(aggregate_by_quadrature(p, q, 0.3)).epsilon(1e-8));
}

TEST_CASE("aggregate response saturates at the prior mean when L(x) >= b") {
  NetworkParams p = section_v(0.0, 0.9);
  p.C_I = 0.05;  // T = 0.95, L(a) = 0.47 >= b
  const TypeDistribution q = TypeDistribution::uniform(0.039, 0.3);
  CHECK(aggregate_best_response(p, q, p.a) == doctest::Approx(q.mean()).epsilon(1e-14));
  CHECK(aggregate_best_response(p, q, p.a) ==
        doctest::Approx(aggregate_by_quadrature(p, q, p.a)).epsilon(1e-8));
}

TEST_CASE("aggregate response is non-increasing in x") {
  SplitMix64 rng(20240919);
  for (int trial = 0; trial < 40; ++trial) {
    const NetworkParams p = random_params(rng);
    const TypeDistribution q = rng.uniform01() < 0.5
                                   ? random_pieces(rng, p.a, p.b)
                                   : TypeDistribution::atoms({{p.a + (p.b - p.a) * 0.3, 0.5},
                                                              {p.a + (p.b - p.a) * 0.9, 0.5}});
    double prev = 1e300;
    for (int i = 0; i <= 64; ++i) {
      const double x = p.a + (p.b - p.a) * i / 64.0;
      const double value = aggregate_best_response(p, q, x);
      CHECK(value <= prev + 1e-12);
      prev = value;
    }
  }
}

TEST_CASE("inverse aggregate response: endpoints and residual") {
  const NetworkParams p = section_v(0.2, 0.9);  // T = 0.7, L decreasing 0.345..0.2
  const TypeDistribution q = TypeDistribution::uniform(0.039, 0.3);
  const double at_a = aggregate_best_response(p, q, p.a);
  const double at_b = aggregate_best_response(p, q, p.b);
  REQUIRE(at_a > at_b);  // strictly decreasing here
  CHECK(invert_aggregate_best_response(p, q, at_a) == p.a);
  CHECK(invert_aggregate_best_response(p, q, at_b) == doctest::Approx(p.b).epsilon(1e-10));
  const double target = 0.5 * (at_a + at_b);
  const double x_hat = invert_aggregate_best_response(p, q, target);
  CHECK(std::fabs(aggregate_best_response(p, q, x_hat) - target) <= 1e-10);
  CHECK_THROWS_AS(invert_aggregate_best_response(p, q, at_a + 0.05), std::domain_error);
}

TEST_CASE("bayesian equilibrium: worked default scenario") {
  const NetworkParams p = section_v(0.3, 0.9);
  const TypeDistribution q = TypeDistribution::uniform(0.039, 0.3);
  const BayesianEquilibrium eq = solve_bayesian(p, q);
  // R_q0 = 0.11 <= BR(b) ~ 0.12639 -> x = b
  CHECK(eq.regime == BayesRegime::at_maximum);
  CHECK(eq.x == 0.3);
  CHECK(eq.y_policy(0.3) == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(eq.y_policy(0.039) == doctest::Approx(0.039).epsilon(1e-15));
  CHECK(eq.y_bar == doctest::Approx(0.126396551724).epsilon(1e-9));
}

TEST_CASE("bayesian equilibrium: fine above scanning cost forces x = b") {
  SplitMix64 rng(11);
  for (int i = 0; i < 20; ++i) {
    NetworkParams p = random_params(rng);
    p.F = p.C_S + 0.5 * rng.uniform01();  // R < 0, so R_q0 < a <= BR(b)
    const TypeDistribution q = random_pieces(rng, p.a, p.b);
    const BayesianEquilibrium eq = solve_bayesian(p, q);
    CHECK(eq.x == p.b);
    CHECK(eq.regime == BayesRegime::at_maximum);
  }
}

TEST_CASE("bayesian fixed point on random piecewise priors") {
  SplitMix64 rng(20240920);
  for (int trial = 0; trial < 60; ++trial) {
    const NetworkParams p = random_params(rng);
    const TypeDistribution q = random_pieces(rng, p.a, p.b);
    const BayesianEquilibrium eq = solve_bayesian(p, q);

    for (int i = 0; i < 100; ++i) {
      const double c = q.support_lo() + (q.support_hi() - q.support_lo()) * rng.uniform01();
      CHECK(std::fabs(eq.y_policy(c) - best_response_invader(p, eq.x, c)) <= 1e-10);
    }
    auto policy = [&](double c) { return eq.y_policy(c); };
    const double at_x = payoff_scanner_expected(p, q, eq.x, policy);
    CHECK(payoff_scanner_expected(p, q, p.a, policy) <= at_x + 1e-9);
    CHECK(payoff_scanner_expected(p, q, p.b, policy) <= at_x + 1e-9);
    // aggregate consistency of the reported y_bar
    CHECK(eq.y_bar == doctest::Approx(aggregate_best_response(p, q, eq.x)).epsilon(1e-12));
  }
}

TEST_CASE("point-mass prior with q0 = 1 reproduces the known-characteristics solver") {
  SplitMix64 rng(20240921);
  for (int trial = 0; trial < 60; ++trial) {
    NetworkParams p = random_params(rng);
    p.q0 = 1.0;
    p.c = p.a + (p.b - p.a) * rng.uniform01();
    const EquilibriumReport known = solve_known_characteristics(p);
    const BayesianEquilibrium eq = solve_bayesian(p, TypeDistribution::point(p.c));
    CHECK(std::fabs(eq.x - known.x) <= 1e-9);
    CHECK(std::fabs(eq.y_policy(p.c) - known.y) <= 1e-9);
  }
}
