#include "scangame/bayesian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "scangame/payoffs.hpp"

namespace scangame {

namespace {

constexpr double kFlatTol = 1e-12;
constexpr double kSpotCheckTol = 1e-9;

// Spot checks of the equilibrium inequalities: no sampled type gains from a
// deviation on a coarse y-grid, and the Scanner prefers x to both endpoints.
void spot_check(const NetworkParams& p, const TypeDistribution& q,
                const BayesianEquilibrium& eq) {
  std::vector<double> types;
  if (q.is_discrete()) {
    for (const TypeAtom& at : q.atom_list()) types.push_back(at.c);
  } else {
    for (const TypePiece& pc : q.piece_list()) {
      if (pc.density <= 0.0) continue;
      types.push_back(pc.lo);
      types.push_back(0.5 * (pc.lo + pc.hi));
      types.push_back(pc.hi);
    }
  }
  for (double c : types) {
    const double best = payoff_invader_typed(p, eq.x, eq.y_policy(c), c);
    for (int i = 0; i <= 16; ++i) {
      const double y = c == p.a ? p.a : p.a + (c - p.a) * i / 16.0;
      if (payoff_invader_typed(p, eq.x, y, c) > best + kSpotCheckTol) {
        std::ostringstream os;
        os << "equilibrium spot check failed: type " << c << " prefers y=" << y;
        throw std::logic_error(os.str());
      }
    }
  }

  auto policy = [&](double c) { return eq.y_policy(c); };
  const double at_x = payoff_scanner_expected(p, q, eq.x, policy);
  for (double alt : {p.a, p.b}) {
    if (payoff_scanner_expected(p, q, alt, policy) > at_x + kSpotCheckTol) {
      std::ostringstream os;
      os << "equilibrium spot check failed: scanner prefers x=" << alt;
      throw std::logic_error(os.str());
    }
  }
}

}  // namespace

double InvaderPolicy::operator()(double c) const {
  return std::min(c, std::max(floor_a, level));
}

std::string to_string(BayesRegime regime) {
  switch (regime) {
    case BayesRegime::at_minimum: return "x=a";
    case BayesRegime::interior: return "interior";
    case BayesRegime::at_maximum: return "x=b";
  }
  return "?";
}

double aggregate_best_response(const NetworkParams& p, const TypeDistribution& q,
                               double x) {
  p.ensure_valid();
  q.ensure_valid_for(p);
  if (!(x >= p.a && x <= p.b)) throw std::domain_error("x outside [a,b]");
  return q.integral_min(std::max(p.a, response_line(p, x)));
}

double invert_aggregate_best_response(const NetworkParams& p, const TypeDistribution& q,
                                      double target) {
  const double at_b = aggregate_best_response(p, q, p.b);
  const double at_a = aggregate_best_response(p, q, p.a);
  if (target < at_b - kFlatTol || target > at_a + kFlatTol) {
    std::ostringstream os;
    os << "target " << target << " outside aggregate response range [" << at_b << ","
       << at_a << "]";
    throw std::domain_error(os.str());
  }
  if (at_a <= target) return p.a;

  // Boundary between {BR > target} and {BR <= target}; smallest root since
  // the response is continuous and non-increasing.
  double lo = p.a, hi = p.b;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (aggregate_best_response(p, q, mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

BayesianEquilibrium solve_bayesian(const NetworkParams& p, const TypeDistribution& q) {
  p.ensure_valid();
  q.ensure_valid_for(p);
  const double r = require_r_q0(p);
  const double at_b = aggregate_best_response(p, q, p.b);
  const double at_a = aggregate_best_response(p, q, p.a);

  BayesianEquilibrium eq;
  eq.r_q0 = r;
  if (r <= at_b) {
    eq.x = p.b;
    eq.regime = BayesRegime::at_maximum;
  } else if (at_a <= r) {
    eq.x = p.a;
    eq.regime = BayesRegime::at_minimum;
  } else {
    eq.x = invert_aggregate_best_response(p, q, r);
    eq.regime = BayesRegime::interior;
  }

  const double level = response_line(p, eq.x);
  eq.y_policy = {level, p.a};
  eq.y_bar = q.integral_min(std::max(p.a, level));
  eq.flat_response = level <= p.a + kFlatTol || q.tail_mass(level) <= kFlatTol;
  spot_check(p, q, eq);
  return eq;
}

}  // namespace scangame
