#pragma once

#include <string>

#include "scangame/distribution.hpp"
#include "scangame/params.hpp"

namespace scangame {

/// Closed-form Invader policy record: y(c) = min(c, max(floor_a, level)).
struct InvaderPolicy {
  double level = 0.0;    // L(x) at the equilibrium scan width
  double floor_a = 0.0;  // minimum bandwidth a
  double operator()(double c) const;
};

enum class BayesRegime { at_minimum, interior, at_maximum };  // x=a / inverse / x=b

std::string to_string(BayesRegime regime);

struct BayesianEquilibrium {
  double x = 0.0;
  InvaderPolicy y_policy;
  double y_bar = 0.0;  // aggregate expected invader bandwidth at equilibrium
  BayesRegime regime = BayesRegime::interior;
  bool flat_response = false;  // aggregate response locally constant at x
  double r_q0 = 0.0;
};

/// Type-averaged Invader best response  BR(x) = integral q(c) y*(c|x) dc,
/// in closed form (non-increasing in x).
double aggregate_best_response(const NetworkParams& p, const TypeDistribution& q, double x);

/// Smallest x in [a,b] with aggregate_best_response(x) == target, by
/// bisection on the non-increasing response (residual <= 1e-10). Throws a
/// range error when target lies outside [BR(b), BR(a)].
double invert_aggregate_best_response(const NetworkParams& p, const TypeDistribution& q,
                                      double target);

/// Bayesian equilibrium of the bandwidth-selection game with capability
/// prior q: branch on R_q0 against BR(b) and BR(a), then invert in the
/// interior. Each type plays its clamped best response to the returned x.
BayesianEquilibrium solve_bayesian(const NetworkParams& p, const TypeDistribution& q);

}  // namespace scangame
