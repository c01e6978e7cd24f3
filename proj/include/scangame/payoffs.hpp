#pragma once

#include <functional>

#include "scangame/distribution.hpp"
#include "scangame/params.hpp"

namespace scangame {

/// Expected Scanner payoff against an Invader of unknown reward type and
/// capability prior q:
///
///   q0 * integral [F(x+y(t)) - V y(t)(1-x-y(t))] q(t) dt
///   + (1-q0) * (F(x+a) - V a (1-x-a)) - C_S x
///
/// Discrete priors are exact sums; density pieces are integrated with
/// adaptive Simpson to 1e-12 (the policy may have clamp kinks).
/// Throws std::domain_error when y_policy(t) leaves [a,t] at a support point.
double payoff_scanner_expected(const NetworkParams& p, const TypeDistribution& q,
                               double x, const std::function<double(double)>& y_policy);

}  // namespace scangame
