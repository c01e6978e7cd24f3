#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace scangame {

/// All scalar model parameters of the scanning game, validated as a unit.
///
/// Bandwidths are fractions of the normalized spectrum [0,1]. The Scanner
/// chooses a scan width x in [a,b], the bandwidth-related Invader a width
/// y in [a,c]. With probability 1-q0 the Invader's reward does not depend
/// on bandwidth and he always transmits with the minimum width a.
struct NetworkParams {
  double U = 1.0;    // reward rate per unit bandwidth (Invader)
  double V = 1.0;    // damage rate per unit bandwidth (Scanner side)
  double C_S = 0.4;  // scanning cost rate
  double C_I = 0.1;  // intrusion cost rate
  double F = 0.3;    // fine on detection
  double a = 0.01;   // minimum bandwidth
  double b = 0.3;    // Scanner's maximum bandwidth
  double c = 0.3;    // Invader's maximum bandwidth (known-characteristics game)
  double q0 = 0.9;   // probability the Invader's reward is bandwidth-related

  /// Throws std::domain_error naming the violated bound. All solvers call
  /// this once at entry; everything downstream assumes validated fields.
  const NetworkParams& ensure_valid() const;
};

/// Closed-form thresholds shared by the best-response analysis.
///   T    = (U - F - C_I) / U
///   R    = (C_S - F) / V
///   R_q0 = (R - a(1-q0)) / q0            (undefined at q0 = 0)
struct DerivedQuantities {
  double T = 0.0;
  double R = 0.0;
  std::optional<double> R_q0;
};

DerivedQuantities derive(const NetworkParams& p);

/// R_q0 or a domain_error explaining that q0 = 0 leaves it undefined.
double require_r_q0(const NetworkParams& p);

/// Indifference line of the bandwidth-related Invader: L(x) = (T - x) / 2.
/// May lie outside [a,c]; clamping is the caller's job.
double response_line(const NetworkParams& p, double x);

/// Payoff to the bandwidth-related Invader: U(1-x-y)y - F(x+y) - C_I y.
/// Throws std::domain_error when x is outside [a,b] or y outside [a,c].
double payoff_invader(const NetworkParams& p, double x, double y);

/// Payoff to the Scanner against a bandwidth-related Invader:
/// F(x+y) - V y (1-x-y) - C_S x. Affine in x for fixed y.
double payoff_scanner(const NetworkParams& p, double x, double y);

/// Same formula for an Invader of capability `cap` in [a,b] (incomplete
/// information game); y must lie in [a,cap].
double payoff_invader_typed(const NetworkParams& p, double x, double y, double cap);

/// Payoff to the reward-unrelated Invader, who always plays y = a and whose
/// reward is the constant U: U(1-x-a) - F(x+a) - C_I a.
double payoff_invader_unrelated(const NetworkParams& p, double x);

}  // namespace scangame
