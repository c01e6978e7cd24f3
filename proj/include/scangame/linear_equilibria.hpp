#pragma once

#include <string>
#include <vector>

#include "scangame/params.hpp"

namespace scangame {

/// Set-valued Scanner best response to an aggregate invader bandwidth:
/// {a} below the R_q0 threshold, the whole interval [a,b] at it, {b} above.
enum class ScannerResponse { play_minimum, indifferent, play_maximum };

ScannerResponse best_response_scanner(const NetworkParams& p, double y_bar);

/// Best response of a capability-`cap` Invader: L(x) clamped to [a, cap].
double best_response_invader(const NetworkParams& p, double x, double cap);

/// Equilibrium of the bandwidth-selection game, with the case taxonomy of
/// the known-characteristics solver (i1..i11) or "bayesian".
struct EquilibriumReport {
  double x = 0.0;
  double y = 0.0;
  std::string case_label;
  double P_R = 0.0;  // detection probability, bandwidth-related reward: x + y
  double P_U = 0.0;  // detection probability, unrelated reward: x + a
  double scanner_payoff = 0.0;  // q0-weighted expected payoff
  double invader_payoff = 0.0;  // bandwidth-related Invader
};

/// Unique pure Nash equilibrium when the Invader's capability c is known
/// (his reward type may still be uncertain via q0). Classifies into exactly
/// one of the cases i1..i11; throws std::logic_error carrying the computed
/// thresholds if no case matches.
EquilibriumReport solve_known_characteristics(const NetworkParams& p);

struct JumpRecord {
  std::string parameter;  // "F" or "q0"
  double param_before = 0.0, param_after = 0.0;
  double x_before = 0.0, x_after = 0.0;
  double y_before = 0.0, y_after = 0.0;
  std::string case_before, case_after;
};

/// Sweeps solve_known_characteristics over `steps` grid points of F or q0
/// and flags adjacent points whose strategy moves by more than
/// max(5*(hi-lo)/steps, 1e-3).
std::vector<JumpRecord> detect_jumps(const NetworkParams& base, const std::string& parameter,
                                     double lo, double hi, int steps);

}  // namespace scangame
