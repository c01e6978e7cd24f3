#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scangame/scenario.hpp"

namespace scangame {

/// %.12g with '.' decimal separator (CSV and report formatting).
std::string format_number(double v);

/// One solved sweep grid point.
struct SolvePoint {
  double F = 0.0;
  double q0 = 0.0;
  double x = 0.0;
  double scanner_payoff = 0.0;
  std::vector<double> y;               // per report type
  std::vector<double> invader_payoff;  // per report type
  std::vector<double> detection;       // per report type: x + y(c)
  double payoff_U = 0.0;
  double detection_U = 0.0;  // x + a
  std::string label;         // i1..i11 or bayesian(<regime>)
};

struct SweepJump {
  std::string axis;         // parameter that moved
  double other_value = 0.0; // the fixed coordinate of the slice
  double from = 0.0, to = 0.0;
  std::vector<std::string> moved;  // e.g. "x: 0.01 -> 0.3"
  std::string label_before, label_after;
};

/// Grid of solved points, row-major with F fastest.
struct SweepResult {
  SweepAxis f_axis, q0_axis;  // single-point axes when not swept
  std::vector<double> report_types;
  std::vector<SolvePoint> rows;
  std::vector<SweepJump> jumps;

  int nf() const { return f_axis.steps; }
  int nq() const { return q0_axis.steps; }
  const SolvePoint& at(int iq, int i_f) const { return rows[iq * nf() + i_f]; }

  std::string csv() const;
  std::string jump_report() const;
  /// Minimal two-panel heatmap (x and y(last report type) over F x q0).
  std::string svg() const;
};

SolvePoint solve_point(const ScenarioConfig& cfg, const NetworkParams& p);

/// Solves the whole grid and scans both axis directions for strategy jumps.
SweepResult run_sweep_compute(const ScenarioConfig& cfg);

/// Prints a single-solve report; with cfg.verify also runs the grid oracle
/// and throws VerificationError when the oracle disagrees.
void run_solve(const ScenarioConfig& cfg, std::ostream& out);

/// Writes the CSV to csv_out and the companion jump report to jump_out.
void run_sweep(const ScenarioConfig& cfg, std::ostream& csv_out, std::ostream& jump_out);

/// Tiling report for widths given as decimal text (exact rational arithmetic
/// when representable, double fallback). trials > 0 adds a Monte Carlo run.
/// Throws VerificationError when the oracle checks fail.
void run_tiling(const std::string& x_text, const std::string& y_text, long trials,
                std::uint64_t seed, std::ostream& out);

}  // namespace scangame
