#include "scangame/detection_sim.hpp"

#include <cmath>

namespace scangame {

namespace {

ValidationReport assemble(double analytic, double matrix, bool exact_match,
                          const TilingSolution<double>& dsol, const SeparationReport& sep,
                          int grid_resolution, long trials, std::uint64_t seed) {
  ValidationReport report;
  report.analytic_value = analytic;
  report.matrix_value = matrix;
  report.separation_ok = sep.ok;
  report.issue = sep.issue;
  if (!exact_match) {
    report.separation_ok = false;
    if (report.issue.empty()) report.issue = "matrix value differs from analytic value";
  }
  const GuaranteeReport guarantee = guarantee_check(dsol, grid_resolution);
  report.guarantee_min = guarantee.min_detect;
  report.guarantee_max = guarantee.max_detect;
  if (trials > 0) report.mc = monte_carlo_detection(dsol, trials, seed);
  return report;
}

}  // namespace

bool ValidationReport::consistent(double tol) const {
  return separation_ok && std::fabs(analytic_value - matrix_value) <= tol &&
         guarantee_min >= analytic_value - tol && guarantee_max <= analytic_value + tol;
}

ValidationReport validate_tiling(double x, double y, int grid_resolution, long trials,
                                 std::uint64_t seed) {
  const double analytic = detection_value(x, y);
  const TilingSolution<double> sol = build_tiling(x, y);
  const double matrix = overlap_matrix_value(sol);
  return assemble(analytic, matrix, std::fabs(analytic - matrix) <= 1e-12, sol,
                  check_separation(sol, x, y), grid_resolution, trials, seed);
}

ValidationReport validate_tiling(const Rational& x, const Rational& y, int grid_resolution,
                                 long trials, std::uint64_t seed) {
  const Rational analytic = detection_value(x, y);
  const TilingSolution<Rational> sol = build_tiling(x, y);
  const Rational matrix = overlap_matrix_value(sol);
  return assemble(to_double(analytic), to_double(matrix), analytic == matrix,
                  to_double(sol), check_separation(sol, x, y), grid_resolution, trials,
                  seed);
}

}  // namespace scangame
