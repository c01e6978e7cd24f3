#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "scangame/oracle.hpp"
#include "scangame/tiling.hpp"

namespace scangame {

/// One-stop validation of a tiling for widths (x, y): analytic value,
/// overlap-matrix value, guarantee-sweep extremes, separation checks and
/// an optional Monte Carlo estimate.
struct ValidationReport {
  double analytic_value = 0.0;
  double matrix_value = 0.0;
  double guarantee_min = 0.0;
  double guarantee_max = 0.0;
  std::optional<McEstimate> mc;
  bool separation_ok = false;
  std::string issue;  // first failed separation property, empty when ok

  bool consistent(double tol = 1e-12) const;
};

ValidationReport validate_tiling(double x, double y, int grid_resolution = 10001,
                                 long trials = 0, std::uint64_t seed = 1);

/// Exact path: value and matrix value computed in rational arithmetic
/// (and compared exactly); the guarantee sweep still runs in double.
ValidationReport validate_tiling(const Rational& x, const Rational& y,
                                 int grid_resolution = 10001, long trials = 0,
                                 std::uint64_t seed = 1);

}  // namespace scangame
