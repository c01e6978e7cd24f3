#pragma once

#include <cstdint>
#include <vector>

#include "scangame/bayesian.hpp"
#include "scangame/distribution.hpp"
#include "scangame/params.hpp"
#include "scangame/tiling.hpp"

namespace scangame {

/// Inclusive grids over [a,b] x [a,c] for the brute-force equilibrium search.
struct GridSpec {
  int x_points = 400;
  int y_points = 400;
};

struct GridEquilibrium {
  double x = 0.0;
  double y = 0.0;
  double max_gain = 0.0;  // best unilateral grid improvement found
};

struct GridSearchResult {
  std::vector<GridEquilibrium> equilibria;
  double eps_grid = 0.0;  // certification slack (payoff slope times grid step)
  double step_x = 0.0;
  double step_y = 0.0;
};

/// Exhaustive grid search for eps-equilibria of the bandwidth-selection
/// game with known Invader capability, using the q0-weighted expected
/// Scanner payoff. Returns every grid point where no unilateral grid
/// deviation improves either player by more than eps_grid.
GridSearchResult grid_equilibrium_search(const NetworkParams& p, GridSpec grid = {});

/// True when (x, y) lies within one grid cell of some certified point.
bool grid_confirms(const GridSearchResult& result, double x, double y);

/// Value of the finite game restricted to the constructed band lists: the
/// 0/1 overlap matrix of the uniform mixes. Exact for the rational path.
double overlap_matrix_value(const TilingSolution<double>& sol);
Rational overlap_matrix_value(const TilingSolution<Rational>& sol);

struct OverlapOracleReport {
  double matrix_value = 0.0;
  GuaranteeReport guarantee;
};

/// Matrix value plus the continuum guarantee sweep for a solution built
/// for widths (x, y). Throws when the solution's widths disagree.
OverlapOracleReport overlap_value_oracle(double x, double y,
                                         const TilingSolution<double>& sol,
                                         int grid_resolution = 10001);

struct McEstimate {
  double estimate = 0.0;
  double half_width = 0.0;  // 95% normal-approximation half-width
  long trials = 0;
};

/// Samples independent uniform band choices for both players and counts
/// closed-interval intersections. Deterministic for a given seed.
McEstimate monte_carlo_detection(const TilingSolution<double>& sol, long trials,
                                 std::uint64_t seed);

/// Grid confirmation of a Bayesian equilibrium: the capability prior is
/// discretized to `atoms` midpoint atoms, each type's response is checked
/// on a y-grid and the Scanner on an x-grid against the fixed policy.
struct BayesGridCheck {
  double scanner_gain = 0.0;
  double worst_type_gain = 0.0;
  double eps_grid = 0.0;
  bool ok = false;
};

BayesGridCheck verify_bayesian_on_grid(const NetworkParams& p, const TypeDistribution& q,
                                       const BayesianEquilibrium& eq, GridSpec grid = {},
                                       int atoms = 64);

}  // namespace scangame
