#include "scangame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "scangame/rng.hpp"

namespace scangame {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
  return out;
}

template <class S>
auto matrix_value_impl(const TilingSolution<S>& sol) {
  long overlaps = 0;
  for (const Band<S>& scan : sol.scanner_bands)
    for (const Band<S>& inv : sol.invader_bands)
      if (bands_intersect(scan, inv)) ++overlaps;
  const long pairs = static_cast<long>(sol.scanner_bands.size()) *
                     static_cast<long>(sol.invader_bands.size());
  if constexpr (std::is_same_v<S, double>)
    return static_cast<double>(overlaps) / static_cast<double>(pairs);
  else
    return Rational(overlaps, pairs);
}

}  // namespace

GridSearchResult grid_equilibrium_search(const NetworkParams& p, GridSpec grid) {
  p.ensure_valid();
  if (p.q0 <= 0.0) throw std::domain_error("grid search requires q0 > 0");
  if (grid.x_points < 2 || grid.y_points < 2)
    throw std::domain_error("grid must have at least 2 points per axis");

  const int nx = grid.x_points, ny = grid.y_points;
  const std::vector<double> xs = linspace(p.a, p.b, nx);
  const std::vector<double> ys = linspace(p.a, p.c, ny);

  std::vector<double> u_scan(static_cast<std::size_t>(nx) * ny);
  std::vector<double> u_inv(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i) {
    const double base = (1.0 - p.q0) * payoff_scanner(p, xs[i], p.a);
    for (int j = 0; j < ny; ++j) {
      const std::size_t at = static_cast<std::size_t>(i) * ny + j;
      u_scan[at] = p.q0 * payoff_scanner(p, xs[i], ys[j]) + base;
      u_inv[at] = payoff_invader(p, xs[i], ys[j]);
    }
  }

  std::vector<double> col_max(ny, -1e300), row_max(nx, -1e300);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const std::size_t at = static_cast<std::size_t>(i) * ny + j;
      col_max[j] = std::max(col_max[j], u_scan[at]);
      row_max[i] = std::max(row_max[i], u_inv[at]);
    }

  GridSearchResult result;
  result.step_x = nx > 1 ? (p.b - p.a) / (nx - 1) : 0.0;
  result.step_y = ny > 1 ? (p.c - p.a) / (ny - 1) : 0.0;
  // Payoff slope bounds over the strategy box.
  const double slope_scan_x = p.F + p.V * p.c + p.C_S;
  const double slope_scan_y = p.q0 * (p.F + p.V);
  const double slope_inv_x = p.U * p.c + p.F;
  const double slope_inv_y = p.U + p.F + p.C_I;
  const double eps_scan = slope_scan_x * result.step_x + slope_scan_y * result.step_y;
  const double eps_inv = slope_inv_x * result.step_x + slope_inv_y * result.step_y;
  result.eps_grid = std::max(eps_scan, eps_inv);

  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const std::size_t at = static_cast<std::size_t>(i) * ny + j;
      const double gain_scan = col_max[j] - u_scan[at];
      const double gain_inv = row_max[i] - u_inv[at];
      if (gain_scan <= eps_scan && gain_inv <= eps_inv)
        result.equilibria.push_back({xs[i], ys[j], std::max(gain_scan, gain_inv)});
    }
  return result;
}

bool grid_confirms(const GridSearchResult& result, double x, double y) {
  for (const GridEquilibrium& eq : result.equilibria)
    if (std::fabs(eq.x - x) <= result.step_x + 1e-9 &&
        std::fabs(eq.y - y) <= result.step_y + 1e-9)
      return true;
  return false;
}

double overlap_matrix_value(const TilingSolution<double>& sol) {
  return matrix_value_impl(sol);
}

Rational overlap_matrix_value(const TilingSolution<Rational>& sol) {
  return matrix_value_impl(sol);
}

OverlapOracleReport overlap_value_oracle(double x, double y,
                                         const TilingSolution<double>& sol,
                                         int grid_resolution) {
  if (std::fabs(sol.scanner_bands.front().width - x) > 1e-12 ||
      std::fabs(sol.invader_bands.front().width - y) > 1e-12)
    throw std::domain_error("solution was not built for the given widths");
  OverlapOracleReport report;
  report.matrix_value = overlap_matrix_value(sol);
  report.guarantee = guarantee_check(sol, grid_resolution);
  return report;
}

McEstimate monte_carlo_detection(const TilingSolution<double>& sol, long trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("trials must be >= 1");
  const auto n_s = static_cast<std::uint64_t>(sol.scanner_bands.size());
  const auto n_i = static_cast<std::uint64_t>(sol.invader_bands.size());

  constexpr long kBlock = 1 << 16;
  long hits = 0;
  for (long done = 0, block = 0; done < trials; done += kBlock, ++block) {
    SplitMix64 rng = SplitMix64::for_block(seed, static_cast<std::uint64_t>(block));
    const long n = std::min(kBlock, trials - done);
    for (long t = 0; t < n; ++t) {
      const Band<double>& scan = sol.scanner_bands[rng.bounded(n_s)];
      const Band<double>& inv = sol.invader_bands[rng.bounded(n_i)];
      if (bands_intersect(scan, inv)) ++hits;
    }
  }

  McEstimate est;
  est.trials = trials;
  est.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  est.half_width =
      1.96 * std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  return est;
}

BayesGridCheck verify_bayesian_on_grid(const NetworkParams& p, const TypeDistribution& q,
                                       const BayesianEquilibrium& eq, GridSpec grid,
                                       int atoms) {
  p.ensure_valid();
  if (grid.x_points < 2 || grid.y_points < 2)
    throw std::domain_error("grid must have at least 2 points per axis");
  const TypeDistribution discrete = q.discretized(atoms);

  // Scanner side: expected payoff against the fixed per-type policy is
  // affine in x; sweep the x-grid and compare with the equilibrium point.
  auto expected_scan = [&](double x) {
    double related = 0.0;
    for (const TypeAtom& at : discrete.atom_list()) {
      const double y = eq.y_policy(at.c);
      related += at.weight * (p.F * (x + y) - p.V * y * (1.0 - x - y));
    }
    const double unrelated = p.F * (x + p.a) - p.V * p.a * (1.0 - x - p.a);
    return p.q0 * related + (1.0 - p.q0) * unrelated - p.C_S * x;
  };

  BayesGridCheck check;
  const double at_eq = expected_scan(eq.x);
  const std::vector<double> xs = linspace(p.a, p.b, grid.x_points);
  for (double x : xs) check.scanner_gain = std::max(check.scanner_gain, expected_scan(x) - at_eq);

  double worst = 0.0;
  double max_step_y = 0.0;
  for (const TypeAtom& at : discrete.atom_list()) {
    const double own = payoff_invader_typed(p, eq.x, eq.y_policy(at.c), at.c);
    const double step = (at.c - p.a) / (grid.y_points - 1);
    max_step_y = std::max(max_step_y, step);
    for (int j = 0; j < grid.y_points; ++j) {
      const double y = j + 1 == grid.y_points ? at.c : p.a + step * j;
      worst = std::max(worst, payoff_invader_typed(p, eq.x, y, at.c) - own);
    }
  }
  check.worst_type_gain = worst;

  const double step_x = (p.b - p.a) / (grid.x_points - 1);
  const double eps_scan = (p.F + p.V * p.b + p.C_S) * step_x;
  const double eps_inv = (p.U + p.F + p.C_I) * max_step_y;
  check.eps_grid = std::max(eps_scan, eps_inv);
  check.ok = check.scanner_gain <= eps_scan + 1e-6 && check.worst_type_gain <= eps_inv;
  return check;
}

}  // namespace scangame
