#include "scangame/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "scangame/bayesian.hpp"
#include "scangame/detection_sim.hpp"
#include "scangame/linear_equilibria.hpp"
#include "scangame/oracle.hpp"
#include "scangame/payoffs.hpp"

namespace scangame {

namespace {

constexpr GridSpec kVerifyGridSolve{400, 400};
constexpr GridSpec kVerifyGridSweep{101, 101};  // per-row verification stays fast

double axis_value(const SweepAxis& axis, int i) {
  if (axis.steps <= 1) return axis.lo;
  return i + 1 == axis.steps ? axis.hi : axis.lo + (axis.hi - axis.lo) * i / (axis.steps - 1);
}

void verify_point(const ScenarioConfig& cfg, const NetworkParams& p, const SolvePoint& pt,
                  GridSpec grid, std::ostream* out) {
  std::ostringstream where;
  where << "F=" << format_number(pt.F) << " q0=" << format_number(pt.q0);
  if (cfg.point_prior) {
    const GridSearchResult search = grid_equilibrium_search(p, grid);
    if (!grid_confirms(search, pt.x, pt.y.front()))
      throw VerificationError("grid oracle does not confirm equilibrium at " + where.str() +
                              " (eps_grid=" + format_number(search.eps_grid) + ")");
    if (out)
      *out << "verify: confirmed within one grid cell (" << grid.x_points << "x"
           << grid.y_points << ", eps_grid=" << format_number(search.eps_grid) << ", "
           << search.equilibria.size() << " certified points)\n";
  } else {
    const BayesianEquilibrium eq = solve_bayesian(p, cfg.prior_or_throw());
    const BayesGridCheck check = verify_bayesian_on_grid(p, *cfg.prior, eq, grid);
    if (!check.ok)
      throw VerificationError(
          "grid oracle does not confirm Bayesian equilibrium at " + where.str() +
          " (scanner_gain=" + format_number(check.scanner_gain) +
          ", worst_type_gain=" + format_number(check.worst_type_gain) +
          ", eps_grid=" + format_number(check.eps_grid) + ")");
    if (out)
      *out << "verify: confirmed against " << grid.x_points << "x" << grid.y_points
           << " grid (scanner_gain=" << format_number(check.scanner_gain)
           << ", worst_type_gain=" << format_number(check.worst_type_gain)
           << ", eps_grid=" << format_number(check.eps_grid) << ")\n";
  }
}

std::vector<SweepJump> scan_jumps(const SweepResult& result) {
  std::vector<SweepJump> jumps;
  const auto& types = result.report_types;
  auto compare = [&](const SolvePoint& lo, const SolvePoint& hi, const std::string& axis,
                     double other, double threshold) {
    std::vector<std::string> moved;
    if (std::fabs(hi.x - lo.x) > threshold)
      moved.push_back("x: " + format_number(lo.x) + " -> " + format_number(hi.x));
    for (std::size_t k = 0; k < types.size(); ++k)
      if (std::fabs(hi.y[k] - lo.y[k]) > threshold)
        moved.push_back("y(" + format_number(types[k]) + "): " + format_number(lo.y[k]) +
                        " -> " + format_number(hi.y[k]));
    if (moved.empty()) return;
    SweepJump jump;
    jump.axis = axis;
    jump.other_value = other;
    jump.from = axis == "F" ? lo.F : lo.q0;
    jump.to = axis == "F" ? hi.F : hi.q0;
    jump.moved = std::move(moved);
    jump.label_before = lo.label;
    jump.label_after = hi.label;
    jumps.push_back(std::move(jump));
  };

  if (result.nf() > 1) {
    const double threshold =
        std::max(5.0 * (result.f_axis.hi - result.f_axis.lo) / result.f_axis.steps, 1e-3);
    for (int iq = 0; iq < result.nq(); ++iq)
      for (int i = 1; i < result.nf(); ++i)
        compare(result.at(iq, i - 1), result.at(iq, i), "F", result.at(iq, 0).q0, threshold);
  }
  if (result.nq() > 1) {
    const double threshold =
        std::max(5.0 * (result.q0_axis.hi - result.q0_axis.lo) / result.q0_axis.steps, 1e-3);
    for (int i = 0; i < result.nf(); ++i)
      for (int iq = 1; iq < result.nq(); ++iq)
        compare(result.at(iq - 1, i), result.at(iq, i), "q0", result.at(0, i).F, threshold);
  }
  return jumps;
}

void append_svg_panel(std::ostringstream& out, const SweepResult& r, bool x_panel,
                      int x0, int y0, int cell, const std::string& title) {
  double lo = 1e300, hi = -1e300;
  auto value_of = [&](const SolvePoint& pt) { return x_panel ? pt.x : pt.y.back(); };
  for (const SolvePoint& pt : r.rows) {
    lo = std::min(lo, value_of(pt));
    hi = std::max(hi, value_of(pt));
  }
  const double span = hi > lo ? hi - lo : 1.0;

  out << "<text x=\"" << x0 << "\" y=\"" << y0 - 8 << "\" font-size=\"12\">" << title
      << " [" << format_number(lo) << ", " << format_number(hi) << "]</text>\n";
  for (int iq = 0; iq < r.nq(); ++iq)
    for (int i = 0; i < r.nf(); ++i) {
      const double t = (value_of(r.at(iq, i)) - lo) / span;
      // dark violet -> yellow, two-stop linear map
      const int red = static_cast<int>(std::lround(68 + t * (253 - 68)));
      const int green = static_cast<int>(std::lround(1 + t * (231 - 1)));
      const int blue = static_cast<int>(std::lround(84 + t * (37 - 84)));
      out << "<rect x=\"" << x0 + i * cell << "\" y=\""
          << y0 + (r.nq() - 1 - iq) * cell << "\" width=\"" << cell << "\" height=\""
          << cell << "\" fill=\"rgb(" << red << "," << green << "," << blue << ")\"/>\n";
    }
  out << "<text x=\"" << x0 << "\" y=\"" << y0 + r.nq() * cell + 14
      << "\" font-size=\"10\">F: " << format_number(r.f_axis.lo) << " .. "
      << format_number(r.f_axis.hi) << " | q0: " << format_number(r.q0_axis.lo) << " .. "
      << format_number(r.q0_axis.hi) << "</text>\n";
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

SolvePoint solve_point(const ScenarioConfig& cfg, const NetworkParams& p) {
  SolvePoint pt;
  pt.F = p.F;
  pt.q0 = p.q0;
  if (cfg.point_prior) {
    NetworkParams known = p;
    known.c = *cfg.point_prior;
    const EquilibriumReport report = solve_known_characteristics(known);
    pt.x = report.x;
    pt.label = report.case_label;
    pt.scanner_payoff = report.scanner_payoff;
    for (std::size_t k = 0; k < cfg.report_types.size(); ++k) {
      pt.y.push_back(report.y);
      pt.invader_payoff.push_back(report.invader_payoff);
      pt.detection.push_back(report.P_R);
    }
    pt.payoff_U = payoff_invader_unrelated(known, report.x);
    pt.detection_U = report.P_U;
    return pt;
  }

  const TypeDistribution& prior = cfg.prior_or_throw();
  const BayesianEquilibrium eq = solve_bayesian(p, prior);
  pt.x = eq.x;
  pt.label = "bayesian(" + to_string(eq.regime) + ")";
  pt.scanner_payoff =
      payoff_scanner_expected(p, prior, eq.x, [&](double c) { return eq.y_policy(c); });
  for (double c : cfg.report_types) {
    const double y = eq.y_policy(c);
    pt.y.push_back(y);
    pt.invader_payoff.push_back(payoff_invader_typed(p, eq.x, y, c));
    pt.detection.push_back(eq.x + y);
  }
  pt.payoff_U = payoff_invader_unrelated(p, eq.x);
  pt.detection_U = eq.x + p.a;
  return pt;
}

SweepResult run_sweep_compute(const ScenarioConfig& cfg) {
  cfg.ensure_valid();
  SweepResult result;
  result.report_types = cfg.report_types;
  result.f_axis = {"F", cfg.params.F, cfg.params.F, 1};
  result.q0_axis = {"q0", cfg.params.q0, cfg.params.q0, 1};
  for (const SweepAxis& axis : cfg.sweep)
    (axis.parameter == "F" ? result.f_axis : result.q0_axis) = axis;

  result.rows.reserve(static_cast<std::size_t>(result.nf()) * result.nq());
  for (int iq = 0; iq < result.nq(); ++iq)
    for (int i = 0; i < result.nf(); ++i) {
      NetworkParams p = cfg.params;
      p.F = axis_value(result.f_axis, i);
      p.q0 = axis_value(result.q0_axis, iq);
      result.rows.push_back(solve_point(cfg, p));
      if (cfg.verify) {
        NetworkParams solved = p;
        if (cfg.point_prior) solved.c = *cfg.point_prior;
        verify_point(cfg, solved, result.rows.back(), kVerifyGridSweep, nullptr);
      }
    }
  result.jumps = scan_jumps(result);
  return result;
}

std::string SweepResult::csv() const {
  std::ostringstream out;
  out << "F,q0,x,scanner_payoff";
  for (double c : report_types) {
    const std::string label = format_number(c);
    out << ",y(" << label << "),invader_payoff(" << label << "),detection(" << label << ")";
  }
  out << ",payoff_U,detection_U\n";
  for (const SolvePoint& pt : rows) {
    out << format_number(pt.F) << ',' << format_number(pt.q0) << ',' << format_number(pt.x)
        << ',' << format_number(pt.scanner_payoff);
    for (std::size_t k = 0; k < report_types.size(); ++k)
      out << ',' << format_number(pt.y[k]) << ',' << format_number(pt.invader_payoff[k])
          << ',' << format_number(pt.detection[k]);
    out << ',' << format_number(pt.payoff_U) << ',' << format_number(pt.detection_U) << '\n';
  }
  return out.str();
}

std::string SweepResult::jump_report() const {
  std::ostringstream out;
  out << "discontinuities: " << jumps.size() << "\n";
  for (const SweepJump& jump : jumps) {
    out << jump.axis << ": " << format_number(jump.from) << " -> " << format_number(jump.to)
        << " (" << (jump.axis == "F" ? "q0" : "F") << "=" << format_number(jump.other_value)
        << ")";
    for (const std::string& quantity : jump.moved) out << " | " << quantity;
    out << " [" << jump.label_before << " -> " << jump.label_after << "]\n";
  }
  return out.str();
}

std::string SweepResult::svg() const {
  const int cell = 12;
  const int panel_w = nf() * cell;
  const int width = 2 * panel_w + 60;
  const int height = nq() * cell + 60;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  append_svg_panel(out, *this, true, 20, 30, cell, "scanner bandwidth x");
  append_svg_panel(out, *this, false, panel_w + 40, 30, cell,
                   "invader bandwidth y(" + format_number(report_types.back()) + ")");
  out << "</svg>\n";
  return out.str();
}

void run_solve(const ScenarioConfig& cfg, std::ostream& out) {
  cfg.ensure_valid();
  if (!cfg.sweep.empty())
    throw ConfigError("solve expects a scenario without sweep axes (use the sweep command)");
  std::ostringstream buf;

  const NetworkParams& p = cfg.params;
  if (cfg.point_prior) {
    NetworkParams known = p;
    known.c = *cfg.point_prior;
    const EquilibriumReport report = solve_known_characteristics(known);
    buf << "case: " << report.case_label << "\n";
    buf << "x: " << format_number(report.x) << "\n";
    buf << "y: " << format_number(report.y) << "\n";
    buf << "P_R: " << format_number(report.P_R) << "\n";
    buf << "P_U: " << format_number(report.P_U) << "\n";
    buf << "scanner_payoff: " << format_number(report.scanner_payoff) << "\n";
    buf << "invader_payoff: " << format_number(report.invader_payoff) << "\n";
    if (cfg.verify) {
      SolvePoint pt = solve_point(cfg, p);
      verify_point(cfg, known, pt, kVerifyGridSolve, &buf);
    }
  } else {
    const TypeDistribution& prior = cfg.prior_or_throw();
    const BayesianEquilibrium eq = solve_bayesian(p, prior);
    buf << "case: bayesian\n";
    buf << "regime: " << to_string(eq.regime) << "\n";
    buf << "R_q0: " << format_number(eq.r_q0) << "\n";
    buf << "x: " << format_number(eq.x) << "\n";
    buf << "y_bar: " << format_number(eq.y_bar) << "\n";
    buf << "flat_response: " << (eq.flat_response ? "yes" : "no") << "\n";
    for (double c : cfg.report_types) {
      const std::string label = format_number(c);
      const double y = eq.y_policy(c);
      buf << "y(" << label << "): " << format_number(y) << "\n";
      buf << "invader_payoff(" << label
          << "): " << format_number(payoff_invader_typed(p, eq.x, y, c)) << "\n";
      buf << "detection(" << label << "): " << format_number(eq.x + y) << "\n";
    }
    buf << "P_U: " << format_number(eq.x + p.a) << "\n";
    buf << "scanner_payoff: "
        << format_number(payoff_scanner_expected(p, prior, eq.x,
                                                 [&](double c) { return eq.y_policy(c); }))
        << "\n";
    buf << "payoff_U: " << format_number(payoff_invader_unrelated(p, eq.x)) << "\n";
    if (cfg.verify) {
      SolvePoint pt = solve_point(cfg, p);
      verify_point(cfg, p, pt, kVerifyGridSolve, &buf);
    }
  }
  out << buf.str();
}

void run_sweep(const ScenarioConfig& cfg, std::ostream& csv_out, std::ostream& jump_out) {
  if (cfg.sweep.empty())
    throw ConfigError("sweep expects at least one sweep axis (sweep.F / sweep.q0)");
  const SweepResult result = run_sweep_compute(cfg);
  csv_out << result.csv();
  jump_out << result.jump_report();
}

void run_tiling(const std::string& x_text, const std::string& y_text, long trials,
                std::uint64_t seed, std::ostream& out) {
  std::ostringstream buf;
  const std::optional<Rational> rx = parse_decimal(x_text);
  const std::optional<Rational> ry = parse_decimal(y_text);

  double xd = 0.0, yd = 0.0;
  try {
    xd = rx ? to_double(*rx) : std::stod(x_text);
    yd = ry ? to_double(*ry) : std::stod(y_text);
  } catch (const std::exception&) {
    throw ConfigError("tiling: widths must be decimal numbers (got '" + x_text + "', '" +
                      y_text + "')");
  }
  if (!(xd > 0.0 && yd > 0.0 && xd <= 1.0 && yd <= 1.0))
    throw ConfigError("tiling: widths must lie in (0,1]");

  ValidationReport report;
  std::string exact_value;
  std::vector<Band<double>> scanner_bands, invader_bands;
  TilingRegime regime = TilingRegime::overlap_forced;
  long m = 0;
  double epsilon = 0.0;
  if (rx && ry) {
    report = validate_tiling(*rx, *ry, 10001, trials, seed);
    const TilingSolution<Rational> sol = build_tiling(*rx, *ry);
    exact_value = to_string(sol.value);
    const TilingSolution<double> dsol = to_double(sol);
    scanner_bands = dsol.scanner_bands;
    invader_bands = dsol.invader_bands;
    regime = sol.regime;
    m = sol.m;
    epsilon = to_double(sol.epsilon);
  } else {
    report = validate_tiling(xd, yd, 10001, trials, seed);
    const TilingSolution<double> sol = build_tiling(xd, yd);
    scanner_bands = sol.scanner_bands;
    invader_bands = sol.invader_bands;
    regime = sol.regime;
    m = sol.m;
    epsilon = sol.epsilon;
  }

  buf << "x: " << x_text << "\n";
  buf << "y: " << y_text << "\n";
  buf << "regime: " << to_string(regime) << "\n";
  buf << "M: " << m << "\n";
  buf << "epsilon: " << format_number(epsilon) << "\n";
  buf << "value: " << format_number(report.analytic_value);
  if (!exact_value.empty()) buf << " (" << exact_value << ")";
  buf << "\n";
  auto print_bands = [&](const char* name, const std::vector<Band<double>>& bands) {
    buf << name << ":";
    for (const Band<double>& band : bands)
      buf << " [" << format_number(band.start) << "," << format_number(band.end()) << "]";
    buf << "\n";
  };
  print_bands("scanner_bands", scanner_bands);
  print_bands("invader_bands", invader_bands);
  buf << "matrix_value: " << format_number(report.matrix_value) << "\n";
  buf << "guarantee_min: " << format_number(report.guarantee_min) << "\n";
  buf << "guarantee_max: " << format_number(report.guarantee_max) << "\n";
  buf << "separation: " << (report.separation_ok ? "ok" : report.issue) << "\n";
  if (report.mc)
    buf << "mc: " << format_number(report.mc->estimate) << " +/- "
        << format_number(report.mc->half_width) << " (trials=" << report.mc->trials
        << " seed=" << seed << ")\n";
  if (!report.consistent())
    throw VerificationError("tiling oracle mismatch: " +
                            (report.issue.empty() ? "guarantee sweep outside value"
                                                  : report.issue));
  out << buf.str();
}

}  // namespace scangame
