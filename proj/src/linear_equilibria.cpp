#include "scangame/linear_equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scangame {

namespace {

struct CaseStrategy {
  const char* label;
  double x, y;
};

// Table rows in tie-break order, compared with a small tolerance so that
// conditions meant to hold with exact equality (e.g. L(b) == R_q0 at the
// interior-root boundary) are not flipped by rounding in the threshold
// arithmetic. At such boundaries several rows' closures hold and the first
// one wins; their strategies coincide by continuity of the row formulas.
constexpr double kCaseTol = 1e-12;

bool case_matches(int row, double a, double c, double r, double la, double lb) {
  auto lt = [](double l, double h) { return l < h + kCaseTol; };
  auto leq = [](double l, double h) { return l <= h + kCaseTol; };
  switch (row) {
    case 1:  return lt(r, a) && lt(lb, a);
    case 2:  return lt(r, a) && leq(a, lb) && leq(lb, c);
    case 3:  return lt(r, a) && lt(c, lb);
    case 4:  return lt(c, r) && lt(la, a);
    case 5:  return lt(c, r) && leq(a, la) && leq(la, c);
    case 6:  return lt(c, r) && lt(c, la);
    case 7:  return leq(a, r) && leq(r, c) && leq(lb, r) && leq(r, la);
    case 8:  return leq(a, r) && leq(r, c) && leq(la, a);
    case 9:  return leq(a, r) && leq(r, c) && lt(a, la) && lt(la, r);
    case 10: return leq(a, r) && leq(r, c) && lt(c, lb);
    case 11: return leq(a, r) && leq(r, c) && lt(r, lb) && lt(lb, c);
  }
  return false;
}

CaseStrategy case_strategy(int row, double a, double b, double c, double t, double r,
                           double la, double lb) {
  switch (row) {
    case 1:  return {"i1", b, a};
    case 2:  return {"i2", b, lb};
    case 3:  return {"i3", b, c};
    case 4:  return {"i4", a, a};
    case 5:  return {"i5", a, la};
    case 6:  return {"i6", a, c};
    case 7:  return {"i7", t - 2.0 * r, r};
    case 8:  return {"i8", a, a};
    case 9:  return {"i9", a, la};
    case 10: return {"i10", b, c};
    case 11: return {"i11", b, lb};
  }
  throw std::logic_error("bad case row");
}

}  // namespace

ScannerResponse best_response_scanner(const NetworkParams& p, double y_bar) {
  p.ensure_valid();
  const double r = require_r_q0(p);
  if (y_bar < r) return ScannerResponse::play_minimum;
  if (y_bar > r) return ScannerResponse::play_maximum;
  return ScannerResponse::indifferent;
}

double best_response_invader(const NetworkParams& p, double x, double cap) {
  p.ensure_valid();
  if (!(x >= p.a && x <= p.b)) throw std::domain_error("x outside [a,b]");
  if (!(cap >= p.a && cap <= p.b)) throw std::domain_error("cap outside [a,b]");
  return std::min(cap, std::max(p.a, response_line(p, x)));
}

EquilibriumReport solve_known_characteristics(const NetworkParams& p) {
  p.ensure_valid();
  const double r = require_r_q0(p);
  const DerivedQuantities d = derive(p);
  const double la = response_line(p, p.a);
  const double lb = response_line(p, p.b);

  int matched = 0;
  for (int pass = 0; pass < 2 && matched == 0; ++pass)
    for (int row = 1; row <= 11 && matched == 0; ++row)
      if (case_matches(row, p.a, p.c, r, la, lb, pass == 1)) matched = row;
  if (matched == 0) {
    std::ostringstream os;
    os << "no equilibrium case matched: R_q0=" << r << " L(a)=" << la << " L(b)=" << lb
       << " a=" << p.a << " c=" << p.c;
    throw std::logic_error(os.str());
  }

  const CaseStrategy cs = case_strategy(matched, p.a, p.b, p.c, d.T, r, la, lb);
  EquilibriumReport report;
  report.case_label = cs.label;
  report.x = std::clamp(cs.x, p.a, p.b);
  report.y = std::clamp(cs.y, p.a, p.c);
  report.P_R = report.x + report.y;
  report.P_U = report.x + p.a;
  report.scanner_payoff = p.q0 * payoff_scanner(p, report.x, report.y) +
                          (1.0 - p.q0) * payoff_scanner(p, report.x, p.a);
  report.invader_payoff = payoff_invader(p, report.x, report.y);
  return report;
}

std::vector<JumpRecord> detect_jumps(const NetworkParams& base, const std::string& parameter,
                                     double lo, double hi, int steps) {
  base.ensure_valid();
  if (parameter != "F" && parameter != "q0")
    throw std::domain_error("sweep parameter must be F or q0");
  if (steps < 2) throw std::domain_error("steps must be >= 2");
  if (!(hi > lo)) throw std::domain_error("sweep range needs hi > lo");
  if (parameter == "F" && lo < 0.0) throw std::domain_error("F range must be >= 0");
  if (parameter == "q0" && (lo <= 0.0 || hi > 1.0))
    throw std::domain_error("q0 range must lie in (0,1]");

  const double threshold = std::max(5.0 * (hi - lo) / steps, 1e-3);
  std::vector<JumpRecord> jumps;
  EquilibriumReport prev;
  double prev_value = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double value = i + 1 == steps ? hi : lo + (hi - lo) * i / (steps - 1);
    NetworkParams p = base;
    (parameter == "F" ? p.F : p.q0) = value;
    const EquilibriumReport cur = solve_known_characteristics(p);
    if (i > 0 && (std::fabs(cur.x - prev.x) > threshold ||
                  std::fabs(cur.y - prev.y) > threshold)) {
      jumps.push_back({parameter, prev_value, value, prev.x, cur.x, prev.y, cur.y,
                       prev.case_label, cur.case_label});
    }
    prev = cur;
    prev_value = value;
  }
  return jumps;
}

}  // namespace scangame
