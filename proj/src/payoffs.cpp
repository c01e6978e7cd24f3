#include "scangame/payoffs.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scangame {

namespace {

constexpr double kPolicyTol = 1e-9;

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double flo, double fmid, double fhi, double whole, double tol,
                        int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lmid = 0.5 * (lo + mid);
  const double rmid = 0.5 * (mid + hi);
  const double flm = f(lmid);
  const double frm = f(rmid);
  const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
  const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, lo, mid, flo, flm, fmid, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, mid, hi, fmid, frm, fhi, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
  if (!(hi > lo)) return 0.0;
  const double mid = 0.5 * (lo + hi);
  const double flo = f(lo), fmid = f(mid), fhi = f(hi);
  const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return adaptive_simpson(f, lo, hi, flo, fmid, fhi, whole, tol, 48);
}

}  // namespace

double payoff_scanner_expected(const NetworkParams& p, const TypeDistribution& q,
                               double x, const std::function<double(double)>& y_policy) {
  p.ensure_valid();
  q.ensure_valid_for(p);
  if (!(x >= p.a && x <= p.b)) {
    std::ostringstream os;
    os << "x=" << x << " outside [a,b]=[" << p.a << "," << p.b << "]";
    throw std::domain_error(os.str());
  }

  auto policy_at = [&](double t) {
    const double y = y_policy(t);
    if (y < p.a - kPolicyTol || y > t + kPolicyTol) {
      std::ostringstream os;
      os << "policy y(" << t << ")=" << y << " outside [a,c]=[" << p.a << "," << t << "]";
      throw std::domain_error(os.str());
    }
    return y;
  };
  auto scan_term = [&](double t) {
    const double y = policy_at(t);
    return p.F * (x + y) - p.V * y * (1.0 - x - y);
  };

  double related = 0.0;
  if (q.is_discrete()) {
    for (const TypeAtom& at : q.atom_list()) related += at.weight * scan_term(at.c);
  } else {
    for (const TypePiece& pc : q.piece_list()) {
      if (pc.density <= 0.0) continue;
      related += pc.density *
                 integrate([&](double t) { return scan_term(t); }, pc.lo, pc.hi, 1e-13);
    }
  }

  const double unrelated = p.F * (x + p.a) - p.V * p.a * (1.0 - x - p.a);
  return p.q0 * related + (1.0 - p.q0) * unrelated - p.C_S * x;
}

}  // namespace scangame
