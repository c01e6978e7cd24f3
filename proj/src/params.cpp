#include "scangame/params.hpp"

#include <cmath>
#include <sstream>

namespace scangame {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::domain_error(what); }

void check_range(const char* name, double v, double lo, double hi) {
  if (!(v >= lo && v <= hi)) {
    std::ostringstream os;
    os << name << "=" << v << " outside [" << lo << "," << hi << "]";
    fail(os.str());
  }
}

}  // namespace

const NetworkParams& NetworkParams::ensure_valid() const {
  auto positive = [&](const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) fail(std::string(name) + " must be > 0");
  };
  positive("U", U);
  positive("V", V);
  positive("C_S", C_S);
  positive("C_I", C_I);
  if (!(F >= 0.0) || !std::isfinite(F)) fail("F must be >= 0");
  if (!(a > 0.0)) fail("a must be > 0");
  if (!(a <= c)) fail("require a <= c");
  if (!(c <= b)) fail("require c <= b");
  if (!(b < 0.5)) fail("require b < 1/2");
  if (!(q0 >= 0.0 && q0 <= 1.0)) fail("q0 must lie in [0,1]");
  return *this;
}

DerivedQuantities derive(const NetworkParams& p) {
  DerivedQuantities d;
  d.T = (p.U - p.F - p.C_I) / p.U;
  d.R = (p.C_S - p.F) / p.V;
  if (p.q0 > 0.0) d.R_q0 = (d.R - p.a * (1.0 - p.q0)) / p.q0;
  return d;
}

double require_r_q0(const NetworkParams& p) {
  if (p.q0 <= 0.0) fail("R_q0 undefined: q0 = 0 (threshold requires q0 > 0)");
  const DerivedQuantities d = derive(p);
  return *d.R_q0;
}

double response_line(const NetworkParams& p, double x) {
  return (derive(p).T - x) / 2.0;
}

double payoff_invader(const NetworkParams& p, double x, double y) {
  check_range("x", x, p.a, p.b);
  check_range("y", y, p.a, p.c);
  return p.U * (1.0 - x - y) * y - p.F * (x + y) - p.C_I * y;
}

double payoff_scanner(const NetworkParams& p, double x, double y) {
  check_range("x", x, p.a, p.b);
  check_range("y", y, p.a, p.c);
  return p.F * (x + y) - p.V * y * (1.0 - x - y) - p.C_S * x;
}

double payoff_invader_typed(const NetworkParams& p, double x, double y, double cap) {
  check_range("cap", cap, p.a, p.b);
  check_range("x", x, p.a, p.b);
  check_range("y", y, p.a, cap);
  return p.U * (1.0 - x - y) * y - p.F * (x + y) - p.C_I * y;
}

double payoff_invader_unrelated(const NetworkParams& p, double x) {
  check_range("x", x, p.a, p.b);
  const double detect = x + p.a;
  return p.U * (1.0 - detect) - p.F * detect - p.C_I * p.a;
}

}  // namespace scangame
