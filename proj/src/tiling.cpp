#include "scangame/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scangame {

namespace {

constexpr double kTol = 1e-12;

// Scalar shims so the construction reads identically for double and Rational.
inline bool leq(double l, double r) { return l <= r + kTol; }
inline bool leq(const Rational& l, const Rational& r) { return l <= r; }
inline bool less(double l, double r) { return l < r - kTol; }
inline bool less(const Rational& l, const Rational& r) { return l < r; }

inline double ratio(long num, long den, double) {
  return static_cast<double>(num) / static_cast<double>(den);
}
inline Rational ratio(long num, long den, const Rational&) { return Rational(num, den); }

inline double scale(long k, double v) { return static_cast<double>(k) * v; }
inline Rational scale(long k, const Rational& v) { return Rational(k) * v; }

inline double halve(double v) { return v / 2.0; }
inline Rational halve(const Rational& v) { return v / 2; }

// floor(1/s) for s in (0,1]. The double version snaps 1/s upward when it
// sits within 1e-9 of the next integer, so that inputs representing exact
// unit fractions land on the intended M.
inline long floor_inverse(double s) {
  const double r = 1.0 / s;
  double fl = std::floor(r);
  if (r - fl > 1.0 - 1e-9) fl += 1.0;
  return static_cast<long>(fl);
}
inline long floor_inverse(const Rational& s) {
  return static_cast<long>(s.denominator() / s.numerator());
}

template <class S>
void check_widths(const S& x, const S& y) {
  const S zero = ratio(0, 1, S{});
  const S one = ratio(1, 1, S{});
  if (!less(zero, x) || !less(zero, y)) throw std::domain_error("widths must be > 0");
  if (!leq(x, one) || !leq(y, one)) throw std::domain_error("widths must be <= 1");
}

struct RegimeInfo {
  TilingRegime regime;
  long m;
};

template <class S>
RegimeInfo classify(const S& x, const S& y) {
  const S one = ratio(1, 1, S{});
  const S s = x + y;
  if (leq(one, s)) return {TilingRegime::overlap_forced, 1};
  const long m = floor_inverse(s);
  if (leq(one - scale(m, s), y)) return {TilingRegime::m_bands, m};
  return {TilingRegime::m_plus_one_bands, m};
}

template <class S>
S detection_value_impl(const S& x, const S& y) {
  check_widths(x, y);
  const RegimeInfo info = classify(x, y);
  switch (info.regime) {
    case TilingRegime::overlap_forced:
      return ratio(1, 1, S{});
    case TilingRegime::m_bands:
      return ratio(1, info.m, S{});
    case TilingRegime::m_plus_one_bands:
      return ratio(1, info.m + 1, S{});
  }
  throw std::logic_error("unreachable regime");
}

template <class S>
TilingSolution<S> build_tiling_impl(const S& x, const S& y, std::optional<S> epsilon) {
  check_widths(x, y);
  const S zero = ratio(0, 1, S{});
  const S one = ratio(1, 1, S{});
  const RegimeInfo info = classify(x, y);

  TilingSolution<S> sol;
  sol.regime = info.regime;
  sol.m = info.m;
  sol.epsilon = zero;

  if (info.regime == TilingRegime::overlap_forced) {
    // Any placements intersect; a single pure band per player suffices.
    sol.scanner_bands.push_back({zero, x});
    sol.invader_bands.push_back({zero, y});
    sol.value = one;
    return sol;
  }

  const long m = info.m;
  const S s = x + y;

  if (info.regime == TilingRegime::m_bands) {
    const S bound = ratio(1, m, S{}) * x;  // epsilon must stay below x/M
    S eps = epsilon.value_or(halve(bound));
    if (!(less(zero, eps) && less(eps, bound))) {
      std::ostringstream os;
      os << "epsilon outside (0, x/M)";
      throw std::domain_error(os.str());
    }
    sol.epsilon = eps;
    for (long k = 1; k <= m; ++k) {
      sol.scanner_bands.push_back({scale(k, s) - x, x});
      sol.invader_bands.push_back({scale(k, s) - y - scale(m + 1 - k, eps), y});
    }
    sol.value = ratio(1, m, S{});
    return sol;
  }

  // (M+1)-band regime: append the right-flush bands.
  S eps = zero;
  if (m > 1) {
    const S bound = (one - y - scale(m, s)) / ratio(m - 1, 1, S{});
    eps = epsilon.value_or(halve(bound));
    if (!(less(zero, eps) && less(eps, bound))) {
      std::ostringstream os;
      os << "epsilon outside (0, (1-y-M(x+y))/(M-1))";
      throw std::domain_error(os.str());
    }
  }
  sol.epsilon = eps;
  for (long k = 1; k <= m; ++k) {
    sol.scanner_bands.push_back({scale(k, s) - x, x});
    sol.invader_bands.push_back({scale(k - 1, s + eps), y});
  }
  sol.scanner_bands.push_back({one - x, x});
  sol.invader_bands.push_back({one - y, y});
  sol.value = ratio(1, m + 1, S{});
  return sol;
}

template <class S>
SeparationReport check_separation_impl(const TilingSolution<S>& sol, const S& x,
                                        const S& y) {
  const S zero = ratio(0, 1, S{});
  const S one = ratio(1, 1, S{});
  auto fail = [](std::string what) { return SeparationReport{false, std::move(what)}; };
  auto width_matches = [](const S& w, const S& want) {
    if constexpr (std::is_same_v<S, double>)
      return std::fabs(w - want) <= kTol;
    else
      return w == want;
  };

  if (sol.scanner_bands.empty() || sol.invader_bands.empty())
    return fail("empty band list");
  for (const Band<S>& band : sol.scanner_bands) {
    if (!width_matches(band.width, x)) return fail("scanner band width differs from x");
    if (!leq(zero, band.start) || !leq(band.end(), one))
      return fail("scanner band leaves [0,1]");
  }
  for (const Band<S>& band : sol.invader_bands) {
    if (!width_matches(band.width, y)) return fail("invader band width differs from y");
    if (!leq(zero, band.start) || !leq(band.end(), one))
      return fail("invader band leaves [0,1]");
  }
  for (std::size_t i = 1; i < sol.scanner_bands.size(); ++i) {
    const S gap = sol.scanner_bands[i].start - sol.scanner_bands[i - 1].end();
    if (!leq(gap, y)) return fail("scanner gap exceeds y");
  }
  if (sol.regime != TilingRegime::overlap_forced) {
    for (std::size_t i = 1; i < sol.invader_bands.size(); ++i) {
      const S gap = sol.invader_bands[i].start - sol.invader_bands[i - 1].end();
      if (!(x < gap)) return fail("invader gap not strictly greater than x");
    }
  }
  return {};
}

}  // namespace

std::string to_string(TilingRegime regime) {
  switch (regime) {
    case TilingRegime::m_bands: return "M-regime";
    case TilingRegime::m_plus_one_bands: return "M+1-regime";
    case TilingRegime::overlap_forced: return "overlap-forced";
  }
  return "?";
}

double detection_value(double x, double y) { return detection_value_impl(x, y); }

Rational detection_value(const Rational& x, const Rational& y) {
  return detection_value_impl(x, y);
}

TilingSolution<double> build_tiling(double x, double y, std::optional<double> epsilon) {
  return build_tiling_impl(x, y, epsilon);
}

TilingSolution<Rational> build_tiling(const Rational& x, const Rational& y,
                                      std::optional<Rational> epsilon) {
  return build_tiling_impl(x, y, epsilon);
}

TilingSolution<double> to_double(const TilingSolution<Rational>& sol) {
  TilingSolution<double> out;
  out.value = scangame::to_double(sol.value);
  out.m = sol.m;
  out.epsilon = scangame::to_double(sol.epsilon);
  out.regime = sol.regime;
  out.scanner_bands.reserve(sol.scanner_bands.size());
  for (const Band<Rational>& band : sol.scanner_bands)
    out.scanner_bands.push_back(
        {scangame::to_double(band.start), scangame::to_double(band.width)});
  out.invader_bands.reserve(sol.invader_bands.size());
  for (const Band<Rational>& band : sol.invader_bands)
    out.invader_bands.push_back(
        {scangame::to_double(band.start), scangame::to_double(band.width)});
  return out;
}

GuaranteeReport guarantee_check(const TilingSolution<double>& sol, int grid_resolution) {
  if (grid_resolution < 2) throw std::domain_error("grid_resolution must be >= 2");
  const double x = sol.scanner_bands.front().width;
  const double y = sol.invader_bands.front().width;
  const auto n_s = static_cast<double>(sol.scanner_bands.size());
  const auto n_i = static_cast<double>(sol.invader_bands.size());

  GuaranteeReport report;
  report.min_detect = 2.0;  // above any probability
  report.max_detect = -1.0;

  const double inv_span = std::max(0.0, 1.0 - y);
  const double scan_span = std::max(0.0, 1.0 - x);
  for (int i = 0; i < grid_resolution; ++i) {
    const double frac = static_cast<double>(i) / (grid_resolution - 1);

    const Band<double> inv{inv_span * frac, y};
    int hits = 0;
    for (const Band<double>& band : sol.scanner_bands)
      if (bands_intersect(band, inv)) ++hits;
    const double detect_by_mix = hits / n_s;
    if (detect_by_mix < report.min_detect) {
      report.min_detect = detect_by_mix;
      report.min_at = inv.start;
    }

    const Band<double> scan{scan_span * frac, x};
    hits = 0;
    for (const Band<double>& band : sol.invader_bands)
      if (bands_intersect(scan, band)) ++hits;
    const double detect_of_mix = hits / n_i;
    if (detect_of_mix > report.max_detect) {
      report.max_detect = detect_of_mix;
      report.max_at = scan.start;
    }
  }
  return report;
}

SeparationReport check_separation(const TilingSolution<double>& sol, double x, double y) {
  return check_separation_impl(sol, x, y);
}

SeparationReport check_separation(const TilingSolution<Rational>& sol, const Rational& x,
                                  const Rational& y) {
  return check_separation_impl(sol, x, y);
}

}  // namespace scangame
