#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scangame/rational.hpp"

namespace scangame {

/// Closed subinterval [start, start+width] of the normalized spectrum [0,1].
template <class S>
struct Band {
  S start{};
  S width{};
  S end() const { return start + width; }
};

enum class TilingRegime {
  m_bands,          // 1-(x+y)M <= y: M bands each, value 1/M
  m_plus_one_bands, // 1-(x+y)M  > y: M+1 bands each, value 1/(M+1)
  overlap_forced,   // x+y >= 1: any two bands intersect, value 1
};

std::string to_string(TilingRegime regime);

/// Equal-probability mixed strategies of the fixed-width placement game:
/// each player mixes uniformly over its band list; `value` is the game
/// value (worst-case detection probability).
template <class S>
struct TilingSolution {
  std::vector<Band<S>> scanner_bands;
  std::vector<Band<S>> invader_bands;
  S value{};
  long m = 0;       // floor(1/(x+y)); 1 in the overlap-forced regime
  S epsilon{};      // invader spacing slack; 0 where unused
  TilingRegime regime = TilingRegime::overlap_forced;
};

/// Game value P(x,y): 1 when x+y >= 1, else 1/M or 1/(M+1) depending on
/// whether 1-(x+y)M <= y, with M = floor(1/(x+y)). Widths must lie in (0,1].
double detection_value(double x, double y);
Rational detection_value(const Rational& x, const Rational& y);

/// Builds the equal-probability band sets achieving detection_value(x,y).
/// `epsilon` overrides the invader spacing slack; it must lie in (0, x/M)
/// in the M-band regime and in (0, (1-y-M(x+y))/(M-1)) in the (M+1)-band
/// regime with M > 1 (domain error otherwise). Defaults are the interval
/// midpoints. With M = 1 in the (M+1)-band regime the slack is unused and
/// forced to 0.
TilingSolution<double> build_tiling(double x, double y,
                                    std::optional<double> epsilon = std::nullopt);
TilingSolution<Rational> build_tiling(const Rational& x, const Rational& y,
                                      std::optional<Rational> epsilon = std::nullopt);

TilingSolution<double> to_double(const TilingSolution<Rational>& sol);

/// Extremal detection probabilities from sweeping pure opponent bands over
/// a start-position grid: min over invader placements of detection under
/// the scanner mix (>= value when the construction is sound) and max over
/// scanner placements of detection under the invader mix (<= value).
struct GuaranteeReport {
  double min_detect = 0.0;
  double min_at = 0.0;  // invader start position achieving the min
  double max_detect = 0.0;
  double max_at = 0.0;  // scanner start position achieving the max
};

GuaranteeReport guarantee_check(const TilingSolution<double>& sol, int grid_resolution);

/// Structural checks on a solution built for widths (x, y): exact band
/// widths, containment in [0,1], scanner gaps <= y, invader gaps > x.
struct SeparationReport {
  bool ok = true;
  std::string issue;  // first violated property, empty when ok
};

SeparationReport check_separation(const TilingSolution<double>& sol, double x, double y);
SeparationReport check_separation(const TilingSolution<Rational>& sol, const Rational& x,
                                  const Rational& y);

/// Closed-interval intersection with absolute tolerance for the double path.
inline bool bands_intersect(const Band<double>& s, const Band<double>& i,
                            double tol = 1e-12) {
  return s.start <= i.end() + tol && i.start <= s.end() + tol;
}
inline bool bands_intersect(const Band<Rational>& s, const Band<Rational>& i) {
  return s.start <= i.end() && i.start <= s.end();
}

}  // namespace scangame
