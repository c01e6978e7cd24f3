#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace scangame {

/// Exact rational scalar used by the tiling constructions when the inputs
/// are given as decimal literals (band endpoints are then exact, so width
/// and separation checks need no tolerance).
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Parses a decimal literal ("0.3", "-1.25e-2") into an exact rational.
/// Returns nullopt when the text is not a plain decimal or the exact
/// representation would overflow long long; callers fall back to double.
std::optional<Rational> parse_decimal(std::string_view text);

/// "p/q" (or "p" when q == 1), for reports.
std::string to_string(const Rational& r);

}  // namespace scangame
