#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scangame/distribution.hpp"
#include "scangame/params.hpp"

namespace scangame {

/// Malformed or inconsistent scenario input (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Oracle verification failed at a named point (CLI exit code 4).
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepAxis {
  std::string parameter;  // "F" or "q0"
  double lo = 0.0;
  double hi = 0.0;
  int steps = 30;
};

/// A solver scenario as read from the flat key-value config format:
///
///   params.U = 1.0            # any NetworkParams field
///   prior.uniform = 0.039 0.3 # or prior.point / prior.atoms / prior.pieces
///   sweep.F = 0.1 0.4 30      # at most one axis per parameter
///   report_types = 0.039 0.3
///   verify = true
///   seed = 1
struct ScenarioConfig {
  NetworkParams params;
  std::optional<double> point_prior;      // known-characteristics solve when set
  std::optional<TypeDistribution> prior;  // capability prior otherwise
  std::vector<SweepAxis> sweep;
  std::vector<double> report_types;
  bool verify = false;
  std::uint64_t seed = 1;

  bool bayesian() const { return !point_prior.has_value(); }
  const TypeDistribution& prior_or_throw() const;
  /// Cross-field checks (axis ranges, report types inside the prior support).
  void ensure_valid() const;
};

/// The shipped default: U=V=1, C_S=0.4, C_I=0.1, F=0.3, a=0.01, b=c=0.3,
/// q0=0.9, uniform prior on [0.039, 0.3], report types {0.039, 0.3}.
ScenarioConfig default_scenario();

/// default_scenario() plus the 30x30 sweep axes F in [0.1,0.4],
/// q0 in [0.01,0.99].
ScenarioConfig default_sweep_scenario();

ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig load_scenario(const std::string& path);

}  // namespace scangame
