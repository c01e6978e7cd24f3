#pragma once

#include <functional>
#include <vector>

#include "scangame/params.hpp"

namespace scangame {

struct TypeAtom {
  double c = 0.0;       // capability type in [a,b]
  double weight = 0.0;  // > 0, weights sum to 1
};

struct TypePiece {
  double lo = 0.0;
  double hi = 0.0;
  double density = 0.0;  // constant density >= 0 on [lo,hi]
};

/// The Scanner's prior over Invader capability types: either finitely many
/// atoms or a piecewise-constant density. Total mass must be 1 within 1e-12.
class TypeDistribution {
 public:
  static TypeDistribution point(double c);
  static TypeDistribution atoms(std::vector<TypeAtom> atoms);
  static TypeDistribution uniform(double lo, double hi);
  static TypeDistribution pieces(std::vector<TypePiece> pieces);

  bool is_discrete() const { return discrete_; }
  const std::vector<TypeAtom>& atom_list() const { return atoms_; }
  const std::vector<TypePiece>& piece_list() const { return pieces_; }

  double mass() const;
  double mean() const;
  double support_lo() const;
  double support_hi() const;
  bool contains(double c, double tol = 1e-9) const;

  /// Closed form of  integral q(c) * min(c, lambda) dc  over the support.
  /// The clamp splits each piece into at most two elementary integrals.
  double integral_min(double lambda) const;

  /// Pr[c > lambda].
  double tail_mass(double lambda) const;

  /// Midpoint-rule discretization of a density prior into `n` atoms
  /// (discrete priors are returned unchanged).
  TypeDistribution discretized(int n) const;

  /// Checks support containment in [p.a, p.b]; throws std::domain_error.
  void ensure_valid_for(const NetworkParams& p) const;

 private:
  TypeDistribution() = default;
  void validate() const;

  bool discrete_ = true;
  std::vector<TypeAtom> atoms_;
  std::vector<TypePiece> pieces_;
};

}  // namespace scangame
