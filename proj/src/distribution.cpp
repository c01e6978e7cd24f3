#include "scangame/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scangame {

namespace {
constexpr double kMassTol = 1e-12;
}

TypeDistribution TypeDistribution::point(double c) {
  return atoms({{c, 1.0}});
}

TypeDistribution TypeDistribution::atoms(std::vector<TypeAtom> atoms) {
  TypeDistribution d;
  d.discrete_ = true;
  d.atoms_ = std::move(atoms);
  std::sort(d.atoms_.begin(), d.atoms_.end(),
            [](const TypeAtom& l, const TypeAtom& r) { return l.c < r.c; });
  d.validate();
  return d;
}

TypeDistribution TypeDistribution::uniform(double lo, double hi) {
  if (!(hi > lo)) throw std::domain_error("uniform prior needs hi > lo");
  return pieces({{lo, hi, 1.0 / (hi - lo)}});
}

TypeDistribution TypeDistribution::pieces(std::vector<TypePiece> pieces) {
  TypeDistribution d;
  d.discrete_ = false;
  d.pieces_ = std::move(pieces);
  std::sort(d.pieces_.begin(), d.pieces_.end(),
            [](const TypePiece& l, const TypePiece& r) { return l.lo < r.lo; });
  d.validate();
  return d;
}

void TypeDistribution::validate() const {
  if (discrete_) {
    if (atoms_.empty()) throw std::domain_error("prior has no atoms");
    for (const TypeAtom& at : atoms_)
      if (!(at.weight > 0.0)) throw std::domain_error("atom weights must be > 0");
  } else {
    if (pieces_.empty()) throw std::domain_error("prior has no pieces");
    for (const TypePiece& pc : pieces_) {
      if (!(pc.hi > pc.lo)) throw std::domain_error("piece needs hi > lo");
      if (!(pc.density >= 0.0)) throw std::domain_error("piece density must be >= 0");
    }
    for (std::size_t i = 1; i < pieces_.size(); ++i)
      if (pieces_[i].lo < pieces_[i - 1].hi - kMassTol)
        throw std::domain_error("prior pieces overlap");
  }
  const double m = mass();
  if (std::fabs(m - 1.0) > kMassTol) {
    std::ostringstream os;
    os << "prior mass " << m << " differs from 1 by more than 1e-12";
    throw std::domain_error(os.str());
  }
}

double TypeDistribution::mass() const {
  double m = 0.0;
  if (discrete_) {
    for (const TypeAtom& at : atoms_) m += at.weight;
  } else {
    for (const TypePiece& pc : pieces_) m += pc.density * (pc.hi - pc.lo);
  }
  return m;
}

double TypeDistribution::mean() const {
  double m = 0.0;
  if (discrete_) {
    for (const TypeAtom& at : atoms_) m += at.weight * at.c;
  } else {
    for (const TypePiece& pc : pieces_)
      m += pc.density * (pc.hi * pc.hi - pc.lo * pc.lo) / 2.0;
  }
  return m;
}

double TypeDistribution::support_lo() const {
  return discrete_ ? atoms_.front().c : pieces_.front().lo;
}

double TypeDistribution::support_hi() const {
  return discrete_ ? atoms_.back().c : pieces_.back().hi;
}

bool TypeDistribution::contains(double c, double tol) const {
  if (discrete_) {
    for (const TypeAtom& at : atoms_)
      if (std::fabs(at.c - c) <= tol) return true;
    return false;
  }
  for (const TypePiece& pc : pieces_)
    if (pc.density > 0.0 && c >= pc.lo - tol && c <= pc.hi + tol) return true;
  return false;
}

double TypeDistribution::integral_min(double lambda) const {
  double acc = 0.0;
  if (discrete_) {
    for (const TypeAtom& at : atoms_) acc += at.weight * std::min(at.c, lambda);
    return acc;
  }
  for (const TypePiece& pc : pieces_) {
    const double m = std::clamp(lambda, pc.lo, pc.hi);
    acc += pc.density * ((m * m - pc.lo * pc.lo) / 2.0 + lambda * (pc.hi - m));
  }
  return acc;
}

double TypeDistribution::tail_mass(double lambda) const {
  double acc = 0.0;
  if (discrete_) {
    for (const TypeAtom& at : atoms_)
      if (at.c > lambda) acc += at.weight;
    return acc;
  }
  for (const TypePiece& pc : pieces_)
    acc += pc.density * (pc.hi - std::clamp(lambda, pc.lo, pc.hi));
  return acc;
}

TypeDistribution TypeDistribution::discretized(int n) const {
  if (discrete_) return *this;
  if (n < 1) throw std::domain_error("discretized() needs n >= 1");
  // Atom count per piece proportional to its mass, at least one per
  // positive-mass piece; midpoint placement.
  std::vector<TypeAtom> out;
  for (const TypePiece& pc : pieces_) {
    const double piece_mass = pc.density * (pc.hi - pc.lo);
    if (piece_mass <= 0.0) continue;
    int k = std::max(1, static_cast<int>(std::lround(piece_mass * n)));
    const double h = (pc.hi - pc.lo) / k;
    for (int i = 0; i < k; ++i)
      out.push_back({pc.lo + (i + 0.5) * h, pc.density * h});
  }
  // Normalize away the rounding drift so the atom version is a valid prior.
  double m = 0.0;
  for (const TypeAtom& at : out) m += at.weight;
  for (TypeAtom& at : out) at.weight /= m;
  return atoms(std::move(out));
}

void TypeDistribution::ensure_valid_for(const NetworkParams& p) const {
  if (support_lo() < p.a - kMassTol || support_hi() > p.b + kMassTol) {
    std::ostringstream os;
    os << "prior support [" << support_lo() << "," << support_hi()
       << "] not contained in [a,b]=[" << p.a << "," << p.b << "]";
    throw std::domain_error(os.str());
  }
}

}  // namespace scangame
