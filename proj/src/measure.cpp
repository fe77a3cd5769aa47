#include "randmeas/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randmeas {

namespace {

void check_atom(const Atom& a) {
  if (!std::isfinite(a.location) || a.location < 0.0 || a.location > 1.0) {
    throw std::invalid_argument("DiscreteMeasure: atom location outside [0,1]");
  }
  if (!std::isfinite(a.mass) || a.mass <= 0.0) {
    throw std::invalid_argument("DiscreteMeasure: atom mass must be positive and finite");
  }
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms, MeasureKind kind)
    : atoms_(std::move(atoms)), kind_(kind) {
  for (const Atom& a : atoms_) check_atom(a);
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });

  // Merge atoms sharing a location so the stored list is pairwise distinct.
  std::size_t out = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (out > 0 && atoms_[out - 1].location == atoms_[i].location) {
      atoms_[out - 1].mass += atoms_[i].mass;
    } else {
      atoms_[out++] = atoms_[i];
    }
  }
  atoms_.resize(out);

  if (kind_ == MeasureKind::Configuration) {
    for (const Atom& a : atoms_) {
      if (a.mass != 1.0) {
        throw std::invalid_argument("DiscreteMeasure: configuration atoms must carry mass 1");
      }
    }
  } else if (kind_ == MeasureKind::ProbabilityMeasure) {
    if (std::abs(total_mass() - 1.0) > kMassTol) {
      throw std::invalid_argument("DiscreteMeasure: probability measure must have total mass 1");
    }
  }
}

double DiscreteMeasure::total_mass() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.mass;
  return s;
}

double DiscreteMeasure::mass_at(double x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const Atom& a, double v) { return a.location < v; });
  if (it != atoms_.end() && it->location == x) return it->mass;
  return 0.0;
}

DiscreteMeasure convex_step(const DiscreteMeasure& eta, double x, double t) {
  if (eta.kind() != MeasureKind::ProbabilityMeasure) {
    throw std::invalid_argument("convex_step: eta must be a probability measure");
  }
  if (!std::isfinite(t) || t < 0.0 || t > 1.0) {
    throw std::invalid_argument("convex_step: t must lie in [0,1]");
  }
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw std::invalid_argument("convex_step: x must lie in [0,1]");
  }

  std::vector<Atom> atoms;
  atoms.reserve(eta.size() + 1);
  if (t < 1.0) {
    for (const Atom& a : eta.atoms()) atoms.push_back({a.location, (1.0 - t) * a.mass});
  }
  if (t > 0.0) atoms.push_back({x, t});
  return DiscreteMeasure(std::move(atoms), MeasureKind::ProbabilityMeasure);
}

DiscreteMeasure add_atom(const DiscreteMeasure& m, double x, double mass) {
  std::vector<Atom> atoms = m.atoms();
  atoms.push_back({x, mass});
  return DiscreteMeasure(std::move(atoms), MeasureKind::FiniteMeasure);
}

}  // namespace randmeas
