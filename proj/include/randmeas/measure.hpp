#pragma once

#include <cstddef>
#include <vector>

namespace randmeas {

// What a DiscreteMeasure is allowed to look like.
//   Configuration      - point configuration: every atom carries mass 1
//   FiniteMeasure      - arbitrary positive masses
//   ProbabilityMeasure - masses sum to 1 (within kMassTol)
enum class MeasureKind { Configuration, FiniteMeasure, ProbabilityMeasure };

struct Atom {
  double location;  // in [0,1]
  double mass;      // strictly positive
};

// A finite, purely atomic measure on [0,1].
//
// Atoms are kept sorted by location and pairwise distinct; constructing a
// measure from a list with repeated locations merges the masses.  The empty
// atom list is the zero measure and is a valid value for every kind except
// ProbabilityMeasure.
class DiscreteMeasure {
 public:
  static constexpr double kMassTol = 1e-12;

  DiscreteMeasure() : kind_(MeasureKind::Configuration) {}
  DiscreteMeasure(std::vector<Atom> atoms, MeasureKind kind);

  const std::vector<Atom>& atoms() const { return atoms_; }
  MeasureKind kind() const { return kind_; }
  std::size_t size() const { return atoms_.size(); }

  double total_mass() const;

  // Mass carried by the atom exactly at x; 0 when no atom sits there.
  // Exact floating-point comparison by design: callers pass back locations
  // they obtained from the measure itself.
  double mass_at(double x) const;

 private:
  std::vector<Atom> atoms_;
  MeasureKind kind_;
};

// eta -> (1 - t) * eta + t * delta_x.  Requires eta to be a probability
// measure and t in [0,1]; a collision with an existing atom at x merges the
// masses.  t == 1 collapses everything onto delta_x.
DiscreteMeasure convex_step(const DiscreteMeasure& eta, double x, double t);

// m + mass * delta_x.  Used for the perturbed measures appearing on the
// right-hand side of the identities; the result is reported as a plain
// FiniteMeasure regardless of the input kind.
DiscreteMeasure add_atom(const DiscreteMeasure& m, double x, double mass);

}  // namespace randmeas
