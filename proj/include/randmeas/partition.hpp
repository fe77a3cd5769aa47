#pragma once

#include <vector>

#include "randmeas/measure.hpp"

namespace randmeas {

// An interval partition 0 = b0 < b1 < ... < bk = 1 of [0,1].
// Cell i (0-based) is [b_i, b_{i+1}); the last cell is closed on the right so
// the cells cover all of [0,1].
class Partition {
 public:
  explicit Partition(std::vector<double> breakpoints);

  int cells() const { return static_cast<int>(breakpoints_.size()) - 1; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  // Index of the cell containing x in [0,1].
  int cell_index(double x) const;

 private:
  std::vector<double> breakpoints_;
};

// A point of the probability simplex: nonnegative entries summing to 1
// within kSimplexTol.
struct SimplexVector {
  static constexpr double kSimplexTol = 1e-12;

  explicit SimplexVector(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

// Cell masses of a measure, without any normalisation requirement.
std::vector<double> cell_masses(const Partition& part, const DiscreteMeasure& m);

// Evaluation map: cell masses of a probability measure as a simplex point.
SimplexVector ev_partition(const Partition& part, const DiscreteMeasure& eta);

// Simplex-level convex step: y -> (1 - t) * y + t * e_cell.
std::vector<double> simplex_step(const std::vector<double>& y, int cell, double t);

}  // namespace randmeas
