#include "randmeas/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randmeas {

Partition::Partition(std::vector<double> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2) {
    throw std::invalid_argument("Partition: need at least two breakpoints");
  }
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw std::invalid_argument("Partition: breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw std::invalid_argument("Partition: breakpoints must be strictly increasing");
    }
  }
}

int Partition::cell_index(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("Partition: point outside [0,1]");
  }
  // upper_bound gives the first breakpoint > x, so cells are [b_i, b_{i+1}).
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  int idx = static_cast<int>(it - breakpoints_.begin()) - 1;
  if (idx >= cells()) idx = cells() - 1;  // x == 1 falls into the last (closed) cell
  return idx;
}

SimplexVector::SimplexVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("SimplexVector: empty");
  double s = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("SimplexVector: entries must be nonnegative");
    }
    s += v;
  }
  if (std::abs(s - 1.0) > kSimplexTol) {
    throw std::invalid_argument("SimplexVector: entries must sum to 1");
  }
}

std::vector<double> cell_masses(const Partition& part, const DiscreteMeasure& m) {
  std::vector<double> out(static_cast<std::size_t>(part.cells()), 0.0);
  for (const Atom& a : m.atoms()) out[static_cast<std::size_t>(part.cell_index(a.location))] += a.mass;
  return out;
}

SimplexVector ev_partition(const Partition& part, const DiscreteMeasure& eta) {
  if (eta.kind() != MeasureKind::ProbabilityMeasure) {
    throw std::invalid_argument("ev_partition: eta must be a probability measure");
  }
  return SimplexVector(cell_masses(part, eta));
}

std::vector<double> simplex_step(const std::vector<double>& y, int cell, double t) {
  if (cell < 0 || static_cast<std::size_t>(cell) >= y.size()) {
    throw std::invalid_argument("simplex_step: cell index out of range");
  }
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = (1.0 - t) * y[i];
  out[static_cast<std::size_t>(cell)] += t;
  return out;
}

}  // namespace randmeas
