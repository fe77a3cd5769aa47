#include "randmeas/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randmeas {

IntensityMeasure IntensityMeasure::uniform(double beta) {
  return IntensityMeasure(beta, {0.0, 1.0}, {1.0});
}

IntensityMeasure IntensityMeasure::piecewise(double beta, std::vector<double> breakpoints,
                                             std::vector<double> density) {
  return IntensityMeasure(beta, std::move(breakpoints), std::move(density));
}

IntensityMeasure::IntensityMeasure(double beta, std::vector<double> breakpoints,
                                   std::vector<double> density)
    : beta_(beta), breakpoints_(std::move(breakpoints)), density_(std::move(density)) {
  if (!std::isfinite(beta_) || beta_ <= 0.0) {
    throw std::invalid_argument("IntensityMeasure: beta must be positive");
  }
  if (breakpoints_.size() < 2 || density_.size() + 1 != breakpoints_.size()) {
    throw std::invalid_argument("IntensityMeasure: need one density value per cell");
  }
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw std::invalid_argument("IntensityMeasure: support must be [0,1]");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw std::invalid_argument("IntensityMeasure: breakpoints must be strictly increasing");
    }
  }
  double total = 0.0;
  cdf_.resize(breakpoints_.size());
  cdf_[0] = 0.0;
  for (std::size_t i = 0; i < density_.size(); ++i) {
    if (!std::isfinite(density_[i]) || density_[i] < 0.0) {
      throw std::invalid_argument("IntensityMeasure: density values must be nonnegative");
    }
    total += density_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
    cdf_[i + 1] = total;
  }
  if (std::abs(total - 1.0) > kDensityTol) {
    throw std::invalid_argument("IntensityMeasure: density must integrate to 1");
  }
  cdf_.back() = 1.0;  // pin the endpoint so cdf_inverse(1) == 1 exactly
}

double IntensityMeasure::density(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("IntensityMeasure: point outside [0,1]");
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (idx == 0) idx = 1;
  if (idx > density_.size()) idx = density_.size();
  return density_[idx - 1];
}

double IntensityMeasure::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return cdf_[idx] + density_[idx] * (x - breakpoints_[idx]);
}

double IntensityMeasure::cdf_inverse(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("IntensityMeasure: quantile argument outside [0,1]");
  }
  // First segment whose right-endpoint cdf value reaches u.
  auto it = std::lower_bound(cdf_.begin() + 1, cdf_.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cdf_.begin()) - 1;
  double d = density_[idx];
  if (d <= 0.0) return breakpoints_[idx];
  double x = breakpoints_[idx] + (u - cdf_[idx]) / d;
  return std::min(x, breakpoints_[idx + 1]);
}

double IntensityMeasure::mass(double a, double b) const {
  if (a > b) throw std::invalid_argument("IntensityMeasure: empty interval reversed");
  return beta_ * (cdf(b) - cdf(a));
}

std::vector<double> IntensityMeasure::cell_masses(const Partition& part) const {
  const std::vector<double>& bp = part.breakpoints();
  std::vector<double> out(static_cast<std::size_t>(part.cells()));
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) out[i] = mass(bp[i], bp[i + 1]);
  return out;
}

}  // namespace randmeas
