#pragma once

#include <vector>

#include "randmeas/partition.hpp"
#include "randmeas/rng.hpp"

namespace randmeas {

// A finite diffuse intensity on [0,1]: total mass beta > 0 times a
// probability density.  Densities are piecewise constant (the uniform
// density is the one-piece special case), which keeps the distribution
// function and its inverse exact and cheap.
class IntensityMeasure {
 public:
  static constexpr double kDensityTol = 1e-10;

  static IntensityMeasure uniform(double beta);

  // density[i] is the (probability-)density value on [breakpoints[i], breakpoints[i+1]).
  // The density must integrate to 1 within kDensityTol.
  static IntensityMeasure piecewise(double beta, std::vector<double> breakpoints,
                                    std::vector<double> density);

  double beta() const { return beta_; }
  bool is_uniform() const { return density_.size() == 1; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& density_values() const { return density_; }

  // Probability density of the normalised measure at x.
  double density(double x) const;

  // Distribution function of the normalised measure.
  double cdf(double x) const;

  // Inverse distribution function (quantile); u in [0,1].  On density
  // plateaus of value zero the left endpoint is returned.
  double cdf_inverse(double u) const;

  // beta * integral of the density over [a,b].
  double mass(double a, double b) const;

  // Cell masses beta * P(cell) for an interval partition.
  std::vector<double> cell_masses(const Partition& part) const;

  // One draw from the normalised measure.
  double sample_location(RngStream& rng) const { return cdf_inverse(rng.uniform01()); }

 private:
  IntensityMeasure(double beta, std::vector<double> breakpoints, std::vector<double> density);

  double beta_;
  std::vector<double> breakpoints_;  // 0 = b0 < ... < bm = 1
  std::vector<double> density_;      // m values
  std::vector<double> cdf_;          // cdf at each breakpoint, cdf_[0] = 0, cdf_[m] = 1
};

}  // namespace randmeas
