#pragma once

#include "randmeas/distributions.hpp"
#include "randmeas/intensity.hpp"
#include "randmeas/measure.hpp"
#include "randmeas/rng.hpp"

namespace randmeas {

// Controls for the stick-breaking loop.  Breaking stops once the unassigned
// remainder drops to remainderTolerance; the remainder is then attached to
// one final atom so the result has total mass 1 up to rounding.
struct StickBreakingConfig {
  int maxAtoms = 10000;
  double remainderTolerance = 1e-12;
};

// Poisson point process with the given intensity: atom count is Poisson
// with mean beta, locations are i.i.d. from the normalised intensity.
DiscreteMeasure sample_poisson_pp(const IntensityMeasure& sigma, RngStream& rng);

// Random probability measure via stick breaking: sticks are Beta(1, beta),
// locations i.i.d. from the normalised intensity.  Atom j receives weight
// t_j * prod_{i<j} (1 - t_i); per atom the location is drawn first, then
// the stick.
DiscreteMeasure sample_dirichlet_ferguson(const IntensityMeasure& sigma,
                                          const StickBreakingConfig& cfg, RngStream& rng);

// Random finite measure with independent Gamma(beta, 1) total mass spread
// over a stick-breaking draw: nu = r * eta.
DiscreteMeasure sample_gamma_measure(const IntensityMeasure& sigma,
                                     const StickBreakingConfig& cfg, RngStream& rng);

// The same law approximated through its jump representation: atoms with
// mass s arrive at rate beta * s^{-1} e^{-s} ds; jumps below levyCutoff are
// discarded.  Independent of the stick-breaking route, so the two samplers
// cross-validate each other.
DiscreteMeasure sample_gamma_measure_levy(const IntensityMeasure& sigma, double levyCutoff,
                                          RngStream& rng);

// Mean number of atoms the truncated jump sampler produces, i.e.
// beta * E1(levyCutoff) with E1 the exponential integral.
double levy_truncation_mean_atoms(double beta, double levyCutoff);

}  // namespace randmeas
