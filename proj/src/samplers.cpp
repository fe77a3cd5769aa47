#include "randmeas/samplers.hpp"

#include <boost/math/special_functions/expint.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace randmeas {

DiscreteMeasure sample_poisson_pp(const IntensityMeasure& sigma, RngStream& rng) {
  const std::int64_t n = sample_poisson_count(sigma.beta(), rng);
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) atoms.push_back({sigma.sample_location(rng), 1.0});
  // Ties between i.i.d. continuous locations have probability zero; if the
  // 53-bit grid ever produces one, the merge would break the unit-mass
  // invariant and the constructor reports it.
  return DiscreteMeasure(std::move(atoms), MeasureKind::Configuration);
}

DiscreteMeasure sample_dirichlet_ferguson(const IntensityMeasure& sigma,
                                          const StickBreakingConfig& cfg, RngStream& rng) {
  if (cfg.maxAtoms < 1) throw std::invalid_argument("stick breaking: maxAtoms must be positive");
  if (!(cfg.remainderTolerance > 0.0) || cfg.remainderTolerance > 1e-12) {
    throw std::invalid_argument("stick breaking: remainderTolerance must lie in (0, 1e-12]");
  }
  const double beta = sigma.beta();
  std::vector<Atom> atoms;
  double remaining = 1.0;
  while (static_cast<int>(atoms.size()) + 1 < cfg.maxAtoms && remaining > cfg.remainderTolerance) {
    const double x = sigma.sample_location(rng);
    const double t = sample_beta1(beta, rng);
    const double w = remaining * t;
    if (w > 0.0) atoms.push_back({x, w});
    remaining *= (1.0 - t);
  }
  if (remaining > cfg.remainderTolerance) {
    throw std::runtime_error("stick breaking: maxAtoms reached before the remainder was exhausted");
  }
  // Attach whatever is left to a final atom; this closes the total mass to 1
  // up to rounding instead of silently dropping the tail.
  if (remaining > 0.0) atoms.push_back({sigma.sample_location(rng), remaining});
  return DiscreteMeasure(std::move(atoms), MeasureKind::ProbabilityMeasure);
}

DiscreteMeasure sample_gamma_measure(const IntensityMeasure& sigma, const StickBreakingConfig& cfg,
                                     RngStream& rng) {
  const double r = sample_gamma_rv(sigma.beta(), 1.0, rng);
  const DiscreteMeasure eta = sample_dirichlet_ferguson(sigma, cfg, rng);
  std::vector<Atom> atoms = eta.atoms();
  for (Atom& a : atoms) a.mass *= r;
  return DiscreteMeasure(std::move(atoms), MeasureKind::FiniteMeasure);
}

double levy_truncation_mean_atoms(double beta, double levyCutoff) {
  if (!(levyCutoff > 0.0)) throw std::invalid_argument("levy sampler: cutoff must be positive");
  return beta * boost::math::expint(1, levyCutoff);
}

namespace {

// One jump size from s^{-1} e^{-s} ds restricted to (cutoff, infinity).
// The range is split at 1 and the piece is chosen once, by its exact mass
// under the jump measure; within a piece plain rejection reproduces the
// conditional law:
//   on (cutoff, 1]   propose s = cutoff^U  (density prop. to 1/s), accept with e^{-s};
//   on (1, infinity) propose s = 1 + Exp(1) (density e^{1-s}),     accept with 1/s.
// Acceptance rates stay above 1/2 uniformly in the cutoff, so the cost per
// jump is O(1) even for very small cutoffs.
double sample_truncated_jump(double cutoff, double massLow, double massTotal, RngStream& rng) {
  if (rng.uniform01() * massTotal < massLow) {
    for (;;) {
      const double s = std::pow(cutoff, rng.uniform01());
      if (rng.uniform01() < std::exp(-s)) return s;
    }
  }
  for (;;) {
    const double s = 1.0 + sample_exponential(rng);
    if (rng.uniform01() * s < 1.0) return s;
  }
}

}  // namespace

DiscreteMeasure sample_gamma_measure_levy(const IntensityMeasure& sigma, double levyCutoff,
                                          RngStream& rng) {
  if (!(levyCutoff > 0.0) || levyCutoff >= 1.0) {
    throw std::invalid_argument("levy sampler: cutoff must lie in (0,1)");
  }
  const double e1Cutoff = boost::math::expint(1, levyCutoff);
  const double e1One = boost::math::expint(1, 1.0);
  const double massLow = e1Cutoff - e1One;  // jump-measure mass on (cutoff, 1]
  const std::int64_t n = sample_poisson_count(sigma.beta() * e1Cutoff, rng);
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const double s = sample_truncated_jump(levyCutoff, massLow, e1Cutoff, rng);
    const double x = sigma.sample_location(rng);
    atoms.push_back({x, s});
  }
  return DiscreteMeasure(std::move(atoms), MeasureKind::FiniteMeasure);
}

}  // namespace randmeas
