#pragma once

#include <cstdint>
#include <vector>

#include "randmeas/partition.hpp"
#include "randmeas/rng.hpp"

namespace randmeas {

// Scalar variate generators.  All algorithms are spelled out here rather
// than taken from <random> so that a (seed, stream) address produces the
// same draws on every platform and standard library.

double sample_standard_normal(RngStream& rng);

// Mean-1 exponential.
double sample_exponential(RngStream& rng);

// Gamma with the given shape and scale (mean = shape * scale).
double sample_gamma_rv(double shape, double scale, RngStream& rng);

// Beta(a, b) as a ratio of two gamma draws.
double sample_beta_rv(double a, double b, RngStream& rng);

// Beta(1, b) by quantile inversion: 1 - (1-u)^{1/b}.  One uniform per draw;
// the stick-breaking and transport kernels use this form.
double sample_beta1(double b, RngStream& rng);

// Dirichlet on the simplex spanned by alpha.size() vertices.
SimplexVector sample_dirichlet(const std::vector<double>& alpha, RngStream& rng);

// Poisson counts for any finite mean (large means are split additively).
std::int64_t sample_poisson_count(double mean, RngStream& rng);

}  // namespace randmeas
