#include "randmeas/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace randmeas {

double sample_standard_normal(RngStream& rng) {
  // Box-Muller, cosine branch only.
  const double u1 = rng.uniform_pos();
  const double u2 = rng.uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

double sample_exponential(RngStream& rng) {
  return -std::log1p(-rng.uniform01());
}

namespace {

// Marsaglia-Tsang squeeze method, shape >= 1.
double gamma_shape_ge1(double shape, RngStream& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_pos();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_gamma_rv(double shape, double scale, RngStream& rng) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw std::invalid_argument("sample_gamma_rv: shape and scale must be positive");
  }
  if (shape >= 1.0) return scale * gamma_shape_ge1(shape, rng);
  // Boost the shape by one, then shrink: if G ~ Gamma(shape+1) and U uniform,
  // G * U^{1/shape} ~ Gamma(shape).
  const double g = gamma_shape_ge1(shape + 1.0, rng);
  const double u = rng.uniform_pos();
  return scale * g * std::pow(u, 1.0 / shape);
}

double sample_beta_rv(double a, double b, RngStream& rng) {
  const double x = sample_gamma_rv(a, 1.0, rng);
  const double y = sample_gamma_rv(b, 1.0, rng);
  return x / (x + y);
}

double sample_beta1(double b, RngStream& rng) {
  if (!(b > 0.0)) throw std::invalid_argument("sample_beta1: parameter must be positive");
  const double u = rng.uniform01();
  if (b == 1.0) return u;
  const double w = 1.0 - u;  // uniform in (0,1]
  if (b == 2.0) return 1.0 - std::sqrt(w);
  if (b == 0.5) return 1.0 - w * w;
  return 1.0 - std::pow(w, 1.0 / b);
}

SimplexVector sample_dirichlet(const std::vector<double>& alpha, RngStream& rng) {
  if (alpha.empty()) throw std::invalid_argument("sample_dirichlet: empty parameter vector");
  std::vector<double> g(alpha.size());
  double s = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    g[i] = sample_gamma_rv(alpha[i], 1.0, rng);
    s += g[i];
  }
  while (s <= 0.0) {
    // Astronomically unlikely unless all shapes are tiny; redraw.
    s = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      g[i] = sample_gamma_rv(alpha[i], 1.0, rng);
      s += g[i];
    }
  }
  for (double& v : g) v /= s;
  return SimplexVector(std::move(g));
}

std::int64_t sample_poisson_count(double mean, RngStream& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw std::invalid_argument("sample_poisson_count: mean must be finite and nonnegative");
  }
  std::int64_t total = 0;
  // Split large means additively so the product-of-uniforms loop never
  // underflows exp(-mean).
  while (mean > 60.0) {
    total += sample_poisson_count(60.0, rng);
    mean -= 60.0;
  }
  const double limit = std::exp(-mean);
  double p = 1.0;
  std::int64_t k = -1;
  do {
    p *= rng.uniform_pos();
    ++k;
  } while (p > limit);
  return total + k;
}

}  // namespace randmeas
