#include "randmeas/stats.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randmeas {

double Accum::variance() const {
  if (n < 2) return 0.0;
  const double nn = static_cast<double>(n);
  const double m = sum / nn;
  double v = (sumSq - nn * m * m) / (nn - 1.0);
  return v > 0.0 ? v : 0.0;  // clamp tiny negative rounding residue
}

double Accum::std_error() const {
  if (n < 1) return 0.0;
  return std::sqrt(variance() / static_cast<double>(n));
}

double ks_statistic(std::vector<double>& sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double nn = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    const double lo = f - static_cast<double>(i) / nn;
    const double hi = static_cast<double>(i + 1) / nn - f;
    d = std::max(d, std::max(lo, hi));
  }
  return d;
}

double ks_threshold(double level, std::int64_t n) {
  if (!(level > 0.0 && level < 1.0) || n < 1) {
    throw std::invalid_argument("ks_threshold: bad arguments");
  }
  const double c = std::sqrt(-0.5 * std::log(level / 2.0));
  return c / std::sqrt(static_cast<double>(n));
}

double beta_cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

double CrossAccum::correlation() const {
  if (x.n < 2) return 0.0;
  const double nn = static_cast<double>(x.n);
  const double cov = (sumXY - nn * x.mean() * y.mean()) / (nn - 1.0);
  const double sx = std::sqrt(x.variance());
  const double sy = std::sqrt(y.variance());
  if (sx == 0.0 || sy == 0.0) return 0.0;
  return cov / (sx * sy);
}

}  // namespace randmeas
