#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace randmeas {

// Streaming mean/variance accumulator (sum and sum of squares are adequate
// here: all statistics are O(1..100) in magnitude and counts stay below 2^31).
struct Accum {
  double sum = 0.0;
  double sumSq = 0.0;
  std::int64_t n = 0;

  void add(double x) {
    sum += x;
    sumSq += x * x;
    ++n;
  }
  void merge(const Accum& o) {
    sum += o.sum;
    sumSq += o.sumSq;
    n += o.n;
  }
  double mean() const { return n > 0 ? sum / static_cast<double>(n) : 0.0; }
  double variance() const;   // unbiased; 0 when n < 2
  double std_error() const;  // sqrt(variance / n)
};

struct MeanSE {
  double mean = 0.0;
  double se = 0.0;
  std::int64_t n = 0;
};

inline MeanSE mean_se(const Accum& a) { return {a.mean(), a.std_error(), a.n}; }

// Kolmogorov-Smirnov distance between a sample and a distribution function.
// The sample vector is sorted in place.
double ks_statistic(std::vector<double>& sample, const std::function<double(double)>& cdf);

// Asymptotic one-sample rejection threshold c(level)/sqrt(n) with
// c(level) = sqrt(-log(level/2)/2).
double ks_threshold(double level, std::int64_t n);

// Regularised incomplete beta, i.e. the Beta(a,b) distribution function.
double beta_cdf(double a, double b, double x);

// Pearson correlation from raw cross-moments.
struct CrossAccum {
  Accum x, y;
  double sumXY = 0.0;
  void add(double xv, double yv) {
    x.add(xv);
    y.add(yv);
    sumXY += xv * yv;
  }
  void merge(const CrossAccum& o) {
    x.merge(o.x);
    y.merge(o.y);
    sumXY += o.sumXY;
  }
  double correlation() const;
};

}  // namespace randmeas
