#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "randmeas/distributions.hpp"
#include "randmeas/rng.hpp"
#include "randmeas/stats.hpp"

using namespace randmeas;

namespace {

// Monte Carlo checks run at three standard errors around the exact value;
// the seeds are fixed, so failures are reproducible, not flaky.
void check_mean(const Accum& acc, double exact) {
  INFO("mean ", acc.mean(), " exact ", exact, " se ", acc.std_error());
  CHECK(std::abs(acc.mean() - exact) <= 3.0 * acc.std_error());
}

}  // namespace

TEST_CASE("rng streams are deterministic and decorrelated") {
  RngStream a(42, 7), b(42, 7), c(42, 8);
  for (int i = 0; i < 16; ++i) {
    double u = a.uniform01();
    CHECK(u == b.uniform01());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  // a different stream index gives a different draw sequence
  RngStream a2(42, 7);
  bool anyDiff = false;
  for (int i = 0; i < 16; ++i) anyDiff = anyDiff || (a2.uniform01() != c.uniform01());
  CHECK(anyDiff);

  // substreams derived twice coincide
  RngStream s1 = RngStream(9, 0).substream(5);
  RngStream s2 = RngStream(9, 0).substream(5);
  CHECK(s1.uniform01() == s2.uniform01());
}

TEST_CASE("standard normal moments") {
  RngStream rng(1001, 0);
  Accum mean, second;
  for (int i = 0; i < 200000; ++i) {
    double z = sample_standard_normal(rng);
    mean.add(z);
    second.add(z * z);
  }
  check_mean(mean, 0.0);
  check_mean(second, 1.0);
}

TEST_CASE("exponential tail and mean") {
  RngStream rng(1002, 0);
  Accum mean, tail;
  for (int i = 0; i < 200000; ++i) {
    double s = sample_exponential(rng);
    mean.add(s);
    tail.add(s > 1.0 ? 1.0 : 0.0);
  }
  check_mean(mean, 1.0);
  check_mean(tail, std::exp(-1.0));
}

TEST_CASE("gamma variates across the shape split") {
  RngStream rng(1003, 0);

  SUBCASE("shape above one") {
    Accum mean, second;
    for (int i = 0; i < 200000; ++i) {
      double g = sample_gamma_rv(3.5, 2.0, rng);
      mean.add(g);
      second.add(g * g);
    }
    check_mean(mean, 7.0);                  // shape * scale
    check_mean(second, 3.5 * 2.0 * 2.0 + 49.0);  // var + mean^2
  }

  SUBCASE("shape below one goes through the shape+1 draw") {
    Accum mean, second;
    for (int i = 0; i < 200000; ++i) {
      double g = sample_gamma_rv(0.5, 1.0, rng);
      mean.add(g);
      second.add(g * g);
    }
    check_mean(mean, 0.5);
    check_mean(second, 0.75);  // var 1/2 + mean^2 1/4
  }
}

TEST_CASE("beta variates") {
  RngStream rng(1004, 0);

  SUBCASE("Beta(1/2,1/2) quantile") {
    // P(X < 1/4) = 2/pi * asin(1/2) = 1/3 for the arcsine law
    Accum below, second;
    for (int i = 0; i < 200000; ++i) {
      double x = sample_beta_rv(0.5, 0.5, rng);
      below.add(x < 0.25 ? 1.0 : 0.0);
      second.add(x * x);
    }
    check_mean(below, 1.0 / 3.0);
    check_mean(second, 3.0 / 8.0);
  }

  SUBCASE("Beta(2,3) mean") {
    Accum mean;
    for (int i = 0; i < 200000; ++i) mean.add(sample_beta_rv(2.0, 3.0, rng));
    check_mean(mean, 0.4);
  }
}

TEST_CASE("stick variate Beta(1,b) by inversion") {
  SUBCASE("b = 1 returns the uniform draw unchanged") {
    RngStream u(7, 3), v(7, 3);
    for (int i = 0; i < 32; ++i) CHECK(sample_beta1(1.0, u) == v.uniform01());
  }

  SUBCASE("distribution for b = 2 (including the sqrt fast path)") {
    RngStream rng(1005, 0);
    Accum mean;
    std::vector<double> sample;
    for (int i = 0; i < 100000; ++i) {
      double t = sample_beta1(2.0, rng);
      mean.add(t);
      sample.push_back(t);
    }
    check_mean(mean, 1.0 / 3.0);
    double d = ks_statistic(sample, [](double x) { return 1.0 - (1.0 - x) * (1.0 - x); });
    CHECK(d < ks_threshold(0.01, 100000));
  }

  SUBCASE("general exponent agrees with the gamma-ratio sampler in law") {
    RngStream rng(1006, 0);
    Accum inv, ratio;
    for (int i = 0; i < 100000; ++i) {
      inv.add(sample_beta1(3.7, rng));
      ratio.add(sample_beta_rv(1.0, 3.7, rng));
    }
    double se = std::hypot(inv.std_error(), ratio.std_error());
    CHECK(std::abs(inv.mean() - ratio.mean()) <= 3.0 * se);
    CHECK(std::abs(inv.mean() - 1.0 / 4.7) <= 3.0 * inv.std_error());
  }

  SUBCASE("half-integer fast path") {
    RngStream rng(1009, 0);
    Accum mean;
    for (int i = 0; i < 100000; ++i) mean.add(sample_beta1(0.5, rng));
    check_mean(mean, 2.0 / 3.0);
  }
}

TEST_CASE("dirichlet vectors") {
  RngStream rng(1007, 0);
  Accum y0, y0y1;
  for (int i = 0; i < 100000; ++i) {
    SimplexVector y = sample_dirichlet({2.0, 3.0}, rng);
    CHECK(std::abs(y.values()[0] + y.values()[1] - 1.0) <= 1e-12);
    y0.add(y.values()[0]);
    y0y1.add(y.values()[0] * y.values()[1]);
  }
  check_mean(y0, 0.4);
  check_mean(y0y1, 2.0 * 3.0 / (5.0 * 6.0));
}

TEST_CASE("poisson counts") {
  RngStream rng(1008, 0);

  SUBCASE("small mean") {
    Accum mean, second;
    for (int i = 0; i < 200000; ++i) {
      double n = static_cast<double>(sample_poisson_count(3.0, rng));
      mean.add(n);
      second.add(n * n);
    }
    check_mean(mean, 3.0);
    check_mean(second, 3.0 + 9.0);
  }

  SUBCASE("large mean goes through the splitting recursion") {
    Accum mean, second;
    for (int i = 0; i < 50000; ++i) {
      double n = static_cast<double>(sample_poisson_count(100.0, rng));
      mean.add(n);
      second.add(n * n);
    }
    check_mean(mean, 100.0);
    check_mean(second, 100.0 + 10000.0);
  }

  SUBCASE("zero mean yields zero") {
    CHECK(sample_poisson_count(0.0, rng) == 0);
  }
}
