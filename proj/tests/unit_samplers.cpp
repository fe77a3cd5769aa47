#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "randmeas/partition.hpp"
#include "randmeas/samplers.hpp"
#include "randmeas/stats.hpp"

using namespace randmeas;

namespace {

void check_mean(const Accum& acc, double exact, double extraTol = 0.0) {
  INFO("mean ", acc.mean(), " exact ", exact, " se ", acc.std_error());
  CHECK(std::abs(acc.mean() - exact) <= 3.0 * acc.std_error() + extraTol);
}

}  // namespace

TEST_CASE("poisson point process") {
  IntensityMeasure sigma = IntensityMeasure::piecewise(2.5, {0.0, 0.5, 1.0}, {1.6, 0.4});
  RngStream rng(2001, 0);
  Accum count, meanLoc;
  for (int i = 0; i < 100000; ++i) {
    DiscreteMeasure g = sample_poisson_pp(sigma, rng);
    count.add(static_cast<double>(g.atoms().size()));
    for (const Atom& a : g.atoms()) {
      CHECK(a.mass == 1.0);
      meanLoc.add(a.location);
    }
  }
  check_mean(count, 2.5);
  // E X under the normalised density: 1.6 * 1/8 + 0.4 * 3/8 = 0.35
  check_mean(meanLoc, 0.35);
}

TEST_CASE("stick-breaking probability measure") {
  StickBreakingConfig cfg;

  SUBCASE("masses are positive and sum to one") {
    IntensityMeasure sigma = IntensityMeasure::uniform(2.0);
    RngStream rng(2002, 0);
    for (int i = 0; i < 200; ++i) {
      DiscreteMeasure eta = sample_dirichlet_ferguson(sigma, cfg, rng);
      CHECK(eta.kind() == MeasureKind::ProbabilityMeasure);
      CHECK(std::abs(eta.total_mass() - 1.0) <= 1e-12);
      for (const Atom& a : eta.atoms()) CHECK(a.mass > 0.0);
    }
  }

  SUBCASE("cell mass means follow the normalised intensity") {
    IntensityMeasure sigma = IntensityMeasure::uniform(2.0);
    Partition part({0.0, 0.3, 1.0});
    RngStream rng(2003, 0);
    Accum low, sumSq;
    for (int i = 0; i < 30000; ++i) {
      DiscreteMeasure eta = sample_dirichlet_ferguson(sigma, cfg, rng);
      low.add(cell_masses(part, eta)[0]);
      double s = 0.0;
      for (const Atom& a : eta.atoms()) s += a.mass * a.mass;
      sumSq.add(s);
    }
    check_mean(low, 0.3);
    // E sum_i m_i^2 = 1 / (beta + 1)
    check_mean(sumSq, 1.0 / 3.0);
  }

  SUBCASE("marginal of a cell is Beta(mass inside, mass outside)") {
    IntensityMeasure sigma = IntensityMeasure::uniform(1.0);
    Partition part({0.0, 0.5, 1.0});
    RngStream rng(2004, 0);
    std::vector<double> sample;
    for (int i = 0; i < 20000; ++i) {
      DiscreteMeasure eta = sample_dirichlet_ferguson(sigma, cfg, rng);
      sample.push_back(cell_masses(part, eta)[0]);
    }
    double d = ks_statistic(sample, [](double x) { return beta_cdf(0.5, 0.5, x); });
    CHECK(d < ks_threshold(0.01, 20000));
  }

  SUBCASE("the atom cap throws instead of truncating silently") {
    IntensityMeasure sigma = IntensityMeasure::uniform(5.0);
    StickBreakingConfig tight{3, 1e-12};
    RngStream rng(2005, 0);
    CHECK_THROWS_AS(sample_dirichlet_ferguson(sigma, tight, rng), std::runtime_error);
  }
}

TEST_CASE("gamma measure via total mass times sticks") {
  IntensityMeasure sigma = IntensityMeasure::uniform(2.0);
  StickBreakingConfig cfg;
  RngStream rng(2006, 0);
  Accum mass, massSq, laplace;
  for (int i = 0; i < 100000; ++i) {
    DiscreteMeasure nu = sample_gamma_measure(sigma, cfg, rng);
    double m = nu.total_mass();
    mass.add(m);
    massSq.add(m * m);
    laplace.add(std::exp(-0.5 * m));
  }
  check_mean(mass, 2.0);
  check_mean(massSq, 2.0 * 3.0);         // beta (beta + 1)
  check_mean(laplace, std::pow(1.5, -2.0));  // (1 + 1/2)^(-beta)
}

TEST_CASE("gamma measure via truncated jumps") {
  const double beta = 2.0, eps = 1e-3;
  IntensityMeasure sigma = IntensityMeasure::uniform(beta);
  RngStream rng(2007, 0);

  Accum count, mass, massSq, cellLow;
  Partition part({0.0, 0.5, 1.0});
  for (int i = 0; i < 30000; ++i) {
    DiscreteMeasure nu = sample_gamma_measure_levy(sigma, eps, rng);
    count.add(static_cast<double>(nu.atoms().size()));
    double m = nu.total_mass();
    mass.add(m);
    massSq.add(m * m);
    cellLow.add(cell_masses(part, nu)[0]);
    for (const Atom& a : nu.atoms()) CHECK(a.mass >= eps);
  }

  check_mean(count, levy_truncation_mean_atoms(beta, eps));
  // Moments of the truncated law are exact: E = beta e^-eps,
  // Var = beta (1+eps) e^-eps.
  const double m1 = beta * std::exp(-eps);
  const double var = beta * (1.0 + eps) * std::exp(-eps);
  check_mean(mass, m1);
  check_mean(massSq, var + m1 * m1);
  check_mean(cellLow, 0.5 * m1);

  // The mean atom count is monotone in the cutoff.
  CHECK(levy_truncation_mean_atoms(beta, 1e-4) > levy_truncation_mean_atoms(beta, 1e-3));
  CHECK_THROWS_AS(sample_gamma_measure_levy(sigma, 0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_gamma_measure_levy(sigma, 1.5, rng), std::invalid_argument);
}

TEST_CASE("the two gamma samplers agree in law") {
  const double beta = 1.5, eps = 1e-3;
  IntensityMeasure sigma = IntensityMeasure::uniform(beta);
  StickBreakingConfig cfg;
  Partition part({0.0, 0.5, 1.0});
  RngStream rA(2008, 0), rB(2008, 1);

  Accum cellA, cellB, sqA, sqB;
  for (int i = 0; i < 30000; ++i) {
    DiscreteMeasure a = sample_gamma_measure(sigma, cfg, rA);
    DiscreteMeasure b = sample_gamma_measure_levy(sigma, eps, rB);
    cellA.add(cell_masses(part, a)[0]);
    cellB.add(cell_masses(part, b)[0]);
    sqA.add(a.total_mass() * a.total_mass());
    sqB.add(b.total_mass() * b.total_mass());
  }
  // Truncation removes mean mass beta * (1 - e^-eps) ~ beta * eps and a
  // second-moment contribution of the same order.
  const double bias = beta * eps;
  CHECK(std::abs(cellA.mean() - cellB.mean()) <=
        3.0 * std::hypot(cellA.std_error(), cellB.std_error()) + bias);
  CHECK(std::abs(sqA.mean() - sqB.mean()) <=
        3.0 * std::hypot(sqA.std_error(), sqB.std_error()) + 10.0 * bias);
}
