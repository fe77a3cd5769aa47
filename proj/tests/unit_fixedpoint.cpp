#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "randmeas/fixedpoint.hpp"
#include "randmeas/samplers.hpp"
#include "randmeas/stats.hpp"

using namespace randmeas;

TEST_CASE("one operator application") {
  IntensityMeasure sigma = IntensityMeasure::uniform(2.0);
  DiscreteMeasure eta({{0.5, 1.0}}, MeasureKind::ProbabilityMeasure);

  SUBCASE("keeps total mass and grows by at most one atom") {
    RngStream rng(31, 0);
    DiscreteMeasure cur = eta;
    for (int step = 0; step < 50; ++step) {
      std::size_t before = cur.atoms().size();
      cur = apply_operator(cur, sigma, rng);
      CHECK(cur.kind() == MeasureKind::ProbabilityMeasure);
      CHECK(std::abs(cur.total_mass() - 1.0) <= 1e-12);
      CHECK(cur.atoms().size() <= before + 1);
    }
  }

  SUBCASE("matches the convex step with the same draws") {
    RngStream a(32, 0), b(32, 0);
    DiscreteMeasure viaOp = apply_operator(eta, sigma, a);
    double x = sigma.sample_location(b);
    double t = sample_beta1(sigma.beta(), b);
    DiscreteMeasure viaStep = convex_step(eta, x, t);
    REQUIRE(viaOp.atoms().size() == viaStep.atoms().size());
    for (std::size_t i = 0; i < viaOp.atoms().size(); ++i) {
      CHECK(viaOp.atoms()[i].location == viaStep.atoms()[i].location);
      CHECK(viaOp.atoms()[i].mass == viaStep.atoms()[i].mass);
    }
  }
}

TEST_CASE("trajectory recording grid") {
  TrajectoryConfig cfg;
  cfg.init = InitialLaw::UniformGrid;
  cfg.gridAtoms = 4;
  cfg.steps = 30;
  cfg.ensemble = 50;
  cfg.seed = 33;
  IntensityMeasure sigma = IntensityMeasure::uniform(1.0);
  Partition part({0.0, 0.5, 1.0});
  TrajectoryReport rep = run_trajectory(cfg, sigma, part);

  REQUIRE(!rep.records.empty());
  CHECK(rep.records.front().step == 0);
  CHECK(rep.records.back().step == 30);
  for (std::size_t i = 1; i < rep.records.size(); ++i) {
    CHECK(rep.records[i].step > rep.records[i - 1].step);
    CHECK(rep.records[i].step <= 30);
  }
  CHECK(rep.stationaryMoment1[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.beta == 1.0);

  // maxAbsGap summarises the per-cell, per-order gaps
  for (const auto& rec : rep.records) {
    double m = 0.0;
    for (const auto& cellGaps : rec.momentGap) {
      for (double gp : cellGaps) m = std::max(m, std::abs(gp));
    }
    CHECK(rec.maxAbsGap == doctest::Approx(m).epsilon(1e-12));
  }
}

TEST_CASE("stationary start stays stationary") {
  TrajectoryConfig cfg;
  cfg.init = InitialLaw::StickBreaking;
  cfg.steps = 10;
  cfg.ensemble = 5000;
  cfg.recordSteps = {0, 10};
  cfg.seed = 34;
  IntensityMeasure sigma = IntensityMeasure::uniform(1.5);
  Partition part({0.0, 0.25, 0.625, 1.0});
  TrajectoryReport rep = run_trajectory(cfg, sigma, part);

  for (const auto& rec : rep.records) {
    for (std::size_t cell = 0; cell < rec.momentGap.size(); ++cell) {
      for (int k = 0; k < 3; ++k) {
        INFO("step ", rec.step, " cell ", cell, " order ", k + 1, " gap ",
             rec.momentGap[cell][k], " se ", rec.momentSE[cell][k]);
        CHECK(std::abs(rec.momentGap[cell][k]) <= 5.0 * rec.momentSE[cell][k] + 1e-3);
      }
      CHECK(rec.ksDistance[cell] < 1.5 * ks_threshold(0.01, cfg.ensemble));
    }
  }
}

TEST_CASE("initial mass dissolves geometrically") {
  TrajectoryConfig cfg;
  cfg.init = InitialLaw::DeltaAtHalf;
  cfg.steps = 5;
  cfg.ensemble = 20000;
  cfg.recordSteps = {0, 1, 5};
  cfg.seed = 35;
  const double beta = 2.0;
  IntensityMeasure sigma = IntensityMeasure::uniform(beta);
  Partition part({0.0, 0.5, 1.0});
  TrajectoryReport rep = run_trajectory(cfg, sigma, part);

  REQUIRE(rep.records.size() == 3);
  CHECK(rep.records[0].survivingMassMean == 1.0);
  for (const auto& rec : rep.records) {
    double expect = std::pow(beta / (beta + 1.0), rec.step);
    INFO("step ", rec.step, " surviving ", rec.survivingMassMean, " expect ", expect);
    CHECK(std::abs(rec.survivingMassMean - expect) <= 3.0 * rec.survivingMassSE + 1e-12);
  }
}

TEST_CASE("long transient run lands on the sampler's law") {
  const int ensemble = 10000;
  TrajectoryConfig cfg;
  cfg.init = InitialLaw::DeltaAtHalf;
  cfg.steps = 60;
  cfg.ensemble = ensemble;
  cfg.recordSteps = {60};
  cfg.seed = 36;
  const double beta = 1.0;
  IntensityMeasure sigma = IntensityMeasure::uniform(beta);
  Partition part({0.0, 0.5, 1.0});
  TrajectoryReport rep = run_trajectory(cfg, sigma, part);
  REQUIRE(rep.records.size() == 1);
  const StepRecord& rec = rep.records.back();

  // direct draws from the stationary law on the same partition
  StickBreakingConfig sticks;
  RngStream rng(37, 0);
  std::vector<std::array<Accum, 3>> direct(2);
  for (int i = 0; i < ensemble; ++i) {
    DiscreteMeasure eta = sample_dirichlet_ferguson(sigma, sticks, rng);
    std::vector<double> y = cell_masses(part, eta);
    for (std::size_t cell = 0; cell < y.size(); ++cell) {
      double p = 1.0;
      for (int k = 0; k < 3; ++k) {
        p *= y[cell];
        direct[cell][k].add(p);
      }
    }
  }

  for (std::size_t cell = 0; cell < 2; ++cell) {
    for (int k = 0; k < 3; ++k) {
      double se = std::hypot(rec.momentSE[cell][k], direct[cell][k].std_error());
      INFO("cell ", cell, " order ", k + 1, " trajectory ", rec.moment[cell][k], " direct ",
           direct[cell][k].mean());
      CHECK(std::abs(rec.moment[cell][k] - direct[cell][k].mean()) <= 4.0 * se);
    }
  }
}
