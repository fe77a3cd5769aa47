#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "randmeas/intensity.hpp"
#include "randmeas/measure.hpp"
#include "randmeas/partition.hpp"
#include "randmeas/rng.hpp"
#include "randmeas/samplers.hpp"

namespace randmeas {

// One application of the random transport operator
//   eta -> (1 - t) eta + t delta_x,  x ~ normalised intensity, t ~ Beta(1, beta);
// x is drawn before t.  The stick-breaking law is a fixed point of this map.
DiscreteMeasure apply_operator(const DiscreteMeasure& eta, const IntensityMeasure& sigma,
                               RngStream& rng);

// Where the trajectories start.
//   DeltaAtHalf    the point mass at 1/2
//   UniformGrid    gridAtoms equal atoms at the grid midpoints (2i-1)/(2m)
//   StickBreaking  a fresh stick-breaking draw (the stationary law)
enum class InitialLaw { DeltaAtHalf, UniformGrid, StickBreaking };

struct TrajectoryConfig {
  InitialLaw init = InitialLaw::DeltaAtHalf;
  int gridAtoms = 8;
  int steps = 200;
  int ensemble = 10000;
  std::vector<int> recordSteps;  // empty: {0,1,2,5,10,20,50,100,150,200} clipped to steps
  std::uint64_t seed = 0;
  StickBreakingConfig sticks;
};

// Ensemble diagnostics at one recorded step.
struct StepRecord {
  int step = 0;
  // Per cell: empirical partition moments of orders 1..3 with standard
  // errors, and the gap to the exact stationary moments.
  std::vector<std::array<double, 3>> moment;
  std::vector<std::array<double, 3>> momentSE;
  std::vector<std::array<double, 3>> momentGap;
  std::vector<double> ksDistance;  // per cell, against the stationary marginal
  double maxAbsGap = 0.0;
  double survivingMassMean = 0.0;  // mean of prod_j (1 - t_j) over the ensemble
  double survivingMassSE = 0.0;
};

struct TrajectoryReport {
  double beta = 0.0;
  int steps = 0;
  int ensemble = 0;
  std::vector<double> stationaryMoment1;  // per cell, for reference columns
  std::vector<StepRecord> records;
};

// Runs `ensemble` independent chains of the operator and reports partition
// diagnostics at the recorded steps.  Chain c draws from substream c of the
// seed, so results do not depend on the thread count.
TrajectoryReport run_trajectory(const TrajectoryConfig& cfg, const IntensityMeasure& sigma,
                                const Partition& part, int threads = 1);

}  // namespace randmeas
