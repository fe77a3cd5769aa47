#include "randmeas/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "randmeas/distributions.hpp"
#include "randmeas/moments.hpp"
#include "randmeas/stats.hpp"

namespace randmeas {

DiscreteMeasure apply_operator(const DiscreteMeasure& eta, const IntensityMeasure& sigma,
                               RngStream& rng) {
  const double x = sigma.sample_location(rng);
  const double t = sample_beta1(sigma.beta(), rng);
  return convex_step(eta, x, t);
}

namespace {

DiscreteMeasure initial_measure(const TrajectoryConfig& cfg, const IntensityMeasure& sigma,
                                RngStream& rng) {
  switch (cfg.init) {
    case InitialLaw::DeltaAtHalf:
      return DiscreteMeasure({{0.5, 1.0}}, MeasureKind::ProbabilityMeasure);
    case InitialLaw::UniformGrid: {
      const int m = cfg.gridAtoms;
      if (m < 1) throw std::invalid_argument("trajectory: gridAtoms must be positive");
      std::vector<Atom> atoms;
      atoms.reserve(static_cast<std::size_t>(m));
      for (int i = 1; i <= m; ++i) {
        atoms.push_back({(2.0 * i - 1.0) / (2.0 * m), 1.0 / m});
      }
      return DiscreteMeasure(std::move(atoms), MeasureKind::ProbabilityMeasure);
    }
    case InitialLaw::StickBreaking:
      return sample_dirichlet_ferguson(sigma, cfg.sticks, rng);
  }
  throw std::invalid_argument("trajectory: unknown initial law");
}

std::vector<int> resolve_record_steps(const TrajectoryConfig& cfg) {
  std::vector<int> steps = cfg.recordSteps;
  if (steps.empty()) {
    for (int s : {0, 1, 2, 5, 10, 20, 50, 100, 150, 200}) {
      if (s <= cfg.steps) steps.push_back(s);
    }
    if (steps.empty() || steps.back() != cfg.steps) steps.push_back(cfg.steps);
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  if (steps.front() < 0 || steps.back() > cfg.steps) {
    throw std::invalid_argument("trajectory: record steps outside [0, steps]");
  }
  return steps;
}

}  // namespace

TrajectoryReport run_trajectory(const TrajectoryConfig& cfg, const IntensityMeasure& sigma,
                                const Partition& part, int threads) {
  if (cfg.ensemble < 2) throw std::invalid_argument("trajectory: ensemble must be at least 2");
  if (cfg.steps < 0) throw std::invalid_argument("trajectory: steps must be nonnegative");

  const std::vector<int> recordSteps = resolve_record_steps(cfg);
  const std::size_t nRec = recordSteps.size();
  const std::size_t cells = static_cast<std::size_t>(part.cells());
  const std::size_t ensemble = static_cast<std::size_t>(cfg.ensemble);

  // records[r][i] holds the cell-i coordinate of every chain at record r;
  // surviving[r] the running products of (1 - t).
  std::vector<std::vector<std::vector<double>>> records(
      nRec, std::vector<std::vector<double>>(cells, std::vector<double>(ensemble)));
  std::vector<std::vector<double>> surviving(nRec, std::vector<double>(ensemble));

  const RngStream base(cfg.seed);
  auto runChain = [&](std::size_t chain) {
    RngStream rng = base.substream(chain);
    DiscreteMeasure eta = initial_measure(cfg, sigma, rng);
    double surv = 1.0;
    std::size_t nextRec = 0;
    for (int step = 0; step <= cfg.steps; ++step) {
      if (nextRec < nRec && recordSteps[nextRec] == step) {
        const std::vector<double> cm = cell_masses(part, eta);
        for (std::size_t i = 0; i < cells; ++i) records[nextRec][i][chain] = cm[i];
        surviving[nextRec][chain] = surv;
        ++nextRec;
      }
      if (step == cfg.steps) break;
      const double x = sigma.sample_location(rng);
      const double t = sample_beta1(sigma.beta(), rng);
      eta = convex_step(eta, x, t);
      surv *= (1.0 - t);
    }
  };

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1) {
    for (std::size_t c = 0; c < ensemble; ++c) runChain(c);
  } else {
    std::vector<std::thread> pool;
    const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), ensemble);
    for (std::size_t w = 0; w < nw; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t c = w; c < ensemble; c += nw) runChain(c);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  // Stationary references.
  const double beta = sigma.beta();
  const std::vector<double> alphaD = sigma.cell_masses(part);
  std::vector<Rational> alphaR;
  for (double a : alphaD) alphaR.push_back(rational_from_double(a));
  std::vector<std::array<double, 3>> exact(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    std::vector<Rational> unit(cells, Rational(0));
    unit[i] = 1;
    for (int k = 1; k <= 3; ++k) {
      exact[i][static_cast<std::size_t>(k - 1)] = to_double(dirichlet_moment(alphaR, unit, k));
    }
  }

  TrajectoryReport rep;
  rep.beta = beta;
  rep.steps = cfg.steps;
  rep.ensemble = cfg.ensemble;
  for (std::size_t i = 0; i < cells; ++i) rep.stationaryMoment1.push_back(alphaD[i] / beta);

  for (std::size_t r = 0; r < nRec; ++r) {
    StepRecord rec;
    rec.step = recordSteps[r];
    rec.moment.resize(cells);
    rec.momentSE.resize(cells);
    rec.momentGap.resize(cells);
    rec.ksDistance.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
      Accum mom[3];
      for (double y : records[r][i]) {
        mom[0].add(y);
        mom[1].add(y * y);
        mom[2].add(y * y * y);
      }
      for (int k = 0; k < 3; ++k) {
        const std::size_t kk = static_cast<std::size_t>(k);
        rec.moment[i][kk] = mom[k].mean();
        rec.momentSE[i][kk] = mom[k].std_error();
        rec.momentGap[i][kk] = mom[k].mean() - exact[i][kk];
        rec.maxAbsGap = std::max(rec.maxAbsGap, std::abs(rec.momentGap[i][kk]));
      }
      // Stationary marginal of one cell: Beta(alpha_i, beta - alpha_i).
      const double a = alphaD[i];
      const double b = beta - alphaD[i];
      if (b > 0.0) {
        std::vector<double> sample = records[r][i];
        rec.ksDistance[i] =
            ks_statistic(sample, [a, b](double v) { return beta_cdf(a, b, v); });
      } else {
        rec.ksDistance[i] = 0.0;  // single-cell partition: the coordinate is identically 1
      }
    }
    Accum sv;
    for (double s : surviving[r]) sv.add(s);
    rec.survivingMassMean = sv.mean();
    rec.survivingMassSE = sv.std_error();
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace randmeas
