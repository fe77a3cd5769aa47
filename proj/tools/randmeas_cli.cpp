// Command-line front end: sampling, exact moments, identity verification and
// fixed-point trajectories.  Exit codes: 0 all checks passed, 1 a statistical
// or cross-check failure, 2 bad configuration or arguments.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "randmeas/distributions.hpp"
#include "randmeas/fixedpoint.hpp"
#include "randmeas/identities.hpp"
#include "randmeas/json_io.hpp"
#include "randmeas/moments.hpp"
#include "randmeas/quadrature.hpp"
#include "randmeas/samplers.hpp"

namespace {

using randmeas::Json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const std::string& tok : split_list(text)) {
    if (tok.empty()) throw ConfigError(std::string(what) + ": empty entry in '" + text + "'");
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw ConfigError(std::string(what) + ": bad number '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const std::string& tok : split_list(text)) {
    if (tok.empty()) throw ConfigError(std::string(what) + ": empty entry in '" + text + "'");
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ConfigError(std::string(what) + ": bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<randmeas::Rational> parse_rational_list(const std::string& text, const char* what) {
  std::vector<randmeas::Rational> out;
  for (const std::string& tok : split_list(text)) {
    if (tok.empty()) throw ConfigError(std::string(what) + ": empty entry in '" + text + "'");
    out.push_back(randmeas::parse_rational(tok));
  }
  return out;
}

// --density accepts "uniform" or "table:<path>" where the file holds
// {"breakpoints": [...], "density": [...]} for a piecewise-constant density.
randmeas::IntensityMeasure make_sigma(double beta, const std::string& density) {
  if (density == "uniform") return randmeas::IntensityMeasure::uniform(beta);
  const std::string prefix = "table:";
  if (density.rfind(prefix, 0) != 0)
    throw ConfigError("--density must be 'uniform' or 'table:<path>', got '" + density + "'");
  std::string path = density.substr(prefix.size());
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open density table: " + path);
  Json j = Json::parse(in);
  return randmeas::IntensityMeasure::piecewise(beta, j.at("breakpoints").get<std::vector<double>>(),
                                               j.at("density").get<std::vector<double>>());
}

// A config file provides defaults for any long option (key = option name
// without the leading dashes); values given on the command line win.  The
// file may either hold the options directly or group them under the
// subcommand name.
Json load_config_section(int argc, char** argv) {
  std::string path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") path = argv[i + 1];
  if (path.empty()) return Json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  Json j = Json::parse(in);
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  std::string cmd = argc > 1 ? argv[1] : "";
  if (!cmd.empty() && j.contains(cmd) && j.at(cmd).is_object()) return j.at(cmd);
  return j;
}

template <class T>
void cfg_get(const Json& sect, const char* key, T& var) {
  if (sect.contains(key)) var = sect.at(key).get<T>();
}

// List-valued options travel as comma-joined strings; the config may give
// either the string form or a JSON array.
void cfg_get_list(const Json& sect, const char* key, std::string& var) {
  if (!sect.contains(key)) return;
  const Json& v = sect.at(key);
  if (v.is_string()) {
    var = v.get<std::string>();
  } else if (v.is_array()) {
    std::string joined;
    for (const auto& e : v) {
      if (!joined.empty()) joined += ",";
      joined += e.is_string() ? e.get<std::string>() : e.dump();
    }
    var = joined;
  } else {
    var = v.dump();
  }
}

void emit(const std::string& out, const std::string& doc) {
  if (out.empty()) {
    std::cout << doc;
    if (doc.empty() || doc.back() != '\n') std::cout << '\n';
  } else {
    randmeas::write_file(out, doc);
  }
}

// ---------------------------------------------------------------- sample --

struct SampleOpts {
  std::string kind;
  double beta = 1.0;
  std::string density = "uniform";
  std::string alpha;
  std::int64_t samples = 1000;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
  double levyCutoff = 1e-4;
  int maxAtoms = 10000;
  double remainderTol = 1e-12;
};

int cmd_sample(const SampleOpts& o) {
  randmeas::RngStream base(o.seed, 0);
  if (o.kind == "dirichlet") {
    if (o.alpha.empty()) throw ConfigError("--alpha is required for --kind dirichlet");
    std::vector<double> alpha = parse_double_list(o.alpha, "--alpha");
    std::vector<std::vector<double>> draws;
    draws.reserve(static_cast<std::size_t>(o.samples));
    for (std::int64_t i = 0; i < o.samples; ++i) {
      randmeas::RngStream rng = base.substream(i);
      draws.push_back(randmeas::sample_dirichlet(alpha, rng).values());
    }
    if (o.format == "csv") {
      emit(o.out, randmeas::simplex_csv(draws));
    } else {
      Json j{{"command", "sample"}, {"kind", o.kind},       {"alpha", alpha},
             {"samples", o.samples}, {"seed", o.seed},      {"draws", draws}};
      emit(o.out, j.dump(2));
    }
    return 0;
  }

  randmeas::IntensityMeasure sigma = make_sigma(o.beta, o.density);
  randmeas::StickBreakingConfig sticks{o.maxAtoms, o.remainderTol};
  std::vector<randmeas::DiscreteMeasure> measures;
  measures.reserve(static_cast<std::size_t>(o.samples));
  for (std::int64_t i = 0; i < o.samples; ++i) {
    randmeas::RngStream rng = base.substream(i);
    if (o.kind == "poisson") {
      measures.push_back(randmeas::sample_poisson_pp(sigma, rng));
    } else if (o.kind == "df") {
      measures.push_back(randmeas::sample_dirichlet_ferguson(sigma, sticks, rng));
    } else if (o.kind == "gamma") {
      measures.push_back(randmeas::sample_gamma_measure(sigma, sticks, rng));
    } else if (o.kind == "gamma-levy") {
      measures.push_back(randmeas::sample_gamma_measure_levy(sigma, o.levyCutoff, rng));
    } else {
      throw ConfigError("unknown --kind '" + o.kind +
                        "' (expected poisson|df|gamma|gamma-levy|dirichlet)");
    }
  }

  if (o.format == "csv") {
    emit(o.out, randmeas::measures_csv(measures));
    return 0;
  }
  double atomCount = 0.0, totalMass = 0.0;
  Json list = Json::array();
  for (const auto& m : measures) {
    atomCount += static_cast<double>(m.atoms().size());
    totalMass += m.total_mass();
    list.push_back(randmeas::measure_to_json(m));
  }
  double n = static_cast<double>(o.samples);
  Json j{{"command", "sample"},
         {"kind", o.kind},
         {"beta", o.beta},
         {"samples", o.samples},
         {"seed", o.seed},
         {"meanAtomCount", n > 0 ? atomCount / n : 0.0},
         {"meanTotalMass", n > 0 ? totalMass / n : 0.0},
         {"measures", list}};
  if (o.kind == "gamma-levy") j["levyCutoff"] = o.levyCutoff;
  emit(o.out, j.dump(2));
  return 0;
}

// --------------------------------------------------------------- moments --

struct MomentsOpts {
  std::string alpha;
  std::string svec;
  int nmax = 5;
  int grid = 256;
  std::string out;
  std::string format = "json";
};

int cmd_moments(const MomentsOpts& o) {
  constexpr double kOracleTol = 1e-6;
  std::vector<randmeas::Rational> alpha = parse_rational_list(o.alpha, "--alpha");
  std::vector<randmeas::Rational> s = parse_rational_list(o.svec, "--svec");
  if (alpha.size() != s.size())
    throw ConfigError("--alpha and --svec must have the same length");
  if (o.nmax < 0) throw ConfigError("--nmax must be nonnegative");

  std::vector<double> alphaD, sD;
  bool alphaPositive = true;
  for (const auto& a : alpha) {
    alphaD.push_back(randmeas::to_double(a));
    if (!(a > 0)) alphaPositive = false;
  }
  for (const auto& v : s) sD.push_back(randmeas::to_double(v));
  if (!alphaPositive) throw ConfigError("--alpha entries must be positive");

  bool quadratureCovered = alpha.size() >= 2 && alpha.size() <= 3;
  for (double a : alphaD) quadratureCovered = quadratureCovered && a >= 0.5;
  bool unitMass = randmeas::hadamard_power_dot(s, alpha, 0) == randmeas::Rational(1);

  randmeas::SimplexPolynomial form = randmeas::SimplexPolynomial::linear_form(sD);
  randmeas::PowerSums ps = randmeas::power_sums(s, alpha, std::max(o.nmax, 1));

  bool pass = true;
  Json rows = Json::array();
  std::string csv = "n,exact,exactValue,oracle,absDiff,cycleIndex,match\n";
  for (int n = 0; n <= o.nmax; ++n) {
    randmeas::Rational exact = randmeas::dirichlet_moment(alpha, s, n);
    double exactD = randmeas::to_double(exact);
    std::optional<double> oracle;
    if (quadratureCovered) oracle = randmeas::simplex_quadrature_oracle(alphaD, form.pow(n), o.grid);
    std::optional<randmeas::Rational> zn;
    if (unitMass) zn = randmeas::cycle_index(n, ps);

    bool match = true;
    double absDiff = 0.0;
    if (oracle) {
      absDiff = std::abs(*oracle - exactD);
      match = match && absDiff <= kOracleTol;
    }
    if (zn) match = match && (*zn == exact);
    pass = pass && match;

    Json row{{"n", n},
             {"exact", randmeas::rational_to_string(exact)},
             {"exactValue", exactD},
             {"match", match}};
    row["oracle"] = oracle ? Json(*oracle) : Json(nullptr);
    row["absDiff"] = oracle ? Json(absDiff) : Json(nullptr);
    row["cycleIndex"] = zn ? Json(randmeas::rational_to_string(*zn)) : Json(nullptr);
    rows.push_back(row);

    char line[256];
    std::snprintf(line, sizeof(line), "%d,%s,%s,%s,%s,%s,%s\n", n,
                  randmeas::rational_to_string(exact).c_str(),
                  randmeas::format_double(exactD).c_str(),
                  oracle ? randmeas::format_double(*oracle).c_str() : "",
                  oracle ? randmeas::format_double(absDiff).c_str() : "",
                  zn ? randmeas::rational_to_string(*zn).c_str() : "",
                  match ? "true" : "false");
    csv += line;
  }

  if (o.format == "csv") {
    emit(o.out, csv);
  } else {
    Json j{{"command", "moments"}, {"nmax", o.nmax}, {"rows", rows}, {"pass", pass}};
    Json alphaJson = Json::array(), sJson = Json::array();
    for (const auto& a : alpha) alphaJson.push_back(randmeas::rational_to_string(a));
    for (const auto& v : s) sJson.push_back(randmeas::rational_to_string(v));
    j["alpha"] = alphaJson;
    j["s"] = sJson;
    emit(o.out, j.dump(2));
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- verify --

struct VerifyOpts {
  std::string beta = "0.5,1,2";
  std::string density = "uniform";
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string out;
  std::string format = "json";
  double levyCutoff = 1e-4;
  std::string tSampling = "beta";
  bool skipLaplace = false;
  bool skipSimplicial = false;
};

void report_line(const randmeas::VerificationReport& r) {
  std::fprintf(stderr, "[%s] %-44s z=%7.3f lhs=%.6g rhs=%.6g%s%s\n", r.pass ? " ok " : "FAIL",
               r.label.c_str(), r.zScore, r.lhs.mean, r.rhs.mean,
               r.exactValue ? " exact=" : "",
               r.exactValue ? randmeas::format_double(*r.exactValue).c_str() : "");
}

int cmd_verify(const VerifyOpts& o) {
  randmeas::TSampling ts;
  if (o.tSampling == "beta") {
    ts = randmeas::TSampling::BetaKernel;
  } else if (o.tSampling == "uniform") {
    ts = randmeas::TSampling::UniformReweighted;
  } else {
    throw ConfigError("--t-sampling must be 'beta' or 'uniform'");
  }

  std::vector<randmeas::IntensityMeasure> sigmas;
  for (double b : parse_double_list(o.beta, "--beta")) sigmas.push_back(make_sigma(b, o.density));

  bool pass = true;
  Json cases = Json::array();
  std::vector<randmeas::VerificationReport> reports;
  for (const auto& c : randmeas::default_suite(sigmas, o.samples, o.seed)) {
    randmeas::VerificationReport r = randmeas::verify_identity(c, o.threads, ts);
    report_line(r);
    pass = pass && r.pass;
    cases.push_back(randmeas::report_to_json(r));
    reports.push_back(std::move(r));
  }

  Json laplace = Json::array();
  if (!o.skipLaplace) {
    for (const auto& sigma : sigmas) {
      for (const auto& lc : randmeas::default_laplace_cases(sigma, o.samples, o.seed)) {
        randmeas::VerificationReport r = randmeas::verify_laplace(lc, o.threads);
        report_line(r);
        pass = pass && r.pass;
        laplace.push_back(randmeas::report_to_json(r));
        reports.push_back(std::move(r));
      }
    }
  }

  Json simplicial = Json::array();
  std::string simplicialCsv;
  if (!o.skipSimplicial) {
    randmeas::Partition part({0.0, 0.25, 0.625, 1.0});
    for (const auto& sigma : sigmas) {
      randmeas::SimplicialReport r = randmeas::verify_simplicial_decomposition(
          sigma, part, o.levyCutoff, o.samples, o.seed + 0x5151, o.threads);
      std::fprintf(stderr, "[%s] simplicial/beta=%g (%zu checks)\n", r.pass ? " ok " : "FAIL",
                   r.beta, r.checks.size());
      for (const auto& row : r.checks)
        if (!row.pass)
          std::fprintf(stderr, "       %-32s observed=%.6g reference=%.6g tol=%.3g\n",
                       row.name.c_str(), row.observed, row.reference, row.tolerance);
      pass = pass && r.pass;
      simplicial.push_back(randmeas::simplicial_to_json(r));
      simplicialCsv += randmeas::simplicial_csv(r) + "\n";
    }
  }

  if (o.format == "csv") {
    std::string doc = randmeas::verify_reports_csv(reports);
    if (!simplicialCsv.empty()) doc += "\n" + simplicialCsv;
    emit(o.out, doc);
  } else {
    Json j{{"command", "verify"},       {"samples", o.samples}, {"seed", o.seed},
           {"tSampling", o.tSampling},  {"pass", pass},         {"identityCases", cases},
           {"laplace", laplace},        {"simplicial", simplicial}};
    emit(o.out, j.dump(2));
  }
  std::fprintf(stderr, "verify: %s (%zu identity cases)\n", pass ? "PASS" : "FAIL",
               reports.size());
  return pass ? 0 : 1;
}

// ------------------------------------------------------------ fixedpoint --

struct FixedpointOpts {
  double beta = 1.0;
  std::string density = "uniform";
  std::string init = "df";
  int steps = 200;
  int ensemble = 10000;
  std::string partition = "0,0.5,1";
  std::string record;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string out;
  std::string format = "json";
  int maxAtoms = 10000;
  double remainderTol = 1e-12;
};

int cmd_fixedpoint(const FixedpointOpts& o) {
  randmeas::TrajectoryConfig cfg;
  if (o.init == "delta") {
    cfg.init = randmeas::InitialLaw::DeltaAtHalf;
  } else if (o.init == "df") {
    cfg.init = randmeas::InitialLaw::StickBreaking;
  } else if (o.init.rfind("grid", 0) == 0) {
    cfg.init = randmeas::InitialLaw::UniformGrid;
    if (o.init.size() > 5 && o.init[4] == ':') cfg.gridAtoms = std::stoi(o.init.substr(5));
    else if (o.init != "grid") throw ConfigError("bad --init '" + o.init + "'");
  } else {
    throw ConfigError("--init must be delta, grid:<m> or df, got '" + o.init + "'");
  }
  cfg.steps = o.steps;
  cfg.ensemble = o.ensemble;
  cfg.seed = o.seed;
  cfg.sticks = randmeas::StickBreakingConfig{o.maxAtoms, o.remainderTol};
  if (!o.record.empty()) cfg.recordSteps = parse_int_list(o.record, "--record");

  randmeas::IntensityMeasure sigma = make_sigma(o.beta, o.density);
  randmeas::Partition part(parse_double_list(o.partition, "--partition"));
  randmeas::TrajectoryReport rep = randmeas::run_trajectory(cfg, sigma, part, o.threads);

  // Pass requires (a) the partition moments at the final recorded step to sit
  // within 0.01 of the stationary values and (b) the surviving initial mass
  // to track (beta/(beta+1))^step within 4 SE at every recorded step.
  bool pass = true;
  double decayBase = o.beta / (o.beta + 1.0);
  for (const auto& rec : rep.records) {
    double expect = std::pow(decayBase, rec.step);
    bool decayOk = std::abs(rec.survivingMassMean - expect) <=
                   4.0 * rec.survivingMassSE + 1e-9;
    pass = pass && decayOk;
    std::fprintf(stderr, "step %5d  maxGap=%.5f  surviving=%.5g (expect %.5g)%s\n", rec.step,
                 rec.maxAbsGap, rec.survivingMassMean, expect, decayOk ? "" : "  [decay FAIL]");
  }
  if (!rep.records.empty()) {
    double finalGap = rep.records.back().maxAbsGap;
    if (finalGap >= 0.01) {
      pass = false;
      std::fprintf(stderr, "final-step moment gap %.5f exceeds 0.01\n", finalGap);
    }
  }

  if (o.format == "csv") {
    emit(o.out, randmeas::trajectory_csv(rep));
  } else {
    Json j = randmeas::trajectory_to_json(rep);
    j["command"] = "fixedpoint";
    j["init"] = o.init;
    j["pass"] = pass;
    emit(o.out, j.dump(2));
  }
  std::fprintf(stderr, "fixedpoint: %s\n", pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}

// ----------------------------------------------------------------- suite --

struct SuiteOpts {
  std::string beta = "0.5,1,2";
  std::int64_t samples = 20000;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string out;
};

int cmd_suite(const SuiteOpts& o) {
  std::vector<randmeas::IntensityMeasure> sigmas;
  for (double b : parse_double_list(o.beta, "--beta")) {
    sigmas.push_back(randmeas::IntensityMeasure::uniform(b));
  }

  int failures = 0;
  Json sections = Json::object();

  {  // identities + Laplace checks at reduced sample counts
    int total = 0, ok = 0;
    Json arr = Json::array();
    for (const auto& c : randmeas::default_suite(sigmas, o.samples, o.seed)) {
      randmeas::VerificationReport r = randmeas::verify_identity(c, o.threads);
      ++total;
      ok += r.pass ? 1 : 0;
      if (!r.pass) report_line(r);
      arr.push_back(randmeas::report_to_json(r));
    }
    for (const auto& sigma : sigmas) {
      for (const auto& lc : randmeas::default_laplace_cases(sigma, o.samples, o.seed)) {
        randmeas::VerificationReport r = randmeas::verify_laplace(lc, o.threads);
        ++total;
        ok += r.pass ? 1 : 0;
        if (!r.pass) report_line(r);
        arr.push_back(randmeas::report_to_json(r));
      }
    }
    failures += total - ok;
    sections["identities"] = arr;
    std::printf("identities: %s (%d/%d)\n", ok == total ? "PASS" : "FAIL", ok, total);
  }

  {  // moment recurrences against the quadrature oracle
    struct Smoke {
      std::vector<randmeas::Rational> alpha, s;
    };
    std::vector<Smoke> smokes = {
        {{randmeas::Rational(1, 2), randmeas::Rational(1, 2)},
         {randmeas::Rational(3), randmeas::Rational(1)}},
        {{randmeas::Rational(1, 2), randmeas::Rational(1), randmeas::Rational(3, 2)},
         {randmeas::Rational(1), randmeas::Rational(2), randmeas::Rational(0)}},
    };
    int total = 0, ok = 0;
    for (const auto& sm : smokes) {
      std::vector<double> alphaD, sD;
      for (const auto& a : sm.alpha) alphaD.push_back(randmeas::to_double(a));
      for (const auto& v : sm.s) sD.push_back(randmeas::to_double(v));
      randmeas::SimplexPolynomial form = randmeas::SimplexPolynomial::linear_form(sD);
      for (int n = 0; n <= 4; ++n) {
        double exact = randmeas::to_double(randmeas::dirichlet_moment(sm.alpha, sm.s, n));
        double oracle = randmeas::simplex_quadrature_oracle(alphaD, form.pow(n));
        ++total;
        ok += std::abs(exact - oracle) <= 1e-6 ? 1 : 0;
      }
    }
    failures += total - ok;
    sections["moments"] = Json{{"total", total}, {"ok", ok}};
    std::printf("moments: %s (%d/%d)\n", ok == total ? "PASS" : "FAIL", ok, total);
  }

  {  // short fixed-point run started at the stationary law
    randmeas::TrajectoryConfig cfg;
    cfg.init = randmeas::InitialLaw::StickBreaking;
    cfg.steps = 50;
    cfg.ensemble = 2000;
    cfg.seed = o.seed;
    randmeas::IntensityMeasure sigma = randmeas::IntensityMeasure::uniform(1.0);
    randmeas::Partition part({0.0, 0.5, 1.0});
    randmeas::TrajectoryReport rep = randmeas::run_trajectory(cfg, sigma, part, o.threads);
    bool ok = true;
    for (const auto& rec : rep.records) {
      ok = ok && rec.maxAbsGap < 0.05;
      ok = ok && std::abs(rec.survivingMassMean - std::pow(0.5, rec.step)) <=
                     4.0 * rec.survivingMassSE + 1e-9;
    }
    failures += ok ? 0 : 1;
    sections["fixedpoint"] = randmeas::trajectory_to_json(rep);
    std::printf("fixedpoint: %s\n", ok ? "PASS" : "FAIL");
  }

  bool pass = failures == 0;
  std::printf("suite: %s\n", pass ? "PASS" : "FAIL");
  if (!o.out.empty()) {
    Json j{{"command", "suite"}, {"pass", pass}, {"sections", sections}};
    randmeas::write_file(o.out, j.dump(2));
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-measure sampling, exact moments and identity verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "randmeas 0.1.0");

  SampleOpts so;
  MomentsOpts mo;
  VerifyOpts vo;
  FixedpointOpts fo;
  SuiteOpts uo;
  std::string configPath;

  // Config values are injected as new defaults for the active subcommand
  // before parsing, so explicit flags still win.
  const std::string cmd = argc > 1 ? argv[1] : "";
  try {
    Json sect = load_config_section(argc, argv);
    if (cmd == "sample") {
      cfg_get(sect, "kind", so.kind);
      cfg_get(sect, "beta", so.beta);
      cfg_get(sect, "density", so.density);
      cfg_get_list(sect, "alpha", so.alpha);
      cfg_get(sect, "samples", so.samples);
      cfg_get(sect, "seed", so.seed);
      cfg_get(sect, "out", so.out);
      cfg_get(sect, "format", so.format);
      cfg_get(sect, "levy-cutoff", so.levyCutoff);
      cfg_get(sect, "max-atoms", so.maxAtoms);
      cfg_get(sect, "remainder-tol", so.remainderTol);
    } else if (cmd == "moments") {
      cfg_get_list(sect, "alpha", mo.alpha);
      cfg_get_list(sect, "svec", mo.svec);
      cfg_get(sect, "nmax", mo.nmax);
      cfg_get(sect, "grid", mo.grid);
      cfg_get(sect, "out", mo.out);
      cfg_get(sect, "format", mo.format);
    } else if (cmd == "verify") {
      cfg_get_list(sect, "beta", vo.beta);
      cfg_get(sect, "density", vo.density);
      cfg_get(sect, "samples", vo.samples);
      cfg_get(sect, "seed", vo.seed);
      cfg_get(sect, "threads", vo.threads);
      cfg_get(sect, "out", vo.out);
      cfg_get(sect, "format", vo.format);
      cfg_get(sect, "levy-cutoff", vo.levyCutoff);
      cfg_get(sect, "t-sampling", vo.tSampling);
      cfg_get(sect, "skip-laplace", vo.skipLaplace);
      cfg_get(sect, "skip-simplicial", vo.skipSimplicial);
    } else if (cmd == "fixedpoint") {
      cfg_get(sect, "beta", fo.beta);
      cfg_get(sect, "density", fo.density);
      cfg_get(sect, "init", fo.init);
      cfg_get(sect, "steps", fo.steps);
      cfg_get(sect, "ensemble", fo.ensemble);
      cfg_get_list(sect, "partition", fo.partition);
      cfg_get_list(sect, "record", fo.record);
      cfg_get(sect, "seed", fo.seed);
      cfg_get(sect, "threads", fo.threads);
      cfg_get(sect, "out", fo.out);
      cfg_get(sect, "format", fo.format);
      cfg_get(sect, "max-atoms", fo.maxAtoms);
      cfg_get(sect, "remainder-tol", fo.remainderTol);
    } else if (cmd == "suite") {
      cfg_get_list(sect, "beta", uo.beta);
      cfg_get(sect, "samples", uo.samples);
      cfg_get(sect, "seed", uo.seed);
      cfg_get(sect, "threads", uo.threads);
      cfg_get(sect, "out", uo.out);
    }
  } catch (const Json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  CLI::App* sample = app.add_subcommand("sample", "Draw random measures and write them out");
  sample->add_option("--kind", so.kind, "poisson|df|gamma|gamma-levy|dirichlet")->required();
  sample->add_option("--beta", so.beta, "total intensity mass");
  sample->add_option("--density", so.density, "uniform or table:<path>");
  sample->add_option("--alpha", so.alpha, "Dirichlet parameters (comma list), kind=dirichlet");
  sample->add_option("--samples", so.samples, "number of draws");
  sample->add_option("--seed", so.seed, "RNG seed");
  sample->add_option("--out", so.out, "output file (default stdout)");
  sample->add_option("--format", so.format, "json|csv");
  sample->add_option("--levy-cutoff", so.levyCutoff, "jump cutoff for kind=gamma-levy");
  sample->add_option("--max-atoms", so.maxAtoms, "stick-breaking atom cap");
  sample->add_option("--remainder-tol", so.remainderTol, "stick-breaking remainder tolerance");
  sample->add_option("--config", configPath, "JSON file with option defaults");

  CLI::App* moments = app.add_subcommand("moments", "Exact pairing moments with oracle cross-check");
  moments->add_option("--alpha", mo.alpha, "Dirichlet parameters, rationals like 1/2,1/2")
      ->required();
  moments->add_option("--svec", mo.svec, "step values of the test function, rationals")->required();
  moments->add_option("--nmax", mo.nmax, "highest moment order");
  moments->add_option("--grid", mo.grid, "quadrature node cap per axis");
  moments->add_option("--out", mo.out, "output file (default stdout)");
  moments->add_option("--format", mo.format, "json|csv");
  moments->add_option("--config", configPath, "JSON file with option defaults");

  CLI::App* verify = app.add_subcommand("verify", "Monte Carlo verification of the identities");
  verify->add_option("--beta", vo.beta, "comma list of intensity masses");
  verify->add_option("--density", vo.density, "uniform or table:<path>");
  verify->add_option("--samples", vo.samples, "Monte Carlo samples per side");
  verify->add_option("--seed", vo.seed, "RNG seed");
  verify->add_option("--threads", vo.threads, "worker threads (results identical for any count)");
  verify->add_option("--out", vo.out, "output file (default stdout)");
  verify->add_option("--format", vo.format, "json|csv");
  verify->add_option("--levy-cutoff", vo.levyCutoff, "jump cutoff for the decomposition check");
  verify->add_option("--t-sampling", vo.tSampling, "beta|uniform right-hand kernel sampling");
  verify->add_flag("--skip-laplace", vo.skipLaplace, "skip the Laplace-transform checks");
  verify->add_flag("--skip-simplicial", vo.skipSimplicial, "skip the decomposition checks");
  verify->add_option("--config", configPath, "JSON file with option defaults");

  CLI::App* fixedpoint =
      app.add_subcommand("fixedpoint", "Iterate the transport operator and track convergence");
  fixedpoint->add_option("--beta", fo.beta, "total intensity mass");
  fixedpoint->add_option("--density", fo.density, "uniform or table:<path>");
  fixedpoint->add_option("--init", fo.init, "delta|grid:<m>|df starting law");
  fixedpoint->add_option("--steps", fo.steps, "operator applications per chain");
  fixedpoint->add_option("--ensemble", fo.ensemble, "number of chains");
  fixedpoint->add_option("--partition", fo.partition, "comma list of breakpoints");
  fixedpoint->add_option("--record", fo.record, "comma list of steps to record");
  fixedpoint->add_option("--seed", fo.seed, "RNG seed");
  fixedpoint->add_option("--threads", fo.threads, "worker threads");
  fixedpoint->add_option("--out", fo.out, "output file (default stdout)");
  fixedpoint->add_option("--format", fo.format, "json|csv");
  fixedpoint->add_option("--max-atoms", fo.maxAtoms, "stick-breaking atom cap");
  fixedpoint->add_option("--remainder-tol", fo.remainderTol, "stick-breaking remainder tolerance");
  fixedpoint->add_option("--config", configPath, "JSON file with option defaults");

  CLI::App* suite = app.add_subcommand("suite", "Reduced-sample smoke run of all checks");
  suite->add_option("--beta", uo.beta, "comma list of intensity masses");
  suite->add_option("--samples", uo.samples, "Monte Carlo samples per side");
  suite->add_option("--seed", uo.seed, "RNG seed");
  suite->add_option("--threads", uo.threads, "worker threads");
  suite->add_option("--out", uo.out, "JSON report file");
  suite->add_option("--config", configPath, "JSON file with option defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sample->parsed()) return cmd_sample(so);
    if (moments->parsed()) return cmd_moments(mo);
    if (verify->parsed()) return cmd_verify(vo);
    if (fixedpoint->parsed()) return cmd_fixedpoint(fo);
    if (suite->parsed()) return cmd_suite(uo);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
