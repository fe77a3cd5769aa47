#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "randmeas/fixedpoint.hpp"
#include "randmeas/functional.hpp"
#include "randmeas/identities.hpp"
#include "randmeas/intensity.hpp"
#include "randmeas/measure.hpp"
#include "randmeas/partition.hpp"

namespace randmeas {

using Json = nlohmann::json;

// Shortest round-trippable decimal form of a double ("%.17g" trimmed), so
// serialised numbers reload bit-exactly and output files are byte-stable.
std::string format_double(double x);

// --- object schemas ------------------------------------------------------

// {"beta": 2, "density": "uniform"}
// {"beta": 2, "breakpoints": [0,0.5,1], "density": [1.6, 0.4]}
Json intensity_to_json(const IntensityMeasure& sigma);
IntensityMeasure intensity_from_json(const Json& j);

Json partition_to_json(const Partition& part);
Partition partition_from_json(const Json& j);

// Expression nodes:
//   {"type":"const","value":2}                 {"type":"pairing","g":0}
//   {"type":"gx","g":1}                        {"type":"mass"}
//   {"type":"sum","terms":[...]}               {"type":"product","factors":[...]}
//   {"type":"power","base":{...},"n":3}
Json expr_to_json(const Expr& e);
Expr expr_from_json(const Json& j);

// {"name":"...", "arity":"G|F|R", "partition":[...], "step_values":[[...],...], "expr":{...}}
Json functional_to_json(const TestFunctional& f);
TestFunctional functional_from_json(const Json& j);

Json measure_to_json(const DiscreteMeasure& m);

// --- reports -------------------------------------------------------------

Json report_to_json(const VerificationReport& r);
Json simplicial_to_json(const SimplicialReport& r);
Json trajectory_to_json(const TrajectoryReport& r);

// CSV with one summary row per case:
// identity,beta,functional,degree,samples,lhsMean,lhsSE,rhsMean,rhsSE,zScore,exactValue,pass
std::string verify_reports_csv(const std::vector<VerificationReport>& reports);

// CSV rows: name,observed,reference,tolerance,pass
std::string simplicial_csv(const SimplicialReport& r);

// CSV rows: step,momentOrder,cellIndex,gap,ksDistance.  Surviving-mass
// statistics follow as '#' comment lines so the column contract stays flat.
std::string trajectory_csv(const TrajectoryReport& r);

// Sampled measures, one atom per row: sample,location,mass; summary comment
// lines appended.
std::string measures_csv(const std::vector<DiscreteMeasure>& measures);

// Sampled simplex points: sample,y0,y1,...
std::string simplex_csv(const std::vector<std::vector<double>>& draws);

// Atomic-ish file write: everything is written to <path>.tmp first, then
// renamed over <path>, so a crash never leaves a partial file behind.
void write_file(const std::string& path, const std::string& contents);

}  // namespace randmeas
