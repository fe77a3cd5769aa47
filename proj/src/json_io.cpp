#include "randmeas/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace randmeas {

std::string format_double(double x) {
  char buf[40];
  // Round-trip exact: try increasing precision until the value reparses
  // identically; 17 significant digits always suffice.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  return buf;
}

Json intensity_to_json(const IntensityMeasure& sigma) {
  Json j;
  j["beta"] = sigma.beta();
  if (sigma.is_uniform()) {
    j["density"] = "uniform";
  } else {
    j["breakpoints"] = sigma.breakpoints();
    j["density"] = sigma.density_values();
  }
  return j;
}

IntensityMeasure intensity_from_json(const Json& j) {
  const double beta = j.at("beta").get<double>();
  if (!j.contains("density") || j["density"].is_string()) {
    if (j.contains("density") && j["density"].get<std::string>() != "uniform") {
      throw std::invalid_argument("intensity: unknown density name");
    }
    return IntensityMeasure::uniform(beta);
  }
  return IntensityMeasure::piecewise(beta, j.at("breakpoints").get<std::vector<double>>(),
                                     j.at("density").get<std::vector<double>>());
}

Json partition_to_json(const Partition& part) { return Json(part.breakpoints()); }

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<double>>());
}

Json expr_to_json(const Expr& e) {
  const Expr::Node& n = e.node();
  Json j;
  switch (n.type) {
    case NodeType::Constant:
      j["type"] = "const";
      j["value"] = n.value;
      break;
    case NodeType::Pairing:
      j["type"] = "pairing";
      j["g"] = n.index;
      break;
    case NodeType::GAtX:
      j["type"] = "gx";
      j["g"] = n.index;
      break;
    case NodeType::MassArg:
      j["type"] = "mass";
      break;
    case NodeType::Sum: {
      j["type"] = "sum";
      Json terms = Json::array();
      for (const Expr& c : n.children) terms.push_back(expr_to_json(c));
      j["terms"] = std::move(terms);
      break;
    }
    case NodeType::Product: {
      j["type"] = "product";
      Json factors = Json::array();
      for (const Expr& c : n.children) factors.push_back(expr_to_json(c));
      j["factors"] = std::move(factors);
      break;
    }
    case NodeType::Power:
      j["type"] = "power";
      j["base"] = expr_to_json(n.children[0]);
      j["n"] = n.index;
      break;
  }
  return j;
}

Expr expr_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "const") return Expr::constant(j.at("value").get<double>());
  if (type == "pairing") return Expr::pairing(j.at("g").get<int>());
  if (type == "gx") return Expr::g_at_x(j.at("g").get<int>());
  if (type == "mass") return Expr::mass_arg();
  if (type == "sum") {
    std::vector<Expr> terms;
    for (const Json& t : j.at("terms")) terms.push_back(expr_from_json(t));
    return Expr::sum(std::move(terms));
  }
  if (type == "product") {
    std::vector<Expr> factors;
    for (const Json& t : j.at("factors")) factors.push_back(expr_from_json(t));
    return Expr::product(std::move(factors));
  }
  if (type == "power") {
    return Expr::power(expr_from_json(j.at("base")), j.at("n").get<int>());
  }
  throw std::invalid_argument("expr: unknown node type '" + type + "'");
}

Json functional_to_json(const TestFunctional& f) {
  Json j;
  j["name"] = f.name();
  j["arity"] = f.arity() == Arity::G ? "G" : (f.arity() == Arity::F ? "F" : "R");
  j["partition"] = partition_to_json(f.partition());
  j["step_values"] = f.step_values();
  j["expr"] = expr_to_json(f.expr());
  return j;
}

TestFunctional functional_from_json(const Json& j) {
  const std::string arityStr = j.at("arity").get<std::string>();
  Arity ar;
  if (arityStr == "G") {
    ar = Arity::G;
  } else if (arityStr == "F") {
    ar = Arity::F;
  } else if (arityStr == "R") {
    ar = Arity::R;
  } else {
    throw std::invalid_argument("functional: arity must be G, F or R");
  }
  return TestFunctional(j.value("name", std::string("functional")), ar,
                        partition_from_json(j.at("partition")),
                        j.at("step_values").get<std::vector<std::vector<double>>>(),
                        expr_from_json(j.at("expr")));
}

Json measure_to_json(const DiscreteMeasure& m) {
  Json atoms = Json::array();
  for (const Atom& a : m.atoms()) atoms.push_back(Json::array({a.location, a.mass}));
  Json j;
  j["kind"] = m.kind() == MeasureKind::Configuration
                  ? "configuration"
                  : (m.kind() == MeasureKind::FiniteMeasure ? "finite" : "probability");
  j["atoms"] = std::move(atoms);
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["label"] = r.label;
  j["identity"] = identity_name(r.identity);
  j["beta"] = r.beta;
  j["degree"] = r.degree;
  j["samples"] = r.samples;
  j["lhs"] = {{"mean", r.lhs.mean}, {"se", r.lhs.se}};
  j["rhs"] = {{"mean", r.rhs.mean}, {"se", r.rhs.se}};
  j["zScore"] = r.zScore;
  j["tolerance"] = r.tolerance;
  j["identityPass"] = r.identityPass;
  if (r.exactValue) {
    j["exactValue"] = *r.exactValue;
    j["exactValueRational"] = r.exactValueRational;
    j["anchorPass"] = r.anchorPass;
  }
  j["pass"] = r.pass;
  return j;
}

Json simplicial_to_json(const SimplicialReport& r) {
  Json rows = Json::array();
  for (const CheckRow& c : r.checks) {
    rows.push_back({{"name", c.name},
                    {"observed", c.observed},
                    {"reference", c.reference},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass}});
  }
  return Json{{"beta", r.beta},
              {"levyCutoff", r.levyCutoff},
              {"samples", r.samples},
              {"checks", std::move(rows)},
              {"pass", r.pass}};
}

Json trajectory_to_json(const TrajectoryReport& r) {
  Json recs = Json::array();
  for (const StepRecord& s : r.records) {
    Json cells = Json::array();
    for (std::size_t i = 0; i < s.moment.size(); ++i) {
      cells.push_back({{"cell", i},
                       {"moment", s.moment[i]},
                       {"momentSE", s.momentSE[i]},
                       {"momentGap", s.momentGap[i]},
                       {"ksDistance", s.ksDistance[i]}});
    }
    recs.push_back({{"step", s.step},
                    {"cells", std::move(cells)},
                    {"maxAbsGap", s.maxAbsGap},
                    {"survivingMassMean", s.survivingMassMean},
                    {"survivingMassSE", s.survivingMassSE}});
  }
  return Json{{"beta", r.beta},
              {"steps", r.steps},
              {"ensemble", r.ensemble},
              {"stationaryMoment1", r.stationaryMoment1},
              {"records", std::move(recs)}};
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string verify_reports_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "identity,beta,functional,degree,samples,lhsMean,lhsSE,rhsMean,rhsSE,zScore,exactValue,pass\n";
  for (const VerificationReport& r : reports) {
    out << identity_name(r.identity) << ',' << format_double(r.beta) << ',' << r.label << ','
        << r.degree << ',' << r.samples << ',' << format_double(r.lhs.mean) << ','
        << format_double(r.lhs.se) << ',' << format_double(r.rhs.mean) << ','
        << format_double(r.rhs.se) << ',' << format_double(r.zScore) << ','
        << (r.exactValue ? format_double(*r.exactValue) : std::string()) << ','
        << bool_str(r.pass) << '\n';
  }
  return out.str();
}

std::string simplicial_csv(const SimplicialReport& r) {
  std::ostringstream out;
  out << "name,observed,reference,tolerance,pass\n";
  for (const CheckRow& c : r.checks) {
    out << c.name << ',' << format_double(c.observed) << ',' << format_double(c.reference) << ','
        << format_double(c.tolerance) << ',' << bool_str(c.pass) << '\n';
  }
  return out.str();
}

std::string trajectory_csv(const TrajectoryReport& r) {
  std::ostringstream out;
  out << "step,momentOrder,cellIndex,gap,ksDistance\n";
  for (const StepRecord& s : r.records) {
    for (std::size_t i = 0; i < s.momentGap.size(); ++i) {
      for (int k = 0; k < 3; ++k) {
        out << s.step << ',' << (k + 1) << ',' << i << ','
            << format_double(s.momentGap[i][static_cast<std::size_t>(k)]) << ','
            << format_double(s.ksDistance[i]) << '\n';
      }
    }
  }
  for (const StepRecord& s : r.records) {
    out << "# survivingMass step=" << s.step << " mean=" << format_double(s.survivingMassMean)
        << " se=" << format_double(s.survivingMassSE) << '\n';
  }
  return out.str();
}

std::string measures_csv(const std::vector<DiscreteMeasure>& measures) {
  std::ostringstream out;
  out << "sample,location,mass\n";
  double totalAtoms = 0.0;
  double totalMass = 0.0;
  for (std::size_t s = 0; s < measures.size(); ++s) {
    for (const Atom& a : measures[s].atoms()) {
      out << s << ',' << format_double(a.location) << ',' << format_double(a.mass) << '\n';
    }
    totalAtoms += static_cast<double>(measures[s].size());
    totalMass += measures[s].total_mass();
  }
  if (!measures.empty()) {
    const double n = static_cast<double>(measures.size());
    out << "# samples=" << measures.size() << " meanAtomCount=" << format_double(totalAtoms / n)
        << " meanTotalMass=" << format_double(totalMass / n) << '\n';
  }
  return out.str();
}

std::string simplex_csv(const std::vector<std::vector<double>>& draws) {
  std::ostringstream out;
  out << "sample";
  if (!draws.empty()) {
    for (std::size_t i = 0; i < draws.front().size(); ++i) out << ",y" << i;
  }
  out << '\n';
  for (std::size_t s = 0; s < draws.size(); ++s) {
    out << s;
    for (double v : draws[s]) out << ',' << format_double(v);
    out << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + tmp);
    f << contents;
    if (!f.good()) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("rename failed: " + path);
  }
}

}  // namespace randmeas
