#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "randmeas/measure.hpp"
#include "randmeas/partition.hpp"

namespace randmeas {

// How many arguments a test functional consumes.
//   G : eta                      (measure only)
//   F : eta, x                   (measure and a location)
//   R : eta, x, m                (measure, location and a mass value)
enum class Arity { G, F, R };

// Values available to an expression at evaluation time.  Point evaluations
// g_j(x) are resolved through the cell index of x, so no per-evaluation
// buffer is needed.
struct EvalContext {
  const std::vector<double>* pairings = nullptr;              // <g_j, eta> per step function j
  const std::vector<std::vector<double>>* stepValues = nullptr;  // g_j values per cell (F/R only)
  int cell = -1;                                              // cell index of x (F/R only)
  double massArg = 0.0;                                       // the mass argument (R only)
};

// An arithmetic expression over pairings <g_j, eta>, point evaluations
// g_j(x), the mass argument m, and constants.  Nodes are immutable and
// shared; expressions are cheap to copy.
class Expr {
 public:
  static Expr constant(double c);
  static Expr pairing(int g);
  static Expr g_at_x(int g);
  static Expr mass_arg();
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, int n);  // n >= 0

  double eval(const EvalContext& ctx) const;

  // Polynomial degree, counting each pairing and the mass argument as
  // degree 1 and point evaluations g_j(x) as degree 0.
  int degree() const;

  bool uses_g_at_x() const;
  bool uses_mass_arg() const;
  int max_g_index() const;  // -1 when no step function is referenced

  struct Node;
  const Node& node() const { return *node_; }
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

 private:
  std::shared_ptr<const Node> node_;
};

enum class NodeType { Constant, Pairing, GAtX, MassArg, Sum, Product, Power };

struct Expr::Node {
  NodeType type;
  double value = 0.0;          // Constant
  int index = 0;               // Pairing / GAtX: step function index, Power: exponent
  std::vector<Expr> children;  // Sum / Product / Power (single child)
};

// A polynomial in the pairing values and the mass argument, used to detect
// integrands whose expectation has a closed form.  Key: exponents of each
// pairing, then the exponent of m.
struct PairingPolynomial {
  struct Term {
    std::vector<int> pairingExps;
    int massExp = 0;
    double coeff = 0.0;
  };
  std::vector<Term> terms;
  bool usesMass = false;
  int maxPairingDegree = 0;
};

// A test functional: a family of step functions g_0..g_{r-1} on a shared
// interval partition plus an expression combining their pairings.
class TestFunctional {
 public:
  TestFunctional(std::string name, Arity arity, Partition partition,
                 std::vector<std::vector<double>> stepValues, Expr expr);

  const std::string& name() const { return name_; }
  Arity arity() const { return arity_; }
  const Partition& partition() const { return partition_; }
  const std::vector<std::vector<double>>& step_values() const { return stepValues_; }
  const Expr& expr() const { return expr_; }
  int degree() const { return degree_; }

  // Value of step function j at location x.
  double g_value(int j, double x) const;

  // All pairings <g_j, eta> for a measure, via one pass over its atoms.
  std::vector<double> pairings(const DiscreteMeasure& eta) const;

  // Measure-level evaluation.
  double operator()(const DiscreteMeasure& eta) const;                      // G
  double operator()(const DiscreteMeasure& eta, double x) const;            // F
  double operator()(const DiscreteMeasure& eta, double x, double m) const;  // R

  // Bulk path: evaluate from precomputed pairings.  The Monte Carlo loops
  // compute the pairing vector once per measure and then sweep atoms, which
  // avoids the quadratic cost of re-pairing per atom.
  double eval_at(const std::vector<double>& pairingValues) const;
  double eval_at(const std::vector<double>& pairingValues, int cell) const;
  double eval_at(const std::vector<double>& pairingValues, int cell, double m) const;

  // Simplex-level evaluation for the finite-dimensional identities: the
  // measure argument is replaced by a simplex point y on the partition's
  // cells, the location argument by a cell index.
  double eval_simplex(const std::vector<double>& y) const;             // G
  double eval_simplex(const std::vector<double>& y, int cell) const;   // F
  std::vector<double> pairings_from_simplex(const std::vector<double>& y) const;

  // Closed-form detection.  Present only when the expression is a
  // polynomial in pairings and mass argument with no g(x) factors.
  const std::optional<PairingPolynomial>& as_polynomial() const { return poly_; }

 private:
  std::string name_;
  Arity arity_;
  Partition partition_;
  std::vector<std::vector<double>> stepValues_;  // stepValues_[j][cell]
  Expr expr_;
  int degree_;
  std::optional<PairingPolynomial> poly_;
};

}  // namespace randmeas
