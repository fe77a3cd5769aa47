#include "randmeas/functional.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randmeas {

namespace {

Expr make_node(Expr::Node n) { return Expr(std::make_shared<const Expr::Node>(std::move(n))); }

}  // namespace

Expr Expr::constant(double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("Expr: constant must be finite");
  return make_node({NodeType::Constant, c, 0, {}});
}

Expr Expr::pairing(int g) {
  if (g < 0) throw std::invalid_argument("Expr: negative step-function index");
  return make_node({NodeType::Pairing, 0.0, g, {}});
}

Expr Expr::g_at_x(int g) {
  if (g < 0) throw std::invalid_argument("Expr: negative step-function index");
  return make_node({NodeType::GAtX, 0.0, g, {}});
}

Expr Expr::mass_arg() { return make_node({NodeType::MassArg, 0.0, 0, {}}); }

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) throw std::invalid_argument("Expr: empty sum");
  return make_node({NodeType::Sum, 0.0, 0, std::move(terms)});
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) throw std::invalid_argument("Expr: empty product");
  return make_node({NodeType::Product, 0.0, 0, std::move(factors)});
}

Expr Expr::power(Expr base, int n) {
  if (n < 0) throw std::invalid_argument("Expr: negative exponent");
  return make_node({NodeType::Power, 0.0, n, {std::move(base)}});
}

double Expr::eval(const EvalContext& ctx) const {
  const Node& n = *node_;
  switch (n.type) {
    case NodeType::Constant:
      return n.value;
    case NodeType::Pairing:
      return (*ctx.pairings)[static_cast<std::size_t>(n.index)];
    case NodeType::GAtX:
      return (*ctx.stepValues)[static_cast<std::size_t>(n.index)][static_cast<std::size_t>(ctx.cell)];
    case NodeType::MassArg:
      return ctx.massArg;
    case NodeType::Sum: {
      double s = 0.0;
      for (const Expr& c : n.children) s += c.eval(ctx);
      return s;
    }
    case NodeType::Product: {
      double p = 1.0;
      for (const Expr& c : n.children) p *= c.eval(ctx);
      return p;
    }
    case NodeType::Power: {
      double b = n.children[0].eval(ctx);
      double r = 1.0;
      for (int i = 0; i < n.index; ++i) r *= b;
      return r;
    }
  }
  return 0.0;  // unreachable
}

int Expr::degree() const {
  const Node& n = *node_;
  switch (n.type) {
    case NodeType::Constant:
    case NodeType::GAtX:
      return 0;
    case NodeType::Pairing:
    case NodeType::MassArg:
      return 1;
    case NodeType::Sum: {
      int d = 0;
      for (const Expr& c : n.children) d = std::max(d, c.degree());
      return d;
    }
    case NodeType::Product: {
      int d = 0;
      for (const Expr& c : n.children) d += c.degree();
      return d;
    }
    case NodeType::Power:
      return n.index * n.children[0].degree();
  }
  return 0;
}

bool Expr::uses_g_at_x() const {
  const Node& n = *node_;
  if (n.type == NodeType::GAtX) return true;
  for (const Expr& c : n.children) {
    if (c.uses_g_at_x()) return true;
  }
  return false;
}

bool Expr::uses_mass_arg() const {
  const Node& n = *node_;
  if (n.type == NodeType::MassArg) return true;
  for (const Expr& c : n.children) {
    if (c.uses_mass_arg()) return true;
  }
  return false;
}

int Expr::max_g_index() const {
  const Node& n = *node_;
  int m = (n.type == NodeType::Pairing || n.type == NodeType::GAtX) ? n.index : -1;
  for (const Expr& c : n.children) m = std::max(m, c.max_g_index());
  return m;
}

namespace {

// Sparse polynomial over (pairing exponents, mass exponent); used only for
// closed-form detection, so sizes stay tiny.
using MonoKey = std::pair<std::vector<int>, int>;
using Poly = std::map<MonoKey, double>;

Poly poly_const(std::size_t nPairings, double c) {
  Poly p;
  p[{std::vector<int>(nPairings, 0), 0}] = c;
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) {
      MonoKey k = ka;
      for (std::size_t i = 0; i < k.first.size(); ++i) k.first[i] += kb.first[i];
      k.second += kb.second;
      out[k] += va * vb;
    }
  }
  return out;
}

Poly poly_add(Poly a, const Poly& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

// nullopt when the expression contains a g(x) node (no polynomial normal
// form in the pairings alone).
std::optional<Poly> to_poly(const Expr& e, std::size_t nPairings);

std::optional<Poly> to_poly_children_product(const std::vector<Expr>& cs, std::size_t nPairings) {
  Poly acc = poly_const(nPairings, 1.0);
  for (const Expr& c : cs) {
    auto p = to_poly(c, nPairings);
    if (!p) return std::nullopt;
    acc = poly_mul(acc, *p);
  }
  return acc;
}

std::optional<Poly> to_poly(const Expr& e, std::size_t nPairings) {
  const Expr::Node& n = e.node();
  switch (n.type) {
    case NodeType::Constant:
      return poly_const(nPairings, n.value);
    case NodeType::Pairing: {
      Poly p;
      MonoKey k{std::vector<int>(nPairings, 0), 0};
      k.first[static_cast<std::size_t>(n.index)] = 1;
      p[k] = 1.0;
      return p;
    }
    case NodeType::GAtX:
      return std::nullopt;
    case NodeType::MassArg: {
      Poly p;
      p[{std::vector<int>(nPairings, 0), 1}] = 1.0;
      return p;
    }
    case NodeType::Sum: {
      Poly acc = poly_const(nPairings, 0.0);
      for (const Expr& c : n.children) {
        auto p = to_poly(c, nPairings);
        if (!p) return std::nullopt;
        acc = poly_add(std::move(acc), *p);
      }
      return acc;
    }
    case NodeType::Product:
      return to_poly_children_product(n.children, nPairings);
    case NodeType::Power: {
      auto base = to_poly(n.children[0], nPairings);
      if (!base) return std::nullopt;
      Poly acc = poly_const(nPairings, 1.0);
      for (int i = 0; i < n.index; ++i) acc = poly_mul(acc, *base);
      return acc;
    }
  }
  return std::nullopt;
}

}  // namespace

TestFunctional::TestFunctional(std::string name, Arity arity, Partition partition,
                               std::vector<std::vector<double>> stepValues, Expr expr)
    : name_(std::move(name)),
      arity_(arity),
      partition_(std::move(partition)),
      stepValues_(std::move(stepValues)),
      expr_(std::move(expr)),
      degree_(expr_.degree()) {
  const std::size_t k = static_cast<std::size_t>(partition_.cells());
  for (const auto& g : stepValues_) {
    if (g.size() != k) {
      throw std::invalid_argument("TestFunctional: step function must have one value per cell");
    }
    for (double v : g) {
      if (!std::isfinite(v)) throw std::invalid_argument("TestFunctional: step values must be finite");
    }
  }
  if (expr_.max_g_index() >= static_cast<int>(stepValues_.size())) {
    throw std::invalid_argument("TestFunctional: expression references a missing step function");
  }
  if (arity_ == Arity::G && (expr_.uses_g_at_x() || expr_.uses_mass_arg())) {
    throw std::invalid_argument("TestFunctional: measure-only functional cannot use g(x) or the mass argument");
  }
  if (arity_ == Arity::F && expr_.uses_mass_arg()) {
    throw std::invalid_argument("TestFunctional: (eta,x) functional cannot use the mass argument");
  }

  auto p = to_poly(expr_, stepValues_.size());
  if (p) {
    PairingPolynomial out;
    for (const auto& [key, coeff] : *p) {
      if (coeff == 0.0) continue;
      PairingPolynomial::Term t;
      t.pairingExps = key.first;
      t.massExp = key.second;
      t.coeff = coeff;
      out.usesMass = out.usesMass || t.massExp > 0;
      int pd = 0;
      for (int e : t.pairingExps) pd += e;
      out.maxPairingDegree = std::max(out.maxPairingDegree, pd);
      out.terms.push_back(std::move(t));
    }
    poly_ = std::move(out);
  }
}

double TestFunctional::g_value(int j, double x) const {
  return stepValues_[static_cast<std::size_t>(j)][static_cast<std::size_t>(partition_.cell_index(x))];
}

std::vector<double> TestFunctional::pairings(const DiscreteMeasure& eta) const {
  std::vector<double> out(stepValues_.size(), 0.0);
  for (const Atom& a : eta.atoms()) {
    const std::size_t cell = static_cast<std::size_t>(partition_.cell_index(a.location));
    for (std::size_t j = 0; j < stepValues_.size(); ++j) out[j] += stepValues_[j][cell] * a.mass;
  }
  return out;
}

double TestFunctional::eval_at(const std::vector<double>& pairingValues) const {
  EvalContext ctx;
  ctx.pairings = &pairingValues;
  return expr_.eval(ctx);
}

double TestFunctional::eval_at(const std::vector<double>& pairingValues, int cell) const {
  EvalContext ctx;
  ctx.pairings = &pairingValues;
  ctx.stepValues = &stepValues_;
  ctx.cell = cell;
  return expr_.eval(ctx);
}

double TestFunctional::eval_at(const std::vector<double>& pairingValues, int cell, double m) const {
  EvalContext ctx;
  ctx.pairings = &pairingValues;
  ctx.stepValues = &stepValues_;
  ctx.cell = cell;
  ctx.massArg = m;
  return expr_.eval(ctx);
}

double TestFunctional::operator()(const DiscreteMeasure& eta) const {
  return eval_at(pairings(eta));
}

double TestFunctional::operator()(const DiscreteMeasure& eta, double x) const {
  return eval_at(pairings(eta), partition_.cell_index(x));
}

double TestFunctional::operator()(const DiscreteMeasure& eta, double x, double m) const {
  return eval_at(pairings(eta), partition_.cell_index(x), m);
}

std::vector<double> TestFunctional::pairings_from_simplex(const std::vector<double>& y) const {
  if (y.size() != static_cast<std::size_t>(partition_.cells())) {
    throw std::invalid_argument("TestFunctional: simplex point has wrong dimension");
  }
  std::vector<double> out(stepValues_.size(), 0.0);
  for (std::size_t j = 0; j < stepValues_.size(); ++j) {
    for (std::size_t i = 0; i < y.size(); ++i) out[j] += stepValues_[j][i] * y[i];
  }
  return out;
}

double TestFunctional::eval_simplex(const std::vector<double>& y) const {
  return eval_at(pairings_from_simplex(y));
}

double TestFunctional::eval_simplex(const std::vector<double>& y, int cell) const {
  return eval_at(pairings_from_simplex(y), cell);
}

}  // namespace randmeas
