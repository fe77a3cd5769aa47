#include "randmeas/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace randmeas {

SimplexPolynomial::SimplexPolynomial(int k, std::vector<Monomial> terms)
    : k_(k), terms_(std::move(terms)) {
  if (k_ < 1 || k_ > 3) throw std::invalid_argument("SimplexPolynomial: k must be 1..3");
  for (const Monomial& m : terms_) {
    for (int i = 0; i < 3; ++i) {
      if (m.exps[static_cast<std::size_t>(i)] < 0 || (i >= k_ && m.exps[static_cast<std::size_t>(i)] != 0)) {
        throw std::invalid_argument("SimplexPolynomial: bad exponent");
      }
    }
  }
}

SimplexPolynomial SimplexPolynomial::constant(int k, double c) {
  return SimplexPolynomial(k, {{c, {0, 0, 0}}});
}

SimplexPolynomial SimplexPolynomial::linear_form(const std::vector<double>& s) {
  const int k = static_cast<int>(s.size());
  std::vector<Monomial> terms;
  for (int i = 0; i < k; ++i) {
    std::array<int, 3> e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    terms.push_back({s[static_cast<std::size_t>(i)], e});
  }
  return SimplexPolynomial(k, std::move(terms));
}

namespace {

std::vector<SimplexPolynomial::Monomial> combine(
    const std::map<std::array<int, 3>, double>& acc) {
  std::vector<SimplexPolynomial::Monomial> out;
  for (const auto& [e, c] : acc) {
    if (c != 0.0) out.push_back({c, e});
  }
  return out;
}

}  // namespace

SimplexPolynomial SimplexPolynomial::operator+(const SimplexPolynomial& other) const {
  if (k_ != other.k_) throw std::invalid_argument("SimplexPolynomial: dimension mismatch");
  std::map<std::array<int, 3>, double> acc;
  for (const Monomial& m : terms_) acc[m.exps] += m.coeff;
  for (const Monomial& m : other.terms_) acc[m.exps] += m.coeff;
  return SimplexPolynomial(k_, combine(acc));
}

SimplexPolynomial SimplexPolynomial::operator*(const SimplexPolynomial& other) const {
  if (k_ != other.k_) throw std::invalid_argument("SimplexPolynomial: dimension mismatch");
  std::map<std::array<int, 3>, double> acc;
  for (const Monomial& a : terms_) {
    for (const Monomial& b : other.terms_) {
      std::array<int, 3> e{a.exps[0] + b.exps[0], a.exps[1] + b.exps[1], a.exps[2] + b.exps[2]};
      acc[e] += a.coeff * b.coeff;
    }
  }
  return SimplexPolynomial(k_, combine(acc));
}

SimplexPolynomial SimplexPolynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("SimplexPolynomial: negative power");
  SimplexPolynomial out = constant(k_, 1.0);
  for (int i = 0; i < n; ++i) out = out * (*this);
  return out;
}

int SimplexPolynomial::degree() const {
  int d = 0;
  for (const Monomial& m : terms_) d = std::max(d, m.exps[0] + m.exps[1] + m.exps[2]);
  return d;
}

double SimplexPolynomial::eval(const double* y) const {
  double acc = 0.0;
  for (const Monomial& m : terms_) {
    double v = m.coeff;
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < m.exps[static_cast<std::size_t>(i)]; ++j) v *= y[i];
    }
    acc += v;
  }
  return acc;
}

GaussJacobiRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");

  // Symmetric tridiagonal Jacobi matrix of the (a,b)-Jacobi weight on
  // [-1,1]; eigenvalues are the nodes, the squared first eigenvector
  // components scale to the weights (Golub-Welsch).
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  const double apb = a + b;
  for (int i = 0; i < n; ++i) {
    double diag;
    if (i == 0) {
      diag = (b - a) / (apb + 2.0);
    } else {
      const double den = (2.0 * i + apb) * (2.0 * i + apb + 2.0);
      diag = (b * b - a * a) / den;
    }
    J(i, i) = diag;
    if (i >= 1) {
      double beta;
      if (i == 1) {
        beta = 4.0 * (a + 1.0) * (b + 1.0) / ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
      } else {
        const double m = static_cast<double>(i);
        const double den = (2.0 * m + apb) * (2.0 * m + apb) * (2.0 * m + apb + 1.0) *
                           (2.0 * m + apb - 1.0);
        beta = 4.0 * m * (m + a) * (m + b) * (m + apb) / den;
      }
      const double off = std::sqrt(beta);
      J(i, i - 1) = off;
      J(i - 1, i) = off;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi: eigensolver failed");
  }

  // Total weight on [0,1] for y^b (1-y)^a: the Beta function B(b+1, a+1).
  const double mu0 = std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(apb + 2.0));

  GaussJacobiRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 + x);  // map [-1,1] -> [0,1]
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

namespace {

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// One evaluation of the normalised expectation with n nodes per axis.
double tensor_pass(const std::vector<double>& alpha, const SimplexPolynomial& f, int n) {
  const std::size_t k = alpha.size();
  if (k == 2) {
    // y = (y0, 1-y0), weight y0^(a0-1) (1-y0)^(a1-1).
    const GaussJacobiRule rule = gauss_jacobi(n, alpha[1] - 1.0, alpha[0] - 1.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double y0 = rule.nodes[i];
      const double y[3] = {y0, 1.0 - y0, 0.0};
      acc += rule.weights[i] * f.eval(y);
    }
    return acc / std::exp(log_beta(alpha[0], alpha[1]));
  }
  // k == 3: substitute y1 = (1-y0) u, y2 = (1-y0)(1-u); the Jacobian and
  // density factorise into two one-dimensional Jacobi weights:
  //   y0^(a0-1) (1-y0)^(a1+a2-1)  and  u^(a1-1) (1-u)^(a2-1).
  const GaussJacobiRule outer = gauss_jacobi(n, alpha[1] + alpha[2] - 1.0, alpha[0] - 1.0);
  const GaussJacobiRule inner = gauss_jacobi(n, alpha[2] - 1.0, alpha[1] - 1.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
    const double y0 = outer.nodes[i];
    double row = 0.0;
    for (std::size_t j = 0; j < inner.nodes.size(); ++j) {
      const double u = inner.nodes[j];
      const double y[3] = {y0, (1.0 - y0) * u, (1.0 - y0) * (1.0 - u)};
      row += inner.weights[j] * f.eval(y);
    }
    acc += outer.weights[i] * row;
  }
  const double logNorm = log_beta(alpha[0], alpha[1] + alpha[2]) + log_beta(alpha[1], alpha[2]);
  return acc / std::exp(logNorm);
}

}  // namespace

double simplex_quadrature_oracle(const std::vector<double>& alpha,
                                 const SimplexPolynomial& integrand, int gridResolution) {
  const std::size_t k = alpha.size();
  if (k < 2 || k > 3) {
    throw std::invalid_argument("simplex_quadrature_oracle: dimension must be 2 or 3");
  }
  if (static_cast<int>(k) != integrand.k()) {
    throw std::invalid_argument("simplex_quadrature_oracle: integrand dimension mismatch");
  }
  for (double a : alpha) {
    if (!(a >= 0.5)) {
      throw std::invalid_argument("simplex_quadrature_oracle: parameters must be >= 1/2");
    }
  }
  if (gridResolution < 4) {
    throw std::invalid_argument("simplex_quadrature_oracle: gridResolution too small");
  }

  // Start past the degree needed for exactness, then demand agreement of two
  // consecutive doublings anyway.
  int n = std::max(8, integrand.degree() / 2 + 2);
  double prev = tensor_pass(alpha, integrand, n);
  while (2 * n <= gridResolution) {
    n *= 2;
    const double cur = tensor_pass(alpha, integrand, n);
    if (std::abs(cur - prev) <= 1e-8 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw std::runtime_error("simplex_quadrature_oracle: refinement did not converge");
}

}  // namespace randmeas
