#pragma once

#include <array>
#include <vector>

namespace randmeas {

// A sparse polynomial on the simplex in up to 3 coordinates, kept as a
// monomial list.  Used as the integrand format for the quadrature oracle.
class SimplexPolynomial {
 public:
  struct Monomial {
    double coeff;
    std::array<int, 3> exps;  // exponents of y_0, y_1, y_2 (unused trail = 0)
  };

  SimplexPolynomial(int k, std::vector<Monomial> terms);

  static SimplexPolynomial constant(int k, double c);
  static SimplexPolynomial linear_form(const std::vector<double>& s);  // <s, y>

  SimplexPolynomial operator+(const SimplexPolynomial& other) const;
  SimplexPolynomial operator*(const SimplexPolynomial& other) const;
  SimplexPolynomial pow(int n) const;

  int k() const { return k_; }
  int degree() const;
  double eval(const double* y) const;
  const std::vector<Monomial>& terms() const { return terms_; }

 private:
  int k_;
  std::vector<Monomial> terms_;
};

// Nodes/weights for integrals over [0,1] against y^b (1-y)^a dy (a, b > -1).
// Exact for polynomials up to degree 2n-1.
struct GaussJacobiRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussJacobiRule gauss_jacobi(int n, double a, double b);

// Normalised Dirichlet expectation of a polynomial integrand by tensorised
// Gauss-Jacobi quadrature over the simplex, for k = alpha.size() in {2,3}
// and alpha_i >= 1/2.  The rule is refined (node count doubled) until two
// consecutive refinements agree within 1e-8; node counts are capped at
// gridResolution per axis and non-convergence raises an error.
double simplex_quadrature_oracle(const std::vector<double>& alpha,
                                 const SimplexPolynomial& integrand, int gridResolution = 256);

}  // namespace randmeas
