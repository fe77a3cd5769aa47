#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "randmeas/moments.hpp"
#include "randmeas/quadrature.hpp"

using namespace randmeas;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const Rational& r : v) out.push_back(to_double(r));
  return out;
}

}  // namespace

TEST_CASE("hadamard power dot") {
  std::vector<Rational> s = {R(3), R(1, 2)};
  std::vector<Rational> alpha = {R(1, 4), R(3, 4)};
  CHECK(hadamard_power_dot(s, alpha, 0) == R(1));
  CHECK(hadamard_power_dot(s, alpha, 1) == R(3) / 4 + R(3) / 8);
  CHECK(hadamard_power_dot(s, alpha, 2) == R(9) / 4 + R(3) / 16);
}

TEST_CASE("dirichlet moment recurrence on pinned values") {
  // Beta(1,2): E y = 1/3
  CHECK(dirichlet_moment({R(1), R(2)}, {R(1), R(0)}, 1) == R(1, 3));
  // Dirichlet(2,3): E y_0 = 2/5, E y_0^2 = 1/5
  CHECK(dirichlet_moment({R(2), R(3)}, {R(1), R(0)}, 1) == R(2, 5));
  CHECK(dirichlet_moment({R(2), R(3)}, {R(1), R(0)}, 2) == R(1, 5));
  // arcsine marginal: E y^n = 1/2, 3/8, 5/16, 35/128
  std::vector<Rational> half = {R(1, 2), R(1, 2)};
  std::vector<Rational> ind = {R(1), R(0)};
  CHECK(dirichlet_moment(half, ind, 1) == R(1, 2));
  CHECK(dirichlet_moment(half, ind, 2) == R(3, 8));
  CHECK(dirichlet_moment(half, ind, 3) == R(5, 16));
  CHECK(dirichlet_moment(half, ind, 4) == R(35, 128));
  // constant test function: <c, y> = c
  CHECK(dirichlet_moment({R(2), R(5)}, {R(3), R(3)}, 4) == R(81));
  // order zero is one
  CHECK(dirichlet_moment({R(2), R(5)}, {R(7), R(-1)}, 0) == R(1));
}

TEST_CASE("cycle index equals the moment recurrence at unit mass") {
  SUBCASE("hand-checked small case") {
    PowerSums p = power_sums({R(1), R(0)}, {R(1, 2), R(1, 2)}, 3);
    CHECK(p.values[0] == R(1, 2));
    CHECK(cycle_index(1, p) == R(1, 2));
    CHECK(cycle_index(2, p) == R(3, 8));
    CHECK(cycle_index(3, p) == R(5, 16));
  }

  SUBCASE("randomised agreement, exact arithmetic") {
    std::mt19937 gen(12345);
    std::uniform_int_distribution<int> num(-4, 6), den(1, 4), kDist(2, 4);
    for (int rep = 0; rep < 50; ++rep) {
      int k = kDist(gen);
      // random positive alpha summing to one: draw positives, divide by sum
      std::vector<Rational> w, alpha, s;
      Rational tot = 0;
      for (int i = 0; i < k; ++i) {
        Rational wi = R(std::abs(num(gen)) + 1, den(gen));
        w.push_back(wi);
        tot += wi;
      }
      for (int i = 0; i < k; ++i) alpha.push_back(w[i] / tot);
      for (int i = 0; i < k; ++i) s.push_back(R(num(gen), den(gen)));
      PowerSums p = power_sums(s, alpha, 8);
      for (int n = 0; n <= 8; ++n) {
        CHECK(cycle_index(n, p) == dirichlet_moment(alpha, s, n));
      }
    }
  }
}

TEST_CASE("multilinear dirichlet moments") {
  std::vector<Rational> half = {R(1, 2), R(1, 2)};
  std::vector<Rational> e0 = {R(1), R(0)}, e1 = {R(0), R(1)};

  CHECK(dirichlet_moment_multilinear(half, {e0, e1}) == R(1, 8));
  CHECK(dirichlet_moment_multilinear(half, {e1, e0}) == R(1, 8));  // symmetric
  // repeated factors reproduce the univariate recurrence
  CHECK(dirichlet_moment_multilinear(half, {e0, e0}) == R(3, 8));
  CHECK(dirichlet_moment_multilinear(half, {e0, e0, e0}) == R(5, 16));

  // Dirichlet(1/3,1/3,1/3): E y_0 y_1 = (1/3)(1/3) / (1 * 2) = 1/18
  std::vector<Rational> thirds = {R(1, 3), R(1, 3), R(1, 3)};
  CHECK(dirichlet_moment_multilinear(thirds, {{R(1), R(0), R(0)}, {R(0), R(1), R(0)}}) ==
        R(1, 18));

  // total mass must be exactly one
  CHECK_THROWS_AS(dirichlet_moment_multilinear({R(1), R(1)}, {e0, e1}), std::invalid_argument);
  // empty product is one
  CHECK(dirichlet_moment_multilinear(half, {}) == R(1));
}

TEST_CASE("poisson joint moments") {
  std::vector<Rational> cells2 = {R(1), R(2)};
  std::vector<Rational> total = {R(1), R(1)};
  std::vector<Rational> a = {R(1), R(0)}, b = {R(0), R(1)};

  // E gamma(X) = beta, E gamma(X)^2 = beta + beta^2 with beta = 3
  CHECK(poisson_multilinear_moment(cells2, {total}) == R(3));
  CHECK(poisson_multilinear_moment(cells2, {total, total}) == R(12));
  // independent cells factorise
  CHECK(poisson_multilinear_moment(cells2, {a, b}) == R(2));
  CHECK(poisson_multilinear_moment(cells2, {a, a, b}) == R(4));  // E gamma(A)^2 = 2
  // empty product
  CHECK(poisson_multilinear_moment(cells2, {}) == R(1));
}

TEST_CASE("random probability measure pairing moments") {
  IntensityMeasure sigma = IntensityMeasure::uniform(1.0);
  Partition part({0.0, 0.5, 1.0});

  SUBCASE("single test function, any intensity mass") {
    // g = 1 on [0,1/2): moments of an arcsine coordinate
    CHECK(df_moment(sigma, part, {{1.0, 0.0}, {1.0, 0.0}}) == R(3, 8));
    CHECK(df_moment(sigma, part, {{1.0, 0.0}}) == R(1, 2));
    IntensityMeasure heavy = IntensityMeasure::uniform(3.0);
    // first moment is always the normalised cell mass
    CHECK(df_moment(heavy, part, {{1.0, 0.0}}) == R(1, 2));
    CHECK(df_moment(heavy, part, {{1.0, 0.0}, {1.0, 0.0}}) == R(3, 8) * R(1, 2) + R(1, 4) * R(1, 2));
  }

  SUBCASE("distinct test functions need unit intensity mass") {
    CHECK(df_moment(sigma, part, {{1.0, 0.0}, {0.0, 1.0}}) == R(1, 8));
    IntensityMeasure heavy = IntensityMeasure::uniform(2.0);
    CHECK_THROWS_AS(df_moment(heavy, part, {{1.0, 0.0}, {0.0, 1.0}}), std::invalid_argument);
  }

  SUBCASE("constant functions give their product") {
    CHECK(df_moment(sigma, part, {{2.0, 2.0}, {0.5, 0.5}}) == R(1));
  }
}

TEST_CASE("gauss-jacobi rules") {
  SUBCASE("legendre flavour integrates monomials") {
    GaussJacobiRule rule = gauss_jacobi(4, 0.0, 0.0);
    double sum = 0.0, cube = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i];
      cube += rule.weights[i] * std::pow(rule.nodes[i], 3);
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(cube == doctest::Approx(0.25).epsilon(1e-13));
  }

  SUBCASE("weight normalisation carries the beta function") {
    GaussJacobiRule rule = gauss_jacobi(3, 0.5, -0.5);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    // integral of y^(-1/2) (1-y)^(1/2) over [0,1] = B(1/2, 3/2) = pi/2
    CHECK(sum == doctest::Approx(std::acos(-1.0) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("simplex quadrature oracle") {
  SUBCASE("pinned values in two and three dimensions") {
    SimplexPolynomial y0sq = SimplexPolynomial::linear_form({1.0, 0.0}).pow(2);
    CHECK(simplex_quadrature_oracle({2.0, 3.0}, y0sq) == doctest::Approx(0.2).epsilon(1e-12));

    SimplexPolynomial y0y1 = SimplexPolynomial::linear_form({1.0, 0.0, 0.0}) *
                             SimplexPolynomial::linear_form({0.0, 1.0, 0.0});
    CHECK(simplex_quadrature_oracle({1.0, 1.0, 1.0}, y0y1) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-10));
  }

  SUBCASE("domain limits") {
    SimplexPolynomial c = SimplexPolynomial::constant(2, 1.0);
    CHECK_THROWS_AS(simplex_quadrature_oracle({1.0}, SimplexPolynomial::constant(1, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(simplex_quadrature_oracle({0.3, 1.0}, c), std::invalid_argument);
  }

  SUBCASE("randomised agreement with the exact recurrence") {
    std::mt19937 gen(777);
    std::uniform_int_distribution<int> halves(1, 5), sval(-2, 3), kDist(2, 3);
    for (int rep = 0; rep < 12; ++rep) {
      int k = kDist(gen);
      std::vector<Rational> alpha, s;
      for (int i = 0; i < k; ++i) alpha.push_back(R(halves(gen), 2));
      for (int i = 0; i < k; ++i) s.push_back(R(sval(gen)));
      SimplexPolynomial form = SimplexPolynomial::linear_form(to_doubles(s));
      for (int n = 0; n <= 4; ++n) {
        double exact = to_double(dirichlet_moment(alpha, s, n));
        double oracle = simplex_quadrature_oracle(to_doubles(alpha), form.pow(n));
        INFO("rep ", rep, " n ", n, " exact ", exact, " oracle ", oracle);
        CHECK(std::abs(exact - oracle) <= 1e-6 * std::max(1.0, std::abs(exact)));
      }
    }
  }
}

TEST_CASE("polynomial pairing moments") {
  std::vector<Rational> alpha = {R(1, 4), R(3, 8), R(3, 8)};
  std::vector<std::vector<Rational>> gs = {{R(1), R(1, 2), R(1, 4)}, {R(3, 4), R(1, 4), R(1)}};

  SUBCASE("sum of monomials matches manual assembly") {
    // <g0>^2 + 1/2 <g1>
    PairingPolynomial poly;
    poly.usesMass = false;
    poly.maxPairingDegree = 2;
    poly.terms.push_back({{2, 0}, 0, 1.0});
    poly.terms.push_back({{0, 1}, 0, 0.5});
    auto got = pairing_polynomial_moment(alpha, gs, poly);
    REQUIRE(got.has_value());
    Rational manual = dirichlet_moment(alpha, gs[0], 2) + R(1, 2) * dirichlet_moment(alpha, gs[1], 1);
    CHECK(*got == manual);
  }

  SUBCASE("mixed monomials use the multilinear route") {
    PairingPolynomial poly;
    poly.usesMass = false;
    poly.maxPairingDegree = 2;
    poly.terms.push_back({{1, 1}, 0, 1.0});
    auto got = pairing_polynomial_moment(alpha, gs, poly);
    REQUIRE(got.has_value());
    CHECK(*got == dirichlet_moment_multilinear(alpha, {gs[0], gs[1]}));
  }

  SUBCASE("degree weights recover gamma-measure moments") {
    // nu = r * eta with r ~ Gamma(beta, 1): E <1, nu>^d = beta^(d rising) since
    // the direction pairing is constant one.
    std::vector<Rational> cells = {R(1), R(1)};  // beta = 2
    std::vector<std::vector<Rational>> ones = {{R(1), R(1)}};
    PairingPolynomial poly;
    poly.usesMass = false;
    poly.maxPairingDegree = 2;
    poly.terms.push_back({{2}, 0, 1.0});
    Rational beta = R(2);
    auto got = pairing_polynomial_moment_weighted(
        cells, ones, poly, [&](int d) { return falling_factorial(beta + d - 1, d); });
    REQUIRE(got.has_value());
    CHECK(*got == R(6));  // E Gamma(2,1)^2 = 2 * 3
  }
}
