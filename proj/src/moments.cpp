#include "randmeas/moments.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace randmeas {

Rational hadamard_power_dot(const std::vector<Rational>& s, const std::vector<Rational>& alpha,
                            int n) {
  if (s.size() != alpha.size()) {
    throw std::invalid_argument("hadamard_power_dot: size mismatch");
  }
  if (n < 0) throw std::invalid_argument("hadamard_power_dot: negative power");
  Rational out = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational p = 1;
    for (int j = 0; j < n; ++j) p *= s[i];
    out += p * alpha[i];
  }
  return out;
}

PowerSums power_sums(const std::vector<Rational>& s, const std::vector<Rational>& alpha, int n) {
  if (s.size() != alpha.size()) throw std::invalid_argument("power_sums: size mismatch");
  PowerSums out;
  out.values.reserve(static_cast<std::size_t>(n));
  std::vector<Rational> pow(s.size(), Rational(1));
  for (int j = 1; j <= n; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      pow[i] *= s[i];
      acc += pow[i] * alpha[i];
    }
    out.values.push_back(std::move(acc));
  }
  return out;
}

Rational cycle_index(int n, const PowerSums& p) {
  if (n < 0) throw std::invalid_argument("cycle_index: negative order");
  if (static_cast<int>(p.values.size()) < n) {
    throw std::invalid_argument("cycle_index: need power sums up to order n");
  }
  std::vector<Rational> z(static_cast<std::size_t>(n) + 1);
  z[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int i = 0; i < m; ++i) acc += z[static_cast<std::size_t>(i)] * p.values[static_cast<std::size_t>(m - i - 1)];
    z[static_cast<std::size_t>(m)] = acc / m;
  }
  return z[static_cast<std::size_t>(n)];
}

Rational dirichlet_moment(const std::vector<Rational>& alpha, const std::vector<Rational>& s,
                          int n) {
  if (alpha.size() != s.size() || alpha.empty()) {
    throw std::invalid_argument("dirichlet_moment: size mismatch");
  }
  if (n < 0) throw std::invalid_argument("dirichlet_moment: negative order");
  Rational beta = 0;
  for (const Rational& a : alpha) {
    if (a <= 0) throw std::invalid_argument("dirichlet_moment: parameters must be positive");
    beta += a;
  }
  std::vector<Rational> M(static_cast<std::size_t>(n) + 1);
  M[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int i = 0; i < m; ++i) {
      const Rational coef = falling_factorial(Rational(m - 1), m - 1 - i) /
                            falling_factorial(beta + (m - 1), m - i);
      acc += coef * M[static_cast<std::size_t>(i)] * hadamard_power_dot(s, alpha, m - i);
    }
    M[static_cast<std::size_t>(m)] = acc;
  }
  return M[static_cast<std::size_t>(n)];
}

Rational dirichlet_moment_multilinear(const std::vector<Rational>& alpha,
                                      const std::vector<std::vector<Rational>>& sList) {
  const int n = static_cast<int>(sList.size());
  if (n == 0) return Rational(1);
  if (n > 10) {
    throw std::invalid_argument("dirichlet_moment_multilinear: more than 10 factors");
  }
  Rational total = 0;
  for (const Rational& a : alpha) {
    if (a <= 0) throw std::invalid_argument("dirichlet_moment_multilinear: parameters must be positive");
    total += a;
  }
  if (total != 1) {
    throw std::invalid_argument("dirichlet_moment_multilinear: parameter vector must sum to 1");
  }
  for (const auto& s : sList) {
    if (s.size() != alpha.size()) {
      throw std::invalid_argument("dirichlet_moment_multilinear: size mismatch");
    }
  }

  const std::uint32_t full = (1u << n) - 1u;
  // h[mask] = (componentwise product of s^(j), j in mask) . alpha
  std::vector<std::vector<Rational>> prodvec(full + 1);
  std::vector<Rational> h(full + 1);
  prodvec[0].assign(alpha.size(), Rational(1));
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1u);
    const int j = std::countr_zero(low);
    const auto& base = prodvec[mask ^ low];
    auto& cur = prodvec[mask];
    cur.resize(alpha.size());
    Rational acc = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      cur[i] = base[i] * sList[static_cast<std::size_t>(j)][i];
      acc += cur[i] * alpha[i];
    }
    h[mask] = std::move(acc);
  }

  // M[mask] = E[ prod_{j in mask} <s^(j), y> ], filled in increasing mask
  // order (every proper submask is numerically smaller).
  std::vector<Rational> M(full + 1);
  M[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int sz = std::popcount(mask);
    Rational acc = 0;
    std::uint32_t sub = (mask - 1) & mask;
    for (;;) {
      acc += M[sub] * h[mask ^ sub] / binomial_rational(sz, std::popcount(sub));
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
    M[mask] = acc / sz;
  }
  return M[full];
}

Rational poisson_multilinear_moment(const std::vector<Rational>& cellMasses,
                                    const std::vector<std::vector<Rational>>& sList) {
  const int n = static_cast<int>(sList.size());
  if (n == 0) return Rational(1);
  if (n > 10) {
    throw std::invalid_argument("poisson_multilinear_moment: more than 10 factors");
  }
  for (const auto& s : sList) {
    if (s.size() != cellMasses.size()) {
      throw std::invalid_argument("poisson_multilinear_moment: size mismatch");
    }
  }
  const std::uint32_t full = (1u << n) - 1u;
  // kappa[mask]: joint cumulant of the linear statistics indexed by mask.
  std::vector<std::vector<Rational>> prodvec(full + 1);
  std::vector<Rational> kappa(full + 1);
  prodvec[0].assign(cellMasses.size(), Rational(1));
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1u);
    const int j = std::countr_zero(low);
    const auto& base = prodvec[mask ^ low];
    auto& cur = prodvec[mask];
    cur.resize(cellMasses.size());
    Rational acc = 0;
    for (std::size_t i = 0; i < cellMasses.size(); ++i) {
      cur[i] = base[i] * sList[static_cast<std::size_t>(j)][i];
      acc += cur[i] * cellMasses[i];
    }
    kappa[mask] = std::move(acc);
  }

  std::vector<Rational> M(full + 1);
  M[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t anchor = mask & (~mask + 1u);
    const std::uint32_t rest = mask ^ anchor;
    Rational acc = 0;
    // T = anchor | sub, over all submasks sub of rest (including empty).
    std::uint32_t sub = rest;
    for (;;) {
      const std::uint32_t T = anchor | sub;
      acc += kappa[T] * M[mask ^ T];
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    M[mask] = acc;
  }
  return M[full];
}

namespace {

std::vector<Rational> rational_vector(const std::vector<double>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (double x : v) out.push_back(rational_from_double(x));
  return out;
}

}  // namespace

Rational df_moment(const IntensityMeasure& sigma, const Partition& part,
                   const std::vector<std::vector<double>>& stepValues) {
  if (stepValues.empty()) return Rational(1);
  std::vector<Rational> alpha = rational_vector(sigma.cell_masses(part));
  bool allEqual = true;
  for (const auto& g : stepValues) {
    if (g != stepValues.front()) {
      allEqual = false;
      break;
    }
  }
  if (allEqual) {
    return dirichlet_moment(alpha, rational_vector(stepValues.front()),
                            static_cast<int>(stepValues.size()));
  }
  // Distinct factors: the subset recursion needs a parameter vector of total
  // mass exactly 1.  Cell masses summing to 1 within 1e-9 are renormalised
  // (they are derived from floating-point integrals of the density).
  Rational total = 0;
  for (const Rational& a : alpha) total += a;
  if (total != 1) {
    const double gap = std::abs(to_double(total) - 1.0);
    if (gap > 1e-9) {
      throw std::invalid_argument(
          "df_moment: distinct step functions require intensity of total mass 1");
    }
    for (Rational& a : alpha) a /= total;
  }
  std::vector<std::vector<Rational>> sList;
  sList.reserve(stepValues.size());
  for (const auto& g : stepValues) sList.push_back(rational_vector(g));
  return dirichlet_moment_multilinear(alpha, sList);
}

std::optional<Rational> pairing_polynomial_moment(const std::vector<Rational>& alpha,
                                                  const std::vector<std::vector<Rational>>& gs,
                                                  const PairingPolynomial& poly) {
  return pairing_polynomial_moment_weighted(alpha, gs, poly,
                                            [](int) { return Rational(1); });
}

std::optional<Rational> pairing_polynomial_moment_weighted(
    const std::vector<Rational>& alpha, const std::vector<std::vector<Rational>>& gs,
    const PairingPolynomial& poly, const std::function<Rational(int)>& degreeWeight) {
  if (poly.usesMass) return std::nullopt;
  Rational total = 0;
  for (const Rational& a : alpha) total += a;

  Rational acc = 0;
  for (const PairingPolynomial::Term& term : poly.terms) {
    int degree = 0;
    int distinct = 0;
    std::size_t theG = 0;
    for (std::size_t j = 0; j < term.pairingExps.size(); ++j) {
      if (term.pairingExps[j] > 0) {
        ++distinct;
        theG = j;
        degree += term.pairingExps[j];
      }
    }
    Rational termValue;
    if (degree == 0) {
      termValue = 1;
    } else if (distinct == 1) {
      termValue = dirichlet_moment(alpha, gs[theG], degree);
    } else if (total == 1 && degree <= 10) {
      std::vector<std::vector<Rational>> sList;
      for (std::size_t j = 0; j < term.pairingExps.size(); ++j) {
        for (int e = 0; e < term.pairingExps[j]; ++e) sList.push_back(gs[j]);
      }
      termValue = dirichlet_moment_multilinear(alpha, sList);
    } else {
      return std::nullopt;
    }
    acc += rational_from_double(term.coeff) * degreeWeight(degree) * termValue;
  }
  return acc;
}

}  // namespace randmeas
