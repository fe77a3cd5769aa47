#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "randmeas/functional.hpp"
#include "randmeas/intensity.hpp"
#include "randmeas/partition.hpp"
#include "randmeas/rational.hpp"

namespace randmeas {

// sum_i s_i^n * alpha_i.  n = 0 gives the total mass of alpha.
Rational hadamard_power_dot(const std::vector<Rational>& s, const std::vector<Rational>& alpha,
                            int n);

// Power sums p_1..p_n of s against the weights alpha.
struct PowerSums {
  std::vector<Rational> values;  // values[j-1] = sum_i s_i^j alpha_i
};
PowerSums power_sums(const std::vector<Rational>& s, const std::vector<Rational>& alpha, int n);

// Cycle index polynomial of the symmetric group on n letters, evaluated at
// the given power sums, via Z_n = (1/n) * sum_{i<n} Z_i p_{n-i}.
Rational cycle_index(int n, const PowerSums& p);

// n-th moment of <s, y> under the Dirichlet law with parameter alpha on the
// simplex, by the falling-factorial recurrence
//   M_m = sum_{i<m} [ (m-1)_(m-1-i) / (|alpha|+m-1)_(m-i) ] * M_i * (s^{m-i} . alpha).
Rational dirichlet_moment(const std::vector<Rational>& alpha, const std::vector<Rational>& s,
                          int n);

// E[ prod_j <s^{(j)}, y> ] under Dirichlet(alpha) with |alpha| = 1 (exactly),
// by recursion over subsets; at most 10 factors.
Rational dirichlet_moment_multilinear(const std::vector<Rational>& alpha,
                                      const std::vector<std::vector<Rational>>& sList);

// E[ prod_j <g_j, eta> ] for the random probability measure with intensity
// sigma, where all g_j live on the same interval partition.  Identical g_j
// use the single-function recurrence (any total mass); distinct g_j fall
// back to the multilinear recursion, which needs total mass 1.
Rational df_moment(const IntensityMeasure& sigma, const Partition& part,
                   const std::vector<std::vector<double>>& stepValues);

// E[ prod_j <s^{(j)}, gamma> ] for a Poisson random measure whose cell
// intensities are cellMasses, via the joint moment-cumulant recurrence
//   M(S) = sum_{T containing the first element of S} kappa(T) M(S \ T),
// where kappa(T) = <prod_{j in T} s^{(j)}, cellMasses>.  At most 10 factors.
Rational poisson_multilinear_moment(const std::vector<Rational>& cellMasses,
                                    const std::vector<std::vector<Rational>>& sList);

// Closed form for E[poly(<g_0,y>,...)] under Dirichlet(alpha), when our
// recurrences cover every monomial (poly must not use the mass argument).
// alpha may have any positive total mass for single-function monomials;
// mixed monomials additionally need |alpha| = 1 and degree <= 10.
std::optional<Rational> pairing_polynomial_moment(const std::vector<Rational>& alpha,
                                                  const std::vector<std::vector<Rational>>& gs,
                                                  const PairingPolynomial& poly);

// Same, but each monomial of total degree d is scaled by degreeWeight(d).
// Used for laws that factor into (total mass) x (Dirichlet direction), where
// the mass contributes a moment factor depending only on the degree.
std::optional<Rational> pairing_polynomial_moment_weighted(
    const std::vector<Rational>& alpha, const std::vector<std::vector<Rational>>& gs,
    const PairingPolynomial& poly, const std::function<Rational(int)>& degreeWeight);

}  // namespace randmeas
