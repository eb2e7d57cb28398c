#ifndef BOTTLE_SPECFUN_HPP
#define BOTTLE_SPECFUN_HPP

#include <array>

namespace bottle::specfun {

// Mathematical constants, 16+ significant digits.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double zeta3       = 1.20205690315959428539973816151144999;
inline constexpr double ln2         = 0.69314718055994530941723212145817657;

/* Modified Bessel functions of order 0 and 1.
 *
 * I0, I1 are evaluated by their power series (all terms positive, stable
 * for every argument in range).  K0, K1 use the logarithmic power series
 * for x <= 4 and Steed's continued fraction for x > 4; the two branches
 * agree to ~1e-12 on the overlap window.
 */
double bessel_i0(double x);        // x >= 0
double bessel_i1(double x);        // x >= 0
double bessel_k0(double x);        // x > 0
double bessel_k1(double x);        // x > 0

// Derivatives: I0' = I1, K0' = -K1.  They satisfy the Wronskian identity
// x * (I0'(x) K0(x) - I0(x) K0'(x)) = 1.
double bessel_i0_prime(double x);  // x >= 0
double bessel_k0_prime(double x);  // x > 0

/* The defect delta(r) = I0(r) K0(r) + log r on (0, 1], evaluated by its
 * own series
 *
 *   delta(r) = (1 - I0^2) log r + (log 2 - gamma) I0^2
 *            + I0 * sum_{k>=1} H_k (r^2/4)^k / k!^2
 *
 * (H_k the k-th harmonic number).  All three summands are non-negative
 * on (0, 1] and delta(r) <= 1 there.
 */
double i0k0_log_defect(double r);
std::array<double, 3> i0k0_log_defect_parts(double r);

namespace detail {
// Individual evaluation branches, exposed for overlap validation.
double k0_series(double x);   // x <= ~6
double k1_series(double x);
void   k0_k1_steed(double x, double& k0, double& k1);   // x >= 2
}

} // namespace bottle::specfun

#endif
