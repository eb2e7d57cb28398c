#ifndef BOTTLE_GREEN_HPP
#define BOTTLE_GREEN_HPP

#include "bottle/field.hpp"

namespace bottle::green {

/* Diagonal of the resolvent kernel of T0 u = -u'' - u/(4 r^2) on (0, 1)
 * with Dirichlet ends, shifted by k^2:
 *
 *   G(r, r, k^2) = r I0(kr) [ K0(kr) - I0(kr) K0(k) / I0(k) ]
 *
 * together with the closed-form majorant r (1 + |log(kr)|).
 */
struct GreenSample {
    double r = 0.0;
    double k = 0.0;
    double value = 0.0;
    double bound = 0.0;
};

GreenSample green_diag(double r, double k);

// int_0^1 G(r, r, k^2) V(r) dr by adaptive quadrature.
double birman_schwinger_integral(const RadialPotential& v, double k);

// I0(r) K0(r) / (1 - log r) on (0, 1]; in (0, 1] with limit 1 at r -> 0+.
double propjp_ratio(double r);

} // namespace bottle::green

#endif
