#ifndef BOTTLE_BOUNDS_HPP
#define BOTTLE_BOUNDS_HPP

#include "bottle/field.hpp"
#include "bottle/line_potential.hpp"

namespace bottle::bounds {

/* Eigenvalue-counting upper bound for the threshold lambda, split into its
 * three closed-form terms
 *
 *   total = c_K lambda + lambda / (2 sqrt(1-alpha)) + (sqrt(1-alpha)/alpha) I
 *
 * with I the squared-amplitude integral of the field.
 */
struct BoundReport {
    double lambda = 0.0;
    double alpha = 0.0;
    double term_ck = 0.0;
    double term_kinetic = 0.0;
    double term_flux = 0.0;
    double total = 0.0;
};

// gamma_k = int_0^1 (1 + |log(k r)|) r dr, piecewise closed form.
double gamma_k(double k);

// c_K = 2 gamma_sqrt(K): (3 - log K)/2 for K <= 1, (1 + log K)/2 + 1/K above.
double c_k(double k_min);

// Upper bound on the number of negative eigenvalues of the perturbed
// operator: (1-alpha)^(-1/2) int [(1/alpha - 1) A^2/r^2 + V] r dr
//           + 2 int (1 + |log(r sqrt K)|) V r dr.
double bound_negative_count(const RadialField& field, const RadialPotential& v,
                            double alpha);

BoundReport bound_counting(const RadialField& field, double lambda, double alpha);

// Minimizer of g(alpha) = lambda/(2 sqrt(1-alpha)) + I sqrt(1-alpha)/alpha
// over (0,1): the positive solution of alpha^2 (lambda - 2I) + 6 alpha I - 4I = 0,
// evaluated in the form 4I / (3I + sqrt(I^2 + 4 I lambda)) which is regular
// through lambda = 2I (value 2/3 there).
double optimal_alpha(double lambda, double flux_norm_i);

// Large-lambda form of the counting bound: (1/2 + c_K) lambda + sqrt(lambda I).
double asymptotic_bound(double lambda, double flux_norm_i, double k_min);

// Right-hand side of the line inequality sum sqrt(nu_k) <= (1/2) int W.
double hlt_rhs(const LinePotential& w);

} // namespace bottle::bounds

#endif
