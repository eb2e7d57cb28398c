#ifndef BOTTLE_QUADRATURE_HPP
#define BOTTLE_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace bottle::quad {

struct Rule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre rule of order n, nodes by Newton iteration on P_n.
// Rules are cached per order; thread-safe.
const Rule& gauss_legendre(int n);

// Fixed-order panel estimate of the integral of f over [a, b].
double panel(const std::function<double(double)>& f, double a, double b, int order);

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;       // floor for near-zero integrals
    int max_depth = 52;
};

// Adaptive bisection with an embedded low/high order pair per panel.
// Throws NumericalError when max_depth is exhausted before the local
// tolerance is met.  Panels never evaluate f at the interval endpoints.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});

} // namespace bottle::quad

#endif
