#ifndef BOTTLE_SPECTRAL_HPP
#define BOTTLE_SPECTRAL_HPP

#include "bottle/field.hpp"
#include "bottle/line_potential.hpp"

#include <cstdint>
#include <vector>

namespace bottle::spectral {

// Uniform interior grid r_i = i h, h = 1/(n+1); no node at r = 0 or r = 1.
struct RadialGrid {
    explicit RadialGrid(int interior_nodes) : n(interior_nodes)
    {
        if (n < 16) throw std::invalid_argument("RadialGrid: requires n >= 16");
    }
    int n;
    double spacing() const { return 1.0 / (n + 1); }
    double node(int i) const { return i * spacing(); }   // i = 1..n
};

/* Generalized symmetric tridiagonal pencil for one angular mode:
 * stiffness (diag, off) against the positive diagonal weight.
 */
struct ModeSystem {
    long long ell = 0;
    std::vector<double> diag;     // size n
    std::vector<double> off;      // size n-1
    std::vector<double> weight;   // size n, strictly positive
};

struct ModeCount {
    long long ell;
    int count;
};

struct SkippedMode {
    long long ell;
    double min_effective_potential;
};

struct CountReport {
    double lambda = 0.0;
    int total = 0;
    std::vector<ModeCount> per_mode;       // ascending ell
    long long ell_min = 0, ell_max = 0;    // computed range
    int grid_n = 0;
    char variable = 'r';                   // 'r' or 't'
    double t_min = 0.0;                    // 't' runs only
    std::vector<SkippedMode> skipped;      // truncation diagnostics
    double tie_shift = 0.0;                // downward shift taken on exact ties
};

struct CountOptions {
    enum class Variable { radial, log_radius };
    Variable variable = Variable::radial;
    double t_min = -14.0;
    int log_nodes = 0;      // 0: ceil(|t_min| * (n+1)) to match the radial spacing
};

/* Discretization of the mode-ell quadratic form
 *   int_0^1 [ |u'|^2 + ((ell - A(r))^2 / r^2 - V(r)) |u|^2 ] r dr
 * against int |u|^2 r dr.  Dirichlet at r = 1, natural at r = 0.
 */
ModeSystem build_mode_system(const RadialField& field, const RadialPotential& v,
                             long long ell, const RadialGrid& grid);

/* Same pencil after the substitution r = e^t on [t_min, 0]: flat-measure
 * stiffness with potential (ell - A(e^t))^2 - e^{2t} V(e^t) and weight
 * e^{2t} h.  Dirichlet at t = 0, natural at t_min.
 */
ModeSystem build_mode_system_log(const RadialField& field, const RadialPotential& v,
                                 long long ell, double t_min, int n_nodes);

// Number of generalized eigenvalues of the pencil strictly below lambda,
// by counting negative pivots of the shifted symmetric factorization.
// A zero pivot (lambda hits a discrete eigenvalue) retries with a relative
// 1e-13 downward shift; shift_out reports the total shift taken.
int count_negative_inertia(const ModeSystem& sys, double lambda);
int count_negative_inertia(const ModeSystem& sys, double lambda, double& shift_out);

// N(lambda) for the unperturbed operator: per-mode inertia counts summed
// over the angular modes selected by the truncation rule.
CountReport count_eigenvalues(const RadialField& field, double lambda,
                              const RadialGrid& grid, const CountOptions& opts = {});

// Number of negative eigenvalues of the operator perturbed by -V.
CountReport count_negative_with_potential(const RadialField& field,
                                          const RadialPotential& v,
                                          const RadialGrid& grid,
                                          const CountOptions& opts = {});

// Smallest generalized eigenvalue over modes |ell| <= 2, by inertia bisection.
double lowest_eigenvalue(const RadialField& field, const RadialGrid& grid);

// Dirichlet line grid on [-t_max, t_max] with n interior nodes.
struct LineGrid {
    double t_max = 12.0;
    int n = 6000;
};

// Magnitudes nu_k of the negative eigenvalues of -d^2/dt^2 - W on the line,
// largest first, by inertia bisection on the flat discretization.
std::vector<double> line_schrodinger_negatives(const LinePotential& w,
                                               const LineGrid& grid = {});

} // namespace bottle::spectral

#endif
