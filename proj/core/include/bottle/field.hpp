#ifndef BOTTLE_FIELD_HPP
#define BOTTLE_FIELD_HPP

#include <span>
#include <vector>

namespace bottle {

/* Radial profile b0(r): a constant or a polynomial (ascending coefficients)
 * that must be positive on [0, 1].  Extrema over [0, 1] are computed by
 * root isolation of the derivative, not by sampling.
 */
class RadialProfile {
public:
    static RadialProfile constant(double value);
    static RadialProfile polynomial(std::vector<double> coeffs);

    double operator()(double r) const;
    const std::vector<double>& coeffs() const { return coeffs_; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    double min_on_unit_interval() const;
    double max_on_unit_interval() const;

private:
    explicit RadialProfile(std::vector<double> c) : coeffs_(std::move(c)) {}
    std::vector<double> coeffs_;
};

/* Cached flux values A(r_i) on a graded node set with cubic Hermite
 * interpolation (exact slopes A'(r_i) = b(r_i) r_i, so the interpolant is
 * monotone wherever the data is), plus the squared-amplitude integral
 *
 *   I = int_0^1 (A(r)/r)^2 r dr.
 *
 * Nodes start Chebyshev-distributed on [0, r_cap] and are refined until the
 * midpoint interpolation error estimate is below 1e-9 (relative above 1).
 */
class FluxTable {
public:
    double operator()(double r) const;        // r in [0, max_node()]
    double integral() const { return integral_; }
    double max_node() const { return nodes_.empty() ? 0.0 : nodes_.back(); }
    int size() const { return static_cast<int>(nodes_.size()); }
    static constexpr int interpolation_order = 3;
    std::span<const double> nodes() const { return nodes_; }

private:
    friend class RadialField;
    std::vector<double> nodes_, values_, slopes_;
    double integral_ = 0.0;
};

/* A radial magnetic field b(r) = b0(r) * (1-r)^(-beta) on the unit disk.
 *
 * Admissible fields require 0 <= beta < 3/2, b0 <= m on [0,1] and
 * inf b = k_min > 0.  The flux A(r) = int_0^r b(t) t dt is evaluated in
 * closed form for the whole catalog.
 */
class RadialField {
public:
    static RadialField make(const RadialProfile& b0, double m, double beta);
    // b == 0 everywhere; inadmissible, used only to calibrate the spectral
    // solvers against the plain Dirichlet disk.
    static RadialField zero();

    bool admissible() const { return admissible_; }
    double k_min() const { return k_min_; }
    double scale_m() const { return m_; }
    double beta() const { return beta_; }

    double b(double r) const;              // r in [0, 1)
    double flux(double r) const;           // A(r)
    double amplitude(double r) const;      // A(r)/r, 0 at r = 0
    double flux_interpolated(double r) const;
    double flux_norm() const { return table_.integral(); }   // I
    const FluxTable& flux_table() const { return table_; }
    const RadialProfile& profile() const { return profile_; }

private:
    RadialField(RadialProfile p, double m, double beta, bool admissible);
    double flux_closed_form(double r) const;
    double flux_from_gap(double u) const;     // A(1-u) in terms of u = 1-r
    void compute_flux_coefficients();
    void build_table();
    double compute_flux_norm() const;
    double flux_norm_tail(double u_cut) const;

    RadialProfile profile_;
    double m_;
    double beta_;
    double k_min_ = 0.0;
    bool admissible_ = false;
    std::vector<double> flux_coeff_;   // t*b0(t) expanded in powers of (1-t)
    FluxTable table_;
};

/* Bounded non-negative radial potential from the same catalog
 * (zero / constant / polynomial on [0, 1]).
 */
class RadialPotential {
public:
    static RadialPotential zero();
    static RadialPotential constant(double value);
    static RadialPotential polynomial(std::vector<double> coeffs);

    double operator()(double r) const;
    double sup() const { return sup_; }            // max over [0, 1]
    double l1_norm() const { return l1_; }         // int_0^1 V(r) r dr
    bool is_zero() const;
    const std::vector<double>& coeffs() const { return coeffs_; }

private:
    explicit RadialPotential(std::vector<double> c);
    std::vector<double> coeffs_;
    double sup_ = 0.0;
    double l1_ = 0.0;
};

} // namespace bottle

#endif
