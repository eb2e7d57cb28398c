#include "bottle/field.hpp"
#include "bottle/error.hpp"
#include "bottle/quadrature.hpp"
#include "poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bottle {

namespace {

constexpr double kTableCap = 1.0 - 1e-9;   // last flux-table node
constexpr int kTableSeed = 4096;

void require_unit_radius(double r, bool allow_one, const char* fn)
{
    if (!std::isfinite(r) || r < 0.0)
        throw std::domain_error(std::string(fn) + ": requires r >= 0");
    if (r > 1.0 || (r == 1.0 && !allow_one))
        throw std::domain_error(std::string(fn) + ": requires r < 1");
}

} // namespace

// ---------------------------------------------------------------- profiles

RadialProfile RadialProfile::constant(double value)
{
    return RadialProfile(std::vector<double>{value});
}

RadialProfile RadialProfile::polynomial(std::vector<double> coeffs)
{
    while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(0.0);
    return RadialProfile(std::move(coeffs));
}

double RadialProfile::operator()(double r) const
{
    return poly::eval(coeffs_, r);
}

double RadialProfile::min_on_unit_interval() const
{
    return poly::min_on(coeffs_, 0.0, 1.0);
}

double RadialProfile::max_on_unit_interval() const
{
    return poly::max_on(coeffs_, 0.0, 1.0);
}

// -------------------------------------------------------------- flux table

double FluxTable::operator()(double r) const
{
    if (!(r >= nodes_.front() && r <= nodes_.back()))
        throw std::domain_error("FluxTable: query outside node range");
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
    std::size_t i = (it == nodes_.begin()) ? 0 : static_cast<std::size_t>(it - nodes_.begin()) - 1;
    if (i + 1 >= nodes_.size()) i = nodes_.size() - 2;
    const double h = nodes_[i + 1] - nodes_[i];
    const double t = (r - nodes_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return values_[i] * (2 * t3 - 3 * t2 + 1) + h * slopes_[i] * (t3 - 2 * t2 + t)
         + values_[i + 1] * (-2 * t3 + 3 * t2) + h * slopes_[i + 1] * (t3 - t2);
}

// ------------------------------------------------------------ radial field

RadialField::RadialField(RadialProfile p, double m, double beta, bool admissible)
    : profile_(std::move(p)), m_(m), beta_(beta), admissible_(admissible)
{
}

RadialField RadialField::make(const RadialProfile& b0, double m, double beta)
{
    if (!std::isfinite(m) || m <= 0.0)
        throw std::invalid_argument("RadialField: scale m must be positive");
    if (!std::isfinite(beta) || beta < 0.0)
        throw std::invalid_argument("RadialField: profile error, beta must be >= 0");
    if (beta >= 1.5)
        throw std::invalid_argument("RadialField: inadmissible, requires beta < 3/2");
    const double b0_min = b0.min_on_unit_interval();
    if (b0_min <= 0.0)
        throw std::invalid_argument("RadialField: violates (H1), inf b must be positive");
    if (b0.max_on_unit_interval() > m * (1.0 + 1e-12))
        throw std::invalid_argument("RadialField: profile exceeds its scale m");

    RadialField f(b0, m, beta, true);

    if (beta == 0.0) {
        f.k_min_ = b0_min;
    } else {
        // critical points of b = b0 (1-r)^(-beta):  b0'(r)(1-r) + beta b0(r) = 0
        const auto& c = b0.coeffs();
        auto dc = poly::derivative(c);
        std::vector<double> q(std::max(dc.size() + 1, c.size()), 0.0);
        for (std::size_t i = 0; i < dc.size(); ++i) {
            q[i] += dc[i];
            q[i + 1] -= dc[i];
        }
        for (std::size_t i = 0; i < c.size(); ++i)
            q[i] += beta * c[i];
        double best = b0(0.0);   // b(0) = b0(0); b -> +inf as r -> 1
        for (double r : poly::sign_change_roots(q, 0.0, 1.0))
            if (r < 1.0)
                best = std::min(best, f.b(r));
        f.k_min_ = best;
    }

    f.compute_flux_coefficients();
    f.build_table();
    return f;
}

RadialField RadialField::zero()
{
    RadialField f(RadialProfile::constant(0.0), 1.0, 0.0, false);
    f.k_min_ = 0.0;
    f.flux_coeff_.assign(1, 0.0);
    f.table_.nodes_ = {0.0, kTableCap};
    f.table_.values_ = {0.0, 0.0};
    f.table_.slopes_ = {0.0, 0.0};
    f.table_.integral_ = 0.0;
    return f;
}

double RadialField::b(double r) const
{
    require_unit_radius(r, beta_ == 0.0, "RadialField::b");
    const double base = profile_(r);
    return beta_ == 0.0 ? base : base * std::pow(1.0 - r, -beta_);
}

void RadialField::compute_flux_coefficients()
{
    // t*b0(t) = sum_i c_i t^(i+1), re-expanded in powers of w = 1-t:
    // d_m = sum_i c_i binom(i+1, m) (-1)^m
    const auto& c = profile_.coeffs();
    const std::size_t deg1 = c.size();           // highest power of t is deg1
    flux_coeff_.assign(deg1 + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        double binom = 1.0;                      // binom(i+1, 0)
        for (std::size_t m = 0; m <= i + 1; ++m) {
            flux_coeff_[m] += c[i] * binom * ((m % 2 == 0) ? 1.0 : -1.0);
            binom = binom * static_cast<double>(i + 1 - m) / static_cast<double>(m + 1);
        }
    }
}

namespace {

double flux_terms(const std::vector<double>& coeff, double beta, double log_gap)
{
    // A = sum_m d_m E_m,  E_m = (1 - (1-r)^(m+1-beta)) / (m+1-beta),
    // log branch when the exponent vanishes (beta = m+1)
    double a = 0.0;
    for (std::size_t m = 0; m < coeff.size(); ++m) {
        const double e = static_cast<double>(m) + 1.0 - beta;
        const double em = (e == 0.0) ? -log_gap : -std::expm1(e * log_gap) / e;
        a += coeff[m] * em;
    }
    return a;
}

} // namespace

double RadialField::flux_closed_form(double r) const
{
    return flux_terms(flux_coeff_, beta_, std::log1p(-r));
}

double RadialField::flux_from_gap(double u) const
{
    // evaluated from the boundary gap, usable far below the resolution of 1-u
    return flux_terms(flux_coeff_, beta_, std::log(u));
}

double RadialField::flux(double r) const
{
    require_unit_radius(r, beta_ < 1.0, "RadialField::flux");
    if (r == 0.0) return 0.0;
    return flux_closed_form(r);
}

double RadialField::amplitude(double r) const
{
    require_unit_radius(r, false, "RadialField::amplitude");
    if (r == 0.0) return 0.0;
    return flux_closed_form(r) / r;
}

double RadialField::flux_interpolated(double r) const
{
    if (r > table_.max_node())
        return flux_closed_form(r);
    return table_(r);
}

double RadialField::compute_flux_norm() const
{
    // I = int_0^1 A(r)^2 / r dr; integrand ~ r^3 at 0, singular scale at 1.
    // The u = 1-r side uses dyadic panels; once the panel contributions decay
    // geometrically the remaining tail is extrapolated, and for slowly
    // decaying cases (beta near 3/2) the analytic tail takes over below u_cut.
    quad::Options opt;
    opt.rel_tol = 1e-12;
    const double smooth = quad::integrate(
        [this](double r) { const double a = flux_closed_form(r); return a * a / r; },
        0.0, 0.5, opt);

    auto g = [this](double u) {
        const double a = flux_from_gap(u);
        return a * a / (1.0 - u);
    };
    constexpr double u_cut = 1e-30;
    double singular = 0.0;
    double hi = 0.5;
    double prev = 0.0;
    for (int j = 0; j < 200; ++j) {
        const double lo = 0.5 * hi;
        const double part = quad::integrate(g, lo, hi, opt);
        singular += part;
        if (j > 2 && std::abs(part) < std::abs(prev)) {
            const double ratio = std::abs(part) / std::abs(prev);
            const double tail = std::abs(part) * ratio / (1.0 - ratio);
            if (tail <= 1e-11 * (smooth + singular))
                return smooth + singular;
        }
        prev = part;
        hi = lo;
        if (hi <= u_cut)
            return smooth + singular + flux_norm_tail(hi);
    }
    throw NumericalError("flux_norm: dyadic refinement failed to converge");
}

double RadialField::flux_norm_tail(double u_cut) const
{
    // below u_cut the amplitude is a u^(1-beta) + C (or -d0 log u + C when
    // beta = 1) up to O(u); integrate the square in closed form
    const double d0 = flux_coeff_.front();
    if (beta_ == 1.0) {
        double c = 0.0;
        for (std::size_t m = 1; m < flux_coeff_.size(); ++m)
            c += flux_coeff_[m] / static_cast<double>(m);
        const double big_l = -std::log(u_cut);
        return u_cut * (d0 * d0 * (big_l * big_l + 2.0 * big_l + 2.0)
                        + 2.0 * d0 * c * (big_l + 1.0) + c * c);
    }
    const double e0 = 1.0 - beta_;
    const double a = -d0 / e0;
    double c = 0.0;
    for (std::size_t m = 0; m < flux_coeff_.size(); ++m)
        c += flux_coeff_[m] / (static_cast<double>(m) + 1.0 - beta_);
    return a * a * std::pow(u_cut, 2.0 * e0 + 1.0) / (2.0 * e0 + 1.0)
         + 2.0 * a * c * std::pow(u_cut, e0 + 1.0) / (e0 + 1.0)
         + c * c * u_cut;
}

void RadialField::build_table()
{
    auto& nodes = table_.nodes_;
    nodes.resize(kTableSeed);
    for (int j = 0; j < kTableSeed; ++j)
        nodes[j] = kTableCap * 0.5 * (1.0 - std::cos(M_PI * j / (kTableSeed - 1.0)));
    nodes.front() = 0.0;

    auto fill = [this, &nodes] {
        table_.values_.resize(nodes.size());
        table_.slopes_.resize(nodes.size());
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const double r = nodes[j];
            table_.values_[j] = flux_closed_form(r);
            table_.slopes_[j] = r == 0.0 ? 0.0 : b(r) * r;    // A'(r) = b(r) r
        }
    };
    fill();

    for (int pass = 0; pass < 40; ++pass) {
        std::vector<double> inserts;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            const double mid = 0.5 * (nodes[i] + nodes[i + 1]);
            if (mid <= nodes[i] || mid >= nodes[i + 1]) continue;
            const double exact = flux_closed_form(mid);
            const double err = std::abs(table_(mid) - exact)
                             / std::max(1.0, std::abs(exact));
            if (err > 1e-9) {
                // quartic local error: jump straight to the needed spacing
                const int nsub = std::min(
                    16, std::max(2, static_cast<int>(std::ceil(std::pow(err / 1e-9, 0.25)))));
                for (int q = 1; q < nsub; ++q) {
                    const double p = nodes[i] + (nodes[i + 1] - nodes[i]) * q / nsub;
                    if (p > nodes[i] && p < nodes[i + 1]) inserts.push_back(p);
                }
            }
        }
        if (inserts.empty()) {
            table_.integral_ = compute_flux_norm();
            return;
        }
        std::vector<double> merged;
        merged.reserve(nodes.size() + inserts.size());
        std::merge(nodes.begin(), nodes.end(), inserts.begin(), inserts.end(),
                   std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        nodes = std::move(merged);
        fill();
        if (nodes.size() > 500000)
            throw NumericalError("FluxTable: refinement did not converge");
    }
    throw NumericalError("FluxTable: refinement pass cap reached");
}

// --------------------------------------------------------------- potential

RadialPotential::RadialPotential(std::vector<double> c) : coeffs_(std::move(c))
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    for (double v : coeffs_)
        if (!std::isfinite(v))
            throw std::invalid_argument("RadialPotential: non-finite coefficient");
    if (poly::min_on(coeffs_, 0.0, 1.0) < -1e-12)
        throw std::invalid_argument("RadialPotential: violates (H3), V must be non-negative");
    sup_ = std::max(0.0, poly::max_on(coeffs_, 0.0, 1.0));
    l1_ = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        l1_ += coeffs_[i] / static_cast<double>(i + 2);
}

RadialPotential RadialPotential::zero()
{
    return RadialPotential(std::vector<double>{0.0});
}

RadialPotential RadialPotential::constant(double value)
{
    return RadialPotential(std::vector<double>{value});
}

RadialPotential RadialPotential::polynomial(std::vector<double> coeffs)
{
    return RadialPotential(std::move(coeffs));
}

double RadialPotential::operator()(double r) const
{
    return poly::eval(coeffs_, r);
}

bool RadialPotential::is_zero() const
{
    for (double v : coeffs_)
        if (v != 0.0) return false;
    return true;
}

} // namespace bottle
