#include "bottle/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace bottle::bounds {

namespace {

void require_alpha(double alpha)
{
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("bounds: requires alpha in (0, 1)");
}

void require_admissible(const RadialField& field)
{
    if (!field.admissible())
        throw std::domain_error("bounds: field is not admissible ((H1) fails)");
}

// int_0^x t^(m+1) log(t s) dt
double log_primitive(int m, double x, double s)
{
    const double p = static_cast<double>(m) + 2.0;
    return std::pow(x, p) * (std::log(x * s) / p - 1.0 / (p * p));
}

// int_0^1 (1 + |log(r s)|) V(r) r dr for the polynomial catalog, exact.
double weighted_log_integral(const RadialPotential& v, double s)
{
    const auto& c = v.coeffs();
    double total = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0.0) continue;
        const int m = static_cast<int>(i);
        const double p = static_cast<double>(m) + 2.0;
        double part = 1.0 / p;                       // int t^(m+1)
        if (s <= 1.0) {
            part -= log_primitive(m, 1.0, s);
        } else {
            part += log_primitive(m, 1.0, s) - 2.0 * log_primitive(m, 1.0 / s, s);
        }
        total += c[i] * part;
    }
    return total;
}

} // namespace

double gamma_k(double k)
{
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("gamma_k: requires k > 0");
    if (k <= 1.0)
        return (3.0 - 2.0 * std::log(k)) / 4.0;
    return (1.0 + 2.0 * std::log(k)) / 4.0 + 1.0 / (2.0 * k * k);
}

double c_k(double k_min)
{
    if (!(k_min > 0.0) || !std::isfinite(k_min))
        throw std::domain_error("c_k: requires K > 0");
    if (k_min <= 1.0)
        return (3.0 - std::log(k_min)) / 2.0;
    return (1.0 + std::log(k_min)) / 2.0 + 1.0 / k_min;
}

double bound_negative_count(const RadialField& field, const RadialPotential& v,
                            double alpha)
{
    require_alpha(alpha);
    require_admissible(field);
    const double i_norm = field.flux_norm();
    const double first = ((1.0 / alpha - 1.0) * i_norm + v.l1_norm())
                       / std::sqrt(1.0 - alpha);
    const double second = 2.0 * weighted_log_integral(v, std::sqrt(field.k_min()));
    return first + second;
}

BoundReport bound_counting(const RadialField& field, double lambda, double alpha)
{
    require_alpha(alpha);
    require_admissible(field);
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::domain_error("bound_counting: requires lambda > 0");
    BoundReport rep;
    rep.lambda = lambda;
    rep.alpha = alpha;
    rep.term_ck = c_k(field.k_min()) * lambda;
    rep.term_kinetic = lambda / (2.0 * std::sqrt(1.0 - alpha));
    rep.term_flux = std::sqrt(1.0 - alpha) / alpha * field.flux_norm();
    rep.total = rep.term_ck + rep.term_kinetic + rep.term_flux;
    return rep;
}

double optimal_alpha(double lambda, double flux_norm_i)
{
    if (!(flux_norm_i > 0.0) || !std::isfinite(flux_norm_i))
        throw std::domain_error("optimal_alpha: requires I > 0");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::domain_error("optimal_alpha: requires lambda > 0");
    const double i = flux_norm_i;
    return 4.0 * i / (3.0 * i + std::sqrt(i * (i + 4.0 * lambda)));
}

double asymptotic_bound(double lambda, double flux_norm_i, double k_min)
{
    if (!(lambda > 0.0) || !(flux_norm_i > 0.0))
        throw std::domain_error("asymptotic_bound: requires lambda > 0 and I > 0");
    return (0.5 + c_k(k_min)) * lambda + std::sqrt(lambda * flux_norm_i);
}

double hlt_rhs(const LinePotential& w)
{
    return 0.5 * w.integral();
}

} // namespace bottle::bounds
