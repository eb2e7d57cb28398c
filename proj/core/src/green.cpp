#include "bottle/green.hpp"
#include "bottle/quadrature.hpp"
#include "bottle/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace bottle::green {

using specfun::bessel_i0;
using specfun::bessel_k0;

GreenSample green_diag(double r, double k)
{
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("green_diag: requires k > 0");
    if (!std::isfinite(r) || r < 0.0 || r > 1.0)
        throw std::domain_error("green_diag: requires r in [0, 1]");
    GreenSample s;
    s.r = r;
    s.k = k;
    if (r == 0.0 || r == 1.0) {
        s.value = 0.0;
        s.bound = r == 0.0 ? 0.0 : 1.0 + std::abs(std::log(k));
        return s;
    }
    const double i0 = bessel_i0(k * r);
    const double ratio = bessel_k0(k) / bessel_i0(k);
    s.value = r * i0 * (bessel_k0(k * r) - i0 * ratio);
    s.bound = r * (1.0 + std::abs(std::log(k * r)));
    return s;
}

double birman_schwinger_integral(const RadialPotential& v, double k)
{
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("birman_schwinger_integral: requires k > 0");
    if (v.is_zero()) return 0.0;
    quad::Options opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-14;
    return quad::integrate(
        [&](double r) { return green_diag(r, k).value * v(r); }, 0.0, 1.0, opt);
}

double propjp_ratio(double r)
{
    if (!(r > 0.0) || r > 1.0 || !std::isfinite(r))
        throw std::domain_error("propjp_ratio: requires r in (0, 1]");
    // near 0 the product I0 K0 is recovered from its log-defect series,
    // which keeps the ratio smooth up to the limit value 1
    const double lg = std::log(r);
    const double prod = (r < 1e-4)
        ? specfun::i0k0_log_defect(r) - lg
        : bessel_i0(r) * bessel_k0(r);
    return prod / (1.0 - lg);
}

} // namespace bottle::green
