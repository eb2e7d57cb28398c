#include "bottle/specfun.hpp"
#include "bottle/error.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bottle::specfun {

namespace {

constexpr double kSwitch = 4.0;   // series below, continued fraction above

void require_finite(double x, const char* fn)
{
    if (!std::isfinite(x))
        throw std::domain_error(std::string(fn) + ": argument must be finite");
}

double i0_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term <= 1e-17 * sum) break;
    }
    return sum;
}

// I0(x) - 1, without the cancellation of forming I0 and subtracting.
double i0_series_m1(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 0.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term <= 1e-17 * (sum + 1.0)) break;
    }
    return sum;
}

double i1_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1.0));
        sum += term;
        if (term <= 1e-17 * sum) break;
    }
    return 0.5 * x * sum;
}

// sum_{k>=1} H_k (x^2/4)^k / k!^2
double harmonic_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0, h = 0.0, sum = 0.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        h += 1.0 / k;
        sum += h * term;
        if (h * term <= 1e-17 * (sum + 1e-300)) break;
    }
    return sum;
}

} // namespace

namespace detail {

double k0_series(double x)
{
    return -(std::log(0.5 * x) + euler_gamma) * i0_series(x) + harmonic_series(x);
}

double k1_series(double x)
{
    // K1 = 1/x + log(x/2) I1(x) - (x/4) sum_k (H_k + H_{k+1} - 2 gamma) q^k / (k!(k+1)!)
    const double q = 0.25 * x * x;
    double term = 1.0;
    double hk = 0.0, hk1 = 1.0;
    double sum = (hk + hk1 - 2.0 * euler_gamma) * term;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1.0));
        hk += 1.0 / k;
        hk1 += 1.0 / (k + 1.0);
        const double add = (hk + hk1 - 2.0 * euler_gamma) * term;
        sum += add;
        if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
    }
    return 1.0 / x + std::log(0.5 * x) * i1_series(x) - 0.25 * x * sum;
}

void k0_k1_steed(double x, double& k0, double& k1)
{
    // Steed/Thompson-Barnett continued fraction for K_mu, K_{mu+1} at mu = 0;
    // usable for x >= 2, near machine accuracy.
    constexpr double eps = 1e-16;
    constexpr int max_it = 30000;
    const double a1 = 0.25;           // 1/4 - mu^2
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= max_it; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) <= eps) {
            h = a1 * h;
            k0 = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) / s;
            k1 = k0 * (x + 0.5 - h) / x;
            return;
        }
    }
    throw NumericalError("bessel_k: continued fraction stalled at x=" + std::to_string(x));
}

} // namespace detail

double bessel_i0(double x)
{
    require_finite(x, "bessel_i0");
    if (x < 0.0) throw std::domain_error("bessel_i0: requires x >= 0");
    return i0_series(x);
}

double bessel_i1(double x)
{
    require_finite(x, "bessel_i1");
    if (x < 0.0) throw std::domain_error("bessel_i1: requires x >= 0");
    return i1_series(x);
}

double bessel_k0(double x)
{
    require_finite(x, "bessel_k0");
    if (x <= 0.0) throw std::domain_error("bessel_k0: requires x > 0");
    if (x <= kSwitch) return detail::k0_series(x);
    double k0, k1;
    detail::k0_k1_steed(x, k0, k1);
    return k0;
}

double bessel_k1(double x)
{
    require_finite(x, "bessel_k1");
    if (x <= 0.0) throw std::domain_error("bessel_k1: requires x > 0");
    if (x <= kSwitch) return detail::k1_series(x);
    double k0, k1;
    detail::k0_k1_steed(x, k0, k1);
    return k1;
}

double bessel_i0_prime(double x)
{
    return bessel_i1(x);
}

double bessel_k0_prime(double x)
{
    return -bessel_k1(x);
}

double i0k0_log_defect(double r)
{
    const auto p = i0k0_log_defect_parts(r);
    return p[0] + p[1] + p[2];
}

std::array<double, 3> i0k0_log_defect_parts(double r)
{
    require_finite(r, "i0k0_log_defect");
    if (!(r > 0.0) || r > 1.0)
        throw std::domain_error("i0k0_log_defect: requires 0 < r <= 1");
    const double i0m1 = i0_series_m1(r);
    const double i0 = 1.0 + i0m1;
    // 1 - I0^2 = -(I0 - 1)(I0 + 1), formed without cancellation
    const double one_minus_i0sq = -i0m1 * (i0 + 1.0);
    const double part1 = one_minus_i0sq * std::log(r);
    const double part2 = (ln2 - euler_gamma) * i0 * i0;
    const double part3 = i0 * harmonic_series(r);
    return {part1, part2, part3};
}

} // namespace bottle::specfun
