#include "doctest.h"
#include "oracles.hpp"

#include "bottle/bounds.hpp"
#include "bottle/green.hpp"
#include "bottle/specfun.hpp"
#include "bottle/spectral.hpp"

#include <cmath>
#include <stdexcept>

using namespace bottle;

TEST_CASE("green diagonal boundary values and sample")
{
    for (double k : {0.5, 1.0, 2.0, 5.0}) {
        CHECK(green::green_diag(0.0, k).value == 0.0);
        CHECK(green::green_diag(1.0, k).value == 0.0);
    }
    CHECK(green::green_diag(0.5, 1.0).value == doctest::Approx(0.3035).epsilon(1e-3));
    CHECK_THROWS_AS(green::green_diag(-0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(green::green_diag(1.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(green::green_diag(0.5, 0.0), std::domain_error);
}

TEST_CASE("green diagonal against the point-source solve")
{
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const auto fd = oracle::fd_green_diag(r, 1.0, 99999);
        const auto closed = green::green_diag(fd.node_r, 1.0);
        CHECK(std::abs(closed.value - fd.value) <= 1e-6);
    }
}

TEST_CASE("majorant chain holds on dense grids")
{
    using specfun::bessel_i0;
    using specfun::bessel_k0;
    for (double k : {0.5, 1.0, 2.0, 5.0}) {
        for (int j = 1; j <= 512; ++j) {
            const double r = j / 513.0;
            const auto s = green::green_diag(r, k);
            const double middle = r * bessel_i0(k * r) * bessel_k0(k * r);
            CHECK(s.value >= -1e-12);
            CHECK(s.value <= middle + 1e-9);
            CHECK(middle <= s.bound + 1e-9);
            CHECK(s.bound == doctest::Approx(r * (1.0 + std::abs(std::log(k * r)))).epsilon(1e-14));
        }
    }
}

TEST_CASE("birman-schwinger integral")
{
    CHECK(green::birman_schwinger_integral(RadialPotential::zero(), 1.0) == 0.0);

    const double v1k1 = green::birman_schwinger_integral(RadialPotential::constant(1.0), 1.0);
    CHECK(v1k1 > 0.1);
    CHECK(v1k1 <= bounds::gamma_k(1.0));

    for (double c : {0.5, 2.0, 5.0}) {
        for (double k : {0.5, 1.0, 2.0, 5.0}) {
            const double val = green::birman_schwinger_integral(RadialPotential::constant(c), k);
            CHECK(val >= 0.0);
            CHECK(val <= c * bounds::gamma_k(k) + 1e-9);
        }
    }
    const auto lin = RadialPotential::polynomial({0.0, 4.0});
    CHECK(green::birman_schwinger_integral(lin, 2.0)
          <= lin.sup() * bounds::gamma_k(2.0) + 1e-9);
}

TEST_CASE("birman-schwinger dominates the discretized count")
{
    // count negatives of T0 + k^2 - c on a flat Dirichlet grid
    const int n = 20000;
    const double h = 1.0 / (n + 1);
    for (double c : {0.5, 2.0, 5.0}) {
        for (double k : {1.0, 2.0}) {
            spectral::ModeSystem sys;
            sys.diag.resize(n);
            sys.off.assign(n - 1, -1.0 / h);
            sys.weight.assign(n, h);
            for (int i = 1; i <= n; ++i) {
                const double r = i * h;
                sys.diag[i - 1] = 2.0 / h + (-1.0 / (4.0 * r * r) + k * k - c) * h;
            }
            const int count = spectral::count_negative_inertia(sys, 0.0);
            const double integral = green::birman_schwinger_integral(
                RadialPotential::constant(c), k);
            CHECK(count <= static_cast<int>(std::floor(integral)));
        }
    }
}

TEST_CASE("propjp ratio stays below one")
{
    using specfun::bessel_i0;
    using specfun::bessel_k0;
    CHECK(green::propjp_ratio(1.0)
          == doctest::Approx(bessel_i0(1.0) * bessel_k0(1.0)).epsilon(1e-13));

    // small-argument expansion (-log r + log 2 - gamma) / (1 - log r)
    const double r0 = 1e-8;
    const double expansion = (-std::log(r0) + specfun::ln2 - specfun::euler_gamma)
                           / (1.0 - std::log(r0));
    CHECK(std::abs(green::propjp_ratio(r0) - expansion) <= 1e-10);
    CHECK(green::propjp_ratio(r0) == doctest::Approx(0.9545).epsilon(1e-3));

    double worst = 0.0;
    for (int j = 1; j <= 4096; ++j)
        worst = std::max(worst, green::propjp_ratio(j / 4096.0));
    CHECK(worst <= 1.0 + 1e-12);

    CHECK_THROWS_AS(green::propjp_ratio(0.0), std::domain_error);
    CHECK_THROWS_AS(green::propjp_ratio(1.0001), std::domain_error);
}

TEST_CASE("ratio bound and delta bound are the same statement")
{
    using specfun::bessel_i0;
    using specfun::bessel_k0;
    for (int j = 1; j <= 512; ++j) {
        const double r = j / 512.0;
        const double lhs = bessel_i0(r) * bessel_k0(r) - (1.0 - std::log(r));
        const double rhs = specfun::i0k0_log_defect(r) - 1.0;
        CHECK(std::abs(lhs - rhs) <= 1e-10);
        CHECK((green::propjp_ratio(r) <= 1.0) == (specfun::i0k0_log_defect(r) <= 1.0));
    }
}
