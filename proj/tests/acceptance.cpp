// Acceptance suite: one self-contained check per criterion, full-scale
// parameters, one PASS/FAIL line each.  Exit code 0 iff everything passes.
#include "oracles.hpp"

#include "bottle/bounds.hpp"
#include "bottle/field.hpp"
#include "bottle/green.hpp"
#include "bottle/specfun.hpp"
#include "bottle/spectral.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace bottle;

namespace {

struct Harness {
    int failures = 0;

    void run(int id, const std::string& name, double budget_seconds,
             const std::function<bool(std::string&)>& body)
    {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start).count();
        if (secs > budget_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        if (!ok) ++failures;
        std::printf("%s  criterion %2d (%s): %s[%.2fs]\n", ok ? "PASS" : "FAIL", id,
                    name.c_str(), detail.empty() ? "" : (detail + " ").c_str(), secs);
        std::fflush(stdout);
    }
};

RadialField example_field()
{
    return RadialField::make(RadialProfile::constant(1.0), 1.0, 1.0);
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

int main()
{
    Harness h;
    const auto field = example_field();
    const double i_exact = 2.0 * specfun::zeta3 - 1.5;

    h.run(1, "flux norm of the log-growth unit field", 1.0, [&](std::string& d) {
        const double err = std::abs(field.flux_norm() - i_exact);
        d = "|I - (2 zeta(3) - 3/2)| = " + fmt(err);
        return err <= 1e-6;
    });

    h.run(2, "counting constants", 1.0, [&](std::string& d) {
        bool ok = bounds::c_k(1.0) == 1.5;
        double worst_id = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double k = 1e-4 * std::pow(1e8, i / 49.0);
            worst_id = std::max(worst_id,
                std::abs(bounds::c_k(k) - 2.0 * bounds::gamma_k(std::sqrt(k))));
        }
        ok = ok && worst_id <= 1e-12;
        double worst_q = 0.0;
        for (double k : {0.1, 0.5, 1.0, 2.0, 10.0})
            worst_q = std::max(worst_q,
                std::abs(bounds::gamma_k(k) - oracle::gamma_quadrature(k)));
        ok = ok && worst_q <= 1e-8;
        d = "identity dev " + fmt(worst_id) + ", quadrature dev " + fmt(worst_q);
        return ok;
    });

    h.run(3, "optimal alpha", 1.0, [&](std::string& d) {
        double worst_res = 0.0;
        bool minimal = true, cont = true;
        for (double i_norm : {0.1, 0.904, 10.0}) {
            for (double lambda : {2.0 * i_norm, 8.0, 100.0, 1e4}) {
                const double a = bounds::optimal_alpha(lambda, i_norm);
                worst_res = std::max(worst_res,
                    std::abs(a * a * (lambda - 2.0 * i_norm) + 6.0 * a * i_norm - 4.0 * i_norm));
                auto g = [&](double x) {
                    return lambda / (2.0 * std::sqrt(1.0 - x))
                         + i_norm * std::sqrt(1.0 - x) / x;
                };
                minimal = minimal && g(a) <= g(a + 1e-3) + 1e-12
                                  && g(a) <= g(a - 1e-3) + 1e-12;
            }
            cont = cont
                && std::abs(bounds::optimal_alpha(2.0 * i_norm + 1e-8, i_norm) - 2.0 / 3.0) <= 1e-6
                && std::abs(bounds::optimal_alpha(2.0 * i_norm - 1e-8, i_norm) - 2.0 / 3.0) <= 1e-6;
        }
        d = "max residual " + fmt(worst_res);
        return worst_res <= 1e-10 && minimal && cont;
    });

    h.run(4, "zero-field calibration", 10.0, [&](std::string& d) {
        const double ref = oracle::disk_ground_energy();
        const double e1 = spectral::lowest_eigenvalue(RadialField::zero(),
                                                      spectral::RadialGrid(40000));
        const double e2 = spectral::lowest_eigenvalue(RadialField::zero(),
                                                      spectral::RadialGrid(80000));
        const double richardson = (4.0 * e2 - e1) / 3.0;
        const double rel = std::abs(richardson - ref) / ref;
        d = "E = " + fmt(richardson) + " vs " + fmt(ref) + ", rel " + fmt(rel);
        return rel <= 0.005;
    });

    h.run(5, "counting bound vs direct counts", 60.0, [&](std::string& d) {
        std::ostringstream msg;
        bool ok = true;
        for (double lambda : {20.0, 50.0, 100.0}) {
            const double a = bounds::optimal_alpha(lambda, field.flux_norm());
            const double bound = bounds::bound_counting(field, lambda, a).total;
            int counts[3];
            for (int g = 0; g < 3; ++g)
                counts[g] = spectral::count_eigenvalues(
                    field, lambda, spectral::RadialGrid(20000 << g)).total;
            ok = ok && counts[0] == counts[1] && counts[1] == counts[2]
                    && counts[0] <= bound;
            msg << "N(" << lambda << ")=" << counts[0] << "<=" << fmt(bound) << " ";
        }
        d = msg.str();
        return ok;
    });

    h.run(6, "perturbed-operator bound", 60.0, [&](std::string& d) {
        std::ostringstream msg;
        bool ok = true;
        const std::vector<RadialPotential> vs = {
            RadialPotential::constant(2.0), RadialPotential::polynomial({0.0, 4.0})};
        for (const auto& v : vs) {
            double best = 0.0;
            for (int i = 1; i <= 9; ++i) {
                const double b = bounds::bound_negative_count(field, v, 0.1 * i);
                if (i == 1 || b < best) best = b;
            }
            const int count = spectral::count_negative_with_potential(
                field, v, spectral::RadialGrid(20000)).total;
            ok = ok && count <= best;
            msg << "N(A,V)=" << count << "<=" << fmt(best) << " ";
        }
        d = msg.str();
        return ok;
    });

    h.run(7, "lower bound by the field minimum", 10.0, [&](std::string& d) {
        std::ostringstream msg;
        bool ok = true;
        const spectral::RadialGrid grid(20000);
        const double e_ex = spectral::lowest_eigenvalue(field, grid);
        ok = ok && e_ex >= 0.99;
        msg << "log-field e0=" << fmt(e_ex) << " ";
        for (double b0 : {1.0, 5.0}) {
            const auto cf = RadialField::make(RadialProfile::constant(b0), b0, 0.0);
            const double e0 = spectral::lowest_eigenvalue(cf, grid);
            ok = ok && e0 >= b0 - 0.01 * b0;
            msg << "B0=" << b0 << " e0=" << fmt(e0) << " ";
        }
        d = msg.str();
        return ok;
    });

    h.run(8, "line spectral sums", 10.0, [&](std::string& d) {
        std::ostringstream msg;
        bool ok = true;
        for (double depth : {1.0, 5.0, 25.0}) {
            const auto w = LinePotential::square(depth, 1.0);
            spectral::LineGrid g;
            g.t_max = 12.0;
            g.n = 8000;
            double sum = 0.0;
            for (double nu : spectral::line_schrodinger_negatives(w, g))
                sum += std::sqrt(nu);
            ok = ok && sum <= bounds::hlt_rhs(w);
            msg << "well(" << depth << "): " << fmt(sum) << "<=" << fmt(bounds::hlt_rhs(w)) << " ";
        }
        const auto sech = LinePotential::sech2(2.0);
        const auto nus = spectral::line_schrodinger_negatives(sech);
        double sum = 0.0;
        for (double nu : nus) sum += std::sqrt(nu);
        ok = ok && sum <= bounds::hlt_rhs(sech)
                && nus.size() == 1 && std::abs(nus[0] - 1.0) <= 1e-3;
        msg << "sech2 nu=" << fmt(nus.empty() ? 0.0 : nus[0]);
        d = msg.str();
        return ok;
    });

    h.run(9, "resolvent diagonal", 5.0, [&](std::string& d) {
        double worst_fd = 0.0;
        for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const auto fd = oracle::fd_green_diag(r, 1.0, 99999);
            worst_fd = std::max(worst_fd,
                std::abs(green::green_diag(fd.node_r, 1.0).value - fd.value));
        }
        bool chain = true;
        for (double k : {0.5, 1.0, 2.0, 5.0}) {
            for (int j = 1; j <= 512; ++j)
            {
                const double r = j / 513.0;
                const auto s = green::green_diag(r, k);
                const double mid = r * specfun::bessel_i0(k * r) * specfun::bessel_k0(k * r);
                chain = chain && s.value <= mid + 1e-9 && mid <= s.bound + 1e-9;
            }
        }
        d = "fd dev " + fmt(worst_fd);
        return worst_fd <= 1e-6 && chain;
    });

    h.run(10, "birman-schwinger domination", 10.0, [&](std::string& d) {
        std::ostringstream msg;
        bool ok = true;
        const int n = 20000;
        const double hstep = 1.0 / (n + 1);
        for (double c : {0.5, 2.0, 5.0}) {
            for (double k : {1.0, 2.0}) {
                spectral::ModeSystem sys;
                sys.diag.resize(n);
                sys.off.assign(n - 1, -1.0 / hstep);
                sys.weight.assign(n, hstep);
                for (int i = 1; i <= n; ++i) {
                    const double r = i * hstep;
                    sys.diag[i - 1] = 2.0 / hstep
                                    + (-1.0 / (4.0 * r * r) + k * k - c) * hstep;
                }
                const int count = spectral::count_negative_inertia(sys, 0.0);
                const double integral = green::birman_schwinger_integral(
                    RadialPotential::constant(c), k);
                ok = ok && count <= static_cast<int>(std::floor(integral));
                msg << count << "<=" << fmt(integral) << " ";
            }
        }
        d = msg.str();
        return ok;
    });

    h.run(11, "bessel product inequalities", 5.0, [&](std::string& d) {
        double ratio_max = 0.0;
        for (int j = 1; j <= 4096; ++j)
            ratio_max = std::max(ratio_max, green::propjp_ratio(j / 4096.0));
        double ident = 0.0, dmax = 0.0, p1 = 0.0, p3 = 0.0;
        for (int j = 1; j <= 4096; ++j) {
            const double r = j / 4096.0;
            const auto parts = specfun::i0k0_log_defect_parts(r);
            const double delta = parts[0] + parts[1] + parts[2];
            ident = std::max(ident, std::abs(
                delta - (specfun::bessel_i0(r) * specfun::bessel_k0(r) + std::log(r))));
            dmax = std::max(dmax, delta);
            p1 = std::max(p1, parts[0]);
            p3 = std::max(p3, parts[2]);
        }
        double wronskian = 0.0;
        for (int i = 0; i <= 96; ++i) {
            const double x = 1e-6 * std::pow(5e7, i / 96.0);
            wronskian = std::max(wronskian, std::abs(
                x * (specfun::bessel_i0_prime(x) * specfun::bessel_k0(x)
                     - specfun::bessel_i0(x) * specfun::bessel_k0_prime(x)) - 1.0));
        }
        d = "ratio max " + fmt(ratio_max) + ", delta max " + fmt(dmax)
          + ", wronskian " + fmt(wronskian);
        return ratio_max <= 1.0 + 1e-12 && ident <= 1e-10 && p1 <= 0.11
            && p3 <= 0.3650 && dmax <= 0.7 && wronskian <= 1e-10;
    });

    h.run(12, "large-threshold agreement", 1.0, [&](std::string& d) {
        double worst = 0.0;
        for (double lambda : {1e2, 1e3, 1e4, 1e5, 1e6}) {
            const double a = bounds::optimal_alpha(lambda, field.flux_norm());
            const double gap = bounds::bound_counting(field, lambda, a).total
                             - bounds::asymptotic_bound(lambda, field.flux_norm(), field.k_min());
            worst = std::max(worst, std::abs(gap));
        }
        d = "max gap " + fmt(worst);
        return worst <= 5.0;
    });

    h.run(13, "cross-solver parity", 60.0, [&](std::string& d) {
        std::ostringstream msg;
        bool ok = true;
        for (double lambda : {20.0, 50.0}) {
            const auto radial = spectral::count_eigenvalues(
                field, lambda, spectral::RadialGrid(20000));
            spectral::CountOptions opts;
            opts.variable = spectral::CountOptions::Variable::log_radius;
            opts.t_min = -14.0;
            const auto logvar = spectral::count_eigenvalues(
                field, lambda, spectral::RadialGrid(20000), opts);
            ok = ok && radial.total == logvar.total;
            msg << "N(" << lambda << "): r=" << radial.total
                << " t=" << logvar.total << " ";
        }
        d = msg.str();
        return ok;
    });

    if (h.failures == 0) {
        std::printf("all 13 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", h.failures);
    return 1;
}
