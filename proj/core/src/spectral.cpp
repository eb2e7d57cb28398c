#include "bottle/spectral.hpp"
#include "bottle/error.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>

namespace bottle::spectral {

namespace {

constexpr int kRuleSamples = 4096;
constexpr long long kModeCap = 100000;

// Sturm pivot sweep of (stiffness - lam * weight).  Returns the negative
// pivot count, or -1 if a pivot fell below pivmin (lam is numerically an
// eigenvalue of the pencil).
int pivot_sweep(const ModeSystem& sys, double lam, double pivmin)
{
    const std::size_t n = sys.diag.size();
    int count = 0;
    double prev = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = sys.diag[i] - lam * sys.weight[i];
        if (i > 0) d -= sys.off[i - 1] * sys.off[i - 1] / prev;
        if (std::abs(d) <= pivmin) return -1;
        if (d < 0.0) ++count;
        prev = d;
    }
    return count;
}

double pivot_floor(const ModeSystem& sys)
{
    double max_off2 = 0.0;
    for (double b : sys.off) max_off2 = std::max(max_off2, b * b);
    return std::max(1e-300, 4.4e-308 * max_off2);
}

// Effective-potential truncation rule: mode ell contributes nothing below
// `threshold` when min_r (b(r) + (ell - A(r))^2 / r^2) / 2 >= threshold.
double min_effective_potential(const RadialField& field, long long ell)
{
    double best = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= kRuleSamples; ++j) {
        const double r = static_cast<double>(j) / (kRuleSamples + 1.0);
        const double d = ell - field.flux_interpolated(r);
        const double phi = 0.5 * (field.b(r) + d * d / (r * r));
        best = std::min(best, phi);
    }
    return best;
}

struct ModeOutcome {
    long long ell;
    int count;
    double shift;
};

template <typename F>
std::vector<ModeOutcome> parallel_map_modes(const std::vector<long long>& ells, F&& f)
{
    std::vector<std::future<ModeOutcome>> futures;
    futures.reserve(ells.size());
    for (long long ell : ells)
        futures.push_back(std::async(std::launch::async, f, ell));
    std::vector<ModeOutcome> out;
    out.reserve(ells.size());
    for (auto& fut : futures)
        out.push_back(fut.get());
    std::sort(out.begin(), out.end(),
              [](const ModeOutcome& a, const ModeOutcome& b) { return a.ell < b.ell; });
    return out;
}

CountReport sweep_count(const RadialField& field, const RadialPotential& v,
                        double pencil_shift, double rule_threshold,
                        const RadialGrid& grid, const CountOptions& opts)
{
    CountReport rep;
    rep.lambda = pencil_shift;
    const bool log_var = opts.variable == CountOptions::Variable::log_radius;
    int n_log = opts.log_nodes;
    if (log_var) {
        if (!(opts.t_min < 0.0))
            throw std::domain_error("count: log grid requires t_min < 0");
        if (n_log <= 0)
            n_log = static_cast<int>(std::ceil(-opts.t_min * (grid.n + 1)));
    }
    rep.variable = log_var ? 't' : 'r';
    rep.grid_n = log_var ? n_log : grid.n;
    rep.t_min = log_var ? opts.t_min : 0.0;

    // Select modes.  Positive direction stops after three consecutive
    // skippable modes; on the negative side the effective potential is
    // monotone in |ell|, so the first skip ends the scan.
    std::vector<long long> included;
    auto skippable = [&](long long ell) {
        const double phi = min_effective_potential(field, ell);
        if (phi >= rule_threshold) {
            rep.skipped.push_back({ell, phi});
            return true;
        }
        return false;
    };
    int consecutive = 0;
    for (long long ell = 0;; ++ell) {
        if (ell > kModeCap)
            throw NumericalError("count: positive mode scan exceeded the cap");
        if (skippable(ell)) {
            if (++consecutive >= 3) break;
        } else {
            consecutive = 0;
            included.push_back(ell);
        }
    }
    for (long long ell = -1;; --ell) {
        if (-ell > kModeCap)
            throw NumericalError("count: negative mode scan exceeded the cap");
        if (skippable(ell)) break;
        included.push_back(ell);
    }

    auto outcomes = parallel_map_modes(included, [&](long long ell) {
        ModeSystem sys = log_var
            ? build_mode_system_log(field, v, ell, opts.t_min, n_log)
            : build_mode_system(field, v, ell, grid);
        ModeOutcome o;
        o.ell = ell;
        o.count = count_negative_inertia(sys, pencil_shift, o.shift);
        return o;
    });

    rep.total = 0;
    rep.ell_min = 0;
    rep.ell_max = 0;
    for (const auto& o : outcomes) {
        rep.per_mode.push_back({o.ell, o.count});
        rep.total += o.count;
        rep.ell_min = std::min(rep.ell_min, o.ell);
        rep.ell_max = std::max(rep.ell_max, o.ell);
        rep.tie_shift = std::max(rep.tie_shift, o.shift);
    }
    std::sort(rep.skipped.begin(), rep.skipped.end(),
              [](const SkippedMode& a, const SkippedMode& b) { return a.ell < b.ell; });
    return rep;
}

// Smallest pencil eigenvalue by inertia bisection, relative accuracy ~1e-8.
double smallest_eigenvalue(const ModeSystem& sys)
{
    double lo = 0.0;
    if (count_negative_inertia(sys, lo) > 0) {
        lo = -1.0;
        int guard = 0;
        while (count_negative_inertia(sys, lo) > 0) {
            lo *= 2.0;
            if (++guard > 200)
                throw NumericalError("lowest_eigenvalue: no lower bracket");
        }
    }
    double hi = std::max(1.0, 2.0 * std::abs(lo));
    int guard = 0;
    while (count_negative_inertia(sys, hi) < 1) {
        hi *= 2.0;
        if (++guard > 200)
            throw NumericalError("lowest_eigenvalue: no upper bracket");
    }
    while (hi - lo > 1e-8 * std::max(std::abs(hi), 1e-12)) {
        const double mid = 0.5 * (lo + hi);
        if (count_negative_inertia(sys, mid) >= 1) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

ModeSystem build_mode_system(const RadialField& field, const RadialPotential& v,
                             long long ell, const RadialGrid& grid)
{
    const int n = grid.n;
    const double h = grid.spacing();
    ModeSystem sys;
    sys.ell = ell;
    sys.diag.resize(n);
    sys.off.resize(n - 1);
    sys.weight.resize(n);
    for (int i = 1; i <= n; ++i) {
        const double r = i * h;
        const double rp = (i + 0.5) * h;
        const double w = r * h;
        const double d = ell - field.flux_interpolated(r);
        const double q = d * d / (r * r) - v(r);
        double stiff = rp / h;
        if (i > 1) stiff += (i - 0.5) * h / h;   // no left coupling at i = 1
        sys.diag[i - 1] = stiff + q * w;
        sys.weight[i - 1] = w;
        if (i < n) sys.off[i - 1] = -rp / h;
    }
    return sys;
}

ModeSystem build_mode_system_log(const RadialField& field, const RadialPotential& v,
                                 long long ell, double t_min, int n_nodes)
{
    if (!(t_min < 0.0))
        throw std::domain_error("build_mode_system_log: requires t_min < 0");
    if (n_nodes < 16)
        throw std::invalid_argument("build_mode_system_log: requires n >= 16");
    const int n = n_nodes;
    const double ht = -t_min / n;
    ModeSystem sys;
    sys.ell = ell;
    sys.diag.resize(n);
    sys.off.resize(n - 1);
    sys.weight.resize(n);
    for (int i = 1; i <= n; ++i) {
        const double t = t_min + (i - 1) * ht;   // t_n = -ht, Dirichlet at 0
        const double r = std::exp(t);
        const double d = ell - field.flux_interpolated(r);
        const double vt = r * r * v(r);
        const double stiff = (i == 1 ? 1.0 : 2.0) / ht;
        sys.diag[i - 1] = stiff + (d * d - vt) * ht;
        sys.weight[i - 1] = r * r * ht;
        if (i < n) sys.off[i - 1] = -1.0 / ht;
    }
    return sys;
}

int count_negative_inertia(const ModeSystem& sys, double lambda)
{
    double shift;
    return count_negative_inertia(sys, lambda, shift);
}

int count_negative_inertia(const ModeSystem& sys, double lambda, double& shift_out)
{
    if (sys.diag.empty())
        throw std::invalid_argument("count_negative_inertia: empty system");
    if (sys.off.size() + 1 != sys.diag.size() || sys.weight.size() != sys.diag.size())
        throw std::invalid_argument("count_negative_inertia: inconsistent sizes");
    for (double w : sys.weight)
        if (!(w > 0.0))
            throw std::domain_error("count_negative_inertia: weight must be positive");

    const double pivmin = pivot_floor(sys);
    const double scale = std::max(1.0, std::abs(lambda));
    double lam = lambda;
    shift_out = 0.0;
    for (int attempt = 0; attempt < 60; ++attempt) {
        const int c = pivot_sweep(sys, lam, pivmin);
        if (c >= 0) {
            shift_out = lambda - lam;
            return c;
        }
        lam = lambda - scale * 1e-13 * std::ldexp(1.0, attempt);
    }
    throw NumericalError("count_negative_inertia: persistent zero pivot");
}

CountReport count_eigenvalues(const RadialField& field, double lambda,
                              const RadialGrid& grid, const CountOptions& opts)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::domain_error("count_eigenvalues: requires lambda > 0");
    return sweep_count(field, RadialPotential::zero(), lambda, lambda, grid, opts);
}

CountReport count_negative_with_potential(const RadialField& field,
                                          const RadialPotential& v,
                                          const RadialGrid& grid,
                                          const CountOptions& opts)
{
    return sweep_count(field, v, 0.0, v.sup(), grid, opts);
}

double lowest_eigenvalue(const RadialField& field, const RadialGrid& grid)
{
    const auto v0 = RadialPotential::zero();
    double best = std::numeric_limits<double>::infinity();
    for (long long ell = -2; ell <= 2; ++ell) {
        ModeSystem sys = build_mode_system(field, v0, ell, grid);
        best = std::min(best, smallest_eigenvalue(sys));
    }
    return best;
}

std::vector<double> line_schrodinger_negatives(const LinePotential& w,
                                               const LineGrid& grid)
{
    if (grid.n < 16)
        throw std::invalid_argument("line_schrodinger_negatives: requires n >= 16");
    if (!(grid.t_max >= w.support_radius() + 8.0))
        throw std::invalid_argument(
            "line_schrodinger_negatives: grid must extend 8 beyond the support");
    const int n = grid.n;
    const double h = 2.0 * grid.t_max / (n + 1);
    ModeSystem sys;
    sys.diag.resize(n);
    sys.off.assign(n - 1, -1.0 / h);
    sys.weight.assign(n, h);
    for (int i = 1; i <= n; ++i) {
        const double t = -grid.t_max + i * h;
        sys.diag[i - 1] = 2.0 / h - w.average(t - 0.5 * h, t + 0.5 * h) * h;
    }

    const int m = count_negative_inertia(sys, 0.0);
    std::vector<double> nus;
    const double floor_e = -(w.depth + 1.0);
    for (int k = 1; k <= m; ++k) {
        double lo = floor_e, hi = 0.0;
        for (int it = 0; it < 90 && hi - lo > 1e-13 * std::max(1.0, w.depth); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (count_negative_inertia(sys, mid) >= k) hi = mid;
            else lo = mid;
        }
        const double nu = -0.5 * (lo + hi);
        if (nu > 1e-9) nus.push_back(nu);
    }
    std::sort(nus.rbegin(), nus.rend());
    return nus;
}

} // namespace bottle::spectral
