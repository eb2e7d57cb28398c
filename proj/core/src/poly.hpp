#ifndef BOTTLE_SRC_POLY_HPP
#define BOTTLE_SRC_POLY_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

// Small polynomial kit used for exact extrema of catalog profiles.
namespace bottle::poly {

inline double eval(std::span<const double> c, double x)
{
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;)
        v = v * x + c[i];
    return v;
}

inline std::vector<double> derivative(std::span<const double> c)
{
    std::vector<double> d;
    for (std::size_t i = 1; i < c.size(); ++i)
        d.push_back(c[i] * static_cast<double>(i));
    return d;
}

// Sign-change roots of the polynomial on [lo, hi], isolated recursively by
// the roots of the derivative and polished by bisection.
inline std::vector<double> sign_change_roots(std::span<const double> coeffs,
                                             double lo, double hi)
{
    std::vector<double> c(coeffs.begin(), coeffs.end());
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    std::vector<double> breaks{lo};
    if (c.size() > 2) {
        auto d = derivative(c);
        for (double r : sign_change_roots(d, lo, hi)) breaks.push_back(r);
    }
    breaks.push_back(hi);
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double a = breaks[i], b = breaks[i + 1];
        double fa = eval(c, a), fb = eval(c, b);
        if (fa == 0.0) roots.push_back(a);
        if (fa * fb >= 0.0) continue;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            const double fm = eval(c, mid);
            if (fm == 0.0 || (b - a) < 1e-16 * (1.0 + std::abs(mid))) { a = b = mid; break; }
            if (fa * fm < 0.0) { b = mid; fb = fm; }
            else { a = mid; fa = fm; }
        }
        roots.push_back(0.5 * (a + b));
    }
    double fh = eval(c, hi);
    if (fh == 0.0) roots.push_back(hi);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

inline double min_on(std::span<const double> c, double lo, double hi)
{
    double best = std::min(eval(c, lo), eval(c, hi));
    if (c.size() > 1) {
        auto d = derivative(c);
        for (double r : sign_change_roots(d, lo, hi))
            best = std::min(best, eval(c, r));
    }
    return best;
}

inline double max_on(std::span<const double> c, double lo, double hi)
{
    std::vector<double> neg(c.begin(), c.end());
    for (double& v : neg) v = -v;
    return -min_on(neg, lo, hi);
}

} // namespace bottle::poly

#endif
