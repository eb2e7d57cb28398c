#ifndef BOTTLE_LINE_POTENTIAL_HPP
#define BOTTLE_LINE_POTENTIAL_HPP

#include <cmath>
#include <stdexcept>

namespace bottle {

// Non-negative integrable potential W(t) on the line, from a small catalog:
// zero, a square well of given depth and half-width, or c * sech^2(t).
struct LinePotential {
    enum class Kind { zero, square_well, sech2 };

    Kind kind = Kind::zero;
    double depth = 0.0;        // well depth / sech^2 scale
    double half_width = 0.0;   // square well only

    static LinePotential zero() { return {}; }

    static LinePotential square(double depth, double half_width)
    {
        if (!(depth >= 0.0) || !std::isfinite(depth))
            throw std::invalid_argument("LinePotential: depth must be >= 0");
        if (!(half_width > 0.0) || !std::isfinite(half_width))
            throw std::invalid_argument("LinePotential: half-width must be > 0");
        return {Kind::square_well, depth, half_width};
    }

    static LinePotential sech2(double scale)
    {
        if (!(scale >= 0.0) || !std::isfinite(scale))
            throw std::invalid_argument("LinePotential: scale must be >= 0");
        return {Kind::sech2, scale, 0.0};
    }

    double operator()(double t) const
    {
        switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::square_well: return std::abs(t) <= half_width ? depth : 0.0;
        case Kind::sech2: {
            const double s = 1.0 / std::cosh(t);
            return depth * s * s;
        }
        }
        return 0.0;
    }

    double integral() const
    {
        switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::square_well: return 2.0 * depth * half_width;
        case Kind::sech2: return 2.0 * depth;   // int sech^2 = 2
        }
        return 0.0;
    }

    // exact cell average (1/(t1-t0)) int_t0^t1 W; keeps discretizations
    // second order through the square-well jumps
    double average(double t0, double t1) const
    {
        switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::square_well: {
            const double overlap = std::min(t1, half_width) - std::max(t0, -half_width);
            return overlap > 0.0 ? depth * overlap / (t1 - t0) : 0.0;
        }
        case Kind::sech2:
            return depth * (std::tanh(t1) - std::tanh(t0)) / (t1 - t0);
        }
        return 0.0;
    }

    // radius beyond which W is zero or negligible for grid sizing
    double support_radius() const
    {
        switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::square_well: return half_width;
        case Kind::sech2: return 4.0;
        }
        return 0.0;
    }
};

} // namespace bottle

#endif
