#pragma once
//
// Brute-force reference computations. Nothing here uses the closed-form
// derivative, partial, curve or branch formulas; everything is built from
// `lift`, `circle_map` and the Blaschke form by sampling and differencing.
//

#include <cmath>
#include <cstddef>
#include <vector>

#include "offcenter/angle.hpp"
#include "offcenter/map_core.hpp"

namespace offcenter::oracle {

/// Central difference (f(x+h) - f(x-h)) / 2h.
template <class F>
double central_diff(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Schwarzian from lift samples alone (five-point stencils).
inline double fd_schwarzian(const MapParams& p, double x, double h = 1e-3) {
    auto f = [&](double t) { return lift(p, t); };
    const double fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
    const double d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
    const double d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
    const double d3 = (-fm2 + 2 * fm1 - 2 * fp1 + fp2) / (2 * h * h * h);
    return d3 / d1 - 1.5 * (d2 / d1) * (d2 / d1);
}

/// R~^n(x) by plain repeated lifting.
inline double lift_n(const MapParams& p, double x, int n) {
    for (int i = 0; i < n; ++i) x = lift(p, x);
    return x;
}

namespace detail {

template <class G>
double bisect_cell(G&& g, double a, double b, double fa) {
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = g(mid);
        if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

/// Sign changes of x -> reduce(R~^n(x) - x) on a uniform grid over (-pi, pi],
/// ignoring the +-pi wrap jumps, each bisected to full precision. Includes
/// points whose prime period divides n.
inline std::vector<double> cycle_sign_changes(const MapParams& p, int n, std::size_t points, double offset = 0.37) {
    const double h = two_pi / static_cast<double>(points);
    std::vector<double> out;
    auto g = [&](double x) { return reduce_angle(lift_n(p, x, n) - x); };
    double xa = -pi + offset * h;
    double ga = g(xa);
    for (std::size_t i = 1; i <= points; ++i) {
        const double xb = -pi + (static_cast<double>(i) + offset) * h;
        const double gb = g(xb);
        if ((ga < 0.0) != (gb < 0.0) && std::abs(gb - ga) < pi)
            out.push_back(reduce_angle(detail::bisect_cell(g, xa, xb, ga)));
        xa = xb;
        ga = gb;
    }
    return out;
}

/// Number of solutions of omega = 2 iota(x) (fixed points with zero winding),
/// counted as sign changes of lift(x) - x on a uniform grid.
inline int fixed_point_count(const MapParams& p, std::size_t points) {
    const double h = two_pi / static_cast<double>(points);
    auto g = [&](double x) { return lift(p, x) - x; };
    int count = 0;
    double ga = g(-pi + 0.5 * h);
    for (std::size_t i = 1; i <= points; ++i) {
        const double gb = g(-pi + (static_cast<double>(i) + 0.5) * h);
        if ((ga < 0.0) != (gb < 0.0)) ++count;
        ga = gb;
    }
    return count;
}

/// Roots of reduce(R~^m(x) + x) on a grid, bisected to full precision.
inline std::vector<double> symmetric_points_scan(const MapParams& p, int m, std::size_t points) {
    auto g = [&](double x) { return reduce_angle(lift_n(p, x, m) + x); };
    const double h = two_pi / static_cast<double>(points);
    std::vector<double> out;
    double xa = -pi + 0.5 * h;
    double ga = g(xa);
    for (std::size_t i = 1; i < points; ++i) {
        const double xb = -pi + (static_cast<double>(i) + 0.5) * h;
        const double gb = g(xb);
        if ((ga < 0.0) != (gb < 0.0) && std::abs(gb - ga) < pi) {
            out.push_back(detail::bisect_cell(g, xa, xb, ga));
        }
        xa = xb;
        ga = gb;
    }
    return out;
}

} // namespace offcenter::oracle
