#pragma once
//
// Off-center reflection circle map: the incident angle, the lift with its
// derivatives and parameter partials, the Schwarzian derivative, the
// truncated series, and the Blaschke-product form at Omega = pi.
//
// All functions are pure.
//

#include <cmath>
#include <complex>
#include <string>

#include "offcenter/angle.hpp"

namespace offcenter {

namespace detail {

inline void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw DomainError("radius r must satisfy 0 <= r < 1, got " + std::to_string(r));
}

/// 1 - 2 r cos x + r^2 == (cos x - r)^2 + sin^2 x
inline double denom(double r, double cosx) noexcept { return 1.0 - 2.0 * r * cosx + r * r; }

} // namespace detail

/// One member of the family: source point at (r, 0) and deviation angle omega.
struct MapParams {
    double r = 0.0;
    double omega = 0.0;

    /// Validating constructor; throws DomainError outside 0 <= r < 1, -pi < omega <= pi.
    static MapParams make(double r, double omega) {
        detail::require_radius(r);
        if (!(omega > -pi && omega <= pi))
            throw DomainError("omega must satisfy -pi < omega <= pi, got " + std::to_string(omega));
        return MapParams{r, omega};
    }

    /// The two cases where the map commutes with reflection across the real axis.
    [[nodiscard]] bool is_reflection_symmetric() const noexcept { return omega == 0.0 || omega == pi; }
};

/// Value and first three x-derivatives of the lift at one point.
struct DerivBundle {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
};

/// Partials of the lift and of its x-derivative with respect to r.
struct ParamPartials {
    double dR_dr = 0.0;
    double dRprime_dr = 0.0;
};

/// Incident angle iota(x) = Arg(cos x - r + i sin x) - x, re-centered into [-pi/2, pi/2].
inline double incident_angle(double r, double x) {
    detail::require_radius(r);
    double v = std::atan2(std::sin(x), std::cos(x) - r) - x;
    // |iota| < pi/2, so one multiple of 2pi brings any branch back
    v -= two_pi * std::round(v / two_pi);
    return v;
}

/// Partial sum sum_{k=1}^{K} r^k sin(kx) / k of the incident-angle series.
inline double incident_angle_series(double r, double x, int terms) {
    detail::require_radius(r);
    if (terms < 1) throw DomainError("series truncation order must be >= 1");
    double sum = 0.0;
    double rk = 1.0;
    for (int k = 1; k <= terms; ++k) {
        rk *= r;
        sum += rk * std::sin(k * x) / k;
    }
    return sum;
}

/// Arnold-type comparison map x + omega - 2 * (series truncated at K terms).
inline double truncated_lift(const MapParams& p, double x, int terms) {
    return x + p.omega - 2.0 * incident_angle_series(p.r, x, terms);
}

/// The lift R~(x) = x + omega - 2 iota(x); R~(0) = omega and R~(x + 2pi) = R~(x) + 2pi.
inline double lift(const MapParams& p, double x) {
    return x + p.omega - 2.0 * incident_angle(p.r, x);
}

/// The circle map itself, reduced to (-pi, pi].
inline double circle_map(const MapParams& p, double x) { return reduce_angle(lift(p, x)); }

inline DerivBundle lift_derivatives(const MapParams& p, double x) {
    detail::require_radius(p.r);
    const double r = p.r;
    const double c = std::cos(x);
    const double s = std::sin(x);
    const double den = detail::denom(r, c);
    const double k = 2.0 * r * (1.0 - r * r);
    DerivBundle b;
    b.value = lift(p, x);
    b.d1 = (1.0 - 4.0 * r * c + 3.0 * r * r) / den;
    b.d2 = k * s / (den * den);
    b.d3 = k * ((1.0 + r * r) * c - 2.0 * r * (1.0 + s * s)) / (den * den * den);
    return b;
}

/// First derivative only; the hot path of every multiplier computation.
inline double lift_slope(double r, double x) noexcept {
    const double c = std::cos(x);
    return (1.0 - 4.0 * r * c + 3.0 * r * r) / detail::denom(r, c);
}

/// d/dr of R~ and of R~' at fixed x. Independent of omega.
inline ParamPartials lift_param_partials(const MapParams& p, double x) {
    detail::require_radius(p.r);
    const double r = p.r;
    const double c = std::cos(x);
    const double den = detail::denom(r, c);
    return {-2.0 * std::sin(x) / den, (4.0 * r - 2.0 * (1.0 + r * r) * c) / (den * den)};
}

/// d/dr of the multiplier (R~^n)'(x) at fixed base point x, by forward propagation
/// of dx_j/dr along the orbit.
inline double iterate_multiplier_partial(const MapParams& p, double x, int n) {
    if (n < 1) throw DomainError("iterate count must be >= 1");
    double xj = x;
    double dxj = 0.0;   // d x_j / dr
    double prod = 1.0;  // prod_{i<j} R~'(x_i)
    double dprod = 0.0; // d/dr of prod
    for (int j = 0; j < n; ++j) {
        const DerivBundle b = lift_derivatives(p, xj);
        const ParamPartials q = lift_param_partials(p, xj);
        const double dslope = q.dRprime_dr + b.d2 * dxj;
        dprod = dprod * b.d1 + prod * dslope;
        prod *= b.d1;
        dxj = q.dR_dr + b.d1 * dxj;
        xj = b.value;
    }
    return dprod;
}

/// d/dr of (R~^2)'(x): full chain rule including the curvature term R~''(R~x) dR~/dr.
inline double second_iterate_multiplier_partial(const MapParams& p, double x) {
    const DerivBundle bx = lift_derivatives(p, x);
    const ParamPartials qx = lift_param_partials(p, x);
    const DerivBundle by = lift_derivatives(p, bx.value);
    const ParamPartials qy = lift_param_partials(p, bx.value);
    return qx.dRprime_dr * by.d1 + bx.d1 * (qy.dRprime_dr + by.d2 * qx.dR_dr);
}

/// The product expression
///   dR~'/dr(x) R~'(R~x) + R~'(x) dR~'/dr(R~x) dR~/dr(x),
/// which drops the curvature term of the chain rule. At points with R~(x) = +-x it
/// collapses to R~'(x) dR~'/dr(x) (1 + dR~/dr(x)); at the Omega = 0 symmetric
/// 2-cycle with r = 1/sqrt2 it evaluates to 2 sqrt2 - 8.
inline double second_iterate_partial_product_form(const MapParams& p, double x) {
    const DerivBundle bx = lift_derivatives(p, x);
    const ParamPartials qx = lift_param_partials(p, x);
    const double y = bx.value;
    return qx.dRprime_dr * lift_slope(p.r, y) + bx.d1 * lift_param_partials(p, y).dRprime_dr * qx.dR_dr;
}

/// Simplified product R~'(x) dR~'/dr(x) (1 + dR~/dr(x)), valid where R~(x) = +-x mod 2pi.
inline double second_iterate_partial_symmetric_form(const MapParams& p, double x) {
    const ParamPartials q = lift_param_partials(p, x);
    return lift_slope(p.r, x) * q.dRprime_dr * (1.0 + q.dR_dr);
}

/// The cubic H(r, y) whose sign decides the sign of the Schwarzian.
inline double h_cubic(double r, double y) noexcept {
    return -(14.0 * r + 18.0 * r * r * r) + (2.0 + 40.0 * r * r + 6.0 * std::pow(r, 4)) * y +
           2.0 * r * (1.0 - r * r) * y * y - 16.0 * r * r * y * y * y;
}

/// |R~'| at or below this counts as a critical point for the Schwarzian.
inline constexpr double kSingularTol = 1e-12;

/// Closed form r (1-r^2) H(r, cos x) / [(1 - 4r cos x + 3r^2)^2 (1 - 2r cos x + r^2)^2].
inline double schwarzian_closed_form(const MapParams& p, double x) {
    detail::require_radius(p.r);
    const double r = p.r;
    const double c = std::cos(x);
    const double num1 = 1.0 - 4.0 * r * c + 3.0 * r * r;
    if (std::abs(num1) <= kSingularTol) throw SingularPointError("schwarzian evaluated at a critical point");
    const double den = detail::denom(r, c);
    return r * (1.0 - r * r) * h_cubic(r, c) / (num1 * num1 * den * den);
}

/// Schwarzian derivative R~'''/R~' - 3/2 (R~''/R~')^2. Throws SingularPointError
/// where R~'(x) vanishes.
inline double schwarzian(const MapParams& p, double x) {
    const DerivBundle b = lift_derivatives(p, x);
    if (std::abs(b.d1) <= kSingularTol || !std::isfinite(b.d3 / b.d1))
        throw SingularPointError("schwarzian evaluated at a critical point");
    const double q = b.d2 / b.d1;
    return b.d3 / b.d1 - 1.5 * q * q;
}

/// Argument of the Blaschke product -z^2 (1 - r z) / (z - r) at z = e^{ix};
/// equals circle_map at omega = pi.
inline double blaschke_image(double r, double x) {
    detail::require_radius(r);
    const std::complex<double> z = std::polar(1.0, x);
    const std::complex<double> w = -z * z * (1.0 - r * z) / (z - r);
    return reduce_angle(std::arg(w));
}

} // namespace offcenter
