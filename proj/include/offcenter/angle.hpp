#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace offcenter {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Raised when an argument violates a documented parameter range.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a quantity is evaluated at a pole (e.g. a critical point).
class SingularPointError : public std::domain_error {
public:
    explicit SingularPointError(const std::string& what) : std::domain_error(what) {}
};

/// Reduce an angle into the half-open principal range (-pi, pi].
/// reduce_angle(-pi) == pi.
inline double reduce_angle(double x) noexcept {
    if (x > -pi && x <= pi) return x;
    double y = std::fmod(x + pi, two_pi);
    if (y <= 0.0) y += two_pi;
    return y - pi;
}

/// Shortest distance between two points on the circle, in [0, pi].
inline double circular_distance(double a, double b) noexcept {
    return std::abs(reduce_angle(a - b));
}

/// rho: reflection across the real axis.
inline double reflect(double x) noexcept { return reduce_angle(-x); }

} // namespace offcenter
