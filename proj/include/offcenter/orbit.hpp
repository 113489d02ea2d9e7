#pragma once
//
// Iteration, periodic-orbit search, multipliers, and stability/symmetry
// classification for the off-center reflection map.
//

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "offcenter/angle.hpp"
#include "offcenter/map_core.hpp"
#include "offcenter/roots.hpp"

namespace offcenter {

enum class Stability { attracting, repelling, neutral };
enum class Symmetry { symmetric, asymmetric, self_twin };

constexpr std::string_view to_string(Stability s) noexcept {
    switch (s) {
    case Stability::attracting: return "attracting";
    case Stability::repelling: return "repelling";
    case Stability::neutral: return "neutral";
    }
    return "?";
}

constexpr std::string_view to_string(Symmetry s) noexcept {
    switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::asymmetric: return "asymmetric";
    case Symmetry::self_twin: return "self_twin";
    }
    return "?";
}

/// A periodic orbit. `points` are in orbit order, rotated so that the smallest
/// reduced angle comes first. `symmetry` is only set when the map commutes with
/// the reflection (omega in {0, pi}); `twin_of` indexes the reflected cycle inside
/// the list the record came from.
struct CycleRecord {
    int period = 0;
    int winding = 0; ///< k in R~^n(x) = x + 2 pi k
    std::vector<double> points;
    double multiplier = 0.0;
    Stability stability = Stability::neutral;
    std::optional<Symmetry> symmetry;
    std::optional<std::size_t> twin_of;
};

struct CriticalPair {
    double x_plus = 0.0;
    double x_minus = 0.0;
};

inline constexpr double kDedupTol = 1e-8;
inline constexpr double kNeutralBand = 1e-8;
inline constexpr double kClosureTol = 1e-9;

inline Stability classify_stability(double multiplier) noexcept {
    const double a = std::abs(multiplier);
    if (a < 1.0 - kNeutralBand) return Stability::attracting;
    if (a > 1.0 + kNeutralBand) return Stability::repelling;
    return Stability::neutral;
}

/// x0, R(x0), ..., R^n(x0), reduced.
inline std::vector<double> iterate(const MapParams& p, double x0, int n) {
    if (n < 0) throw DomainError("iterate: step count must be >= 0");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    double x = reduce_angle(x0);
    out.push_back(x);
    for (int i = 0; i < n; ++i) {
        x = circle_map(p, x);
        out.push_back(x);
    }
    return out;
}

/// x0, R~(x0), ..., R~^n(x0) on the universal cover (no reduction).
inline std::vector<double> iterate_lift(const MapParams& p, double x0, int n) {
    if (n < 0) throw DomainError("iterate: step count must be >= 0");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    double x = x0;
    out.push_back(x);
    for (int i = 0; i < n; ++i) {
        x = lift(p, x);
        out.push_back(x);
    }
    return out;
}

/// Displacement R~^n(x) - x and the derivative (R~^n)'(x).
struct OrbitJet {
    double displacement = 0.0;
    double slope = 1.0;
};

inline OrbitJet orbit_jet(const MapParams& p, double x, int n) {
    OrbitJet j;
    double y = reduce_angle(x);
    for (int i = 0; i < n; ++i) {
        j.slope *= lift_slope(p.r, y);
        const double step = p.omega - 2.0 * incident_angle(p.r, y);
        j.displacement += step;
        y = reduce_angle(y + step);
    }
    return j;
}

inline CriticalPair critical_points(double r) {
    detail::require_radius(r);
    if (!(r > 1.0 / 3.0))
        throw DomainError("critical points exist only for r > 1/3 (the map is a homeomorphism otherwise)");
    const double x = std::acos((1.0 + 3.0 * r * r) / (4.0 * r));
    return {x, -x};
}

/// Product of R~' over the given points.
inline double multiplier(const MapParams& p, const std::vector<double>& points) {
    double m = 1.0;
    for (double x : points) m *= lift_slope(p.r, x);
    return m;
}

/// Hausdorff distance between two finite point sets on the circle.
inline double set_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return (a.empty() && b.empty()) ? 0.0 : pi;
    auto one_way = [](const std::vector<double>& u, const std::vector<double>& v) {
        double worst = 0.0;
        for (double x : u) {
            double best = pi;
            for (double y : v) best = std::min(best, circular_distance(x, y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_way(a, b), one_way(b, a));
}

inline std::vector<double> reflect_points(const std::vector<double>& pts) {
    std::vector<double> out;
    out.reserve(pts.size());
    for (double x : pts) out.push_back(reflect(x));
    return out;
}

struct SymmetryInfo {
    Symmetry symmetry = Symmetry::asymmetric;
    std::vector<double> twin_points; ///< reflected point set (equal to the cycle unless asymmetric)
};

/// Symmetric: point set closed under rho and R~^{n/2}(x) = -x. Self-twin: closed
/// under rho but not symmetric. Otherwise asymmetric, with the reflected set as twin.
/// Requires omega in {0, pi}.
inline SymmetryInfo classify_symmetry(const MapParams& p, const CycleRecord& c, double tol = kDedupTol) {
    if (!p.is_reflection_symmetric())
        throw DomainError("symmetry classification requires omega in {0, pi}");
    SymmetryInfo info;
    info.twin_points = reflect_points(c.points);
    if (c.points.empty()) return info;
    const bool closed = set_distance(c.points, info.twin_points) < tol;
    if (!closed) {
        info.symmetry = Symmetry::asymmetric;
        return info;
    }
    if (c.period % 2 == 0) {
        const double x0 = c.points.front();
        const double half = iterate(p, x0, c.period / 2).back();
        if (circular_distance(half, -x0) < tol && circular_distance(half, x0) >= tol) {
            info.symmetry = Symmetry::symmetric;
            return info;
        }
    }
    info.symmetry = Symmetry::self_twin;
    return info;
}

namespace detail {

/// Few safeguarded Newton steps on R~^n(x) - x - 2 pi k.
inline double polish_cycle_point(const MapParams& p, double x, int n, int k) {
    auto resid = [&](double z) {
        const OrbitJet j = orbit_jet(p, z, n);
        return std::pair{j.displacement - two_pi * k, j.slope - 1.0};
    };
    auto [f, df] = resid(x);
    for (int i = 0; i < 8 && std::abs(f) > 1e-15; ++i) {
        if (df == 0.0) break;
        const double xn = x - f / df;
        auto [fn, dfn] = resid(xn);
        if (!(std::abs(fn) < std::abs(f))) break;
        x = xn;
        f = fn;
        df = dfn;
    }
    return reduce_angle(x);
}

/// Smallest d dividing n with R^d(x) = x, scanning divisors in ascending order.
inline int prime_period(const MapParams& p, double x, int n, double tol = kClosureTol) {
    double y = x;
    for (int d = 1; d < n; ++d) {
        y = circle_map(p, y);
        if (n % d == 0 && circular_distance(y, x) < tol) return d;
    }
    return n;
}

inline void link_twins(const MapParams& p, std::vector<CycleRecord>& cycles) {
    if (!p.is_reflection_symmetric()) return;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].symmetry != Symmetry::asymmetric) continue;
        const auto refl = reflect_points(cycles[i].points);
        for (std::size_t j = 0; j < cycles.size(); ++j) {
            if (j != i && cycles[j].period == cycles[i].period &&
                set_distance(cycles[j].points, refl) < 1e-7) {
                cycles[i].twin_of = j;
                break;
            }
        }
    }
}

} // namespace detail

/// Build a cycle record from one point of a period-n orbit with winding k:
/// the orbit points are polished individually, rotated to start at the smallest
/// angle, and classified.
inline CycleRecord make_cycle(const MapParams& p, double x, int n, int k) {
    CycleRecord c;
    c.period = n;
    c.winding = k;
    c.points.reserve(static_cast<std::size_t>(n));
    double y = detail::polish_cycle_point(p, x, n, k);
    for (int i = 0; i < n; ++i) {
        c.points.push_back(detail::polish_cycle_point(p, y, n, k));
        y = circle_map(p, c.points.back());
    }
    const auto first = std::min_element(c.points.begin(), c.points.end());
    std::rotate(c.points.begin(), first, c.points.end());
    c.multiplier = multiplier(p, c.points);
    c.stability = classify_stability(c.multiplier);
    if (p.is_reflection_symmetric()) c.symmetry = classify_symmetry(p, c).symmetry;
    return c;
}

struct CycleSet {
    std::vector<CycleRecord> cycles;
    /// Two distinct roots landed within one grid cell; others may be hiding at this density.
    bool unresolved_roots = false;
};

namespace detail {

struct Bracketed {
    double x;
    int k;
};

inline bool on_known_cycle(const std::vector<CycleRecord>& cycles, double x) {
    for (const auto& c : cycles)
        for (double y : c.points)
            if (circular_distance(x, y) < kDedupTol) return true;
    return false;
}

inline bool flag_close_roots(std::vector<double> xs, double cell) {
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double d = xs[i] - xs[i - 1];
        if (d > kDedupTol && d < cell) return true;
    }
    if (xs.size() > 1) {
        const double wrap = xs.front() + two_pi - xs.back();
        if (wrap > kDedupTol && wrap < cell) return true;
    }
    return false;
}

/// Sign-change bracketing of g(x) - 2 pi k over the node values, for every k in
/// [-kmax, kmax], followed by hybrid refinement.
template <class Value, class FDF>
std::vector<Bracketed> bracket_and_refine(const std::vector<double>& nodes, Value&& value, FDF&& fdf, int kmax) {
    std::vector<double> g(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) g[i] = value(nodes[i]);
    std::vector<Bracketed> found;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double a = nodes[i];
        const double b = nodes[i + 1];
        const double lo = std::min(g[i], g[i + 1]);
        const double hi = std::max(g[i], g[i + 1]);
        const int k_lo = std::max(-kmax, static_cast<int>(std::ceil(lo / two_pi)));
        const int k_hi = std::min(kmax, static_cast<int>(std::floor(hi / two_pi)));
        for (int k = k_lo; k <= k_hi; ++k) {
            const double ga = g[i] - two_pi * k;
            const double gb = g[i + 1] - two_pi * k;
            if (ga == 0.0) {
                found.push_back({a, k});
            } else if ((ga < 0.0) != (gb < 0.0) && gb != 0.0) {
                auto shifted = [&](double x) {
                    auto [v, dv] = fdf(x);
                    return std::pair{v - two_pi * k, dv};
                };
                const auto res = roots::refine_bracketed(shifted, a, b);
                found.push_back({res.x, k});
            }
        }
    }
    if (!g.empty()) {
        const double last = g.back() / two_pi;
        const int k = static_cast<int>(std::lround(last));
        if (std::abs(k) <= kmax && g.back() == two_pi * k) found.push_back({nodes.back(), k});
    }
    return found;
}

} // namespace detail

/// All prime-period-n orbits: solutions of R~^n(x) = x + 2 pi k, |k| <= n, found by
/// sign changes on a uniform grid of grid*n cells over (-pi, pi].
inline CycleSet find_cycles(const MapParams& p, int n, int grid = 2048) {
    if (n < 1) throw DomainError("find_cycles: period must be >= 1");
    if (grid < 512) throw DomainError("find_cycles: grid density must be >= 512");
    const std::size_t cells = static_cast<std::size_t>(grid) * static_cast<std::size_t>(n);
    const double h = two_pi / static_cast<double>(cells);
    // nodes -pi+h, ..., pi, pi+h; the last closes the circle (displacement is 2pi-periodic)
    std::vector<double> nodes(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) nodes[i] = -pi + static_cast<double>(i + 1) * h;

    auto value = [&](double x) { return orbit_jet(p, x, n).displacement; };
    auto fdf = [&](double x) {
        const OrbitJet j = orbit_jet(p, x, n);
        return std::pair{j.displacement, j.slope - 1.0};
    };
    const auto found = detail::bracket_and_refine(nodes, value, fdf, n);

    CycleSet out;
    std::vector<double> distinct;
    for (const auto& [x, k] : found) {
        const double xr = reduce_angle(x);
        if (std::none_of(distinct.begin(), distinct.end(),
                         [&](double y) { return circular_distance(xr, y) < kDedupTol; }))
            distinct.push_back(xr);
        if (detail::on_known_cycle(out.cycles, xr)) continue;
        if (detail::prime_period(p, xr, n) != n) continue;
        out.cycles.push_back(make_cycle(p, xr, n, k));
    }
    out.unresolved_roots = detail::flag_close_roots(distinct, h);
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const CycleRecord& a, const CycleRecord& b) { return a.points.front() < b.points.front(); });
    detail::link_twins(p, out.cycles);
    return out;
}

/// Symmetric orbits of period 2m: solutions of R~^m(x) + x = 2 pi k with
/// R^m(x) != x. Requires omega in {0, pi}.
inline CycleSet find_symmetric_cycles(const MapParams& p, int half_period, int grid = 2048) {
    if (!p.is_reflection_symmetric())
        throw DomainError("symmetric cycles require omega in {0, pi} (the map commutes with reflection only there)");
    if (half_period < 1) throw DomainError("find_symmetric_cycles: half period must be >= 1");
    if (grid < 512) throw DomainError("find_symmetric_cycles: grid density must be >= 512");
    const int m = half_period;
    const std::size_t cells = static_cast<std::size_t>(grid) * static_cast<std::size_t>(2 * m);
    const double h = two_pi / static_cast<double>(cells);
    std::vector<double> nodes(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) nodes[i] = -pi + static_cast<double>(i) * h;
    nodes.back() = pi;

    auto value = [&](double x) { return orbit_jet(p, x, m).displacement + 2.0 * x; };
    auto fdf = [&](double x) {
        const OrbitJet j = orbit_jet(p, x, m);
        return std::pair{j.displacement + 2.0 * x, j.slope + 1.0};
    };
    const auto found = detail::bracket_and_refine(nodes, value, fdf, m + 1);

    CycleSet out;
    std::vector<double> distinct;
    for (const auto& [x, k] : found) {
        const double xr = reduce_angle(x);
        const double image = iterate(p, xr, m).back();
        if (circular_distance(image, xr) < kClosureTol) continue;
        if (std::none_of(distinct.begin(), distinct.end(),
                         [&](double y) { return circular_distance(xr, y) < kDedupTol; }))
            distinct.push_back(xr);
        if (detail::on_known_cycle(out.cycles, xr)) continue;
        if (detail::prime_period(p, xr, 2 * m) != 2 * m) continue;
        const int winding = static_cast<int>(std::lround(orbit_jet(p, xr, 2 * m).displacement / two_pi));
        CycleRecord c = make_cycle(p, xr, 2 * m, winding);
        if (c.symmetry != Symmetry::symmetric) continue;
        out.cycles.push_back(std::move(c));
    }
    out.unresolved_roots = detail::flag_close_roots(distinct, h);
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const CycleRecord& a, const CycleRecord& b) { return a.points.front() < b.points.front(); });
    return out;
}

/// Iterate `transient` times, then record `samples` further iterates.
inline std::vector<double> asymptotic_orbit(const MapParams& p, double x0, int transient, int samples) {
    if (transient < 0) throw DomainError("asymptotic_orbit: transient must be >= 0");
    if (samples < 1) throw DomainError("asymptotic_orbit: samples must be >= 1");
    double x = reduce_angle(x0);
    for (int i = 0; i < transient; ++i) x = circle_map(p, x);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        x = circle_map(p, x);
        out.push_back(x);
    }
    return out;
}

/// Smallest p <= cap such that consecutive p-blocks of `samples` agree within tol.
inline std::optional<int> detect_period(const std::vector<double>& samples, int cap = 64, double tol = kClosureTol) {
    const int n = static_cast<int>(samples.size());
    for (int per = 1; per <= cap && 2 * per <= n; ++per) {
        bool ok = true;
        for (int i = 0; i + per < n && ok; ++i)
            ok = circular_distance(samples[static_cast<std::size_t>(i + per)], samples[static_cast<std::size_t>(i)]) < tol;
        if (ok) return per;
    }
    return std::nullopt;
}

struct AttractorOptions {
    int transient = 10000;
    int samples = 200;
    int period_cap = 64;
    double tolerance = kClosureTol;
};

enum class Seed { crit_plus = 0, crit_minus = 1 };

struct AttractorCensus {
    std::vector<CycleRecord> cycles;
    std::array<std::optional<std::size_t>, 2> seed_cycle; ///< which cycle each critical orbit reached
    std::array<std::vector<double>, 2> tails;             ///< asymptotic samples per seed
    bool aperiodic_at_resolution = false;

    /// Attractor count with a self-twin cycle counted twice.
    [[nodiscard]] int multiplicity_count() const noexcept {
        int n = 0;
        for (const auto& c : cycles) n += (c.symmetry == Symmetry::self_twin) ? 2 : 1;
        return n;
    }
};

/// Follow both critical orbits and extract the attracting cycles they settle on.
inline AttractorCensus detect_attractors(const MapParams& p, const AttractorOptions& opt = {}) {
    const CriticalPair crit = critical_points(p.r);
    AttractorCensus census;
    const std::array<double, 2> seeds{crit.x_plus, crit.x_minus};
    for (std::size_t s = 0; s < 2; ++s) {
        census.tails[s] = asymptotic_orbit(p, seeds[s], opt.transient, opt.samples);
        const auto per = detect_period(census.tails[s], opt.period_cap, opt.tolerance);
        if (!per) {
            census.aperiodic_at_resolution = true;
            continue;
        }
        const double x = census.tails[s].back();
        const int k = static_cast<int>(std::lround(orbit_jet(p, x, *per).displacement / two_pi));
        CycleRecord c = make_cycle(p, x, *per, k);
        for (std::size_t i = 0; i < census.cycles.size(); ++i) {
            if (census.cycles[i].period == c.period && set_distance(census.cycles[i].points, c.points) < 1e-7) {
                census.seed_cycle[s] = i;
                break;
            }
        }
        if (!census.seed_cycle[s]) {
            census.cycles.push_back(std::move(c));
            census.seed_cycle[s] = census.cycles.size() - 1;
        }
    }
    detail::link_twins(p, census.cycles);
    return census;
}

} // namespace offcenter
