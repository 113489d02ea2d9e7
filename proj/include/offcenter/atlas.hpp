#pragma once
//
// Bifurcation atlas: closed-form boundary curves in the (r, omega) plane,
// symmetric 2-cycle branches, the symmetric 4-cycle quartic, numerically
// solved bifurcation constants, and the fixed-point region classifier.
//

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "offcenter/angle.hpp"
#include "offcenter/map_core.hpp"
#include "offcenter/orbit.hpp"
#include "offcenter/roots.hpp"

namespace offcenter {

struct BranchPair {
    double plus = 0.0;
    double minus = 0.0;
};

/// a_r = arccos r: location of the maximum of iota and of R~' = 1.
inline double angle_a(double r) {
    detail::require_radius(r);
    return std::acos(r);
}

/// b_r = arccos((1 + 2r^2) / (3r)), defined for 1/2 <= r < 1: where R~' = -1.
inline double angle_b(double r) {
    detail::require_radius(r);
    if (r < 0.5) throw DomainError("b_r is defined only for r >= 1/2");
    return std::acos(std::min(1.0, (1.0 + 2.0 * r * r) / (3.0 * r)));
}

/// omega = +-(pi - 2 a_r). Fixed points exist iff |omega| <= pi - 2 a_r.
inline BranchPair saddle_node_curve(double r) {
    const double w = pi - 2.0 * angle_a(r);
    return {w, -w};
}

/// omega = +-2 iota(b_r): the fixed point at +-b_r has multiplier -1.
inline BranchPair period_doubling_fp_curve(double r) {
    if (!(r > 0.5)) throw DomainError("period-doubling curve of fixed points requires r > 1/2");
    const double w = 2.0 * incident_angle(r, angle_b(r));
    return {w, -w};
}

/// Transversality factor 1 + dR~/dr at x = b_r; the period-doubling curve is
/// degenerate where it vanishes.
inline double pd_transversality_factor(double r) {
    return 1.0 + lift_param_partials(MapParams{r, 0.0}, angle_b(r)).dR_dr;
}

struct DegenerateR {
    double value = 0.0;       ///< bisection root of r^4 + 15 r^2 - 4 in (1/2, 1)
    double closed_form = 0.0; ///< sqrt((-15 + sqrt 241) / 2)
    double residual = 0.0;
};

inline DegenerateR degenerate_r() {
    auto poly = [](double r) { return r * r * r * r + 15.0 * r * r - 4.0; };
    const auto root = roots::bisect(poly, 0.5, 1.0, 1e-15);
    return {root.x, std::sqrt((-15.0 + std::sqrt(241.0)) / 2.0), std::abs(poly(root.x))};
}

/// The unique symmetric 2-cycle {+-c} at omega = 0 (r > 1/2) or omega = pi.
struct TwoCycleBranch {
    double c = 0.0;
    double multiplier = 0.0; ///< closed form
    Stability stability = Stability::neutral;
};

inline TwoCycleBranch two_cycle_branch(double r, double omega) {
    detail::require_radius(r);
    TwoCycleBranch b;
    if (omega == 0.0) {
        if (!(r > 0.5)) throw DomainError("omega = 0 has a nontrivial symmetric 2-cycle only for r > 1/2");
        b.c = std::acos(1.0 / (2.0 * r));
        const double s = (1.0 - 3.0 * r * r) / (r * r);
        b.multiplier = s * s;
    } else if (omega == pi) {
        if (!(r > 0.0)) throw DomainError("omega = pi branch formula requires r > 0");
        const double q = std::sqrt(1.0 + 8.0 * r * r);
        b.c = std::acos((1.0 - q) / (4.0 * r));
        const double s = 2.0 * (q + 3.0 * r * r) / (1.0 + q + 2.0 * r * r);
        b.multiplier = s * s;
    } else {
        throw DomainError("symmetric 2-cycles exist only for omega in {0, pi}");
    }
    b.stability = classify_stability(b.multiplier);
    return b;
}

/// f(x) = x - iota(x) - iota(x + pi - 2 iota(x)) + pi; zeros mod pi give
/// symmetric 4-cycles of the omega = pi map.
inline double f_eval(double r, double x) {
    const double i1 = incident_angle(r, x);
    return x - i1 - incident_angle(r, x + pi - 2.0 * i1) + pi;
}

inline double f_prime_at_pi(double r) {
    detail::require_radius(r);
    return (1.0 - 5.0 * r * r) / (1.0 - r * r);
}

// ---------------------------------------------------------------------------
// Symmetric 4-cycle quartic in y = cos(phi)

struct QuarticRoot {
    std::complex<double> y;
    bool is_real = false;
    bool in_unit_interval = false;
    double angle = 0.0;    ///< arccos(y) when in (-1, 1)
    double residual = 0.0; ///< |R~^2(x) + x| mod 2pi at x = angle
    bool validated = false;
};

struct QuarticAnalysis {
    std::array<double, 5> coeffs{}; ///< ascending: c0 + c1 y + ... + c4 y^4
    std::vector<QuarticRoot> roots;

    [[nodiscard]] double eval(double y) const noexcept {
        return (((coeffs[4] * y + coeffs[3]) * y + coeffs[2]) * y + coeffs[1]) * y + coeffs[0];
    }
    [[nodiscard]] std::vector<double> validated_angles() const {
        std::vector<double> out;
        for (const auto& q : roots)
            if (q.validated) out.push_back(q.angle);
        return out;
    }
};

inline constexpr double kQuarticImagTol = 1e-9;
inline constexpr double kQuarticValidationTol = 1e-6;

namespace detail {

inline QuarticAnalysis analyse_quartic(double r, const std::array<double, 5>& c) {
    QuarticAnalysis qa;
    qa.coeffs = c;
    const MapParams p{r, pi};
    for (const auto& y : roots::polynomial_roots(c)) {
        QuarticRoot q;
        q.y = y;
        q.is_real = std::abs(y.imag()) < kQuarticImagTol;
        q.in_unit_interval = q.is_real && y.real() > -1.0 && y.real() < 1.0;
        if (q.in_unit_interval) {
            q.angle = std::acos(y.real());
            const double img = iterate(p, q.angle, 2).back();
            q.residual = circular_distance(img, -q.angle);
            const bool period_two = circular_distance(img, q.angle) < kQuarticValidationTol;
            q.validated = q.residual < kQuarticValidationTol && !period_two;
        }
        qa.roots.push_back(q);
    }
    return qa;
}

} // namespace detail

/// Candidate quartic
///   -1 - 4r^2 + r^4 + 2r(1 + 7r^3) y + 4r^2(2 - 3r^2) y^2 - 24 r^3 y^3 + 16 r^4 y^4.
/// Roots are only candidates; each one is validated dynamically.
inline QuarticAnalysis symmetric4_quartic(double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("symmetric4_quartic requires 0 < r < 1");
    const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
    return detail::analyse_quartic(
        r, {-1.0 - 4.0 * r2 + r4, 2.0 * r * (1.0 + 7.0 * r3), 4.0 * r2 * (2.0 - 3.0 * r2), -24.0 * r3, 16.0 * r4});
}

/// Quartic obtained from R^2(z) = 1/z for the Blaschke form after removing the
/// factors (z - 1)(z + 1). Same as above except the linear coefficient, 2r(1 + 7r^2).
inline QuarticAnalysis symmetric4_quartic_blaschke(double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("symmetric4_quartic requires 0 < r < 1");
    const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
    return detail::analyse_quartic(
        r, {-1.0 - 4.0 * r2 + r4, 2.0 * r * (1.0 + 7.0 * r2), 4.0 * r2 * (2.0 - 3.0 * r2), -24.0 * r3, 16.0 * r4});
}

// ---------------------------------------------------------------------------
// Bifurcation constants

enum class X0Source { candidate_quartic, numeric_cycle };

struct SymmetricFourPoint {
    double x = 0.0; ///< point of the symmetric 4-cycle with cos x in (-1, 0), x > 0
    X0Source source = X0Source::numeric_cycle;
};

/// x0(r) for the omega = pi symmetric 4-cycle. Uses a validated candidate-quartic
/// root in (-1, 0) when there is one, else the numerically found cycle.
inline std::optional<SymmetricFourPoint> symmetric4_point(double r) {
    const QuarticAnalysis qa = symmetric4_quartic(r);
    for (const auto& q : qa.roots)
        if (q.validated && q.y.real() < 0.0) return SymmetricFourPoint{q.angle, X0Source::candidate_quartic};
    const CycleSet cs = find_symmetric_cycles(MapParams{r, pi}, 2, 512);
    for (const auto& c : cs.cycles)
        for (double x : c.points)
            if (x > pi / 2.0) return SymmetricFourPoint{x, X0Source::numeric_cycle};
    return std::nullopt;
}

/// (R~^2)'(x0(r)) at omega = pi.
inline double symmetric4_half_multiplier(double r) {
    const auto x0 = symmetric4_point(r);
    if (!x0) throw DomainError("no symmetric 4-cycle at r = " + std::to_string(r));
    return orbit_jet(MapParams{r, pi}, x0->x, 2).slope;
}

struct BifurcationConstant {
    std::string name;
    double value = 0.0;
    double residual = 0.0;
    bool converged = false;
};

struct ConstantsTable {
    BifurcationConstant pd_2cycle;   ///< multiplier of {0, pi} at omega = pi equals -1
    BifurcationConstant pf_2cycle;   ///< multiplier of {+-c1} at omega = 0 equals +1
    BifurcationConstant pf_4cycle;   ///< (R~^2)'(x0) = 1 on the omega = pi symmetric 4-cycle
    BifurcationConstant degenerate;  ///< 1 + dR~/dr at b_r vanishes
    BifurcationConstant pf4_transversality; ///< d/dr (R~^4)'(x0) at r0; must be nonzero
    double pf4_x0 = 0.0;
    X0Source pf4_x0_source = X0Source::numeric_cycle;

    [[nodiscard]] std::vector<BifurcationConstant> rows() const {
        return {pd_2cycle, pf_2cycle, pf_4cycle, degenerate, pf4_transversality};
    }
};

inline constexpr double kConstantTol = 1e-13;

inline ConstantsTable bifurcation_constants() {
    ConstantsTable t;
    auto solve = [](std::string name, auto&& g, double a, double b) {
        BifurcationConstant c;
        c.name = std::move(name);
        try {
            const auto root = roots::bisect(g, a, b, kConstantTol);
            c.value = root.x;
            c.residual = std::abs(g(root.x));
            c.converged = root.converged;
        } catch (const std::exception&) {
            c.converged = false;
            c.value = std::nan("");
            c.residual = std::nan("");
        }
        return c;
    };

    t.pd_2cycle = solve(
        "pd_2cycle",
        [](double r) { return multiplier(MapParams{r, pi}, {0.0, pi}) + 1.0; }, 0.34, 0.6);
    t.pf_2cycle = solve(
        "pf_2cycle",
        [](double r) {
            const double c1 = std::acos(1.0 / (2.0 * r));
            return multiplier(MapParams{r, 0.0}, {c1, -c1}) - 1.0;
        },
        0.55, 0.9);
    t.pf_4cycle = solve(
        "pf_4cycle", [](double r) { return symmetric4_half_multiplier(r) - 1.0; }, 0.5, 0.65);
    t.degenerate = solve("degenerate_pd", [](double r) { return pd_transversality_factor(r); }, 0.5 + 1e-9, 0.9);

    t.pf4_transversality.name = "pf_4cycle_transversality";
    if (t.pf_4cycle.converged) {
        const double r0 = t.pf_4cycle.value;
        if (const auto x0 = symmetric4_point(r0)) {
            const MapParams p{r0, pi};
            t.pf4_x0 = x0->x;
            t.pf4_x0_source = x0->source;
            t.pf4_transversality.value = iterate_multiplier_partial(p, x0->x, 4);
            t.pf4_transversality.residual = circular_distance(iterate(p, x0->x, 2).back(), -x0->x);
            t.pf4_transversality.converged = t.pf4_transversality.value != 0.0;
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Region classification

enum class Region { invertible, no_fixed_point, fixed_points_repelling_or_saddle, attracting_fixed_point };

constexpr std::string_view to_string(Region c) noexcept {
    switch (c) {
    case Region::invertible: return "invertible";
    case Region::no_fixed_point: return "no_fixed_point";
    case Region::fixed_points_repelling_or_saddle: return "fixed_points_repelling_or_saddle";
    case Region::attracting_fixed_point: return "attracting_fixed_point";
    }
    return "?";
}

struct RegionClass {
    double r = 0.0;
    double omega = 0.0;
    Region region = Region::invertible;
};

inline RegionClass classify_region(double r, double omega) {
    const MapParams p = MapParams::make(r, omega);
    RegionClass rc{r, omega, Region::invertible};
    if (r <= 1.0 / 3.0) return rc;
    const double w = std::abs(omega);
    if (w > saddle_node_curve(r).plus) {
        rc.region = Region::no_fixed_point;
    } else if (r > 0.5) {
        const bool inside = w > period_doubling_fp_curve(r).plus && w < saddle_node_curve(r).plus;
        rc.region = inside ? Region::attracting_fixed_point : Region::fixed_points_repelling_or_saddle;
    } else {
        // b_r undefined: test the multipliers of the fixed points directly
        const CycleSet fp = find_cycles(p, 1, 512);
        const bool any = std::any_of(fp.cycles.begin(), fp.cycles.end(),
                                     [](const CycleRecord& c) { return c.stability == Stability::attracting; });
        rc.region = any ? Region::attracting_fixed_point : Region::fixed_points_repelling_or_saddle;
    }
    return rc;
}

// ---------------------------------------------------------------------------
// Curve sampling

enum class CurveId { saddle_node, period_doubling_fp, symmetric_2cycle_omega0, symmetric_2cycle_omega_pi };

constexpr std::string_view to_string(CurveId c) noexcept {
    switch (c) {
    case CurveId::saddle_node: return "saddle_node";
    case CurveId::period_doubling_fp: return "period_doubling_fp";
    case CurveId::symmetric_2cycle_omega0: return "symmetric_2cycle_omega0";
    case CurveId::symmetric_2cycle_omega_pi: return "symmetric_2cycle_omega_pi";
    }
    return "?";
}

/// A point on a boundary curve or branch: parameters (r, omega) and the orbit
/// point x that bifurcates there (a_r, b_r, c1 or c2 with the branch sign).
struct CurveSample {
    CurveId curve = CurveId::saddle_node;
    char branch = '+';
    double r = 0.0;
    double omega = 0.0;
    double x = 0.0;
};

inline std::vector<CurveSample> sample_curve(CurveId id, double r_min, double r_max, int steps = 400) {
    if (steps < 1) throw DomainError("curve sampling needs at least one step");
    if (!(r_min <= r_max)) throw DomainError("r-min must not exceed r-max");
    auto valid = [id](double r) {
        switch (id) {
        case CurveId::saddle_node: return r > 0.0 && r < 1.0;
        case CurveId::period_doubling_fp: return r > 0.5 && r < 1.0;
        case CurveId::symmetric_2cycle_omega0: return r > 0.5 && r < 1.0;
        case CurveId::symmetric_2cycle_omega_pi: return r > 0.0 && r < 1.0;
        }
        return false;
    };
    if (!valid(r_min) || !valid(r_max))
        throw DomainError(std::string("r range outside the validity interval of curve ") + std::string(to_string(id)));
    std::vector<CurveSample> out;
    out.reserve(2 * static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double r = steps == 1 ? r_min : r_min + (r_max - r_min) * i / (steps - 1);
        switch (id) {
        case CurveId::saddle_node: {
            const auto w = saddle_node_curve(r);
            const double a = angle_a(r);
            out.push_back({id, '+', r, w.plus, a});
            out.push_back({id, '-', r, w.minus, -a});
            break;
        }
        case CurveId::period_doubling_fp: {
            const auto w = period_doubling_fp_curve(r);
            const double b = angle_b(r);
            out.push_back({id, '+', r, w.plus, b});
            out.push_back({id, '-', r, w.minus, -b});
            break;
        }
        case CurveId::symmetric_2cycle_omega0: {
            const double c = two_cycle_branch(r, 0.0).c;
            out.push_back({id, '+', r, 0.0, c});
            out.push_back({id, '-', r, 0.0, -c});
            break;
        }
        case CurveId::symmetric_2cycle_omega_pi: {
            const double c = two_cycle_branch(r, pi).c;
            out.push_back({id, '+', r, pi, c});
            out.push_back({id, '-', r, pi, -c});
            break;
        }
        }
    }
    return out;
}

} // namespace offcenter
