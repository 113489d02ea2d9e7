#pragma once
//
// Verification harness: named numerical checks of every structural claim about
// the off-center reflection family, each comparing an implementation path
// against an independent oracle. Report rows come out in registration order.
//

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "offcenter/angle.hpp"
#include "offcenter/atlas.hpp"
#include "offcenter/csv.hpp"
#include "offcenter/map_core.hpp"
#include "offcenter/oracles.hpp"
#include "offcenter/orbit.hpp"

namespace offcenter::verify {

inline constexpr std::uint64_t kDefaultSeed = 0x0FF5E7;

enum class Compare {
    within,       ///< |measured - expected| <= tolerance
    greater_than, ///< measured > expected
};

struct VerifyResult {
    std::string check_id;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Compare compare = Compare::within;
    bool pass = false;
    long long runtime_ms = 0;
};

inline bool evaluate(double measured, double expected, double tolerance, Compare c) {
    switch (c) {
    case Compare::within: return std::abs(measured - expected) <= tolerance;
    case Compare::greater_than: return measured > expected;
    }
    return false;
}

/// What a check returns before timing and status are attached.
struct Measurement {
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Compare compare = Compare::within;
};

using Rng = std::mt19937_64;

struct Context {
    Rng rng;
    /// Constants are expensive-ish and shared by several checks.
    const ConstantsTable& constants() {
        if (!constants_) constants_ = bifurcation_constants();
        return *constants_;
    }

private:
    std::optional<ConstantsTable> constants_;
};

struct Check {
    std::string id;
    std::function<Measurement(Context&)> run;
};

namespace detail {

inline double uniform(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline double rel_dev(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline Measurement count_violations(int violations) { return {static_cast<double>(violations), 0.0, 0.0}; }

inline bool near_critical(double r, double x, double tol) {
    if (r <= 1.0 / 3.0) return false;
    const CriticalPair c = critical_points(r);
    return circular_distance(x, c.x_plus) < tol || circular_distance(x, c.x_minus) < tol;
}

inline std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

/// A 2-cycle whose points are individually fixed by the reflection: {0, pi}.
inline bool has_self_twin_two_cycle(const MapParams& p) {
    for (const auto& c : find_cycles(p, 2, 1024).cycles) {
        if (std::all_of(c.points.begin(), c.points.end(),
                        [](double x) { return circular_distance(x, -x) < 1e-8; }))
            return true;
    }
    return false;
}

/// 2-cycles of the form {a, -a} with a not in {0, pi}.
inline int symmetric_two_cycle_count(const MapParams& p) {
    int n = 0;
    for (const auto& c : find_cycles(p, 2, 1024).cycles) {
        if (c.points.size() == 2 && circular_distance(c.points[0], -c.points[1]) < 1e-8 &&
            circular_distance(c.points[0], -c.points[0]) > 1e-8)
            ++n;
    }
    return n;
}

inline bool one_symmetric_attractor(const AttractorCensus& a, int period) {
    return a.cycles.size() == 1 && a.cycles[0].period == period && a.cycles[0].symmetry == Symmetry::symmetric &&
           a.cycles[0].stability == Stability::attracting;
}

inline bool twin_attractors(const AttractorCensus& a, int period, double reflect_tol) {
    if (a.cycles.size() != 2) return false;
    const auto& c0 = a.cycles[0];
    const auto& c1 = a.cycles[1];
    return c0.period == period && c1.period == period && c0.symmetry == Symmetry::asymmetric &&
           c1.symmetry == Symmetry::asymmetric && c0.twin_of == 1u && c1.twin_of == 0u &&
           set_distance(reflect_points(c0.points), c1.points) < reflect_tol &&
           std::abs(c0.multiplier - c1.multiplier) <= 1e-9 * std::max(1.0, std::abs(c0.multiplier));
}

} // namespace detail

/// Every registered check, in report order.
inline std::vector<Check> registry() {
    using namespace detail;
    std::vector<Check> checks;
    auto add = [&](std::string id, std::function<Measurement(Context&)> f) {
        checks.push_back({std::move(id), std::move(f)});
    };

    // --- negative Schwarzian -------------------------------------------------
    add("prop1.schwarzian_sign", [](Context& ctx) {
        int negative = 0;
        const int total = 10000;
        for (int i = 0; i < total; ++i) {
            double r = 0.0, x = 0.0;
            do {
                r = uniform(ctx.rng, 1.0 / 3.0 + 1e-3, 0.99);
                x = uniform(ctx.rng, -pi, pi);
            } while (near_critical(r, x, 1e-3));
            if (schwarzian(MapParams{r, uniform(ctx.rng, -pi, pi)}, x) < 0.0) ++negative;
        }
        return Measurement{static_cast<double>(negative), static_cast<double>(total), 0.0};
    });
    add("prop1.schwarzian_closed_form", [](Context& ctx) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const MapParams p{uniform(ctx.rng, 0.01, 0.99), uniform(ctx.rng, -pi, pi)};
            const double x = uniform(ctx.rng, -pi, pi);
            if (std::abs(lift_slope(p.r, x)) < 1e-3) continue;
            const double a = schwarzian(p, x);
            worst = std::max(worst, std::abs(a - schwarzian_closed_form(p, x)) / std::max(1e-300, std::abs(a)));
        }
        return Measurement{worst, 0.0, 1e-9};
    });
    add("prop1.schwarzian_vs_fd", [](Context& ctx) {
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const MapParams p{uniform(ctx.rng, 0.34, 0.9), uniform(ctx.rng, -pi, pi)};
            const double x = uniform(ctx.rng, -pi, pi);
            if (std::abs(lift_slope(p.r, x)) < 0.05) continue;
            worst = std::max(worst, rel_dev(oracle::fd_schwarzian(p, x), schwarzian(p, x)));
        }
        return Measurement{worst, 0.0, 1e-3};
    });
    add("prop1.h_endpoints", [](Context&) {
        double worst = 0.0;
        for (double r : linspace(0.0, 0.99, 100)) {
            worst = std::max(worst, std::abs(h_cubic(r, -1.0) + 2.0 * std::pow(1.0 + r, 3) * (1.0 + 3.0 * r)));
            worst = std::max(worst, std::abs(h_cubic(r, 1.0) - 2.0 * std::pow(1.0 - r, 3) * (1.0 - 3.0 * r)));
        }
        return Measurement{worst, 0.0, 1e-10};
    });

    // --- saddle-node boundary -------------------------------------------------
    add("prop2.saddle_node_grid", [](Context&) {
        int bad = 0;
        for (double r : linspace(0.05, 0.95, 50)) {
            const double w = saddle_node_curve(r).plus;
            if (oracle::fixed_point_count(MapParams{r, w - 0.01}, 100000) != 2) ++bad;
            if (w + 0.01 <= pi && oracle::fixed_point_count(MapParams{r, w + 0.01}, 100000) != 0) ++bad;
        }
        return count_violations(bad);
    });
    add("prop2.tangency_at_a_r", [](Context&) {
        double worst = 0.0;
        for (double r : linspace(0.01, 0.99, 99)) {
            const DerivBundle b = lift_derivatives(MapParams{r, saddle_node_curve(r).plus}, angle_a(r));
            worst = std::max(worst, std::abs(b.d1 - 1.0));
            if (b.d2 == 0.0) worst = 1.0;
        }
        return Measurement{worst, 0.0, 1e-12};
    });

    // --- attracting fixed-point corridor --------------------------------------
    add("corollary.corridor", [](Context&) {
        int bad = 0;
        for (double r : linspace(0.51, 0.99, 50)) {
            const double lo = period_doubling_fp_curve(r).plus;
            const double hi = saddle_node_curve(r).plus;
            for (double w : linspace(-pi + 0.01, pi, 41)) {
                const double a = std::abs(w);
                if (std::abs(a - lo) < 1e-3 || std::abs(a - hi) < 1e-3) continue;
                const MapParams p{r, w};
                const auto fps = find_cycles(p, 1, 512).cycles;
                const bool numeric = std::any_of(fps.begin(), fps.end(), [](const CycleRecord& c) {
                    return c.stability == Stability::attracting;
                });
                const bool claimed = classify_region(r, w).region == Region::attracting_fixed_point;
                if (numeric != claimed) ++bad;
            }
        }
        return count_violations(bad);
    });
    add("corollary.degenerate_r", [](Context&) {
        const DegenerateR d = degenerate_r();
        return Measurement{d.value, d.closed_form, 1e-10};
    });
    add("corollary.partials_at_b_r", [](Context&) {
        double worst = 0.0;
        for (double r : linspace(0.51, 0.99, 49)) {
            const ParamPartials q = lift_param_partials(MapParams{r, 0.0}, angle_b(r));
            worst = std::max(worst, rel_dev(q.dRprime_dr, -6.0 * (1.0 - 2.0 * r * r) / (r * (1.0 - r * r))));
            worst = std::max(worst,
                             rel_dev(q.dR_dr, -2.0 * std::sqrt(4.0 * r * r - 1.0) / (r * std::sqrt(1.0 - r * r))));
        }
        return Measurement{worst, 0.0, 1e-9};
    });

    // --- partial derivatives ---------------------------------------------------
    add("lemma.fd_consistency", [](Context& ctx) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double r = uniform(ctx.rng, 0.0, 0.95);
            const double w = uniform(ctx.rng, -pi, pi);
            const double x = uniform(ctx.rng, -pi, pi);
            const MapParams p{r, w};
            const DerivBundle b = lift_derivatives(p, x);
            const double h = 1e-5;
            worst = std::max(worst, rel_dev(oracle::central_diff([&](double t) { return lift(p, t); }, x, h), b.d1));
            worst = std::max(worst, rel_dev(oracle::central_diff(
                                                [&](double t) { return lift_derivatives(p, t).d1; }, x, h),
                                            b.d2));
            worst = std::max(worst, rel_dev(oracle::central_diff(
                                                [&](double t) { return lift_derivatives(p, t).d2; }, x, h),
                                            b.d3));
            if (r < 1e-5) continue; // r-differences need r - h >= 0
            const ParamPartials q = lift_param_partials(p, x);
            worst = std::max(worst, rel_dev(oracle::central_diff(
                                                [&](double s) { return lift(MapParams{s, w}, x); }, r, h),
                                            q.dR_dr));
            worst = std::max(worst, rel_dev(oracle::central_diff(
                                                [&](double s) { return lift_derivatives(MapParams{s, w}, x).d1; }, r,
                                                h),
                                            q.dRprime_dr));
            const double second = oracle::central_diff(
                [&](double s) {
                    const MapParams ps{s, w};
                    const double y = lift(ps, x);
                    return lift_derivatives(ps, y).d1 * lift_derivatives(ps, x).d1;
                },
                r, 1e-6);
            worst = std::max(worst, rel_dev(second, second_iterate_multiplier_partial(p, x)));
        }
        return Measurement{worst, 0.0, 1e-5};
    });
    add("lemma.product_form_at_c1", [](Context&) {
        const double r = 1.0 / std::sqrt(2.0);
        return Measurement{second_iterate_partial_product_form(MapParams{r, 0.0}, pi / 4.0), 2.0 * std::sqrt(2.0) - 8.0,
                           1e-9};
    });
    add("lemma.symmetric_simplification", [](Context&) {
        double worst = 0.0;
        for (double r : linspace(0.52, 0.98, 24)) {
            const double c1 = two_cycle_branch(r, 0.0).c; // R~(c1) = -c1
            const double b = angle_b(r);                  // fixed point on the pd curve
            const MapParams p0{r, 0.0};
            const MapParams pb{r, period_doubling_fp_curve(r).plus};
            worst = std::max(worst, rel_dev(second_iterate_partial_product_form(p0, c1),
                                            second_iterate_partial_symmetric_form(p0, c1)));
            worst = std::max(worst, rel_dev(second_iterate_partial_product_form(pb, b),
                                            second_iterate_partial_symmetric_form(pb, b)));
        }
        return Measurement{worst, 0.0, 1e-10};
    });

    // --- attractor census ------------------------------------------------------
    add("prop3.attractor_census", [](Context& ctx) {
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            const double r = uniform(ctx.rng, 1.0 / 3.0 + 1e-6, 0.999);
            const double w = (ctx.rng() & 1u) ? pi : 0.0;
            if (detect_attractors(MapParams{r, w}).multiplicity_count() > 2) ++bad;
        }
        return count_violations(bad);
    });
    add("prop3.symmetric_attracts_both", [](Context& ctx) {
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            const double r = uniform(ctx.rng, 1.0 / 3.0 + 1e-6, 0.999);
            const double w = (ctx.rng() & 1u) ? pi : 0.0;
            const AttractorCensus a = detect_attractors(MapParams{r, w});
            for (const auto& c : a.cycles) {
                if (c.symmetry != Symmetry::symmetric) continue;
                for (const auto& tail : a.tails)
                    if (set_distance(tail, c.points) >= 1e-6) ++bad;
            }
        }
        return count_violations(bad);
    });

    // --- self-twin 2-cycle -----------------------------------------------------
    add("prop4.self_twin_only_at_pi", [](Context&) {
        int bad = 0;
        for (double r : {0.4, 0.6, 0.8}) {
            for (int j = 0; j < 64; ++j) {
                const double w = -pi + two_pi * (j + 1) / 64.0; // includes 0 and pi
                const bool found = has_self_twin_two_cycle(MapParams{r, w == pi ? pi : w});
                if (found != (w == pi)) ++bad;
            }
        }
        return count_violations(bad);
    });
    add("prop4.stability_threshold", [](Context&) {
        int bad = 0;
        const double rc = 1.0 / std::sqrt(5.0);
        for (double r : linspace(0.01, 0.99, 99)) {
            if (std::abs(r - rc) < 1e-3) continue;
            const Stability s = classify_stability(multiplier(MapParams{r, pi}, {0.0, pi}));
            if ((s == Stability::attracting) != (r < rc)) ++bad;
        }
        return count_violations(bad);
    });

    // --- symmetric 2-cycles ----------------------------------------------------
    add("prop5.symmetric_2cycle_only_at_0_pi", [](Context&) {
        int bad = 0;
        for (int j = 0; j < 64; ++j) {
            const double w = -pi + two_pi * (j + 1) / 64.0;
            const int n = symmetric_two_cycle_count(MapParams{0.6, w});
            const int expected = (w == 0.0 || w == pi) ? 1 : 0;
            if (n != expected) ++bad;
        }
        return count_violations(bad);
    });
    add("prop5.c1_formula", [](Context&) {
        double worst = 0.0;
        for (double r : linspace(0.52, 0.98, 24)) {
            const auto cs = find_symmetric_cycles(MapParams{r, 0.0}, 1).cycles;
            if (cs.size() != 1) return Measurement{1.0, 0.0, 1e-9};
            for (double x : cs[0].points) worst = std::max(worst, std::abs(std::cos(x) - 1.0 / (2.0 * r)));
        }
        return Measurement{worst, 0.0, 1e-9};
    });
    add("prop5.c2_formula", [](Context&) {
        double worst = 0.0;
        for (double r : linspace(0.05, 0.98, 32)) {
            const auto cs = find_symmetric_cycles(MapParams{r, pi}, 1).cycles;
            if (cs.size() != 1) return Measurement{1.0, 0.0, 1e-9};
            const double q = std::sqrt(1.0 + 8.0 * r * r);
            for (double x : cs[0].points) {
                const double c = std::cos(x);
                worst = std::max(worst, std::abs(c - (1.0 - q) / (4.0 * r)));
                worst = std::max(worst, std::abs(2.0 * r * c * c - c - r));
            }
        }
        return Measurement{worst, 0.0, 1e-9};
    });
    add("prop5.c2_repelling", [](Context&) {
        double lowest = 1e300;
        for (double r : linspace(0.05, 0.98, 32)) {
            for (const auto& c : find_symmetric_cycles(MapParams{r, pi}, 1).cycles)
                lowest = std::min(lowest, c.multiplier);
        }
        return Measurement{lowest, 1.0, 0.0, Compare::greater_than};
    });
    add("prop5.c1_attracting_window", [](Context&) {
        int bad = 0;
        const double rc = 1.0 / std::sqrt(2.0);
        for (double r : linspace(0.505, 0.98, 40)) {
            if (std::abs(r - rc) < 1e-3) continue;
            for (const auto& c : find_symmetric_cycles(MapParams{r, 0.0}, 1).cycles)
                if ((c.stability == Stability::attracting) != (r < rc)) ++bad;
        }
        return count_violations(bad);
    });

    // --- period doubling and pitchfork constants --------------------------------
    add("prop6.pd_at_inv_sqrt5", [](Context& ctx) {
        return Measurement{ctx.constants().pd_2cycle.value, 1.0 / std::sqrt(5.0), 1e-9};
    });
    add("prop6.pf_at_inv_sqrt2", [](Context& ctx) {
        return Measurement{ctx.constants().pf_2cycle.value, 1.0 / std::sqrt(2.0), 1e-9};
    });
    add("prop6.pd_phenomenology", [](Context&) {
        const double rc = 1.0 / std::sqrt(5.0);
        int bad = 0;
        const AttractorCensus before = detect_attractors(MapParams{rc - 0.02, pi});
        if (!(before.cycles.size() == 1 && before.cycles[0].symmetry == Symmetry::self_twin &&
              set_distance(before.cycles[0].points, {0.0, pi}) < 1e-8))
            ++bad;
        if (!one_symmetric_attractor(detect_attractors(MapParams{rc + 0.02, pi}), 4)) ++bad;
        return count_violations(bad);
    });
    add("prop6.pf2_phenomenology", [](Context&) {
        const double rc = 1.0 / std::sqrt(2.0);
        int bad = 0;
        if (!one_symmetric_attractor(detect_attractors(MapParams{rc - 0.02, 0.0}), 2)) ++bad;
        if (!twin_attractors(detect_attractors(MapParams{rc + 0.02, 0.0}), 2, 1e-6)) ++bad;
        for (const auto& c : find_symmetric_cycles(MapParams{rc + 0.02, 0.0}, 1).cycles)
            if (c.stability != Stability::repelling) ++bad;
        return count_violations(bad);
    });
    add("prop6.f_values", [](Context&) {
        double worst = 0.0;
        for (double r : linspace(0.05, 0.95, 19)) {
            worst = std::max(worst, std::abs(f_eval(r, 0.0) - pi));
            worst = std::max(worst, std::abs(f_eval(r, pi) - two_pi));
            worst = std::max(worst, std::abs(f_eval(r, -pi)));
            const double fd = oracle::central_diff([&](double x) { return f_eval(r, x); }, pi, 1e-6);
            worst = std::max(worst, std::abs(fd - f_prime_at_pi(r)));
        }
        return Measurement{worst, 0.0, 1e-6};
    });
    add("prop6.f_prime_root", [](Context&) {
        return Measurement{f_prime_at_pi(1.0 / std::sqrt(5.0)), 0.0, 1e-12};
    });

    // --- symmetry-breaking pitchfork of the 4-cycle ------------------------------
    add("prop7.r0", [](Context& ctx) { return Measurement{ctx.constants().pf_4cycle.value, 0.57, 0.01}; });
    add("prop7.twin_4cycles", [](Context& ctx) {
        const double r0 = ctx.constants().pf_4cycle.value;
        int bad = 0;
        if (!one_symmetric_attractor(detect_attractors(MapParams{r0 - 0.02, pi}), 4)) ++bad;
        if (!twin_attractors(detect_attractors(MapParams{r0 + 0.02, pi}), 4, 1e-6)) ++bad;
        return count_violations(bad);
    });
    add("prop7.transversality", [](Context& ctx) {
        return Measurement{std::abs(ctx.constants().pf4_transversality.value), 0.0, 0.0, Compare::greater_than};
    });
    add("prop7.blaschke_vs_lift", [](Context&) {
        double worst = 0.0;
        for (double r : linspace(1.0 / std::sqrt(5.0) + 0.01, 0.95, 20)) {
            const auto cs = find_symmetric_cycles(MapParams{r, pi}, 2).cycles;
            if (cs.empty()) return Measurement{1.0, 0.0, 1e-10};
            for (const auto& c : cs)
                for (double x : c.points)
                    worst = std::max(worst, circular_distance(blaschke_image(r, blaschke_image(r, x)), -x));
        }
        return Measurement{worst, 0.0, 1e-10};
    });
    add("prop7.quartic_derived_residual", [](Context&) {
        double worst = 0.0;
        for (double r : linspace(1.0 / std::sqrt(5.0) + 0.01, 0.95, 20)) {
            const QuarticAnalysis qa = symmetric4_quartic_blaschke(r);
            for (const auto& c : find_symmetric_cycles(MapParams{r, pi}, 2).cycles)
                for (double x : c.points) worst = std::max(worst, std::abs(qa.eval(std::cos(x))));
        }
        return Measurement{worst, 0.0, 1e-6};
    });
    add("prop7.quartic_roots_validated", [](Context&) {
        int bad = 0;
        for (double r : linspace(1.0 / std::sqrt(5.0) + 0.01, 0.95, 20)) {
            const auto cs = find_symmetric_cycles(MapParams{r, pi}, 2).cycles;
            std::vector<double> pts;
            for (const auto& c : cs) pts.insert(pts.end(), c.points.begin(), c.points.end());
            const auto accepted = symmetric4_quartic_blaschke(r).validated_angles();
            if (accepted.empty()) ++bad;
            for (double x : accepted) {
                double best = pi;
                for (double y : pts) best = std::min(best, circular_distance(x, y));
                if (best > 1e-6) ++bad;
            }
        }
        // below the period-doubling value no symmetric 4-cycle exists
        if (!symmetric4_quartic_blaschke(0.4).validated_angles().empty()) ++bad;
        return count_violations(bad);
    });

    return checks;
}

/// All check ids in report order.
inline std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;
}

/// Run the registered checks (optionally only the named ones). Each check gets
/// its own generator derived from (seed, id), so results do not depend on
/// which other checks run. Failures never abort the run.
inline std::vector<VerifyResult> run(const std::vector<std::string>& only = {}, std::uint64_t seed = kDefaultSeed) {
    const auto checks = registry();
    for (const auto& id : only) {
        if (std::none_of(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; }))
            throw DomainError("unknown check id: " + id);
    }
    std::vector<VerifyResult> out;
    Context ctx;
    for (const auto& c : checks) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(detail::fnv1a(c.id)),
                          static_cast<std::uint32_t>(detail::fnv1a(c.id) >> 32)};
        ctx.rng.seed(seq);
        const auto t0 = std::chrono::steady_clock::now();
        VerifyResult res;
        res.check_id = c.id;
        try {
            const Measurement m = c.run(ctx);
            res.measured = m.measured;
            res.expected = m.expected;
            res.tolerance = m.tolerance;
            res.compare = m.compare;
            res.pass = evaluate(m.measured, m.expected, m.tolerance, m.compare);
        } catch (const std::exception&) {
            res.measured = std::nan("");
            res.pass = false;
        }
        res.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(res));
    }
    return out;
}

/// `check_id<TAB>status<TAB>measured<TAB>expected<TAB>tolerance` per row, then
/// `TOTAL n PASS p FAIL f`.
inline std::string format_report(const std::vector<VerifyResult>& results) {
    std::ostringstream os;
    int pass = 0;
    for (const auto& r : results) {
        pass += r.pass ? 1 : 0;
        os << r.check_id << '\t' << (r.pass ? "PASS" : "FAIL") << '\t' << csv::format_double(r.measured) << '\t'
           << csv::format_double(r.expected) << '\t' << csv::format_double(r.tolerance) << '\n';
    }
    const int n = static_cast<int>(results.size());
    os << "TOTAL " << n << " PASS " << pass << " FAIL " << (n - pass) << '\n';
    return os.str();
}

inline int failure_count(const std::vector<VerifyResult>& results) {
    return static_cast<int>(std::count_if(results.begin(), results.end(), [](const VerifyResult& r) { return !r.pass; }));
}

} // namespace offcenter::verify
