// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "offcenter/offcenter.hpp"

using namespace offcenter;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int g_failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double t = elapsed_s(t0);
    if (t > budget_s) o.require(false, "took " + fmt(t) + " s, budget " + fmt(budget_s) + " s");
    if (!o.ok) ++g_failures;
    std::printf("[%s] %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, t, o.detail.empty() ? "" : " | ",
                o.detail.c_str());
    std::fflush(stdout);
}

ConstantsTable g_constants;

bool census_one_symmetric(const AttractorCensus& a, int period) {
    return a.cycles.size() == 1 && a.cycles[0].period == period && a.cycles[0].symmetry == Symmetry::symmetric &&
           a.cycles[0].stability == Stability::attracting;
}

bool census_twins(const AttractorCensus& a, int period, double tol) {
    if (a.cycles.size() != 2) return false;
    for (const auto& c : a.cycles)
        if (c.period != period || c.symmetry != Symmetry::asymmetric || c.stability != Stability::attracting)
            return false;
    return set_distance(reflect_points(a.cycles[0].points), a.cycles[1].points) < tol;
}

} // namespace

int main() {
    criterion(1, "period-doubling of {0, pi} at r = 1/sqrt5", 1.0, [] {
        Outcome o;
        const auto root =
            roots::bisect([](double r) { return multiplier(MapParams{r, pi}, {0.0, pi}) + 1.0; }, 0.34, 0.6, 1e-13);
        const double err = std::abs(root.x - 1.0 / std::sqrt(5.0));
        o.require(err < 1e-9, "r = " + fmt(root.x) + ", error " + fmt(err));
        o.detail = o.ok ? "r = " + fmt(root.x) : o.detail;
        return o;
    });

    criterion(2, "pitchfork of the symmetric 2-cycle at omega = 0", 5.0, [] {
        Outcome o;
        const auto root = roots::bisect(
            [](double r) {
                const double c1 = std::acos(1.0 / (2.0 * r));
                return multiplier(MapParams{r, 0.0}, {c1, -c1}) - 1.0;
            },
            0.55, 0.9, 1e-13);
        const double rc = 1.0 / std::sqrt(2.0);
        o.require(std::abs(root.x - rc) < 1e-9, "r = " + fmt(root.x));
        const AttractorCensus above = detect_attractors(MapParams{rc + 0.02, 0.0});
        o.require(census_twins(above, 2, 1e-6), "no twin 2-cycles at 1/sqrt2 + 0.02");
        o.require(two_cycle_branch(rc + 0.02, 0.0).stability == Stability::repelling,
                  "symmetric 2-cycle not repelling above");
        const AttractorCensus below = detect_attractors(MapParams{rc - 0.02, 0.0});
        o.require(census_one_symmetric(below, 2), "not exactly one symmetric 2-cycle at 1/sqrt2 - 0.02");
        if (o.ok) o.detail = "r = " + fmt(root.x);
        return o;
    });

    criterion(3, "symmetry-breaking of the symmetric 4-cycle near r0 = 0.57", 10.0, [] {
        Outcome o;
        g_constants = bifurcation_constants();
        const double r0 = g_constants.pf_4cycle.value;
        o.require(g_constants.pf_4cycle.converged && std::abs(r0 - 0.57) <= 0.01, "r0 = " + fmt(r0));
        o.require(census_one_symmetric(detect_attractors(MapParams{r0 - 0.02, pi}), 4),
                  "not one symmetric 4-cycle at r0 - 0.02");
        o.require(census_twins(detect_attractors(MapParams{r0 + 0.02, pi}), 4, 1e-6),
                  "no reflected twin 4-cycles at r0 + 0.02");
        if (o.ok) o.detail = "r0 = " + fmt(r0);
        return o;
    });

    criterion(4, "degenerate period-doubling parameter", 1.0, [] {
        Outcome o;
        const auto root = roots::bisect([](double r) { return pd_transversality_factor(r); }, 0.5 + 1e-9, 0.9, 1e-14);
        const double closed = std::sqrt((-15.0 + std::sqrt(241.0)) / 2.0);
        o.require(std::abs(root.x - closed) < 1e-9, "r = " + fmt(root.x) + " vs " + fmt(closed));
        if (o.ok) o.detail = "r = " + fmt(root.x);
        return o;
    });

    criterion(5, "saddle-node boundary at r = 0.5 by grid scan", 1.0, [] {
        Outcome o;
        const int inside = oracle::fixed_point_count(MapParams{0.5, pi / 3 - 0.01}, 100000);
        const int outside = oracle::fixed_point_count(MapParams{0.5, pi / 3 + 0.01}, 100000);
        o.require(inside == 2, "count " + std::to_string(inside) + " below the curve");
        o.require(outside == 0, "count " + std::to_string(outside) + " above the curve");
        return o;
    });

    criterion(6, "negative Schwarzian and endpoint factorizations", 2.0, [] {
        Outcome o;
        std::mt19937_64 g(6);
        std::uniform_real_distribution<double> ur(1.0 / 3.0 + 1e-3, 0.99), ux(-pi, pi);
        int bad = 0;
        for (int i = 0; i < 10000;) {
            const double r = ur(g), x = ux(g);
            const double c = critical_points(r).x_plus;
            if (std::abs(std::abs(x) - c) < 1e-6) continue;
            ++i;
            if (!(schwarzian(MapParams{r, 0.0}, x) < 0.0)) ++bad;
        }
        o.require(bad == 0, std::to_string(bad) + " non-negative samples");
        double worst = 0.0;
        for (int i = 0; i <= 99; ++i) {
            const double r = 0.99 * i / 99.0;
            worst = std::max(worst, std::abs(h_cubic(r, -1.0) + 2.0 * std::pow(1.0 + r, 3) * (1.0 + 3.0 * r)));
            worst = std::max(worst, std::abs(h_cubic(r, 1.0) - 2.0 * std::pow(1.0 - r, 3) * (1.0 - 3.0 * r)));
        }
        o.require(worst < 1e-10, "H endpoint deviation " + fmt(worst));
        return o;
    });

    criterion(7, "at most two attractors; symmetric ones attract both critical orbits", 60.0, [] {
        Outcome o;
        std::mt19937_64 g(7);
        std::uniform_real_distribution<double> ur(1.0 / 3.0 + 1e-6, 0.999);
        int too_many = 0, not_both = 0, symmetric_seen = 0;
        for (int i = 0; i < 200; ++i) {
            const MapParams p{ur(g), (g() & 1u) ? pi : 0.0};
            const AttractorCensus a = detect_attractors(p);
            if (a.multiplicity_count() > 2) ++too_many;
            for (const auto& c : a.cycles) {
                if (c.symmetry != Symmetry::symmetric && c.symmetry != Symmetry::self_twin) continue;
                ++symmetric_seen;
                for (const auto& tail : a.tails)
                    if (!(set_distance(tail, c.points) < 1e-6)) ++not_both;
            }
        }
        o.require(too_many == 0, std::to_string(too_many) + " censuses above two");
        o.require(not_both == 0, std::to_string(not_both) + " critical orbits missing a symmetric attractor");
        o.detail = o.ok ? std::to_string(symmetric_seen) + " symmetric attractors checked" : o.detail;
        return o;
    });

    criterion(8, "cycle search and analytic derivatives against oracles", 30.0, [] {
        Outcome o;
        std::mt19937_64 g(8);
        std::uniform_real_distribution<double> ur(0.0, 0.95), uw(-pi, pi), ux(-pi, pi);
        int missed = 0;
        for (int i = 0; i < 50; ++i) {
            const MapParams p{ur(g), uw(g)};
            for (int n = 1; n <= 4; ++n) {
                std::vector<double> pts;
                for (int d = 1; d <= n; ++d) {
                    if (n % d != 0) continue;
                    for (const auto& c : find_cycles(p, d, 100000 / d).cycles)
                        pts.insert(pts.end(), c.points.begin(), c.points.end());
                }
                for (double s : oracle::cycle_sign_changes(p, n, 100000)) {
                    double best = pi;
                    for (double y : pts) best = std::min(best, circular_distance(s, y));
                    if (!(best < 1e-6)) ++missed;
                }
            }
        }
        o.require(missed == 0, std::to_string(missed) + " grid sign changes not captured");

        auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
        double worst = 0.0;
        const double h = 1e-5;
        for (int i = 0; i < 2000; ++i) {
            const double r = ur(g) + 1e-4, w = uw(g), x = ux(g);
            const MapParams p{r, w};
            const DerivBundle b = lift_derivatives(p, x);
            worst = std::max(worst, rel(oracle::central_diff([&](double t) { return lift(p, t); }, x, h), b.d1));
            worst = std::max(worst, rel(oracle::central_diff([&](double t) { return lift_derivatives(p, t).d1; }, x, h),
                                        b.d2));
            worst = std::max(worst, rel(oracle::central_diff([&](double t) { return lift_derivatives(p, t).d2; }, x, h),
                                        b.d3));
            const ParamPartials q = lift_param_partials(p, x);
            worst = std::max(worst,
                             rel(oracle::central_diff([&](double s) { return lift(MapParams{s, w}, x); }, r, h), q.dR_dr));
            worst = std::max(worst, rel(oracle::central_diff(
                                            [&](double s) { return lift_derivatives(MapParams{s, w}, x).d1; }, r, h),
                                        q.dRprime_dr));
            const double second = oracle::central_diff(
                [&](double s) { return orbit_jet(MapParams{s, w}, x, 2).slope; }, r, 1e-6);
            worst = std::max(worst, rel(second, second_iterate_multiplier_partial(p, x)));
        }
        o.require(worst < 1e-5, "worst derivative deviation " + fmt(worst));
        if (o.ok) o.detail = "worst derivative deviation " + fmt(worst);
        return o;
    });

    criterion(9, "symmetric 4-cycle quartic cross-validation", 10.0, [] {
        Outcome o;
        const double lo = 1.0 / std::sqrt(5.0) + 0.005, hi = 0.95;
        double worst_candidate = 0.0, worst_derived = 0.0, worst_paths = 0.0;
        int missing = 0;
        for (int i = 0; i < 20; ++i) {
            const double r = lo + (hi - lo) * (i + 0.5) / 20.0;
            const auto cs = find_symmetric_cycles(MapParams{r, pi}, 2).cycles;
            if (cs.empty()) {
                ++missing;
                continue;
            }
            const auto cand = symmetric4_quartic(r);
            const auto derived = symmetric4_quartic_blaschke(r);
            for (const auto& c : cs) {
                for (double x : c.points) {
                    worst_candidate = std::max(worst_candidate, std::abs(cand.eval(std::cos(x))));
                    worst_derived = std::max(worst_derived, std::abs(derived.eval(std::cos(x))));
                    worst_paths = std::max(worst_paths, circular_distance(blaschke_image(r, x),
                                                                          circle_map(MapParams{r, pi}, x)));
                }
            }
        }
        o.require(missing == 0, std::to_string(missing) + " r values without a symmetric 4-cycle");
        o.require(worst_paths < 1e-10, "Blaschke vs lift deviation " + fmt(worst_paths));
        o.require(worst_derived < 1e-6, "derived quartic residual " + fmt(worst_derived));
        if (worst_candidate >= 1e-6)
            std::printf("[INFO]  9 candidate quartic with linear term 2r(1 + 7r^3) misses the cycle (residual %s); "
                        "flagged, the Blaschke-derived 2r(1 + 7r^2) form is asserted instead\n",
                        fmt(worst_candidate).c_str());
        if (o.ok)
            o.detail = "paths " + fmt(worst_paths) + ", derived residual " + fmt(worst_derived);
        return o;
    });

    criterion(10, "orbit diagram bands at omega = pi", 60.0, [] {
        Outcome o;
        DiagramOptions opt;
        opt.omega = pi;
        opt.r_min = 0.35;
        opt.r_max = 0.95;
        opt.r_steps = 601;
        const auto rows = csv::parse_diagram(csv::read_table(csv::to_string(csv::diagram_table(orbit_diagram(opt)))));

        enum Band { A, B, C, Other };
        std::vector<double> rs;
        std::vector<Band> bands;
        std::vector<std::optional<int>> periods;
        const std::size_t per_col = 2 * static_cast<std::size_t>(opt.samples);
        for (std::size_t k = 0; k + per_col <= rows.size(); k += per_col) {
            std::vector<double> plus, minus;
            for (std::size_t j = k; j < k + per_col; ++j)
                (rows[j].seed == Seed::crit_plus ? plus : minus).push_back(rows[j].x);
            const double tol = 1e-3;
            const bool on_2cycle =
                set_distance(plus, {0.0, pi}) < tol && set_distance(minus, {0.0, pi}) < tol;
            const bool same = set_distance(plus, minus) < tol;
            const bool self_mirror = set_distance(reflect_points(plus), plus) < tol;
            rs.push_back(rows[k].r);
            periods.push_back(detect_period(plus, 64, 1e-6));
            bands.push_back(on_2cycle ? A : (same && self_mirror) ? B : !same ? C : Other);
        }

        std::size_t i = 0;
        while (i < bands.size() && bands[i] == A) ++i;
        const std::size_t b_start = i;
        while (i < bands.size() && bands[i] == B) ++i;
        const std::size_t c_start = i;
        o.require(b_start > 0 && b_start < bands.size(), "no band of the {0, pi} cycle followed by another band");
        o.require(c_start > b_start && c_start < bands.size() && bands[c_start] == C,
                  "no symmetric band followed by a reflected-branch band");
        if (!o.ok) return o;

        const double boundary1 = rs[b_start], boundary2 = rs[c_start];
        const double r0 = g_constants.pf_4cycle.converged ? g_constants.pf_4cycle.value : bifurcation_constants().pf_4cycle.value;
        o.require(std::abs(boundary1 - 1.0 / std::sqrt(5.0)) <= 0.01, "first boundary " + fmt(boundary1));
        o.require(std::abs(boundary2 - r0) <= 0.01, "second boundary " + fmt(boundary2));

        int period4 = 0;
        for (std::size_t k = b_start; k < c_start; ++k) period4 += periods[k] == 4 ? 1 : 0;
        o.require(period4 * 10 >= 9 * static_cast<int>(c_start - b_start),
                  "symmetric band is not mostly period 4 (" + std::to_string(period4) + " of " +
                      std::to_string(c_start - b_start) + ")");
        // reflected branches: where the plus orbit is periodic, the minus orbit is its mirror image
        int mirror_bad = 0;
        for (std::size_t k = c_start; k < bands.size(); ++k) {
            if (bands[k] != C || !periods[k]) continue;
            std::vector<double> plus, minus;
            for (std::size_t j = k * per_col; j < (k + 1) * per_col; ++j)
                (rows[j].seed == Seed::crit_plus ? plus : minus).push_back(rows[j].x);
            if (!(set_distance(reflect_points(plus), minus) < 1e-6)) ++mirror_bad;
        }
        o.require(mirror_bad == 0, std::to_string(mirror_bad) + " periodic branch pairs not mirror images");
        if (o.ok) o.detail = "boundaries " + fmt(boundary1) + ", " + fmt(boundary2);
        return o;
    });

    std::printf("%s: %d of 10 criteria failed\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
    return g_failures == 0 ? 0 : 1;
}
