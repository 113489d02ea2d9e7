#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "offcenter/atlas.hpp"
#include "offcenter/oracles.hpp"

using namespace offcenter;

namespace {

// high-precision reference values (mpmath, 30 digits)
constexpr double kB06 = 0.299257818719034904;
constexpr double kPdOmega06 = 0.786020385780270552;
constexpr double kDegenerate = 0.511944672918873006;
constexpr double kC2At0999 = 2.094202513214256;

} // namespace

TEST(Angles, Examples) {
    EXPECT_NEAR(angle_a(0.5), pi / 3, 1e-15);
    EXPECT_NEAR(angle_b(0.6), kB06, 1e-14);
    EXPECT_NEAR(angle_b(0.5), 0.0, 1e-7);
    EXPECT_THROW(angle_b(0.4), DomainError);
    EXPECT_THROW(angle_a(1.0), DomainError);
    for (double r : {0.55, 0.7, 0.9}) EXPECT_NEAR(lift_slope(r, angle_b(r)), -1.0, 1e-12);
    for (double r : {0.1, 0.5, 0.9}) EXPECT_NEAR(lift_slope(r, angle_a(r)), 1.0, 1e-12);
}

TEST(SaddleNode, FixedPointIsTangent) {
    EXPECT_NEAR(saddle_node_curve(0.5).plus, pi / 3, 1e-15);
    for (int i = 1; i < 100; ++i) {
        const double r = i / 100.0;
        const auto w = saddle_node_curve(r);
        EXPECT_EQ(w.minus, -w.plus);
        const double a = angle_a(r);
        EXPECT_NEAR(lift(MapParams{r, w.plus}, a), a, 1e-12);
        EXPECT_NEAR(lift(MapParams{r, w.minus}, -a), -a, 1e-12);
        // omega just inside the curve has fixed points, just outside none
        EXPECT_GT(oracle::fixed_point_count(MapParams{r, w.plus - 1e-3}, 20000), 0) << r;
        EXPECT_EQ(oracle::fixed_point_count(MapParams{r, std::min(pi, w.plus + 1e-3)}, 20000), 0) << r;
    }
}

TEST(PeriodDoubling, CurveAndMultiplier) {
    EXPECT_NEAR(period_doubling_fp_curve(0.6).plus, kPdOmega06, 1e-14);
    EXPECT_THROW(period_doubling_fp_curve(0.5), DomainError);
    for (double r : {0.55, 0.6, 0.8, 0.95}) {
        const auto w = period_doubling_fp_curve(r);
        const double b = angle_b(r);
        EXPECT_NEAR(lift(MapParams{r, w.plus}, b), b, 1e-12);
        EXPECT_NEAR(multiplier(MapParams{r, w.plus}, {b}), -1.0, 1e-12);
        EXPECT_NEAR(multiplier(MapParams{r, w.minus}, {-b}), -1.0, 1e-12);
    }
}

TEST(Degenerate, RootAndClosedForm) {
    const DegenerateR d = degenerate_r();
    EXPECT_NEAR(d.value, kDegenerate, 1e-14);
    EXPECT_NEAR(d.closed_form, kDegenerate, 1e-14);
    EXPECT_LT(d.residual, 1e-13);
    EXPECT_NEAR(pd_transversality_factor(d.value), 0.0, 1e-12);
    EXPECT_GT(std::abs(pd_transversality_factor(0.6)), 0.1);
}

TEST(TwoCycleBranch, OmegaZero) {
    const auto b = two_cycle_branch(0.6, 0.0);
    EXPECT_NEAR(b.c, 0.585685543457150960, 1e-15);
    EXPECT_NEAR(b.multiplier, 0.0493827160493827, 1e-14);
    EXPECT_EQ(b.stability, Stability::attracting);
    EXPECT_NEAR(multiplier(MapParams{0.6, 0.0}, {b.c, -b.c}), b.multiplier, 1e-12);
    EXPECT_EQ(two_cycle_branch(1.0 / std::sqrt(2.0), 0.0).stability, Stability::neutral);
    EXPECT_EQ(two_cycle_branch(0.55, 0.0).stability, Stability::attracting);
    EXPECT_EQ(two_cycle_branch(0.5 + 1e-3, 0.0).stability, Stability::attracting);
    EXPECT_EQ(two_cycle_branch(0.75, 0.0).stability, Stability::repelling);
    EXPECT_THROW(two_cycle_branch(0.5, 0.0), DomainError);
}

TEST(TwoCycleBranch, OmegaPiIsRepelling) {
    EXPECT_NEAR(two_cycle_branch(0.999, pi).c, kC2At0999, 1e-12);
    for (int i = 1; i < 100; ++i) {
        const double r = i / 100.0;
        const auto b = two_cycle_branch(r, pi);
        EXPECT_EQ(b.stability, Stability::repelling);
        EXPECT_NEAR(circle_map(MapParams{r, pi}, b.c), -b.c, 1e-12);
        EXPECT_NEAR(multiplier(MapParams{r, pi}, {b.c, -b.c}), b.multiplier, 1e-10 * b.multiplier);
    }
    EXPECT_THROW(two_cycle_branch(0.5, 1.0), DomainError);
}

TEST(FFunction, ValuesAndDerivative) {
    for (double r : {0.3, 1.0 / std::sqrt(5.0), 0.7}) {
        const double fd = oracle::central_diff([r](double x) { return f_eval(r, x); }, pi, 1e-5);
        EXPECT_NEAR(fd, f_prime_at_pi(r), 1e-8);
    }
    EXPECT_NEAR(f_prime_at_pi(1.0 / std::sqrt(5.0)), 0.0, 1e-15);
    // zeros of f mod pi are points of symmetric 4-cycles (or of the 2-cycle {0, pi})
    const MapParams p{0.5, pi};
    const auto cs = find_symmetric_cycles(p, 2).cycles;
    ASSERT_EQ(cs.size(), 1u);
    for (double x : cs[0].points) {
        const double v = std::remainder(f_eval(0.5, x), pi);
        EXPECT_NEAR(v, 0.0, 1e-10);
    }
}

TEST(Quartic, CandidateCoefficientsAtHalf) {
    const auto qa = symmetric4_quartic(0.5);
    const std::array<double, 5> expect{-1.9375, 1.875, 1.25, -3.0, 1.0};
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(qa.coeffs[i], expect[i], 1e-15);
    EXPECT_EQ(qa.roots.size(), 4u);
}

TEST(Quartic, BlaschkeRootsMatchCycleCosines) {
    for (double r : {0.5, 0.55, 0.7, 0.9}) {
        const auto qa = symmetric4_quartic_blaschke(r);
        const auto cs = find_symmetric_cycles(MapParams{r, pi}, 2).cycles;
        ASSERT_FALSE(cs.empty()) << r;
        int validated = 0;
        for (const auto& q : qa.roots) {
            if (!q.validated) continue;
            ++validated;
            EXPECT_LT(q.residual, 1e-10);
            bool matched = false;
            for (const auto& c : cs)
                for (double x : c.points) matched = matched || std::abs(std::cos(x) - q.y.real()) < 1e-8;
            EXPECT_TRUE(matched) << r << ' ' << q.y.real();
        }
        EXPECT_EQ(validated, 2 * static_cast<int>(cs.size())) << r;
    }
    const auto qa = symmetric4_quartic_blaschke(0.5);
    EXPECT_NEAR(qa.roots[0].y.real(), -0.95314, 1e-5);
    EXPECT_NEAR(qa.roots[1].y.real(), 0.87200, 1e-5);
}

TEST(Constants, KnownClosedForms) {
    const ConstantsTable t = bifurcation_constants();
    EXPECT_NEAR(t.pd_2cycle.value, 1.0 / std::sqrt(5.0), 1e-12);
    EXPECT_NEAR(t.pf_2cycle.value, 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(t.degenerate.value, kDegenerate, 1e-12);
    EXPECT_NEAR(t.pf_4cycle.value, 0.5668221705, 1e-9);
    EXPECT_TRUE(t.pf_4cycle.converged);
    EXPECT_TRUE(t.pf4_transversality.converged);
    EXPECT_GT(std::abs(t.pf4_transversality.value), 1e-3);
    EXPECT_LT(t.pf4_transversality.residual, 1e-9);
    for (const auto& row : t.rows()) {
        EXPECT_TRUE(row.converged) << row.name;
        EXPECT_LT(row.residual, 1e-9) << row.name;
    }
    EXPECT_EQ(t.rows().front().name, "pd_2cycle");
}

TEST(Regions, Examples) {
    EXPECT_EQ(classify_region(0.2, 1.0).region, Region::invertible);
    EXPECT_EQ(classify_region(0.5, pi).region, Region::no_fixed_point);
    EXPECT_EQ(classify_region(0.6, 0.9).region, Region::attracting_fixed_point);
    EXPECT_EQ(classify_region(0.6, 0.3).region, Region::fixed_points_repelling_or_saddle);
    EXPECT_EQ(classify_region(0.4, 0.0).region, Region::attracting_fixed_point);
    EXPECT_THROW(classify_region(1.0, 0.0), DomainError);
}

TEST(Regions, AgreeWithFixedPointSearch) {
    std::mt19937_64 g(53);
    std::uniform_real_distribution<double> ur(0.34, 0.99), uw(-pi, pi);
    int checked = 0;
    while (checked < 300) {
        const double r = ur(g), w = uw(g);
        const double sn = saddle_node_curve(r).plus;
        if (std::abs(std::abs(w) - sn) < 1e-6) continue;
        if (r > 0.5 && std::abs(std::abs(w) - period_doubling_fp_curve(r).plus) < 1e-6) continue;
        ++checked;
        const Region c = classify_region(r, w).region;
        const auto fps = find_cycles(MapParams{r, w}, 1).cycles;
        if (fps.empty()) {
            EXPECT_EQ(c, Region::no_fixed_point) << r << ' ' << w;
            continue;
        }
        const bool attracting = std::any_of(fps.begin(), fps.end(),
                                            [](const CycleRecord& cr) { return cr.stability == Stability::attracting; });
        EXPECT_EQ(c, attracting ? Region::attracting_fixed_point : Region::fixed_points_repelling_or_saddle)
            << r << ' ' << w;
    }
}

TEST(SampleCurve, Shapes) {
    const auto sn = sample_curve(CurveId::saddle_node, 0.1, 0.9, 5);
    ASSERT_EQ(sn.size(), 10u);
    EXPECT_EQ(sn[0].branch, '+');
    EXPECT_EQ(sn[1].branch, '-');
    EXPECT_EQ(sn[0].r, 0.1);
    EXPECT_EQ(sn[8].r, 0.9);
    const auto c1 = sample_curve(CurveId::symmetric_2cycle_omega0, 0.6, 0.6, 1);
    EXPECT_NEAR(c1[0].x, 0.585685543457150960, 1e-15);
    EXPECT_EQ(c1[1].x, -c1[0].x);
    EXPECT_THROW(sample_curve(CurveId::period_doubling_fp, 0.4, 0.9, 3), DomainError);
    EXPECT_THROW(sample_curve(CurveId::saddle_node, 0.9, 0.1, 3), DomainError);
    EXPECT_THROW(sample_curve(CurveId::saddle_node, 0.1, 0.9, 0), DomainError);
}
