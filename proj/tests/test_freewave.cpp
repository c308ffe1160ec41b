#include <gtest/gtest.h>

#include <numbers>

#include "qkg/fdverify.hpp"
#include "qkg/freewave.hpp"
#include "support/oracles.hpp"

using namespace qkg;

namespace {

const Spatial zero3{0, 0, 0};

PlaneWaveSolution spatial_theta_solution() {
    return build_solution(1.0, {{0, 0, 0.3, 0}, 0.2}, {0.5, 0, 0}, {0, 0, 0.7}, EnergySign::positive,
                          EnergySign::negative, 0.4);
}

}  // namespace

TEST(FreeWave, SolveK0) {
    EXPECT_EQ(solve_k0(1, zero3, 0), (std::vector<double>{1, -1}));
    const auto r = solve_k0(1, {1, 0, 0}, -3);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_DOUBLE_EQ(r[0], std::sqrt(5.0));
    EXPECT_DOUBLE_EQ(r[1], -std::sqrt(5.0));
    EXPECT_TRUE(solve_k0(1, zero3, 2).empty());
    EXPECT_EQ(solve_k0(1, zero3, 1), (std::vector<double>{0}));
}

TEST(FreeWave, SolveK0RootSatisfiesSplitEquationNumerically) {
    // m = 1, |k|^2 = 1, theta.theta = -3 with theta spatial and orthogonal to k
    const double t = std::sqrt(3.0);
    const auto sol = build_solution(1, {{0, 0, t, 0}, 0}, {1, 0, 0}, {1, 0, 0}, EnergySign::positive,
                                    EnergySign::positive, 0);
    EXPECT_DOUBLE_EQ(sol.k[0][0], std::sqrt(5.0));
    const auto f = [&](const FourVector& x) { return evaluate(sol, x); };
    const FourVector x{0.1, -0.2, 0.3, 0.05};
    EXPECT_LT(fd::kg_residual(f, 1, x, {0.01}), 1e-3);
}

TEST(FreeWave, ThetaZeroDecouples) {
    const auto s = build_solution(1, {}, {1, 0, 0}, {1, 0, 0}, EnergySign::positive, EnergySign::positive, 0);
    for (int a = 0; a < 2; ++a) {
        EXPECT_DOUBLE_EQ(s.k[a][0], std::sqrt(2.0));
        EXPECT_EQ(s.k[a][1], 1.0);
    }
    EXPECT_LE(free_residuals(s).max_abs(), 1e-10);
    EXPECT_LE(split_residuals(s).max_abs(), 1e-10);
}

TEST(FreeWave, SpatialThetaSolution) {
    const auto s = build_solution(1, {{0, 0, 0.3, 0}, 0}, {0.5, 0, 0}, {0.5, 0, 0}, EnergySign::positive,
                                  EnergySign::positive, 0);
    EXPECT_DOUBLE_EQ(s.k[0][0], std::sqrt(1 + 0.25 + 0.09));
    EXPECT_LE(free_residuals(s).max_abs(), 1e-10);
    EXPECT_LE(split_residuals(s).max_abs(), 1e-10);
}

TEST(FreeWave, TimelikeThetaIncompatible) {
    try {
        build_solution(1, {{1, 0, 0, 0}, 0}, {1, 0, 0}, {1, 0, 0}, EnergySign::positive, EnergySign::positive, 0);
        FAIL() << "expected ConstraintIncompatible";
    } catch (const ConstraintIncompatible& e) {
        EXPECT_NE(e.which().find("e12 vs e13"), std::string::npos);
        EXPECT_NEAR(e.residual(), 1.0 / 2.0, 1e-12);  // |theta.k| = 1 scaled by |k|^2 = 2
    }
}

TEST(FreeWave, BranchViolation) {
    EXPECT_THROW(build_solution(1, {{2, 0, 0, 0}, 0}, zero3, zero3, EnergySign::positive, EnergySign::positive, 0),
                 BranchViolation);
    EXPECT_THROW(build_solution(-1, {}, zero3, zero3, EnergySign::positive, EnergySign::positive, 0),
                 std::invalid_argument);
}

TEST(FreeWave, TimeComponentThetaWithCompatibleMomentum) {
    const FourVector theta{0.3, 0.5, 0, 0};
    const auto ks = oracle::compatible_spatial(1, theta, {1, 0, 0});
    const auto s = build_solution(1, {theta, 0.1}, ks, ks, EnergySign::positive, EnergySign::positive, 0);
    EXPECT_NEAR(ks[0] * ks[0], 0.6525, 1e-12);
    EXPECT_LE(free_residuals(s).max_abs(), 1e-10);
}

TEST(FreeWave, EvaluateSpecialPoints) {
    auto s = build_solution(1, {}, zero3, zero3, EnergySign::positive, EnergySign::positive, 0);
    EXPECT_EQ(evaluate(s, {}), Quaternion(1));
    s.phase.theta0 = std::numbers::pi / 2;
    EXPECT_LE(max_abs_diff(evaluate(s, {}), Quaternion::unit_j()), 1e-15);
}

TEST(FreeWave, EvaluateHasUnitNorm) {
    const auto s = spatial_theta_solution();
    oracle::Rng rng(31);
    for (int n = 0; n < 500; ++n) EXPECT_NEAR(norm_sq(evaluate(s, rng.event(5))), 1.0, 1e-12);
}

TEST(FreeWave, ComplexLimit) {
    const auto s = build_solution(1.3, {}, {0.2, -0.4, 1}, {1, 1, 1}, EnergySign::positive, EnergySign::positive, 1);
    oracle::Rng rng(32);
    for (int n = 0; n < 100; ++n) {
        const auto x = rng.event(3);
        const auto q = evaluate(s, x);
        EXPECT_EQ(q.x2, 0.0);
        EXPECT_EQ(q.x3, 0.0);
        const auto w = oracle::plane(s.k[0], x);
        EXPECT_NEAR(q.x0, w.real(), 1e-15);
        EXPECT_NEAR(q.x1, w.imag(), 1e-15);
    }
}

TEST(FreeWave, PeriodicInTheta0) {
    auto s = spatial_theta_solution();
    auto t = s;
    t.phase.theta0 += 2 * std::numbers::pi;
    oracle::Rng rng(33);
    for (int n = 0; n < 100; ++n) {
        const auto x = rng.event(2);
        EXPECT_LE(max_abs_diff(evaluate(s, x), evaluate(t, x)), 1e-12);
    }
}

TEST(FreeWave, PhaseIsLinear) {
    const LinearPhase p{{0.3, -0.2, 0.9, 0.1}, 0.7};
    oracle::Rng rng(34);
    for (int n = 0; n < 100; ++n) {
        const auto x = rng.event(), y = rng.event();
        EXPECT_NEAR(p.at(x + y) - p.at(x) - p.at(y) + p.theta0, 0.0, 1e-14);
    }
}

TEST(FreeWave, FiniteDifferenceResidualConvergesAtSecondOrder) {
    const auto s = spatial_theta_solution();
    const auto f = [&](const FourVector& x) { return evaluate(s, x); };
    oracle::Rng rng(35);
    std::vector<FourVector> pts;
    for (int n = 0; n < 100; ++n) pts.push_back(rng.event());
    const auto fit = fd::sweep(
        [&](double h) {
            std::vector<double> r;
            for (const auto& x : pts) r.push_back(fd::kg_residual(f, s.mass, x, {h}));
            return fd::rms(r);
        },
        fd::default_spacings);
    EXPECT_FALSE(fit.machine_precision);
    EXPECT_NEAR(fit.order, 2.0, 0.2);
}

TEST(FreeWave, SplitEquationsHoldPerComponent) {
    // Each complex component, taken alone as a scalar field, satisfies
    // (box + m^2 - theta.theta) phi = 0 and (2 theta.d) phi = 0.
    const auto s = spatial_theta_solution();
    const double tt = dot(s.phase.theta, s.phase.theta);
    for (std::size_t a = 0; a < 2; ++a) {
        const auto phi = [&](const FourVector& x) {
            const auto c = component(s, a, x);
            return Quaternion(c.real(), c.imag());
        };
        const FourVector x{0.2, 0.1, -0.3, 0.4};
        std::vector<double> wave, drift;
        for (double h : fd::default_spacings) {
            wave.push_back(abs(fd::dalembertian_fd(phi, x, {h}) + (s.mass * s.mass - tt) * phi(x)));
            Quaternion d;
            for (std::size_t mu = 0; mu < 4; ++mu) {
                d += (2.0 * s.phase.theta.lowered()[mu] * metric_sign[mu]) * fd::partial(phi, x, mu, h);
            }
            drift.push_back(abs(d));
        }
        EXPECT_NEAR(fd::convergence_order(fd::default_spacings, wave).order, 2.0, 0.2);
        const auto fit = fd::convergence_order(fd::default_spacings, drift);
        EXPECT_TRUE(fit.passes());
    }
}

TEST(FreeWave, LightCone) {
    auto s = build_solution(0, {}, {1, 0, 0}, {1, 0, 0}, EnergySign::positive, EnergySign::positive, 0);
    auto r = is_light_cone(s);
    EXPECT_TRUE(r.k0_null && r.k1_null && r.cross_null);
    EXPECT_FALSE(r.massive);

    s = build_solution(1, {}, {1, 0, 0}, {0, 1, 0}, EnergySign::positive, EnergySign::positive, 0);
    r = is_light_cone(s);
    EXPECT_FALSE(r.k0_null || r.k1_null || r.cross_null || r.massive);

    s = build_solution(0, {}, {1, 0, 0}, {-1, 0, 0}, EnergySign::positive, EnergySign::positive, 0);
    r = is_light_cone(s);
    EXPECT_TRUE(r.k0_null && r.k1_null);
    EXPECT_NEAR(r.cross, 2.0, 1e-15);
    EXPECT_FALSE(r.cross_null);
}

TEST(FreeWave, MassiveLightConeDegeneratesToZeroMomentum) {
    // theta.theta = m^2 with theta timelike leaves only k = 0.
    const auto s = build_solution(1, {{1, 0, 0, 0}, 0.3}, zero3, zero3, EnergySign::positive,
                                  EnergySign::positive, 0);
    const auto r = is_light_cone(s);
    EXPECT_TRUE(r.massive);
    EXPECT_EQ(s.k[0], FourVector{});
}
