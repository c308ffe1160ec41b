#include <gtest/gtest.h>

#include <numbers>

#include "qkg/quaternion.hpp"
#include "support/oracles.hpp"

using namespace qkg;

namespace {

constexpr double tol = 1e-12;
const Quaternion one{1}, i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();

void expect_near(const Quaternion& a, const Quaternion& b, double t = tol) {
    EXPECT_LE(max_abs_diff(a, b), t) << "(" << a.x0 << "," << a.x1 << "," << a.x2 << "," << a.x3 << ") vs ("
                                     << b.x0 << "," << b.x1 << "," << b.x2 << "," << b.x3 << ")";
}

}  // namespace

TEST(Quaternion, UnitTable) {
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * i, -k);
    EXPECT_EQ(j * k, i);
    EXPECT_EQ(k * j, -i);
    EXPECT_EQ(k * i, j);
    EXPECT_EQ(i * k, -j);
    EXPECT_EQ(i * i, -one);
    EXPECT_EQ(j * j, -one);
    EXPECT_EQ(k * k, -one);
    EXPECT_EQ(i * j * k, -one);
}

TEST(Quaternion, AntiCommutators) {
    EXPECT_EQ(i * j + j * i, Quaternion{});
    EXPECT_EQ(j * k + k * j, Quaternion{});
    EXPECT_EQ(k * i + i * k, Quaternion{});
}

TEST(Quaternion, IdentityAndMatrixOracle) {
    oracle::Rng rng(11);
    for (int n = 0; n < 200; ++n) {
        const auto a = rng.quaternion();
        const auto b = rng.quaternion();
        EXPECT_EQ(one * a, a);
        EXPECT_EQ(a * one, a);
        expect_near(a * b, oracle::apply(oracle::left_matrix(a), b));
    }
}

TEST(Quaternion, Associativity) {
    oracle::Rng rng(12);
    for (int n = 0; n < 1000; ++n) {
        const auto a = rng.quaternion(), b = rng.quaternion(), c = rng.quaternion();
        expect_near((a * b) * c, a * (b * c), 1e-11);
    }
}

TEST(Quaternion, Conjugate) {
    EXPECT_EQ(conj(j), -j);
    EXPECT_EQ(conj(Quaternion(1, 1, 1, 1)), Quaternion(1, -1, -1, -1));
    oracle::Rng rng(13);
    for (int n = 0; n < 1000; ++n) {
        const auto a = rng.quaternion(), b = rng.quaternion();
        expect_near(conj(a * b), conj(b) * conj(a));
        const double sum_sq = a.x0 * a.x0 + a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3;
        expect_near(a * conj(a), Quaternion(sum_sq), 1e-12 * std::max(1.0, sum_sq));
    }
}

TEST(Quaternion, ConjugateSymplecticForm) {
    const Quaternion q(0.3, -1.2, 0.7, 2.5);
    const auto s = conj(q).symplectic();
    EXPECT_EQ(s.z0, std::conj(q.z0()));
    EXPECT_EQ(s.z1, -q.z1());
}

TEST(Quaternion, NormSquared) {
    EXPECT_EQ(norm_sq(Quaternion(1, 1, 1, 1)), 4.0);
    EXPECT_EQ(norm_sq(Quaternion{}), 0.0);
    const Quaternion q(0.3, -1.2, 0.7, 2.5);
    EXPECT_NEAR(norm_sq(q), std::norm(q.z0()) + std::norm(q.z1()), tol);
    oracle::Rng rng(14);
    for (int n = 0; n < 1000; ++n) {
        const auto a = rng.quaternion(), b = rng.quaternion();
        const double lhs = norm_sq(a * b), rhs = norm_sq(a) * norm_sq(b);
        EXPECT_LE(std::abs(lhs - rhs), 1e-12 * rhs);
    }
}

TEST(Quaternion, SymplecticRoundTrip) {
    oracle::Rng rng(15);
    for (int n = 0; n < 100; ++n) {
        const auto q = rng.quaternion();
        EXPECT_EQ(Quaternion::from_symplectic(q.symplectic()), q);
        // q = z0 + z1 j by construction
        const auto z1j = Quaternion(q.z1().real(), q.z1().imag()) * j;
        expect_near(Quaternion(q.z0().real(), q.z0().imag()) + z1j, q);
    }
}

TEST(Quaternion, RightMulI) {
    EXPECT_EQ(right_mul_i(j), -k);
    const auto s = right_mul_i(Quaternion::from_symplectic({1, 0}, {1, 0})).symplectic();
    EXPECT_EQ(s.z0, std::complex<double>(0, 1));
    EXPECT_EQ(s.z1, std::complex<double>(0, -1));
    oracle::Rng rng(16);
    for (int n = 0; n < 200; ++n) {
        const auto q = rng.quaternion();
        EXPECT_EQ(right_mul_i(q), q * i);
        EXPECT_EQ(left_mul_i(q), i * q);
        EXPECT_EQ(right_mul_i(right_mul_i(right_mul_i(right_mul_i(q)))), q);
    }
}

TEST(Quaternion, RightAndLeftIDifferOnJSector) {
    EXPECT_NE(right_mul_i(j), left_mul_i(j));
    EXPECT_EQ(right_mul_i(Quaternion(2, 3)), left_mul_i(Quaternion(2, 3)));
}

TEST(Quaternion, PolarSpecialCases) {
    const auto pj = to_polar(j);
    EXPECT_DOUBLE_EQ(pj.magnitude, 1.0);
    EXPECT_DOUBLE_EQ(pj.theta, std::numbers::pi / 2);
    EXPECT_EQ(pj.xi, 0.0);
    EXPECT_EQ(pj.phi, 0.0);

    const auto p2 = to_polar(Quaternion(2));
    EXPECT_EQ(p2.magnitude, 2.0);
    EXPECT_EQ(p2.theta, 0.0);
    EXPECT_EQ(p2.phi, 0.0);
    EXPECT_EQ(p2.xi, 0.0);

    const auto pm = to_polar(Quaternion(-1));
    EXPECT_DOUBLE_EQ(pm.phi, std::numbers::pi);
    const auto pneg = to_polar(Quaternion(-1, -0.0));
    EXPECT_DOUBLE_EQ(pneg.phi, std::numbers::pi);

    EXPECT_THROW(to_polar(Quaternion{}), DegenerateInput);
}

TEST(Quaternion, PolarRoundTrip) {
    oracle::Rng rng(17);
    for (int n = 0; n < 1000; ++n) {
        const auto q = rng.quaternion();
        const auto p = to_polar(q);
        EXPECT_GE(p.theta, 0.0);
        EXPECT_LE(p.theta, std::numbers::pi / 2);
        EXPECT_GT(p.phi, -std::numbers::pi);
        EXPECT_LE(p.phi, std::numbers::pi);
        EXPECT_GT(p.xi, -std::numbers::pi);
        EXPECT_LE(p.xi, std::numbers::pi);
        EXPECT_NEAR(p.magnitude, std::sqrt(norm_sq(q)), 1e-15 * p.magnitude);
        EXPECT_LE(max_abs_diff(from_polar(p), q), 1e-12 * abs(q));
    }
}
