#include <gtest/gtest.h>

#include "qkg/minkowski.hpp"
#include "support/oracles.hpp"

using namespace qkg;

TEST(Minkowski, DotExamples) {
    EXPECT_EQ(dot(FourVector{1, 0, 0, 0}, FourVector{1, 0, 0, 0}), 1.0);
    const FourVector k{std::sqrt(2.0), 1, 0, 0};  // m = 1, |k| = 1
    EXPECT_NEAR(dot(k, k), 1.0, 1e-15);
    EXPECT_EQ(dot(FourVector{1, 1, 0, 0}, FourVector{1, 1, 0, 0}), 0.0);
}

TEST(Minkowski, Lowered) {
    const FourVector v{1, 2, 3, 4};
    EXPECT_EQ(v.lowered(), (FourVector{1, -2, -3, -4}));
}

TEST(Minkowski, BilinearAndSymmetric) {
    oracle::Rng rng(21);
    for (int n = 0; n < 1000; ++n) {
        const auto u = rng.event(3), v = rng.event(3), w = rng.event(3);
        const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
        EXPECT_NEAR(dot(a * u + b * v, w), a * dot(u, w) + b * dot(v, w), 1e-12);
        EXPECT_EQ(dot(u, v), dot(v, u));
    }
}

TEST(Minkowski, HermitianDot) {
    const ComplexFourVector v{std::complex<double>(0, 1), 0, 0, 0};
    EXPECT_EQ(hermitian_dot(v, v), std::complex<double>(1, 0));

    const FourVector r{0.5, -1, 2, 0.25};
    EXPECT_EQ(hermitian_dot(to_complex(r), to_complex(r)).real(), dot(r, r));

    oracle::Rng rng(22);
    for (int n = 0; n < 1000; ++n) {
        const auto a = rng.complex_vector(), b = rng.complex_vector();
        const auto self = hermitian_dot(a, a);
        EXPECT_LE(std::abs(self.imag()), 1e-14);
        // signed sum of |a^mu|^2 written out componentwise
        const double expected = std::norm(a[0]) - std::norm(a[1]) - std::norm(a[2]) - std::norm(a[3]);
        EXPECT_NEAR(self.real(), expected, 1e-14);
        EXPECT_NEAR(hermitian_norm_sq(a), expected, 1e-14);
        const auto ab = hermitian_dot(a, b), ba = hermitian_dot(b, a);
        EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0.0, 1e-14);
    }
}

TEST(Minkowski, Classify) {
    EXPECT_EQ(classify({1, 1, 0, 0}), Causal::null);
    EXPECT_EQ(classify({2, 1, 0, 0}), Causal::timelike);
    EXPECT_EQ(classify({1, 2, 0, 0}), Causal::spacelike);
    EXPECT_EQ(classify({1, 1 + 1e-13, 0, 0}), Causal::null);
    EXPECT_EQ(classify({1, 1 + 1e-13, 0, 0}, 0.0), Causal::spacelike);
}
