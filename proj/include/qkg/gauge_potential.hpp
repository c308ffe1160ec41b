#pragma once

#include <array>
#include <complex>
#include <optional>

#include "qkg/minkowski.hpp"
#include "qkg/quaternion.hpp"

namespace qkg {

/// b^mu(x) = beta^mu exp(2 i kref.x).
struct Oscillation {
    FourVector beta{};
    FourVector kref{};
};

/// Pure imaginary quaternionic four-potential A^mu = a^mu i + b^mu j.
/// a is real, b complex; both contravariant. The real part of every A^mu is
/// zero by construction.
struct GaugePotential {
    FourVector a{};
    ComplexFourVector b{};
    std::optional<Oscillation> oscillation{};

    static GaugePotential none() { return {}; }
    static GaugePotential electric(double a0) { return {FourVector{a0, 0, 0, 0}, {}, {}}; }
    static GaugePotential quaternionic(const ComplexFourVector& b) { return {{}, b, {}}; }
    static GaugePotential oscillating(const FourVector& beta, const FourVector& kref) {
        return {{}, {}, Oscillation{beta, kref}};
    }

    bool is_zero() const { return !oscillation && a == FourVector{} && b == ComplexFourVector{}; }

    ComplexFourVector b_at(const FourVector& x) const {
        if (!oscillation) return b;
        const auto phase = std::polar(1.0, 2.0 * dot(oscillation->kref, x));
        ComplexFourVector out;
        for (std::size_t mu = 0; mu < 4; ++mu) out[mu] = oscillation->beta[mu] * phase;
        return out;
    }

    /// d_mu b^mu.
    std::complex<double> div_b(const FourVector& x) const {
        if (!oscillation) return {};
        const auto phase = std::polar(1.0, 2.0 * dot(oscillation->kref, x));
        return std::complex<double>{0.0, 2.0 * dot(oscillation->beta, oscillation->kref)} * phase;
    }

    /// A^mu(x) as quaternions.
    std::array<Quaternion, 4> at(const FourVector& x) const {
        const auto bx = b_at(x);
        std::array<Quaternion, 4> out;
        for (std::size_t mu = 0; mu < 4; ++mu) {
            out[mu] = Quaternion::from_symplectic({0.0, a[mu]}, bx[mu]);
        }
        return out;
    }

    /// |A|^2 = a.a + sum_mu s_mu |b^mu|^2, so that A_mu A^mu = -|A|^2.
    double norm_sq_at(const FourVector& x) const { return dot(a, a) + hermitian_norm_sq(b_at(x)); }
};

}  // namespace qkg
