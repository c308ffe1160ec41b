#pragma once

/**
 * @file scattering.hpp
 * @brief Scattering from a one-dimensional step potential along x^1.
 *
 * Region I (x <= 0): Phi_I = Phi^(0) + R Phi^(1); region II (x > 0):
 * Phi_II = T Phi^(2), with
 *   Phi^(s) = cos Th e^{i p^(s).x} + sin Th e^{i q^(s).x} j
 *   p^(0) = (-p0, -p_l), p^(1) = (-p0, p_l), p^(2) = (-p0, -P_l)
 *   q^(0) = (-q0,  q_l), q^(1) = (-q0, -q_l), q^(2) = (-q0,  Q_l).
 * Only the probability current is matched at the interface, which leaves
 *   1 - |R|^2 = beta |T|^2,  |T|^2 = |1 + R|^2,  beta = P_l/p_l = Q_l/q_l,
 * solved by 1 + R = T e^{i delta} and
 *   |T| = 2 cos(phiT + delta)/(1 + beta),  R = (e^{2i(phiT + delta)} - beta)/(1 + beta).
 * |T| above is signed; T = |T| e^{i phiT}.
 */

#include <cmath>
#include <complex>

#include "qkg/errors.hpp"
#include "qkg/freewave.hpp"
#include "qkg/gauge_potential.hpp"
#include "qkg/minkowski.hpp"
#include "qkg/quaternion.hpp"

namespace qkg {

inline constexpr double beta_consistency_tol = 1e-10;

struct ScatteringSetup {
    double m{1};
    double p0{0}, p_l{0};  // incident complex sector
    double q0{0}, q_l{0};  // incident j sector
    double P_l{0}, Q_l{0};  // transmitted
    LinearPhase phase{};
    GaugePotential potential{};  // region II
    double phiT{0};
    double delta{0};

    double beta() const { return P_l / p_l; }

    /// Throws std::invalid_argument when p_l = 0 or the two sectors disagree on beta.
    void validate(double tol = beta_consistency_tol) const {
        if (p_l == 0.0) throw std::invalid_argument("scattering setup: p_l must be nonzero");
        if (std::abs(P_l * q_l - Q_l * p_l) > tol * std::abs(p_l * q_l)) {
            throw std::invalid_argument("scattering setup: P_l/p_l and Q_l/q_l disagree");
        }
    }

    FourVector p(int s) const {
        switch (s) {
            case 0: return {-p0, -p_l, 0, 0};
            case 1: return {-p0, p_l, 0, 0};
            default: return {-p0, -P_l, 0, 0};
        }
    }
    FourVector q(int s) const {
        switch (s) {
            case 0: return {-q0, q_l, 0, 0};
            case 1: return {-q0, -q_l, 0, 0};
            default: return {-q0, Q_l, 0, 0};
        }
    }

    /// Negate the transmitted j-sector momentum (and so the sign of beta in that sector).
    ScatteringSetup with_flipped_j_sector() const {
        ScatteringSetup s = *this;
        s.Q_l = -s.Q_l;
        return s;
    }
};

struct ScatteringResult {
    std::complex<double> R{};
    std::complex<double> T{};
    double refl_coeff{0};
    double trans_coeff{0};
    double beta{0};
    bool klein_regime{false};
    double delta{0};

    double unitarity_residual() const { return refl_coeff + trans_coeff - 1.0; }
    double phiR() const { return std::arg(R); }
};

inline ScatteringResult solve_matching(double beta, double phiT, double delta) {
    if (beta == -1.0) throw DegenerateStep();
    const double alpha = phiT + delta;
    ScatteringResult r;
    r.beta = beta;
    r.delta = delta;
    const double t_abs = 2.0 * std::cos(alpha) / (1.0 + beta);
    r.T = std::polar(1.0, phiT) * t_abs;
    r.R = (std::polar(1.0, 2.0 * alpha) - beta) / (1.0 + beta);
    r.refl_coeff = std::norm(r.R);
    r.trans_coeff = beta * t_abs * t_abs;
    r.klein_regime = beta < 0;
    return r;
}

inline ScatteringResult solve(const ScatteringSetup& setup) {
    setup.validate();
    return solve_matching(setup.beta(), setup.phiT, setup.delta);
}

/// Residuals of the two current-matching relations:
///   1 + |R|^2 + 2|R| cos(phiR) - |T|^2  and  1 - |R|^2 - beta |T|^2.
inline std::array<double, 2> matching_residuals(const ScatteringResult& r) {
    const double rr = std::norm(r.R);
    const double tt = std::norm(r.T);
    return {1.0 + rr + 2.0 * std::abs(r.R) * std::cos(std::arg(r.R)) - tt, 1.0 - rr - r.beta * tt};
}

/// |1 + R - T e^{i delta}|.
inline double phase_identity_residual(const ScatteringResult& r) {
    return std::abs(1.0 + r.R - r.T * std::polar(1.0, r.delta));
}

namespace detail {
inline Quaternion step_component(const ScatteringSetup& s, int idx, const FourVector& x) {
    const double th = s.phase.at(x);
    return Quaternion::from_symplectic(std::cos(th) * std::polar(1.0, dot(s.p(idx), x)),
                                       std::sin(th) * std::polar(1.0, dot(s.q(idx), x)));
}
}  // namespace detail

inline Quaternion region_wave_I(const ScatteringSetup& s, std::complex<double> R, const FourVector& x) {
    return detail::step_component(s, 0, x) + left_mul(R, detail::step_component(s, 1, x));
}

inline Quaternion region_wave_II(const ScatteringSetup& s, std::complex<double> T, const FourVector& x) {
    return left_mul(T, detail::step_component(s, 2, x));
}

/// Region-I current including the |R| interference terms.
inline FourVector region_current_I(const ScatteringSetup& s, std::complex<double> R, const FourVector& x) {
    if (x[1] > 0) throw std::invalid_argument("region_current_I: x^1 must be <= 0");
    const double th = s.phase.at(x);
    const double c2 = std::cos(th) * std::cos(th);
    const double s2 = std::sin(th) * std::sin(th);
    const double rabs = std::abs(R);
    const double rsq = rabs * rabs;
    const double phiR = std::arg(R);
    const FourVector p0 = s.p(0), p1 = s.p(1), q0 = s.q(0), q1 = s.q(1);
    const double cp = std::cos(dot(p0 - p1, x) - phiR);
    const double cq = std::cos(dot(q0 - q1, x) - phiR);
    FourVector J;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        J[mu] = (-c2 * (p0[mu] + rsq * p1[mu]) + s2 * (q0[mu] + rsq * q1[mu]) +
                 rabs * (-(p0[mu] + p1[mu]) * c2 * cp + (q0[mu] + q1[mu]) * s2 * cq)) /
                s.m;
    }
    return J;
}

/// Region-II current: |T|^2(-cos^2 Th p^(2) + sin^2 Th q^(2))/m plus
/// -(1/2m)(A^mu Phi i conj(Phi) + Phi i conj(Phi) A^mu) with Phi = T Phi^(2).
/// x^1 = 0 is accepted as the one-sided limit.
inline FourVector region_current_II(const ScatteringSetup& s, std::complex<double> T, const FourVector& x) {
    if (x[1] < 0) throw std::invalid_argument("region_current_II: x^1 must be >= 0");
    const double th = s.phase.at(x);
    const double c2 = std::cos(th) * std::cos(th);
    const double s2 = std::sin(th) * std::sin(th);
    const double tsq = std::norm(T);
    const FourVector p2 = s.p(2), q2 = s.q(2);
    const Quaternion phi = region_wave_II(s, T, x);
    const Quaternion bilinear = mul(right_mul_i(phi), conj(phi));
    const auto A = s.potential.at(x);
    FourVector J;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        const Quaternion g = mul(A[mu], bilinear) + mul(bilinear, A[mu]);
        J[mu] = tsq * (-c2 * p2[mu] + s2 * q2[mu]) / s.m - g.x0 / (2.0 * s.m);
    }
    return J;
}

struct FluxTriple {
    double incident{0};
    double reflected{0};
    double transmitted{0};

    double reflection() const { return reflected / incident; }
    double transmission() const { return transmitted / incident; }
};

/// Spatial fluxes evaluated at the interface origin (Th = Th0).
inline FluxTriple coefficients(const ScatteringSetup& s, const ScatteringResult& r) {
    const double th = s.phase.theta0;
    const double c2 = std::cos(th) * std::cos(th);
    FluxTriple f;
    f.incident = s.p_l * c2 / s.m;
    if (f.incident == 0.0) throw ZeroIncidentFlux();
    f.reflected = s.p_l * std::norm(r.R) * c2 / s.m;
    f.transmitted = s.P_l * std::norm(r.T) * c2 / s.m;
    return f;
}

/// Step setup whose momenta come from the free (region I) and electric
/// (region II, a^mu = (a0,0,0,0)) dispersion relations. theta must be
/// transverse to the step (theta^0 = theta^1 = 0). `transmitted_sign`
/// selects the sign of P_l and Q_l relative to the incident momenta.
inline ScatteringSetup electric_step_setup(double m, double a0, const LinearPhase& phase, double p0, double q0,
                                           EnergySign transmitted_sign, double phiT = 0.0, double delta = 0.0) {
    if (phase.theta[0] != 0.0 || phase.theta[1] != 0.0) {
        throw ConstraintIncompatible("step: theta must be transverse (theta^0 = theta^1 = 0)",
                                     std::hypot(phase.theta[0], phase.theta[1]));
    }
    const double shell = m * m - dot(phase.theta, phase.theta);
    auto root = [&](double e, const char* what) {
        const double d = e * e - shell;
        if (d < 0) throw BranchViolation(std::string("step: evanescent ") + what);
        return std::sqrt(d);
    };
    ScatteringSetup s;
    s.m = m;
    s.p0 = p0;
    s.q0 = q0;
    s.p_l = root(p0, "incident p sector");
    s.q_l = root(q0, "incident q sector");
    s.P_l = sign_value(transmitted_sign) * root(p0 + a0, "transmitted p sector");
    s.Q_l = sign_value(transmitted_sign) * root(q0 + a0, "transmitted q sector");
    s.phase = phase;
    s.potential = GaugePotential::electric(a0);
    s.phiT = phiT;
    s.delta = delta;
    s.validate();
    return s;
}

}  // namespace qkg
