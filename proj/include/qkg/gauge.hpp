#pragma once

/**
 * @file gauge.hpp
 * @brief Plane-wave solutions of the gauge-coupled equation
 *   (-Pi_mu Pi^mu + m^2) Phi = 0,  Pi^mu Phi = (d^mu - A^mu) Phi i,
 * for three potentials: electric (a^mu = (a0,0,0,0), b = 0), constant
 * quaternionic (a = 0, constant b), and oscillating (a = 0,
 * b^mu = beta^mu e^{2 i k.x}).
 *
 * Each scenario reduces to a quadratic in the energy plus a linear
 * orthogonality condition; both are solved/checked in closed form.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "qkg/errors.hpp"
#include "qkg/freewave.hpp"
#include "qkg/gauge_potential.hpp"
#include "qkg/minkowski.hpp"

namespace qkg {

enum class Scenario { free, electric, constant_quaternionic, oscillating };
enum class QuaternionicVariant { simple, conjugate_pair, temporal };

inline const char* to_string(Scenario s) {
    switch (s) {
        case Scenario::free: return "free";
        case Scenario::electric: return "electric";
        case Scenario::constant_quaternionic: return "constant_quaternionic";
        case Scenario::oscillating: return "oscillating";
    }
    return "?";
}

inline const char* to_string(QuaternionicVariant v) {
    switch (v) {
        case QuaternionicVariant::simple: return "simple";
        case QuaternionicVariant::conjugate_pair: return "conjugate_pair";
        case QuaternionicVariant::temporal: return "temporal";
    }
    return "?";
}

struct GaugeSolution {
    Scenario scenario{Scenario::free};
    std::optional<QuaternionicVariant> variant{};
    PlaneWaveSolution sol{};
    GaugePotential potential{};
    /// q^(a) = k^(a) + b for the constant quaternionic scenario.
    std::optional<std::array<ComplexFourVector, 2>> effective{};
    bool massive_light_cone{false};
};

namespace detail {

inline double gauge_scale(double m, const FourVector& theta, const FourVector& k, double extra = 0.0) {
    return std::max({1.0, m * m, euclid_sq(k), euclid_sq(theta), extra});
}

inline void require(double residual, double scale, const std::string& which) {
    const double scaled = std::abs(residual) / scale;
    if (scaled > constraint_tol) throw ConstraintIncompatible(which, scaled);
}

/// k^0 = offset + sign sqrt(|k|^2 + rhs), with rhs = k.k target.
inline FourVector energy_from(double rhs, const Spatial& ks, EnergySign sign, double offset, double scale,
                              const std::string& which) {
    const double d = spatial_sq(ks) + rhs;
    if (d < -constraint_tol * scale) {
        throw BranchViolation(which + ": no propagating energy (radicand " + std::to_string(d) + " < 0)");
    }
    return FourVector::from_parts(offset + sign_value(sign) * std::sqrt(std::max(0.0, d)), ks);
}

inline std::string sector(const char* eq, std::size_t a) {
    return std::string(eq) + " (sector " + std::to_string(a) + ")";
}

inline void require_mass(double m) {
    if (!(m >= 0)) throw std::invalid_argument("mass must be >= 0");
}

}  // namespace detail

/// a^mu = (a0,0,0,0), b = 0:
///   k.k = m^2 - a0^2 + 2 a0 k0 - theta.theta,   a0 theta0 = theta.k
/// i.e. (k - a).(k - a) = m^2 - theta.theta, so k0 = a0 +- sqrt(...).
inline GaugeSolution solve_electric(double m, double a0, const LinearPhase& phase, const Spatial& k0_spatial,
                                    const Spatial& k1_spatial, EnergySign sign0 = EnergySign::positive,
                                    EnergySign sign1 = EnergySign::positive, double phi0 = 0.0) {
    detail::require_mass(m);
    const double tt = dot(phase.theta, phase.theta);
    if (m * m - tt < -constraint_tol * detail::gauge_scale(m, phase.theta, {})) {
        throw BranchViolation("m^2 - theta.theta < 0: evanescent branch is not supported");
    }
    GaugeSolution gs;
    gs.scenario = Scenario::electric;
    gs.potential = GaugePotential::electric(a0);
    gs.sol.mass = m;
    gs.sol.phase = phase;
    gs.sol.phi0 = phi0;
    const std::array<Spatial, 2> ks{k0_spatial, k1_spatial};
    const std::array<EnergySign, 2> signs{sign0, sign1};
    for (std::size_t a = 0; a < 2; ++a) {
        const double scale = detail::gauge_scale(m, phase.theta, FourVector::from_parts(a0, ks[a]), a0 * a0);
        gs.sol.k[a] = detail::energy_from(m * m - tt, ks[a], signs[a], a0, scale, detail::sector("g09", a));
        detail::require(dot(phase.theta, gs.sol.k[a]) - a0 * phase.theta[0],
                        detail::gauge_scale(m, phase.theta, gs.sol.k[a], a0 * a0), detail::sector("g10 vs g09", a));
    }
    return gs;
}

/// Constant quaternionic potential A^mu = b^mu j.
///   simple:          theta = 0, k_a.k_a = m^2 - |b|^2, b.k_a = 0 (q_a.conj(q_a) = m^2)
///   conjugate_pair:  k^(1) = -k^(0) = -k, theta.b = 0, theta.k = 0, b.k = 0,
///                    q.conj(q) = m^2 - theta.theta
///   temporal:        b = (b0,0,0,0), k.k = m^2 - theta.theta - b0^2 + 2 b0 theta0,
///                    b0 k0 = theta.k, hence |p|^2 = (p0 - b0)^2 - m^2
/// For the pair variants k1_spatial and sign1 are ignored.
inline GaugeSolution solve_constant_quaternionic(double m, const ComplexFourVector& b, const LinearPhase& phase,
                                                 QuaternionicVariant variant, const Spatial& k0_spatial,
                                                 const Spatial& k1_spatial = {},
                                                 EnergySign sign0 = EnergySign::positive,
                                                 EnergySign sign1 = EnergySign::positive, double phi0 = 0.0) {
    detail::require_mass(m);
    GaugeSolution gs;
    gs.scenario = Scenario::constant_quaternionic;
    gs.variant = variant;
    gs.potential = GaugePotential::quaternionic(b);
    gs.sol.mass = m;
    gs.sol.phase = phase;
    const FourVector& theta = phase.theta;
    const double tt = dot(theta, theta);
    const double bb = hermitian_norm_sq(b);
    const double bscale = euclid_sq(b);

    switch (variant) {
        case QuaternionicVariant::simple: {
            if (!phase.is_constant()) {
                throw ConstraintIncompatible("g11: simple variant requires theta = 0", std::sqrt(euclid_sq(theta)));
            }
            gs.sol.phi0 = phi0;
            const std::array<Spatial, 2> ks{k0_spatial, k1_spatial};
            const std::array<EnergySign, 2> signs{sign0, sign1};
            for (std::size_t a = 0; a < 2; ++a) {
                const double scale = detail::gauge_scale(m, theta, FourVector::from_parts(0, ks[a]), bscale);
                gs.sol.k[a] = detail::energy_from(m * m - bb, ks[a], signs[a], 0.0, scale, detail::sector("g11", a));
                detail::require(std::abs(dot(b, gs.sol.k[a])), detail::gauge_scale(m, theta, gs.sol.k[a], bscale),
                                detail::sector("g11: b.k = 0", a));
            }
            break;
        }
        case QuaternionicVariant::conjugate_pair: {
            detail::require(std::abs(dot(b, theta)), detail::gauge_scale(m, theta, {}, bscale), "g12: theta.b = 0");
            gs.sol.phi0 = 0.0;
            const double scale = detail::gauge_scale(m, theta, FourVector::from_parts(0, k0_spatial), bscale);
            const FourVector k = detail::energy_from(m * m - tt - bb, k0_spatial, sign0, 0.0, scale, "g12");
            const double kscale = detail::gauge_scale(m, theta, k, bscale);
            detail::require(dot(theta, k), kscale, "g12: theta.k = 0");
            detail::require(std::abs(dot(b, k)), kscale, "g12: b.k = 0 ((theta + b).k = 0 with theta.k = 0)");
            gs.sol.k = {k, -k};
            break;
        }
        case QuaternionicVariant::temporal: {
            for (std::size_t mu = 1; mu < 4; ++mu) {
                if (b[mu] != std::complex<double>{}) {
                    throw std::invalid_argument("temporal variant requires b = (b0, 0, 0, 0)");
                }
            }
            if (b[0].imag() != 0.0) throw std::invalid_argument("temporal variant requires a real b0");
            if (phase.is_constant()) {
                throw TrivialSolution("temporal variant with theta = 0 only admits the trivial solution");
            }
            const double b0 = b[0].real();
            gs.sol.phi0 = 0.0;
            const double rhs = m * m - tt - b0 * b0 + 2.0 * b0 * theta[0];
            const double scale = detail::gauge_scale(m, theta, FourVector::from_parts(0, k0_spatial), b0 * b0);
            const FourVector k = detail::energy_from(rhs, k0_spatial, sign0, 0.0, scale, "g13");
            detail::require(b0 * k[0] - dot(theta, k), detail::gauge_scale(m, theta, k, b0 * b0),
                            "g13: b0 k0 = theta.k");
            gs.sol.k = {k, -k};
            break;
        }
    }
    gs.effective = std::array<ComplexFourVector, 2>{to_complex(gs.sol.k[0]) + b, to_complex(gs.sol.k[1]) + b};
    return gs;
}

/// phi^(0) = phi^(1) = e^{i k.x}, a = 0, b^mu = beta^mu e^{2 i k.x}:
///   theta.k = 0,  k.k = m^2 - (theta - beta).(theta - beta).
inline GaugeSolution solve_oscillating(double m, const FourVector& beta, const LinearPhase& phase,
                                       const Spatial& k_spatial, EnergySign sign = EnergySign::positive) {
    detail::require_mass(m);
    GaugeSolution gs;
    gs.scenario = Scenario::oscillating;
    gs.sol.mass = m;
    gs.sol.phase = phase;
    gs.sol.phi0 = 0.0;
    const FourVector diff = phase.theta - beta;
    const double dd = dot(diff, diff);
    const double scale = detail::gauge_scale(m, phase.theta, FourVector::from_parts(0, k_spatial), euclid_sq(beta));
    const FourVector k = detail::energy_from(m * m - dd, k_spatial, sign, 0.0, scale, "oscillating dispersion");
    detail::require(dot(phase.theta, k), detail::gauge_scale(m, phase.theta, k, euclid_sq(beta)), "g08: theta.k = 0");
    gs.sol.k = {k, k};
    gs.potential = GaugePotential::oscillating(beta, k);
    const double ks = detail::gauge_scale(m, phase.theta, k, euclid_sq(beta));
    gs.massive_light_cone = std::abs(dot(k, k)) <= constraint_tol * ks &&
                            std::abs(dd - m * m) <= constraint_tol * ks && m > constraint_tol;
    return gs;
}

/// Norms of the two coupled sector equations, maximized over a in {0, 1}:
///   first:  (box + m^2 - dTh.dTh - |A|^2 - i d.a - 2i a.d) phi_a + 2 b.dTh conj(phi_b)
///   second: (box Th + 2 dTh.d - 2i a.dTh) phi_a - (d.b + 2 b.d) conj(phi_b)
/// evaluated analytically for plane waves at x.
inline std::pair<double, double> coupled_residuals(const GaugeSolution& gs, const FourVector& x) {
    const auto& s = gs.sol;
    const auto& A = gs.potential;
    const FourVector& theta = s.phase.theta;
    const double m2 = s.mass * s.mass;
    const double tt = dot(theta, theta);
    const double asq = A.norm_sq_at(x);
    const auto bx = A.b_at(x);
    const auto divb = A.div_b(x);
    const std::complex<double> I{0.0, 1.0};
    double first = 0.0, second = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
        const std::size_t o = 1 - a;
        const auto phi_a = component(s, a, x);
        const auto phi_o_conj = std::conj(component(s, o, x));
        const auto r1 = (m2 - dot(s.k[a], s.k[a]) - tt - asq + 2.0 * dot(A.a, s.k[a])) * phi_a +
                        2.0 * dot(bx, theta) * phi_o_conj;
        const auto r2 = 2.0 * I * (dot(theta, s.k[a]) - dot(A.a, theta)) * phi_a -
                        (divb - 2.0 * I * dot(bx, s.k[o])) * phi_o_conj;
        first = std::max(first, std::abs(r1));
        second = std::max(second, std::abs(r2));
    }
    return {first, second};
}

/// Scenario dispersion relations in their "linear momentum" form, one
/// residual per sector (0 for scenarios without such a relation):
///   electric:  |p|^2 - ((p0 - a0)^2 - m^2),  p = k + theta
///   temporal:  |p|^2 - ((p0 - b0)^2 - m^2)
///   oscillating: k.k - (m^2 - (theta - beta).(theta - beta))
///   simple / conjugate_pair: q.conj(q) - (m^2 - theta.theta)
inline std::array<double, 2> momentum_relation_residuals(const GaugeSolution& gs) {
    const auto& s = gs.sol;
    const double m2 = s.mass * s.mass;
    std::array<double, 2> r{};
    for (std::size_t a = 0; a < 2; ++a) {
        const FourVector p = s.momentum(a);
        const double psq = spatial_sq(p.spatial());
        switch (gs.scenario) {
            case Scenario::free:
                r[a] = dot(p, p) - m2;
                break;
            case Scenario::electric: {
                const double d = p[0] - gs.potential.a[0];
                r[a] = psq - (d * d - m2);
                break;
            }
            case Scenario::constant_quaternionic: {
                if (gs.variant == QuaternionicVariant::temporal) {
                    if (a == 1) break;  // the relation is stated for k = k^(0)
                    const double d = p[0] - gs.potential.b[0].real();
                    r[a] = psq - (d * d - m2);
                } else {
                    const auto q = to_complex(s.k[a]) + gs.potential.b;
                    r[a] = hermitian_norm_sq(q) - (m2 - dot(s.phase.theta, s.phase.theta));
                }
                break;
            }
            case Scenario::oscillating: {
                const FourVector diff = s.phase.theta - gs.potential.oscillation->beta;
                r[a] = dot(s.k[a], s.k[a]) - (m2 - dot(diff, diff));
                break;
            }
        }
    }
    return r;
}

}  // namespace qkg
