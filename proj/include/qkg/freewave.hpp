#pragma once

/**
 * @file freewave.hpp
 * @brief Free quaternionic plane waves of the Klein-Gordon equation.
 *
 *   Phi(x) = cos Th(x) e^{i k0.x} + sin Th(x) e^{i (k1.x + phi0)} j,
 *   Th(x)  = theta.x + Th0.
 *
 * (box + m^2) Phi = 0 splits into two scalar conditions per sector a:
 *   k_a.k_a + theta.theta = m^2     (equivalently p_a.p_a = m^2, p_a = k_a + theta)
 *   k_a.theta = 0
 * which fixes k_a^0 = +-sqrt(m^2 + |k_a|^2 - theta.theta).
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qkg/errors.hpp"
#include "qkg/minkowski.hpp"
#include "qkg/quaternion.hpp"

namespace qkg {

/// Absolute tolerance on scale-normalized constraint residuals.
inline constexpr double constraint_tol = 1e-10;

enum class EnergySign : int { positive = 1, negative = -1 };

inline double sign_value(EnergySign s) { return static_cast<double>(static_cast<int>(s)); }

/// Th(x) = theta_mu x^mu + Th0.
struct LinearPhase {
    FourVector theta{};
    double theta0{0};

    double at(const FourVector& x) const { return dot(theta, x) + theta0; }
    bool is_constant() const { return theta == FourVector{}; }
};

struct PlaneWaveSolution {
    LinearPhase phase{};
    std::array<FourVector, 2> k{};  // k^(0), k^(1), contravariant
    double phi0{0};
    double mass{0};

    FourVector momentum(std::size_t a) const { return k[a] + phase.theta; }
};

namespace detail {
inline double scale_of(double m, const FourVector& theta, const FourVector& k) {
    return std::max({1.0, m * m, euclid_sq(k), euclid_sq(theta)});
}
}  // namespace detail

/// Roots of k0^2 = m^2 + |k|^2 - theta.theta. Empty when the radicand is
/// negative (evanescent), {0} when it vanishes.
inline std::vector<double> solve_k0(double m, const Spatial& k_spatial, double theta_invariant) {
    const double d = m * m + spatial_sq(k_spatial) - theta_invariant;
    const double scale = std::max({1.0, m * m, spatial_sq(k_spatial), std::abs(theta_invariant)});
    if (std::abs(d) <= 1e-14 * scale) return {0.0};
    if (d < 0) return {};
    const double r = std::sqrt(d);
    return {r, -r};
}

/// Per-sector residuals of the free constraints.
struct FreeResiduals {
    std::array<double, 2> mass_shell{};  // p_a.p_a - m^2
    std::array<double, 2> orthogonal{};  // k_a.theta
    double max_abs() const {
        return std::max({std::abs(mass_shell[0]), std::abs(mass_shell[1]),
                         std::abs(orthogonal[0]), std::abs(orthogonal[1])});
    }
};

inline FreeResiduals free_residuals(const PlaneWaveSolution& s) {
    FreeResiduals r;
    for (std::size_t a = 0; a < 2; ++a) {
        const auto p = s.momentum(a);
        r.mass_shell[a] = dot(p, p) - s.mass * s.mass;
        r.orthogonal[a] = dot(s.k[a], s.phase.theta);
    }
    return r;
}

/// Analytic residuals of the two split equations for plane waves. With unit
/// modulus components they reduce to
///   (box + m^2 - dTh.dTh) phi_a  ->  m^2 - theta.theta - k_a.k_a
///   (box Th + 2 dTh.d) phi_a     ->  2 i theta.k_a
struct SplitResiduals {
    std::array<double, 2> wave{};
    std::array<double, 2> phase{};
    double max_abs() const {
        return std::max({std::abs(wave[0]), std::abs(wave[1]), std::abs(phase[0]), std::abs(phase[1])});
    }
};

inline SplitResiduals split_residuals(const PlaneWaveSolution& s) {
    const double tt = dot(s.phase.theta, s.phase.theta);
    SplitResiduals r;
    for (std::size_t a = 0; a < 2; ++a) {
        r.wave[a] = s.mass * s.mass - tt - dot(s.k[a], s.k[a]);
        r.phase[a] = 2.0 * dot(s.phase.theta, s.k[a]);
    }
    return r;
}

/// Build a plane-wave solution from spatial momenta and energy signs.
/// Throws BranchViolation when m^2 < theta.theta, ConstraintIncompatible when
/// the energy forced by the dispersion relation is not orthogonal to theta.
inline PlaneWaveSolution build_solution(double m, const LinearPhase& phase, const Spatial& k0_spatial,
                                        const Spatial& k1_spatial, EnergySign sign0, EnergySign sign1,
                                        double phi0) {
    if (!(m >= 0)) throw std::invalid_argument("build_solution: mass must be >= 0");
    const double tt = dot(phase.theta, phase.theta);
    const double branch = m * m - tt;
    if (branch < -constraint_tol * std::max({1.0, m * m, euclid_sq(phase.theta)})) {
        throw BranchViolation("m^2 - theta.theta = " + std::to_string(branch) +
                              " < 0: evanescent branch is not supported");
    }

    PlaneWaveSolution s;
    s.mass = m;
    s.phase = phase;
    s.phi0 = phi0;
    const std::array<Spatial, 2> ks{k0_spatial, k1_spatial};
    const std::array<EnergySign, 2> signs{sign0, sign1};
    for (std::size_t a = 0; a < 2; ++a) {
        const double d = std::max(0.0, m * m + spatial_sq(ks[a]) - tt);
        s.k[a] = FourVector::from_parts(sign_value(signs[a]) * std::sqrt(d), ks[a]);
        const double res = dot(s.k[a], phase.theta);
        const double scaled = std::abs(res) / detail::scale_of(m, phase.theta, s.k[a]);
        if (scaled > constraint_tol) {
            throw ConstraintIncompatible("e12 vs e13 (sector " + std::to_string(a) + ")", scaled);
        }
    }
    return s;
}

/// Complex component phi_a(x), unit modulus; sector 1 carries phi0.
inline std::complex<double> component(const PlaneWaveSolution& s, std::size_t a, const FourVector& x) {
    const double arg = dot(s.k[a], x) + (a == 1 ? s.phi0 : 0.0);
    return std::polar(1.0, arg);
}

inline Quaternion evaluate(const PlaneWaveSolution& s, const FourVector& x) {
    const double th = s.phase.at(x);
    return Quaternion::from_symplectic(std::cos(th) * component(s, 0, x), std::sin(th) * component(s, 1, x));
}

struct LightConeReport {
    bool k0_null{false};
    bool k1_null{false};
    bool cross_null{false};
    bool theta_sq_is_m_sq{false};
    bool massive{false};
    double k0_sq{0}, k1_sq{0}, cross{0}, theta_sq{0};

    bool all_null() const { return k0_null && k1_null && cross_null; }
};

/// Light-cone conditions k0.k0 = k1.k1 = k0.k1 = 0 and the massive variant
/// theta.theta = m^2 > 0.
inline LightConeReport is_light_cone(const PlaneWaveSolution& s, double tol = default_null_tol) {
    LightConeReport r;
    r.k0_sq = dot(s.k[0], s.k[0]);
    r.k1_sq = dot(s.k[1], s.k[1]);
    r.cross = dot(s.k[0], s.k[1]);
    r.theta_sq = dot(s.phase.theta, s.phase.theta);
    const double scale = std::max({1.0, euclid_sq(s.k[0]), euclid_sq(s.k[1]), euclid_sq(s.phase.theta),
                                   s.mass * s.mass});
    const auto small = [&](double v) { return std::abs(v) <= tol * scale; };
    r.k0_null = small(r.k0_sq);
    r.k1_null = small(r.k1_sq);
    r.cross_null = small(r.cross);
    r.theta_sq_is_m_sq = small(r.theta_sq - s.mass * s.mass);
    r.massive = r.all_null() && r.theta_sq_is_m_sq && s.mass > tol;
    return r;
}

}  // namespace qkg
