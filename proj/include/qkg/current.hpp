#pragma once

/**
 * @file current.hpp
 * @brief Probability four-current of plane-wave solutions.
 *
 * For Phi = z0 + z1 j the defining bilinear
 *   J^mu = (1/2m) [ (d^mu Phi i) conj(Phi) - Phi i d^mu conj(Phi) ]
 * is real and equals (1/m)(-Im(conj(z0) d^mu z0) + Im(conj(z1) d^mu z1)).
 * For the plane waves of freewave.hpp this gives
 *   J^mu = (1/m)(-cos^2 Th k0^mu + sin^2 Th k1^mu).
 * A gauge potential adds -(1/2m)(A^mu Phi i conj(Phi) + Phi i conj(Phi) A^mu).
 */

#include <algorithm>
#include <cmath>
#include <complex>

#include "qkg/errors.hpp"
#include "qkg/fdverify.hpp"
#include "qkg/freewave.hpp"
#include "qkg/gauge_potential.hpp"
#include "qkg/minkowski.hpp"

namespace qkg {

/// per_mass carries the 1/m factor; unnormalized drops it (needed at m = 0).
enum class Normalization { per_mass, unnormalized };

struct CurrentSample {
    FourVector x{};
    FourVector J{};
    double rho{0};  // == J[0]
};

namespace detail {
inline double current_factor(double m, Normalization n) {
    if (n == Normalization::unnormalized) return 1.0;
    if (m == 0.0) throw ZeroMass();
    return 1.0 / m;
}
}  // namespace detail

inline FourVector current_free(const PlaneWaveSolution& s, const FourVector& x,
                               Normalization n = Normalization::per_mass) {
    const double f = detail::current_factor(s.mass, n);
    const double th = s.phase.at(x);
    const double c2 = std::cos(th) * std::cos(th);
    const double s2 = std::sin(th) * std::sin(th);
    FourVector J;
    for (std::size_t mu = 0; mu < 4; ++mu) J[mu] = f * (-c2 * s.k[0][mu] + s2 * s.k[1][mu]);
    return J;
}

/// J.J = (1/m^2)(cos^4 k0.k0 + sin^4 k1.k1 - (1/2) sin^2(2Th) k0.k1).
inline double current_norm_sq(const PlaneWaveSolution& s, const FourVector& x,
                              Normalization n = Normalization::per_mass) {
    const double f = detail::current_factor(s.mass, n);
    const double th = s.phase.at(x);
    const double c = std::cos(th), sn = std::sin(th), s2t = std::sin(2.0 * th);
    return f * f *
           (c * c * c * c * dot(s.k[0], s.k[0]) + sn * sn * sn * sn * dot(s.k[1], s.k[1]) -
            0.5 * s2t * s2t * dot(s.k[0], s.k[1]));
}

/// Free current plus the gauge contribution
///   (1/m)[a^mu (cos^2|phi0|^2 - sin^2|phi1|^2) + sin(2Th) Im(conj(b^mu) phi0 phi1)].
inline FourVector current_gauge(const PlaneWaveSolution& s, const GaugePotential& A, const FourVector& x,
                                Normalization n = Normalization::per_mass) {
    FourVector J = current_free(s, x, n);
    const double f = detail::current_factor(s.mass, n);
    const double th = s.phase.at(x);
    const auto phi0 = component(s, 0, x);
    const auto phi1 = component(s, 1, x);
    const double weight = std::cos(th) * std::cos(th) * std::norm(phi0) - std::sin(th) * std::sin(th) * std::norm(phi1);
    const auto bx = A.b_at(x);
    const double s2t = std::sin(2.0 * th);
    for (std::size_t mu = 0; mu < 4; ++mu) {
        J[mu] += f * (A.a[mu] * weight + s2t * std::imag(std::conj(bx[mu]) * phi0 * phi1));
    }
    return J;
}

/// Central-difference d_mu J^mu at x for any callable x -> FourVector.
template <class CurrentField>
double check_continuity(const CurrentField& J, const FourVector& x, double h) {
    if (!(h > 0)) throw std::invalid_argument("check_continuity: h must be > 0");
    return fd::divergence_fd(J, x, fd::GridSpec{h});
}

inline CurrentSample sample_current(const FourVector& x, const FourVector& J) { return {x, J, J[0]}; }

}  // namespace qkg
