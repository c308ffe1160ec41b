#pragma once

/**
 * @file fdverify.hpp
 * @brief Finite-difference oracle for quaternion-valued fields.
 *
 * Everything here works from point evaluations of a field x -> Quaternion
 * and never looks at momenta or closed forms. Operators act with i on the
 * right of the full quaternion value unless a test deliberately asks for
 * the left-multiplied variant.
 *
 * All stencils are second-order central differences on a uniform spacing h
 * in every coordinate.
 */

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "qkg/errors.hpp"
#include "qkg/gauge_potential.hpp"
#include "qkg/minkowski.hpp"
#include "qkg/quaternion.hpp"

namespace qkg::fd {

struct GridSpec {
    double h{0.05};
};

inline constexpr std::array<double, 3> default_spacings{0.1, 0.05, 0.025};

inline FourVector shifted(FourVector x, std::size_t mu, double d) {
    x[mu] += d;
    return x;
}

/// Coordinate derivative d/dx^mu (lower index), central.
template <class Field>
Quaternion partial(const Field& f, const FourVector& x, std::size_t mu, double h) {
    return (f(shifted(x, mu, h)) - f(shifted(x, mu, -h))) / (2.0 * h);
}

/// box f = sum_mu s_mu d_mu d_mu f.
template <class Field>
Quaternion dalembertian_fd(const Field& f, const FourVector& x, GridSpec g) {
    const double h = g.h;
    const Quaternion f0 = f(x);
    Quaternion out;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        const Quaternion second = (f(shifted(x, mu, h)) - 2.0 * f0 + f(shifted(x, mu, -h))) / (h * h);
        out += metric_sign[mu] * second;
    }
    return out;
}

/// |(box + m^2) f|(x).
template <class Field>
double kg_residual(const Field& f, double m, const FourVector& x, GridSpec g) {
    return abs(dalembertian_fd(f, x, g) + (m * m) * f(x));
}

enum class MulSide { right, left };

namespace detail {
inline Quaternion times_i(const Quaternion& q, MulSide side) {
    return side == MulSide::right ? right_mul_i(q) : left_mul_i(q);
}

/// Lower-index potential A_mu = s_mu A^mu at x.
inline Quaternion lower_potential(const GaugePotential& A, const FourVector& x, std::size_t mu) {
    return metric_sign[mu] * A.at(x)[mu];
}
}  // namespace detail

/// |(-Pi_mu Pi^mu + m^2) f|(x) with Pi^mu f = (d^mu - A^mu) f i.
///
/// The inner application G_mu = (d_mu - A_mu) f i is evaluated at the
/// half-step points x +- h/2 e_mu and at x, so the composed operator keeps a
/// three-point footprint per direction and O(h^2) truncation.
template <class Field>
double gauge_kg_residual(const Field& f, const GaugePotential& A, double m, const FourVector& x, GridSpec g,
                         MulSide side = MulSide::right) {
    const double h = g.h;
    const double hh = 0.5 * h;
    auto inner = [&](const FourVector& y, std::size_t mu) {
        const Quaternion d = (f(shifted(y, mu, hh)) - f(shifted(y, mu, -hh))) / h;
        return detail::times_i(d - mul(detail::lower_potential(A, y, mu), f(y)), side);
    };
    Quaternion pi_sq;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        const Quaternion d = (inner(shifted(x, mu, hh), mu) - inner(shifted(x, mu, -hh), mu)) / h;
        const Quaternion outer = detail::times_i(d - mul(detail::lower_potential(A, x, mu), inner(x, mu)), side);
        pi_sq += metric_sign[mu] * outer;
    }
    return abs(-pi_sq + (m * m) * f(x));
}

/// Operator-form current bracket at x, one quaternion per mu:
///   mu = 0:  (E f) conj(f) + f conj(E f),      E f = D_0 f i
///   mu = l:  (p_l f) conj(f) + f conj(p_l f),  p_l f = -D_l f i
/// with D_mu = d_mu - A_mu. The physical current is the real part over 2m;
/// the imaginary parts vanish for fields of the form considered here.
template <class Field>
std::array<Quaternion, 4> current_bracket_fd(const Field& f, const FourVector& x, GridSpec g,
                                             const GaugePotential& A = GaugePotential::none()) {
    const Quaternion f0 = f(x);
    const Quaternion f0c = conj(f0);
    std::array<Quaternion, 4> out;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        Quaternion d = partial(f, x, mu, g.h) - mul(detail::lower_potential(A, x, mu), f0);
        Quaternion op = right_mul_i(d);
        if (mu != 0) op = -op;
        out[mu] = mul(op, f0c) + mul(f0, conj(op));
    }
    return out;
}

/// J^mu(x) from the operator form, normalized by 1/(2m) or, with m = 0,
/// by 1/2 (the unnormalized convention).
template <class Field>
FourVector current_fd(const Field& f, double m, const FourVector& x, GridSpec g,
                      const GaugePotential& A = GaugePotential::none()) {
    const auto br = current_bracket_fd(f, x, g, A);
    const double norm = m > 0 ? 1.0 / (2.0 * m) : 0.5;
    return {norm * br[0].x0, norm * br[1].x0, norm * br[2].x0, norm * br[3].x0};
}

/// d_mu J^mu(x), central differences on the contravariant components.
template <class CurrentField>
double divergence_fd(const CurrentField& J, const FourVector& x, GridSpec g) {
    double s = 0.0;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        s += (J(shifted(x, mu, g.h))[mu] - J(shifted(x, mu, -g.h))[mu]) / (2.0 * g.h);
    }
    return s;
}

struct ConvergenceFit {
    double order{std::numeric_limits<double>::quiet_NaN()};
    bool machine_precision{false};

    bool passes(double target = 2.0, double tol = 0.2) const {
        return machine_precision || std::abs(order - target) <= tol;
    }
};

/// Residuals at or below this are treated as round-off.
inline constexpr double machine_floor = 1e-11;

/// Least-squares slope of log(residual) against log(h). All residuals at
/// round-off level count as converged to machine precision.
inline ConvergenceFit convergence_order(std::span<const double> hs, std::span<const double> residuals,
                                        double floor = machine_floor) {
    if (hs.size() != residuals.size() || hs.size() < 3) {
        throw std::invalid_argument("convergence_order: need >= 3 (h, residual) pairs");
    }
    ConvergenceFit fit;
    bool all_small = true;
    for (double r : residuals) all_small = all_small && std::abs(r) <= floor;
    if (all_small) {
        fit.machine_precision = true;
        return fit;
    }
    for (double r : residuals) {
        if (!(r > 0)) throw DegenerateFit("convergence_order: non-positive residual in sweep");
    }
    const std::size_t n = hs.size();
    double mx = 0, my = 0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        lx[i] = std::log(hs[i]);
        ly[i] = std::log(residuals[i]);
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    fit.order = sxy / sxx;
    return fit;
}

/// Evaluate residual_at(h) over hs and fit the order.
template <class ResidualAtH>
ConvergenceFit sweep(const ResidualAtH& residual_at, std::span<const double> hs, std::vector<double>* residuals = nullptr,
                     double floor = machine_floor) {
    std::vector<double> r;
    r.reserve(hs.size());
    for (double h : hs) r.push_back(residual_at(h));
    if (residuals) *residuals = r;
    return convergence_order(hs, r, floor);
}

/// Root-mean-square helper for multi-point sweeps.
inline double rms(std::span<const double> v) {
    if (v.empty()) return 0.0;
    const double s = std::accumulate(v.begin(), v.end(), 0.0, [](double acc, double x) { return acc + x * x; });
    return std::sqrt(s / static_cast<double>(v.size()));
}

}  // namespace qkg::fd
