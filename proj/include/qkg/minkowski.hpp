#pragma once

/**
 * @file minkowski.hpp
 * @brief Four-vectors under the metric diag(+1, -1, -1, -1), natural units.
 *
 * Components are stored contravariant (v^mu). `dot` is the bilinear
 * contraction u_mu v^mu; for complex vectors it does not conjugate, use
 * `hermitian_dot` for that.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace qkg {

inline constexpr std::array<double, 4> metric_sign{1.0, -1.0, -1.0, -1.0};

template <typename T>
struct basic_four_vector {
    std::array<T, 4> c{};

    constexpr basic_four_vector() = default;
    constexpr basic_four_vector(T c0, T c1, T c2, T c3) : c{c0, c1, c2, c3} {}
    constexpr explicit basic_four_vector(const std::array<T, 4>& a) : c{a} {}

    /// Time component plus a spatial 3-vector.
    static constexpr basic_four_vector from_parts(T t, const std::array<T, 3>& s) {
        return {t, s[0], s[1], s[2]};
    }

    constexpr T& operator[](std::size_t mu) { return c[mu]; }
    constexpr const T& operator[](std::size_t mu) const { return c[mu]; }

    constexpr std::array<T, 3> spatial() const { return {c[1], c[2], c[3]}; }

    /// Covariant components v_mu.
    constexpr basic_four_vector lowered() const { return {c[0], -c[1], -c[2], -c[3]}; }

    constexpr bool operator==(const basic_four_vector&) const = default;

    constexpr basic_four_vector& operator+=(const basic_four_vector& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    constexpr basic_four_vector& operator-=(const basic_four_vector& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
        return *this;
    }
    constexpr basic_four_vector& operator*=(T s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    constexpr basic_four_vector operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
};

using FourVector = basic_four_vector<double>;
using ComplexFourVector = basic_four_vector<std::complex<double>>;
using Spatial = std::array<double, 3>;

template <typename T>
constexpr basic_four_vector<T> operator+(basic_four_vector<T> a, const basic_four_vector<T>& b) {
    return a += b;
}
template <typename T>
constexpr basic_four_vector<T> operator-(basic_four_vector<T> a, const basic_four_vector<T>& b) {
    return a -= b;
}
template <typename T>
constexpr basic_four_vector<T> operator*(T s, basic_four_vector<T> a) {
    return a *= s;
}
template <typename T>
constexpr basic_four_vector<T> operator*(basic_four_vector<T> a, T s) {
    return a *= s;
}

inline ComplexFourVector to_complex(const FourVector& v) {
    return {v[0], v[1], v[2], v[3]};
}
inline FourVector real_part(const ComplexFourVector& v) {
    return {v[0].real(), v[1].real(), v[2].real(), v[3].real()};
}
inline FourVector imag_part(const ComplexFourVector& v) {
    return {v[0].imag(), v[1].imag(), v[2].imag(), v[3].imag()};
}

/// u0 v0 - u1 v1 - u2 v2 - u3 v3 (no conjugation).
template <typename T, typename U>
constexpr auto dot(const basic_four_vector<T>& u, const basic_four_vector<U>& v) {
    return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

/// conj(u) . v with the same signs; hermitian_dot(v, v) is real.
inline std::complex<double> hermitian_dot(const ComplexFourVector& u, const ComplexFourVector& v) {
    std::complex<double> s{};
    for (std::size_t mu = 0; mu < 4; ++mu) s += metric_sign[mu] * std::conj(u[mu]) * v[mu];
    return s;
}

/// Signed sum of |v^mu|^2, i.e. the real part of hermitian_dot(v, v) computed
/// without a complex round trip.
inline double hermitian_norm_sq(const ComplexFourVector& v) {
    double s = 0.0;
    for (std::size_t mu = 0; mu < 4; ++mu) s += metric_sign[mu] * std::norm(v[mu]);
    return s;
}

/// Sum of squared components, the scale used for tolerances.
template <typename T>
double euclid_sq(const basic_four_vector<T>& v) {
    double s = 0.0;
    for (const auto& x : v.c) s += std::norm(std::complex<double>(x));
    return s;
}

inline double spatial_sq(const Spatial& s) {
    return s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
}
inline double spatial_dot(const Spatial& a, const Spatial& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <typename T>
double max_abs_diff(const basic_four_vector<T>& a, const basic_four_vector<T>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

enum class Causal { timelike, null, spacelike };

inline constexpr double default_null_tol = 1e-10;

/// null iff |v.v| <= tol * max(1, sum of squared components).
inline Causal classify(const FourVector& v, double tol = default_null_tol) {
    const double s = dot(v, v);
    if (std::abs(s) <= tol * std::max(1.0, euclid_sq(v))) return Causal::null;
    return s > 0 ? Causal::timelike : Causal::spacelike;
}

inline const char* to_string(Causal c) {
    switch (c) {
        case Causal::timelike: return "timelike";
        case Causal::null: return "null";
        case Causal::spacelike: return "spacelike";
    }
    return "?";
}

}  // namespace qkg
