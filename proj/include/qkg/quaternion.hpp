#pragma once

/**
 * @file quaternion.hpp
 * @brief Hamilton quaternions q = x0 + x1 i + x2 j + x3 k.
 *
 * One storage form (four reals). The symplectic pair q = z0 + z1 j with
 * z0 = x0 + x1 i, z1 = x2 + x3 i and the polar form
 * q = |q| (cos th e^{i phi} + sin th e^{i xi} j) are conversions.
 *
 * Useful identities in symplectic form:
 *   (a0 + a1 j)(b0 + b1 j) = (a0 b0 - a1 conj(b1)) + (a0 b1 + a1 conj(b0)) j
 *   j z = conj(z) j
 *   q i = i z0 - i z1 j        (right multiplication by i)
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qkg/errors.hpp"

namespace qkg {

template <typename T>
struct basic_symplectic {
    std::complex<T> z0;
    std::complex<T> z1;
};

template <typename T>
struct basic_quaternion {
    T x0{0}, x1{0}, x2{0}, x3{0};  // 1, i, j, k

    constexpr basic_quaternion() = default;
    constexpr basic_quaternion(T a, T b = 0, T c = 0, T d = 0)
        : x0{a}, x1{b}, x2{c}, x3{d} {}

    static constexpr basic_quaternion unit_i() { return {0, 1, 0, 0}; }
    static constexpr basic_quaternion unit_j() { return {0, 0, 1, 0}; }
    static constexpr basic_quaternion unit_k() { return {0, 0, 0, 1}; }

    static basic_quaternion from_symplectic(std::complex<T> z0, std::complex<T> z1) {
        return {z0.real(), z0.imag(), z1.real(), z1.imag()};
    }
    static basic_quaternion from_symplectic(const basic_symplectic<T>& s) {
        return from_symplectic(s.z0, s.z1);
    }

    std::complex<T> z0() const { return {x0, x1}; }
    std::complex<T> z1() const { return {x2, x3}; }
    basic_symplectic<T> symplectic() const { return {z0(), z1()}; }

    constexpr T real() const { return x0; }

    constexpr bool operator==(const basic_quaternion&) const = default;

    constexpr basic_quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }

    constexpr basic_quaternion& operator+=(const basic_quaternion& o) {
        x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
        return *this;
    }
    constexpr basic_quaternion& operator-=(const basic_quaternion& o) {
        x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
        return *this;
    }
    constexpr basic_quaternion& operator*=(T s) {
        x0 *= s; x1 *= s; x2 *= s; x3 *= s;
        return *this;
    }
    constexpr basic_quaternion& operator/=(T s) {
        x0 /= s; x1 /= s; x2 /= s; x3 /= s;
        return *this;
    }
};

using Quaternion = basic_quaternion<double>;
using SymplecticPair = basic_symplectic<double>;

template <typename T>
constexpr basic_quaternion<T> operator+(basic_quaternion<T> a, const basic_quaternion<T>& b) {
    return a += b;
}
template <typename T>
constexpr basic_quaternion<T> operator-(basic_quaternion<T> a, const basic_quaternion<T>& b) {
    return a -= b;
}
template <typename T>
constexpr basic_quaternion<T> operator*(basic_quaternion<T> a, T s) {
    return a *= s;
}
template <typename T>
constexpr basic_quaternion<T> operator*(T s, basic_quaternion<T> a) {
    return a *= s;
}
template <typename T>
constexpr basic_quaternion<T> operator/(basic_quaternion<T> a, T s) {
    return a /= s;
}

/// Hamilton product. Not commutative: i*j = k, j*i = -k.
template <typename T>
constexpr basic_quaternion<T> mul(const basic_quaternion<T>& a, const basic_quaternion<T>& b) {
    return {
        a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
        a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
        a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
        a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0,
    };
}

template <typename T>
constexpr basic_quaternion<T> operator*(const basic_quaternion<T>& a, const basic_quaternion<T>& b) {
    return mul(a, b);
}

template <typename T>
constexpr basic_quaternion<T> conj(const basic_quaternion<T>& q) {
    return {q.x0, -q.x1, -q.x2, -q.x3};
}

template <typename T>
constexpr T norm_sq(const basic_quaternion<T>& q) {
    return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}

template <typename T>
T abs(const basic_quaternion<T>& q) {
    return std::sqrt(norm_sq(q));
}

/// q * i. Symplectic: (z0, z1) -> (i z0, -i z1).
template <typename T>
constexpr basic_quaternion<T> right_mul_i(const basic_quaternion<T>& q) {
    return {-q.x1, q.x0, q.x3, -q.x2};
}

/// i * q. Symplectic: (z0, z1) -> (i z0, i z1).
template <typename T>
constexpr basic_quaternion<T> left_mul_i(const basic_quaternion<T>& q) {
    return {-q.x1, q.x0, -q.x3, q.x2};
}

/// Left multiplication by a complex number c (embedded as c0 + c1 i).
template <typename T>
basic_quaternion<T> left_mul(std::complex<T> c, const basic_quaternion<T>& q) {
    return basic_quaternion<T>::from_symplectic(c * q.z0(), c * q.z1());
}

/// Largest componentwise absolute difference.
template <typename T>
T max_abs_diff(const basic_quaternion<T>& a, const basic_quaternion<T>& b) {
    using std::abs;
    T m = abs(a.x0 - b.x0);
    m = std::max(m, abs(a.x1 - b.x1));
    m = std::max(m, abs(a.x2 - b.x2));
    return std::max(m, abs(a.x3 - b.x3));
}

struct PolarForm {
    double magnitude{0};
    double theta{0};  // [0, pi/2]
    double phi{0};    // (-pi, pi]
    double xi{0};     // (-pi, pi]
};

namespace detail {
inline double canonical_angle(double a) {
    // std::arg may return -pi for a negative real with a -0.0 imaginary part.
    return a <= -std::numbers::pi ? std::numbers::pi : a;
}
}  // namespace detail

/// Polar decomposition. Degenerate angles are pinned: phi = 0 when
/// cos(theta) = 0, xi = 0 when sin(theta) = 0.
inline PolarForm to_polar(const Quaternion& q) {
    if (norm_sq(q) == 0.0) {
        throw DegenerateInput("to_polar: zero quaternion has undefined polar angles");
    }
    const auto z0 = q.z0();
    const auto z1 = q.z1();
    PolarForm p;
    p.magnitude = abs(q);
    p.theta = std::atan2(std::abs(z1), std::abs(z0));
    p.phi = z0 == std::complex<double>{} ? 0.0 : detail::canonical_angle(std::arg(z0));
    p.xi = z1 == std::complex<double>{} ? 0.0 : detail::canonical_angle(std::arg(z1));
    return p;
}

inline Quaternion from_polar(const PolarForm& p) {
    return Quaternion::from_symplectic(std::polar(p.magnitude * std::cos(p.theta), p.phi),
                                       std::polar(p.magnitude * std::sin(p.theta), p.xi));
}

}  // namespace qkg
