#pragma once

// Minimal fixed-size vector/matrix types used throughout the library.
// Templated on the scalar so the same kernels run in double, long double,
// or std::complex<double>.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace cpplate {

template <typename T>
struct Vec3T {
    T x{}, y{}, z{};

    [[nodiscard]] constexpr Vec3T operator+(const Vec3T& o) const { return {x + o.x, y + o.y, z + o.z}; }
    [[nodiscard]] constexpr Vec3T operator-(const Vec3T& o) const { return {x - o.x, y - o.y, z - o.z}; }
    [[nodiscard]] constexpr Vec3T operator*(T s) const { return {x * s, y * s, z * s}; }
    [[nodiscard]] constexpr Vec3T operator/(T s) const { return {x / s, y / s, z / s}; }
    [[nodiscard]] constexpr T dot(const Vec3T& o) const { return x * o.x + y * o.y + z * o.z; }
    [[nodiscard]] T norm() const { return std::sqrt(dot(*this)); }
};

using Vec3 = Vec3T<double>;

template <typename T>
[[nodiscard]] constexpr T dot(const Vec3T<T>& u, const Vec3T<T>& v) {
    return u.dot(v);
}

template <typename T>
struct Mat3T {
    std::array<T, 9> a{};

    [[nodiscard]] constexpr T& operator()(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
    [[nodiscard]] constexpr const T& operator()(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }

    [[nodiscard]] constexpr Mat3T operator+(const Mat3T& o) const {
        Mat3T r;
        for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    [[nodiscard]] constexpr Mat3T operator-(const Mat3T& o) const {
        Mat3T r;
        for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    [[nodiscard]] constexpr Mat3T operator*(T s) const {
        Mat3T r;
        for (std::size_t i = 0; i < 9; ++i) r.a[i] = a[i] * s;
        return r;
    }

    [[nodiscard]] static constexpr Mat3T identity() {
        Mat3T m;
        m(0, 0) = T{1}; m(1, 1) = T{1}; m(2, 2) = T{1};
        return m;
    }

    [[nodiscard]] static constexpr Mat3T zero() { return Mat3T{}; }

    [[nodiscard]] constexpr Mat3T transpose() const {
        Mat3T m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = (*this)(c, r);
        return m;
    }

    [[nodiscard]] constexpr T trace() const { return a[0] + a[4] + a[8]; }
};

using Mat3 = Mat3T<double>;
using CMat3 = Mat3T<std::complex<double>>;

template <typename T>
[[nodiscard]] constexpr Mat3T<T> outer(const Vec3T<T>& u, const Vec3T<T>& v) {
    Mat3T<T> m;
    m(0, 0) = u.x * v.x; m(0, 1) = u.x * v.y; m(0, 2) = u.x * v.z;
    m(1, 0) = u.y * v.x; m(1, 1) = u.y * v.y; m(1, 2) = u.y * v.z;
    m(2, 0) = u.z * v.x; m(2, 1) = u.z * v.y; m(2, 2) = u.z * v.z;
    return m;
}

template <typename T>
[[nodiscard]] constexpr Mat3T<T> matmul(const Mat3T<T>& A, const Mat3T<T>& B) {
    Mat3T<T> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T s{};
            for (int k = 0; k < 3; ++k) s += A(i, k) * B(k, j);
            r(i, j) = s;
        }
    return r;
}

/// Entrywise (Frobenius) contraction sum_lm A_lm B_lm.
template <typename T>
[[nodiscard]] constexpr T frobenius(const Mat3T<T>& A, const Mat3T<T>& B) {
    T s{};
    for (std::size_t i = 0; i < 9; ++i) s += A.a[i] * B.a[i];
    return s;
}

template <typename T>
[[nodiscard]] T max_abs(const Mat3T<T>& A) {
    using std::abs;
    T m{};
    for (const auto& v : A.a)
        if (abs(v) > m) m = abs(v);
    return m;
}

[[nodiscard]] inline double max_abs(const CMat3& A) {
    double m = 0.0;
    for (const auto& v : A.a) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace cpplate
