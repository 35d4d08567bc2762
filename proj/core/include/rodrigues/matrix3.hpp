#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "rodrigues/vec3.hpp"

namespace rodrigues {

/// Dense 3x3 matrix, row-major.
class Matrix3 {
public:
    constexpr Matrix3() = default;
    constexpr explicit Matrix3(const std::array<double, 9>& rowMajor) : m_(rowMajor) {}

    static constexpr Matrix3 zero() { return Matrix3{}; }
    static constexpr Matrix3 identity() { return Matrix3({1, 0, 0, 0, 1, 0, 0, 0, 1}); }
    static constexpr Matrix3 diagonal(double a, double b, double c) {
        return Matrix3({a, 0, 0, 0, b, 0, 0, 0, c});
    }
    /// a bᵀ
    static constexpr Matrix3 outer(const Vec3& a, const Vec3& b) {
        return Matrix3({a.x * b.x, a.x * b.y, a.x * b.z,
                        a.y * b.x, a.y * b.y, a.y * b.z,
                        a.z * b.x, a.z * b.y, a.z * b.z});
    }
    static constexpr Matrix3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        return Matrix3({c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z});
    }

    constexpr double operator()(int row, int col) const { return m_[row * 3 + col]; }
    constexpr double& operator()(int row, int col) { return m_[row * 3 + col]; }

    constexpr const std::array<double, 9>& data() const { return m_; }

    constexpr Vec3 row(int r) const { return {m_[r * 3], m_[r * 3 + 1], m_[r * 3 + 2]}; }
    constexpr Vec3 column(int c) const { return {m_[c], m_[3 + c], m_[6 + c]}; }

    constexpr Matrix3 transpose() const {
        return Matrix3({m_[0], m_[3], m_[6], m_[1], m_[4], m_[7], m_[2], m_[5], m_[8]});
    }

    constexpr double trace() const { return m_[0] + m_[4] + m_[8]; }

    constexpr double determinant() const {
        return m_[0] * (m_[4] * m_[8] - m_[5] * m_[7])
             - m_[1] * (m_[3] * m_[8] - m_[5] * m_[6])
             + m_[2] * (m_[3] * m_[7] - m_[4] * m_[6]);
    }

    constexpr Matrix3& operator+=(const Matrix3& o) {
        for (int i = 0; i < 9; ++i) m_[i] += o.m_[i];
        return *this;
    }
    constexpr Matrix3& operator-=(const Matrix3& o) {
        for (int i = 0; i < 9; ++i) m_[i] -= o.m_[i];
        return *this;
    }
    constexpr Matrix3& operator*=(double s) {
        for (double& v : m_) v *= s;
        return *this;
    }

    friend constexpr bool operator==(const Matrix3&, const Matrix3&) = default;

private:
    std::array<double, 9> m_{};
};

constexpr Matrix3 operator+(Matrix3 a, const Matrix3& b) { return a += b; }
constexpr Matrix3 operator-(Matrix3 a, const Matrix3& b) { return a -= b; }
constexpr Matrix3 operator-(Matrix3 a) { return a *= -1.0; }
constexpr Matrix3 operator*(Matrix3 a, double s) { return a *= s; }
constexpr Matrix3 operator*(double s, Matrix3 a) { return a *= s; }
constexpr Matrix3 operator/(Matrix3 a, double s) { return a *= (1.0 / s); }

constexpr Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
        }
    }
    return r;
}

constexpr Vec3 operator*(const Matrix3& a, const Vec3& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

/// Elementwise max-abs norm, the ‖·‖∞ used throughout for matrix residuals.
inline double max_abs(const Matrix3& a) {
    double r = 0.0;
    for (double v : a.data()) r = std::fmax(r, std::fabs(v));
    return r;
}

inline double max_abs_diff(const Matrix3& a, const Matrix3& b) { return max_abs(a - b); }

inline bool is_finite(const Matrix3& a) {
    for (double v : a.data()) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

inline std::ostream& operator<<(std::ostream& os, const Matrix3& m) {
    os << '[';
    for (int i = 0; i < 3; ++i) {
        os << (i ? "; " : "") << m(i, 0) << ", " << m(i, 1) << ", " << m(i, 2);
    }
    return os << ']';
}

}  // namespace rodrigues
