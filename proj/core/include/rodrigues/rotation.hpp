#pragma once

#include <numbers>
#include <variant>

#include "rodrigues/error.hpp"
#include "rodrigues/matrix3.hpp"
#include "rodrigues/vec3.hpp"

namespace rodrigues {

// =============================================================================
// Representations
// =============================================================================

/// Vector of norm 1. Inputs within 1e-12 of unit length are stored as given,
/// inputs within 1e-6 are renormalized, anything else is rejected.
class UnitVector {
public:
    static constexpr double kExactTolerance = 1e-12;
    static constexpr double kRenormalizeTolerance = 1e-6;

    /// Throws NotUnit / NonFinite.
    explicit UnitVector(const Vec3& v);

    /// Direction of an arbitrary nonzero finite vector.
    static UnitVector normalize(const Vec3& v);

    static UnitVector unit_x() { return UnitVector(Vec3{1, 0, 0}); }
    static UnitVector unit_y() { return UnitVector(Vec3{0, 1, 0}); }
    static UnitVector unit_z() { return UnitVector(Vec3{0, 0, 1}); }

    const Vec3& vec() const { return v_; }
    operator const Vec3&() const { return v_; }  // NOLINT(google-explicit-constructor)

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

    UnitVector operator-() const { return UnitVector(-v_, Trusted{}); }

    friend bool operator==(const UnitVector&, const UnitVector&) = default;

private:
    struct Trusted {};
    UnitVector(const Vec3& v, Trusted) : v_(v) {}

    Vec3 v_;
};

/// Axis plus signed angle (radians). The angle is wrapped into (-π, π].
class AxisAngle {
public:
    AxisAngle(const UnitVector& axis, double angle);

    const UnitVector& axis() const { return axis_; }
    double angle() const { return angle_; }

    /// Same rotation with angle in [0, π]; the axis carries the sign.
    AxisAngle canonical() const;

private:
    UnitVector axis_;
    double angle_;
};

/// Q = tan(θ/2)·n. Any finite vector is a valid Rodrigues vector.
class RodriguesVector {
public:
    RodriguesVector() = default;
    /// Throws NonFinite.
    explicit RodriguesVector(const Vec3& q);
    RodriguesVector(double x, double y, double z) : RodriguesVector(Vec3{x, y, z}) {}

    const Vec3& vec() const { return q_; }
    double x() const { return q_.x; }
    double y() const { return q_.y; }
    double z() const { return q_.z; }
    double norm() const { return rodrigues::norm(q_); }

    friend bool operator==(const RodriguesVector&, const RodriguesVector&) = default;

private:
    Vec3 q_;
};

/// Skew-symmetric matrix held by its generating vector, so Mᵀ = -M holds
/// structurally.
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(const Vec3& generator) : w_(generator) {}

    const Vec3& generator() const { return w_; }

    Matrix3 matrix() const {
        return Matrix3({0.0, -w_.z, w_.y, w_.z, 0.0, -w_.x, -w_.y, w_.x, 0.0});
    }

    Vec3 operator*(const Vec3& x) const { return cross(w_, x); }

    friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

private:
    Vec3 w_;
};

/// Special orthogonal matrix. Validated once at construction against
/// ‖RᵀR - 1‖∞ ≤ 1e-9 and |det R - 1| ≤ 1e-9.
class RotationMatrix {
public:
    static constexpr double kTolerance = 1e-9;

    RotationMatrix() : m_(Matrix3::identity()) {}
    /// Throws NotARotation.
    explicit RotationMatrix(const Matrix3& m);

    static RotationMatrix identity() { return RotationMatrix(); }

    const Matrix3& matrix() const { return m_; }
    double operator()(int row, int col) const { return m_(row, col); }

    RotationMatrix transpose() const;

    friend RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b) {
        return RotationMatrix(a.m_ * b.m_);
    }

private:
    Matrix3 m_;
};

/// Rotation by exactly π. Axis sign is canonicalized so that the first
/// component with magnitude above 1e-12 is positive.
class HalfTurn {
public:
    explicit HalfTurn(const UnitVector& axis);

    const UnitVector& axis() const { return axis_; }

    friend bool operator==(const HalfTurn&, const HalfTurn&) = default;

private:
    UnitVector axis_;
};

/// A rotation as either a Rodrigues vector or a half-turn (where Q is
/// undefined).
class RotationResult {
public:
    RotationResult(const RodriguesVector& q) : value_(q) {}  // NOLINT
    RotationResult(const HalfTurn& h) : value_(h) {}          // NOLINT

    bool is_regular() const { return std::holds_alternative<RodriguesVector>(value_); }
    bool is_half_turn() const { return std::holds_alternative<HalfTurn>(value_); }

    /// Throws HalfTurnUndefined for a half-turn.
    const RodriguesVector& rodrigues() const;
    /// Throws InvalidArgument for a regular rotation.
    const HalfTurn& half_turn() const;

    const std::variant<RodriguesVector, HalfTurn>& variant() const { return value_; }

    friend bool operator==(const RotationResult&, const RotationResult&) = default;

private:
    std::variant<RodriguesVector, HalfTurn> value_;
};

// =============================================================================
// Operations
// =============================================================================

/// (v×): skew(v)·x = v × x.
inline SkewMatrix skew(const Vec3& v) { return SkewMatrix(v); }
inline Vec3 unskew(const SkewMatrix& m) { return m.generator(); }

/// Antisymmetric part of a general matrix, read out as its generator.
Vec3 skew_part(const Matrix3& m);

/// R = cosθ·1 + sinθ·(n×) + (1 - cosθ)·nnᵀ
RotationMatrix euler_rodrigues_matrix(const UnitVector& n, double theta);

/// Throws HalfTurnUndefined when |θ| is within 1e-12 of π.
RodriguesVector rodrigues_from_axis_angle(const AxisAngle& aa);

/// Angle in [0, π); the zero vector maps to angle 0 about (0,0,1).
AxisAngle axis_angle_from_rodrigues(const RodriguesVector& q);

/// R = 1 + 2/(1 + Q·Q)·[(Q×) + (Q×)²]
RotationMatrix matrix_from_rodrigues(const RodriguesVector& q);

/// R = 2nnᵀ - 1
RotationMatrix matrix_from_half_turn(const HalfTurn& h);

inline Vec3 apply_rotation(const RotationMatrix& r, const Vec3& x) { return r.matrix() * x; }

inline RodriguesVector invert_rotation(const RodriguesVector& q) { return RodriguesVector(-q.vec()); }

RotationMatrix matrix_of(const RotationResult& r);

/// Half-turns come back with angle π.
AxisAngle axis_angle_of(const RotationResult& r);

/// Angle between unit directions via atan2(‖u×v‖, u·v).
double arc_angle(const Vec3& u, const Vec3& v);

}  // namespace rodrigues
