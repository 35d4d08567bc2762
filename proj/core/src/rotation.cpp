#include "rodrigues/rotation.hpp"

#include <cmath>
#include <sstream>

namespace rodrigues {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfTurnAngleTolerance = 1e-12;
constexpr double kAxisSignThreshold = 1e-12;

std::string describe(const Vec3& v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

// -----------------------------------------------------------------------------
// UnitVector

UnitVector::UnitVector(const Vec3& v) : v_(v) {
    if (!is_finite(v)) throw Error(ErrorCode::NonFinite, "unit vector has non-finite component " + describe(v));
    const double n = norm(v);
    const double dev = std::fabs(n - 1.0);
    if (dev > kRenormalizeTolerance) {
        throw Error(ErrorCode::NotUnit, "vector " + describe(v) + " is not of unit length");
    }
    if (dev > kExactTolerance) v_ = v / n;
}

UnitVector UnitVector::normalize(const Vec3& v) {
    if (!is_finite(v)) throw Error(ErrorCode::NonFinite, "cannot normalize non-finite vector " + describe(v));
    const double n = norm(v);
    if (n == 0.0) throw Error(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
    return UnitVector(v / n, Trusted{});
}

// -----------------------------------------------------------------------------
// AxisAngle

AxisAngle::AxisAngle(const UnitVector& axis, double angle) : axis_(axis), angle_(angle) {
    if (!std::isfinite(angle)) throw Error(ErrorCode::NonFinite, "axis-angle with non-finite angle");
    if (!(angle > -kPi && angle <= kPi)) {
        angle_ = std::remainder(angle, 2.0 * kPi);
        if (angle_ <= -kPi) angle_ = kPi;
    }
}

AxisAngle AxisAngle::canonical() const {
    if (angle_ < 0.0) return AxisAngle(-axis_, -angle_);
    return *this;
}

// -----------------------------------------------------------------------------
// RodriguesVector

RodriguesVector::RodriguesVector(const Vec3& q) : q_(q) {
    if (!is_finite(q)) throw Error(ErrorCode::NonFinite, "Rodrigues vector has non-finite component " + describe(q));
}

// -----------------------------------------------------------------------------
// RotationMatrix

RotationMatrix::RotationMatrix(const Matrix3& m) : m_(m) {
    if (!is_finite(m)) throw Error(ErrorCode::NotARotation, "matrix has non-finite entries");
    const double ortho = max_abs_diff(m.transpose() * m, Matrix3::identity());
    const double det = m.determinant();
    if (ortho > kTolerance || std::fabs(det - 1.0) > kTolerance) {
        std::ostringstream os;
        os << "matrix is not a rotation (|R^T R - 1| = " << ortho << ", det = " << det << ")";
        throw Error(ErrorCode::NotARotation, os.str());
    }
}

RotationMatrix RotationMatrix::transpose() const { return RotationMatrix(m_.transpose()); }

// -----------------------------------------------------------------------------
// HalfTurn

namespace {

UnitVector canonical_half_turn_axis(const UnitVector& axis) {
    for (int i = 0; i < 3; ++i) {
        const double c = axis.vec()[i];
        if (std::fabs(c) > kAxisSignThreshold) return c < 0.0 ? -axis : axis;
    }
    return axis;
}

}  // namespace

HalfTurn::HalfTurn(const UnitVector& axis) : axis_(canonical_half_turn_axis(axis)) {}

// -----------------------------------------------------------------------------
// RotationResult

const RodriguesVector& RotationResult::rodrigues() const {
    if (const auto* q = std::get_if<RodriguesVector>(&value_)) return *q;
    throw Error(ErrorCode::HalfTurnUndefined,
                "the Rodrigues vector is undefined for a rotation by pi (half-turn)");
}

const HalfTurn& RotationResult::half_turn() const {
    if (const auto* h = std::get_if<HalfTurn>(&value_)) return *h;
    throw Error(ErrorCode::InvalidArgument, "rotation is not a half-turn");
}

// -----------------------------------------------------------------------------
// Operations

Vec3 skew_part(const Matrix3& m) {
    return {0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)), 0.5 * (m(1, 0) - m(0, 1))};
}

RotationMatrix euler_rodrigues_matrix(const UnitVector& n, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return RotationMatrix(c * Matrix3::identity() + s * skew(n).matrix() + (1.0 - c) * Matrix3::outer(n, n));
}

RodriguesVector rodrigues_from_axis_angle(const AxisAngle& aa) {
    if (std::fabs(kPi - std::fabs(aa.angle())) <= kHalfTurnAngleTolerance) {
        throw Error(ErrorCode::HalfTurnUndefined,
                    "the Rodrigues vector tan(theta/2)*n is undefined at theta = pi (half-turn)");
    }
    return RodriguesVector(std::tan(0.5 * aa.angle()) * aa.axis().vec());
}

AxisAngle axis_angle_from_rodrigues(const RodriguesVector& q) {
    const double n = q.norm();
    if (n == 0.0) return AxisAngle(UnitVector::unit_z(), 0.0);
    return AxisAngle(UnitVector::normalize(q.vec()), 2.0 * std::atan(n));
}

RotationMatrix matrix_from_rodrigues(const RodriguesVector& q) {
    const double q2 = norm_squared(q.vec());
    if (q2 <= 1.0) {
        const Matrix3 s = skew(q.vec()).matrix();
        return RotationMatrix(Matrix3::identity() + (2.0 / (1.0 + q2)) * (s + s * s));
    }
    // Same formula with the norm factored out of (Q×), so very long vectors
    // do not overflow Q·Q.
    const double n = norm(q.vec());
    const Matrix3 u = skew(q.vec() / n).matrix();
    return RotationMatrix(Matrix3::identity() + (2.0 / (n + 1.0 / n)) * u + (2.0 / (1.0 + 1.0 / q2)) * (u * u));
}

RotationMatrix matrix_from_half_turn(const HalfTurn& h) {
    const Vec3& n = h.axis();
    return RotationMatrix(2.0 * Matrix3::outer(n, n) - Matrix3::identity());
}

RotationMatrix matrix_of(const RotationResult& r) {
    if (r.is_regular()) return matrix_from_rodrigues(r.rodrigues());
    return matrix_from_half_turn(r.half_turn());
}

AxisAngle axis_angle_of(const RotationResult& r) {
    if (r.is_regular()) return axis_angle_from_rodrigues(r.rodrigues());
    return AxisAngle(r.half_turn().axis(), kPi);
}

double arc_angle(const Vec3& u, const Vec3& v) { return std::atan2(norm(cross(u, v)), dot(u, v)); }

}  // namespace rodrigues
