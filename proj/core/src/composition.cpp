#include "rodrigues/composition.hpp"

#include <cmath>

#include "rodrigues/cayley.hpp"

namespace rodrigues {

RotationResult compose(const RodriguesVector& second, const RodriguesVector& first) {
    const Vec3& q1 = first.vec();
    const Vec3& q2 = second.vec();
    const Vec3 numerator = q1 + q2 + cross(q2, q1);
    const double denominator = 1.0 - dot(q2, q1);
    const double scale = 1.0 + norm(q1) * norm(q2);
    if (std::fabs(denominator) <= kCompositionDegeneracyTolerance * scale) {
        return HalfTurn(UnitVector::normalize(numerator));
    }
    return RodriguesVector(numerator / denominator);
}

RotationResult compose_general(const RotationResult& second, const RotationResult& first) {
    if (second.is_regular() && first.is_regular()) return compose(second.rodrigues(), first.rodrigues());
    return rodrigues_from_matrix(matrix_of(second) * matrix_of(first));
}

CompositionDiagnostics composition_diagnostics(const RodriguesVector& second, const RodriguesVector& first,
                                               const UnitVector& a) {
    const Vec3& q1 = first.vec();
    const Vec3& q2 = second.vec();
    if (std::fabs(dot(a.vec(), q1)) > 1e-9 * norm(q1)) {
        throw Error(ErrorCode::NotPerpendicular, "A must be perpendicular to the first rotation's vector");
    }
    const RotationResult q3 = compose(second, first);
    if (q3.is_half_turn()) {
        throw Error(ErrorCode::DegenerateComposition, "composition is a half-turn; Q3 and lambda-scaling undefined");
    }

    CompositionDiagnostics d;
    d.numerator = q1 + q2 + cross(q2, q1);
    d.denominator = 1.0 - dot(q2, q1);
    d.lambda = d.denominator;
    d.composed = q3.rodrigues();

    const Matrix3 one = Matrix3::identity();
    const Matrix3 s1 = skew(q1).matrix();
    const Matrix3 s2 = skew(q2).matrix();
    const Matrix3 s3 = skew(d.composed.vec()).matrix();
    const Vec3 lhs = d.lambda * ((one + s3) * a.vec());
    const Vec3 rhs = (one + s1 + s2 + s2 * s1) * a.vec();
    d.proportionality_residual = norm(lhs - rhs);
    return d;
}

}  // namespace rodrigues
