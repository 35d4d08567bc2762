#pragma once

#include <utility>

#include "rodrigues/rotation.hpp"

namespace rodrigues {

/// (1 - Q×)⁻¹ in closed form: 1 + [(Q×) + (Q×)²] / (1 + Q·Q).
Matrix3 cayley_inverse_explicit(const RodriguesVector& q);

/// R = (1 - Q×)⁻¹(1 + Q×), with the inverse taken from
/// cayley_inverse_explicit rather than a linear solve.
RotationMatrix cayley_rotation(const RodriguesVector& q);

/// (R - 1)(R + 1)⁻¹ evaluated literally with an adjugate inverse. For a
/// rotation without eigenvalue -1 this is the skew matrix (Q×).
/// Throws NotARotation when R + 1 is singular.
Matrix3 cayley_skew_literal(const RotationMatrix& r);

/// Rodrigues vector of R, or the half-turn when trace(R) ≤ -1 + 1e-6.
RotationResult rodrigues_from_matrix(const RotationMatrix& r);

/// Trace threshold below which rodrigues_from_matrix reports a half-turn.
inline constexpr double kHalfTurnTraceMargin = 1e-6;

struct CayleyResiduals {
    double point_relation;  ///< ‖(1 + Q×)x - (1 - Q×)Rx‖
    double skew_relation;   ///< ‖[(Q×)(R + 1) - (R - 1)]x‖
};

/// Residuals of the two identities linking x, Rx and Q, with
/// R = matrix_from_rodrigues(Q).
CayleyResiduals cayley_residuals(const RodriguesVector& q, const Vec3& x);

}  // namespace rodrigues
