#pragma once

#include "rodrigues/rotation.hpp"

namespace rodrigues {

/// Relative threshold on the composition denominator, scaled by
/// 1 + ‖Q1‖‖Q2‖, below which the result is reported as a half-turn.
inline constexpr double kCompositionDegeneracyTolerance = 1e-9;

/// Rotation R(Q2)·R(Q1): Q1 is applied FIRST, Q2 second. The argument order
/// mirrors the matrix product.
///
///   Q3 = (Q1 + Q2 + Q2 × Q1) / (1 - Q2·Q1)
///
/// When the denominator vanishes the result is a half-turn about the
/// numerator, which is never zero in that case.
RotationResult compose(const RodriguesVector& second, const RodriguesVector& first);

/// compose() extended to half-turn operands by way of rotation matrices.
RotationResult compose_general(const RotationResult& second, const RotationResult& first);

struct CompositionDiagnostics {
    double lambda = 0.0;       ///< 1 - Q2·Q1, the proportionality constant
    Vec3 numerator;            ///< Q1 + Q2 + Q2 × Q1
    double denominator = 0.0;  ///< same value as lambda
    RodriguesVector composed;  ///< Q3
    /// ‖λ(1 + Q3×)A - [1 + Q1× + Q2× + (Q2×)(Q1×)]A‖
    double proportionality_residual = 0.0;
};

/// Throws NotPerpendicular unless |A·Q1| ≤ 1e-9‖Q1‖, and
/// DegenerateComposition when the composition is a half-turn.
CompositionDiagnostics composition_diagnostics(const RodriguesVector& second, const RodriguesVector& first,
                                               const UnitVector& a);

}  // namespace rodrigues
