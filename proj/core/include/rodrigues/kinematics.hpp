#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rodrigues/rotation.hpp"

namespace rodrigues {

/// Angular velocity ω in rad/s.
class AngularVelocity {
public:
    AngularVelocity() = default;
    /// Throws NonFinite.
    explicit AngularVelocity(const Vec3& w);
    AngularVelocity(double x, double y, double z) : AngularVelocity(Vec3{x, y, z}) {}

    const Vec3& vec() const { return w_; }

private:
    Vec3 w_;
};

struct AngularVelocitySample {
    double t = 0.0;  ///< seconds
    AngularVelocity omega;
};

struct AttitudeSample {
    double t = 0.0;
    RotationResult orientation;
};

struct AttitudeTrajectory {
    std::vector<AttitudeSample> samples;

    const RotationResult& final_orientation() const { return samples.back().orientation; }
};

enum class IncrementScheme {
    FirstOrder,  ///< Q = ω·dt/2
    ExactStep,   ///< Q = tan(‖ω‖dt/2)·ω/‖ω‖, exact for constant ω
};

/// 1 + 2(Q×). First order in Q only; not orthogonal in general.
inline Matrix3 small_rotation_matrix(const RodriguesVector& q) {
    return Matrix3::identity() + 2.0 * skew(q.vec()).matrix();
}

/// dx = 2(Q × x).
inline Vec3 infinitesimal_displacement(const RodriguesVector& q, const Vec3& x) { return 2.0 * cross(q.vec(), x); }

/// Q1 + Q2, the first-order composition; commutative.
inline RodriguesVector compose_infinitesimal(const RodriguesVector& q1, const RodriguesVector& q2) {
    return RodriguesVector(q1.vec() + q2.vec());
}

/// dx/dt = ω × x, with the fixed point at the origin.
inline Vec3 velocity_field(const AngularVelocity& omega, const Vec3& x) { return cross(omega.vec(), x); }

/// Rodrigues vector of spinning at ω for dt seconds.
/// Throws InvalidArgument for dt ≤ 0 and, for ExactStep, StepTooLarge when
/// ‖ω‖dt ≥ π - 1e-3.
RodriguesVector rodrigues_increment(const AngularVelocity& omega, double dt, IncrementScheme scheme);

struct IntegrationOptions {
    IncrementScheme scheme = IncrementScheme::ExactStep;
    /// Steps per sample interval.
    int substeps = 1;
    std::optional<RotationResult> initial;
};

/// Propagates orientation through the sampled angular velocity. On every
/// step ω is linearly interpolated at the step midpoint, turned into a
/// Rodrigues increment, and applied by exact composition. Orientations are
/// reported at the sample times.
/// Throws InvalidArgument (fewer than 2 samples, substeps < 1),
/// NonMonotonicTime, NonFinite and StepTooLarge.
AttitudeTrajectory integrate_attitude(std::span<const AngularVelocitySample> samples,
                                      const IntegrationOptions& options = {});

}  // namespace rodrigues
