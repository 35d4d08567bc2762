#include "rodrigues/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rodrigues/composition.hpp"

namespace rodrigues {

AngularVelocity::AngularVelocity(const Vec3& w) : w_(w) {
    if (!is_finite(w)) throw Error(ErrorCode::NonFinite, "angular velocity has non-finite component");
}

RodriguesVector rodrigues_increment(const AngularVelocity& omega, double dt, IncrementScheme scheme) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorCode::InvalidArgument, "time step must be positive and finite");
    }
    const Vec3& w = omega.vec();
    const double rate = norm(w);
    if (rate == 0.0) return RodriguesVector{};
    if (scheme == IncrementScheme::FirstOrder) return RodriguesVector(0.5 * dt * w);

    const double angle = rate * dt;
    if (angle >= std::numbers::pi - 1e-3) {
        throw Error(ErrorCode::StepTooLarge,
                    "step turns by " + std::to_string(angle) + " rad; the half-angle tangent diverges near pi");
    }
    return RodriguesVector(std::tan(0.5 * angle) / rate * w);
}

AttitudeTrajectory integrate_attitude(std::span<const AngularVelocitySample> samples,
                                      const IntegrationOptions& options) {
    if (samples.size() < 2) throw Error(ErrorCode::InvalidArgument, "integration needs at least two samples");
    if (options.substeps < 1) throw Error(ErrorCode::InvalidArgument, "substeps must be at least 1");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i].t)) throw Error(ErrorCode::NonFinite, "sample time is not finite");
        if (i > 0 && !(samples[i].t > samples[i - 1].t)) {
            throw Error(ErrorCode::NonMonotonicTime,
                        "sample times must be strictly increasing (sample " + std::to_string(i) + ")");
        }
    }

    AttitudeTrajectory out;
    out.samples.reserve(samples.size());
    RotationResult orientation = options.initial.value_or(RotationResult(RodriguesVector{}));
    out.samples.push_back({samples.front().t, orientation});

    const int n = options.substeps;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const AngularVelocitySample& lo = samples[i];
        const AngularVelocitySample& hi = samples[i + 1];
        const double h = (hi.t - lo.t) / n;
        for (int k = 0; k < n; ++k) {
            const double f = (k + 0.5) / n;
            const AngularVelocity mid((1.0 - f) * lo.omega.vec() + f * hi.omega.vec());
            const RodriguesVector step = rodrigues_increment(mid, h, options.scheme);
            orientation = compose_general(step, orientation);
        }
        out.samples.push_back({hi.t, orientation});
    }
    return out;
}

}  // namespace rodrigues
