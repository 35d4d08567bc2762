#pragma once

#include <cstdint>
#include <random>

#include "rodrigues/rotation.hpp"

namespace rodrigues {

/// Seeded generator for the randomized diagnostics and property tests.
/// Distributions are derived from raw mt19937_64 output by hand so that a
/// seed yields the same sequence on every standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Log-uniform in [lo, hi], lo > 0.
    double log_uniform(double lo, double hi);

    UnitVector unit_vector();
    /// Uniformly distributed in the ball of the given radius.
    Vec3 vector_in_ball(double radius);
    /// Unit vector orthogonal to `v` (any direction when v = 0).
    UnitVector perpendicular_unit(const Vec3& v);

    /// Uniform axis, angle uniform in [-max_angle, max_angle].
    AxisAngle axis_angle(double max_angle);
    RodriguesVector rodrigues(double max_angle);

private:
    std::mt19937_64 engine_;
};

}  // namespace rodrigues
