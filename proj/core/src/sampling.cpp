#include "rodrigues/sampling.hpp"

#include <cmath>
#include <numbers>

namespace rodrigues {

double Sampler::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

UnitVector Sampler::unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    return UnitVector::normalize({r * std::cos(phi), r * std::sin(phi), z});
}

Vec3 Sampler::vector_in_ball(double radius) {
    const double r = radius * std::cbrt(uniform());
    return r * unit_vector().vec();
}

UnitVector Sampler::perpendicular_unit(const Vec3& v) {
    const double n = norm(v);
    if (n == 0.0) return unit_vector();
    const Vec3 axis = v / n;
    // Orthonormal pair spanning the plane normal to v, then a random angle.
    const Vec3 helper = std::fabs(axis.x) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = cross(axis, helper) / norm(cross(axis, helper));
    const Vec3 e2 = cross(axis, e1);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    return UnitVector::normalize(std::cos(phi) * e1 + std::sin(phi) * e2);
}

AxisAngle Sampler::axis_angle(double max_angle) {
    const UnitVector axis = unit_vector();
    return AxisAngle(axis, uniform(-max_angle, max_angle));
}

RodriguesVector Sampler::rodrigues(double max_angle) { return rodrigues_from_axis_angle(axis_angle(max_angle)); }

}  // namespace rodrigues
