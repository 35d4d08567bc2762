#include "rotkit/check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rodrigues/sampling.hpp"

namespace rotkit {

using namespace rodrigues;

namespace {

constexpr double kMaxAngle = std::numbers::pi - 1e-3;

Vec3 direction(const Vec3& v) { return v / norm(v); }

/// Pair of regular rotations away from the composition pole and with
/// non-parallel axes.
std::pair<RodriguesVector, RodriguesVector> sample_pair(Sampler& s) {
    for (;;) {
        const RodriguesVector q1 = s.rodrigues(kMaxAngle);
        const RodriguesVector q2 = s.rodrigues(kMaxAngle);
        if (std::fabs(1.0 - dot(q2.vec(), q1.vec())) < 1e-3) continue;
        if (norm(cross(q1.vec(), q2.vec())) <= 1e-6 * q1.norm() * q2.norm()) continue;
        return {q1, q2};
    }
}

template <class Body>
Diagnostic measure(std::string name, double tolerance, int n, Body body) {
    Diagnostic d{std::move(name), 0.0, tolerance, {}};
    try {
        for (int i = 0; i < n; ++i) {
            const double r = body();
            // NaN must not slip through a max().
            d.max_residual = std::isnan(r) ? std::numeric_limits<double>::infinity() : std::max(d.max_residual, r);
        }
    } catch (const std::exception& e) {
        d.failure = e.what();
    }
    return d;
}

}  // namespace

std::vector<Diagnostic> run_checks(int n, std::uint64_t seed, const CheckKernels& k) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "check needs n >= 1");
    Sampler s(seed);
    std::vector<Diagnostic> out;
    const Matrix3 one = Matrix3::identity();

    out.push_back(measure("formula-agreement", 1e-12, n, [&] {
        const AxisAngle aa = s.axis_angle(kMaxAngle);
        const RodriguesVector q = rodrigues_from_axis_angle(aa);
        const Matrix3 r1 = k.euler_rodrigues(aa.axis(), aa.angle()).matrix();
        const Matrix3 r2 = k.matrix_from_rodrigues(q).matrix();
        const Matrix3 r5 = k.cayley_rotation(q).matrix();
        return std::max({max_abs_diff(r1, r2), max_abs_diff(r2, r5), max_abs_diff(r1, r5)});
    }));

    out.push_back(measure("cayley-inverse", 1e-12, n, [&] {
        const RodriguesVector q(s.log_uniform(1e-3, 1e3) * s.unit_vector().vec());
        const Matrix3 m = one - skew(q.vec()).matrix();
        const Matrix3 inv = k.cayley_inverse(q);
        return std::max(max_abs_diff(m * inv, one), max_abs_diff(inv * m, one));
    }));

    out.push_back(measure("cayley-point-relation", 1e-12, n, [&] {
        const RodriguesVector q = s.rodrigues(kMaxAngle);
        const Vec3 x = s.vector_in_ball(10.0);
        const Matrix3 r = k.matrix_from_rodrigues(q).matrix();
        const Matrix3 sq = skew(q.vec()).matrix();
        return norm((one + sq) * x - (one - sq) * (r * x)) / ((1.0 + q.norm()) * norm(x));
    }));

    out.push_back(measure("cayley-skew-relation", 1e-12, n, [&] {
        const RodriguesVector q = s.rodrigues(kMaxAngle);
        const Vec3 x = s.vector_in_ball(10.0);
        const Matrix3 r = k.matrix_from_rodrigues(q).matrix();
        const Matrix3 sq = skew(q.vec()).matrix();
        return norm((sq * (r + one) - (r - one)) * x) / ((1.0 + q.norm()) * norm(x));
    }));

    out.push_back(measure("matrix-round-trip", 1e-9, n, [&] {
        const RodriguesVector q = s.rodrigues(kMaxAngle);
        const RotationResult back = k.rodrigues_from_matrix(k.cayley_rotation(q));
        if (!back.is_regular()) return std::numeric_limits<double>::infinity();
        return norm(back.rodrigues().vec() - q.vec());
    }));

    out.push_back(measure("composition-homomorphism", 1e-12, n, [&] {
        const auto [q1, q2] = sample_pair(s);
        const RotationResult q3 = k.compose(q2, q1);
        const Matrix3 product = (k.matrix_from_rodrigues(q2) * k.matrix_from_rodrigues(q1)).matrix();
        return max_abs_diff(matrix_of(q3).matrix(), product);
    }));

    out.push_back(measure("lambda-relation", 1e-10, n, [&] {
        const auto [q1, q2] = sample_pair(s);
        const RotationResult q3 = k.compose(q2, q1);
        if (!q3.is_regular()) return std::numeric_limits<double>::infinity();
        const Vec3 a = k.donkin_triangle(q1, q2).a();
        const double lambda = 1.0 - dot(q2.vec(), q1.vec());
        const Matrix3 s1 = skew(q1.vec()).matrix();
        const Matrix3 s2 = skew(q2.vec()).matrix();
        const Vec3 lhs = lambda * ((one + skew(q3.rodrigues().vec()).matrix()) * a);
        const Vec3 rhs = (one + s1 + s2 + s2 * s1) * a;
        return norm(lhs - rhs);
    }));

    out.push_back(measure("donkin-closure", 1e-10, n, [&] {
        const auto [q1, q2] = sample_pair(s);
        return donkin_verify(k.donkin_triangle(q1, q2));
    }));

    out.push_back(measure("donkin-directions", 1e-10, n, [&] {
        const auto [q1, q2] = sample_pair(s);
        const SphericalTriangle tri = k.donkin_triangle(q1, q2);
        const RotationResult q3 = k.compose(q2, q1);
        if (!q3.is_regular()) return std::numeric_limits<double>::infinity();
        const double sign = 1.0 - dot(q2.vec(), q1.vec()) > 0.0 ? 1.0 : -1.0;
        const double ab = norm(direction(bisector_intersection(q1, tri.a())) - tri.b().vec());
        const double bc = norm(direction(bisector_intersection(q2, tri.b())) - tri.c().vec());
        const double ac = norm(sign * direction(bisector_intersection(q3.rodrigues(), tri.a())) - tri.c().vec());
        return std::max({ab, bc, ac});
    }));

    out.push_back(measure("half-angle-point", 1e-12, n, [&] {
        const RodriguesVector q = s.rodrigues(kMaxAngle);
        if (q.norm() == 0.0) return 0.0;
        const UnitVector a = s.perpendicular_unit(q.vec());
        const AxisAngle aa = axis_angle_from_rodrigues(q);
        const Vec3 expected = apply_rotation(k.euler_rodrigues(aa.axis(), aa.angle() / 2), a);
        return norm(k.half_angle_point(q, a).vec() - expected);
    }));

    return out;
}

}  // namespace rotkit
