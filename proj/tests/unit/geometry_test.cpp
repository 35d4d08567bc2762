#include "rodrigues/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "rodrigues/composition.hpp"
#include "rodrigues/sampling.hpp"
#include "support/oracles.hpp"
#include "support/test_support.hpp"

using namespace rodrigues;
using testing_support::kMaxAngle;
using testing_support::kPi;
using testing_support::kPropertyRuns;
using testing_support::MatNear;
using testing_support::VecNear;

namespace {

const double kRoot2 = 1.0 / std::sqrt(2.0);

/// Signed angle from u to v measured in the plane normal to n.
double planar_angle(const Vec3& n, const Vec3& u, const Vec3& v) {
    const Vec3 up = u - dot(n, u) * n;
    const Vec3 vp = v - dot(n, v) * n;
    return std::atan2(dot(n, cross(up, vp)), dot(up, vp));
}

Vec3 direction(const Vec3& v) { return v / norm(v); }

template <class T>
int count(const FigureScene& s) {
    int n = 0;
    for (const Primitive& p : s.primitives) n += std::holds_alternative<T>(p) ? 1 : 0;
    return n;
}

}  // namespace

// -----------------------------------------------------------------------------
// Propositions

TEST(TangentToBisectorTest, Examples) {
    const Vec3 t = tangent_to_bisector({0, 0, 1}, {1, 0, 0});
    EXPECT_EQ(t, (Vec3{0, 1, 0}));
    // Opposite side over adjacent side: tan(π/4) times radius 1.
    EXPECT_DOUBLE_EQ(norm(t), std::tan(kPi / 4) * 1.0);
    EXPECT_EQ(tangent_to_bisector({0, 0, 2}, {0, 0, 5}), (Vec3{0, 0, 0}));
    EXPECT_EQ(tangent_to_bisector({0, 0, 0}, {1, 2, 3}), (Vec3{0, 0, 0}));
}

TEST(BisectorIntersectionTest, Examples) {
    const Vec3 p = bisector_intersection({0, 0, 1}, {1, 0, 0});
    EXPECT_EQ(p, (Vec3{1, 1, 0}));
    EXPECT_NEAR(planar_angle({0, 0, 1}, {1, 0, 0}, p), kPi / 4, 1e-15);
    EXPECT_EQ(bisector_intersection({0, 0, 0}, {1, 2, 3}), (Vec3{1, 2, 3}));
    EXPECT_EQ(bisector_intersection({0, 0, 1}, {1, 0, 2}), (Vec3{1, 1, 2}));
}

TEST(HalfAnglePointTest, Examples) {
    EXPECT_TRUE(VecNear(half_angle_point({0, 0, 1}, UnitVector::unit_x()).vec(), {kRoot2, kRoot2, 0}, 1e-15));
    EXPECT_TRUE(VecNear(half_angle_point({0, 0, std::sqrt(3.0)}, UnitVector::unit_x()).vec(),
                        {0.5, std::sqrt(3.0) / 2, 0}, 1e-15));
    EXPECT_TRUE(VecNear(half_angle_point({0, 0, 1}, UnitVector::unit_y()).vec(), {-kRoot2, kRoot2, 0}, 1e-15));
}

TEST(HalfAnglePointTest, Preconditions) {
    try {
        (void)half_angle_point({0, 0, 1}, UnitVector::normalize({1, 0, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPerpendicular);
    }
    EXPECT_THROW((void)half_angle_point({0, 0, 0}, UnitVector::unit_x()), Error);
}

// -----------------------------------------------------------------------------
// Donkin construction

TEST(DonkinTriangleTest, PerpendicularQuarterTurns) {
    const SphericalTriangle tri = donkin_triangle({1, 0, 0}, {0, 1, 0});
    // B = x̂ × ŷ; A is B turned by -45° about x, C is B turned by +45° about y.
    const Vec3 b{0, 0, 1};
    EXPECT_TRUE(VecNear(tri.b().vec(), b, 1e-15));
    EXPECT_TRUE(VecNear(tri.a().vec(), oracle::rotate({1, 0, 0}, -kPi / 4, b), 1e-15));
    EXPECT_TRUE(VecNear(tri.c().vec(), oracle::rotate({0, 1, 0}, kPi / 4, b), 1e-15));
    EXPECT_TRUE(VecNear(tri.a().vec(), {0, kRoot2, kRoot2}, 1e-15));
    EXPECT_TRUE(VecNear(tri.c().vec(), {kRoot2, 0, kRoot2}, 1e-15));
}

TEST(DonkinTriangleTest, VerticesLieOnTheirGreatCircles) {
    Sampler s(301);
    for (int i = 0; i < 1000; ++i) {
        const RodriguesVector q1 = s.rodrigues(kMaxAngle);
        const RodriguesVector q2 = s.rodrigues(kMaxAngle);
        const SphericalTriangle tri = donkin_triangle(q1, q2);
        const Vec3 n1 = direction(q1.vec());
        const Vec3 n2 = direction(q2.vec());
        ASSERT_LE(std::fabs(dot(tri.a(), n1)), 1e-12);
        ASSERT_LE(std::fabs(dot(tri.b(), n1)), 1e-12);
        ASSERT_LE(std::fabs(dot(tri.b(), n2)), 1e-12);
        ASSERT_LE(std::fabs(dot(tri.c(), n2)), 1e-12);
    }
}

TEST(DonkinTriangleTest, ParallelAxesRejected) {
    try {
        (void)donkin_triangle({0, 0, 1}, {0, 0, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParallelAxes);
    }
    EXPECT_THROW((void)donkin_triangle({0, 0, 0}, {0, 0, 2}), Error);
    EXPECT_THROW((void)donkin_triangle({1, 0, 0}, {-3, 0, 0}), Error);
}

TEST(SphericalTriangleTest, RejectsCollinearVertices) {
    EXPECT_THROW(SphericalTriangle(UnitVector::unit_x(), UnitVector::unit_x(), UnitVector::unit_y()), Error);
    EXPECT_NO_THROW(SphericalTriangle(UnitVector::unit_x(), UnitVector::unit_y(), UnitVector::unit_z()));
}

TEST(DonkinVerifyTest, Examples) {
    const SphericalTriangle octant(UnitVector::unit_x(), UnitVector::unit_y(), UnitVector::unit_z());
    EXPECT_LE(donkin_verify(octant), 1e-12);
    EXPECT_LE(donkin_verify(donkin_triangle({1, 0, 0}, {0, 1, 0})), 1e-12);
    // Collapsed side AB: twice a zero arc is the identity.
    const UnitVector a = UnitVector::normalize({1, 2, 3});
    EXPECT_LE(donkin_verify(a, a, UnitVector::unit_z()), 1e-12);
}

TEST(DonkinVerifyTest, TwiceArcRotationOfOctantSide) {
    // Twice the quarter arc x→y is a half-turn about z.
    EXPECT_TRUE(MatNear(twice_arc_rotation(UnitVector::unit_x(), UnitVector::unit_y()).matrix(),
                        Matrix3::diagonal(-1, -1, 1), 1e-15));
}

TEST(DonkinVerifyTest, DetectsAWrongTriangleLaw) {
    // Swapping the composition order breaks closure for a generic triangle.
    const UnitVector a = UnitVector::normalize({1, 0.2, 0});
    const UnitVector b = UnitVector::normalize({0.1, 1, 0.3});
    const UnitVector c = UnitVector::normalize({0, 0.4, 1});
    const double swapped = max_abs_diff((twice_arc_rotation(a, b) * twice_arc_rotation(b, c)).matrix(),
                                        twice_arc_rotation(a, c).matrix());
    EXPECT_GT(swapped, 1e-2);
    EXPECT_LE(donkin_verify(a, b, c), 1e-12);
}

// -----------------------------------------------------------------------------
// Figure scenes

TEST(FigureSceneTest, Fig1aCensus) {
    const FigureScene s = figure_scene(FigureKind::Fig1a, {0, 0, 1}, Vec3{1, 0, 0});
    EXPECT_EQ(count<Arc>(s), 1);
    EXPECT_EQ(count<Segment>(s), 3);
    bool found_tangent = false;
    for (const Primitive& p : s.primitives) {
        if (const auto* seg = std::get_if<Segment>(&p); seg && seg->role == SegmentRole::Tangent) {
            found_tangent = seg->from == Vec3{1, 0, 0} && seg->to == Vec3{1, 1, 0};
        }
        if (const auto* arc = std::get_if<Arc>(&p)) {
            EXPECT_DOUBLE_EQ(arc->radius(), 1.0);
            EXPECT_TRUE(VecNear(arc->point_at(1.0), {0, 1, 0}, 1e-15));
            EXPECT_TRUE(VecNear(arc->point_at(0.5), {kRoot2, kRoot2, 0}, 1e-15));
        }
    }
    EXPECT_TRUE(found_tangent);
    EXPECT_FALSE(s.degenerate);
    EXPECT_EQ(s.view_axis, (Vec3{0, 0, 1}));
}

TEST(FigureSceneTest, NullRotationIsDegenerate) {
    const FigureScene s = figure_scene(FigureKind::Fig1b, {0, 0, 0}, Vec3{1, 2, 3});
    EXPECT_TRUE(s.degenerate);
    for (const Primitive& p : s.primitives) {
        if (const auto* seg = std::get_if<Segment>(&p); seg && seg->role == SegmentRole::Tangent) {
            EXPECT_EQ(norm(seg->to - seg->from), 0.0);
        }
    }
}

TEST(FigureSceneTest, Fig4HasFourReflectedTriangles) {
    const FigureScene s = figure_scene(FigureKind::Fig4, {1, 0, 0}, std::nullopt, RodriguesVector{0, 1, 0});
    EXPECT_EQ(count<Arc>(s), 12);
    const SphericalTriangle tri = donkin_triangle({1, 0, 0}, {0, 1, 0});
    // The triangle reflected in vertex A keeps A and maps B to 2(A·B)A - B.
    const Vec3 a = tri.a();
    const Vec3 b = tri.b();
    const Vec3 reflected_b = 2.0 * dot(a, b) * a - b;
    int in_group = 0;
    bool saw_reflected_b = false;
    for (const Primitive& p : s.primitives) {
        if (const auto* arc = std::get_if<Arc>(&p); arc && arc->group == "triangle-A") {
            ++in_group;
            saw_reflected_b |= max_abs(arc->start - reflected_b) < 1e-12 ||
                               max_abs(arc->point_at(1.0) - reflected_b) < 1e-12;
        }
    }
    EXPECT_EQ(in_group, 3);
    EXPECT_TRUE(saw_reflected_b);
}

TEST(FigureSceneTest, ReflectedTrianglesAreCongruent) {
    const FigureScene s = figure_scene(FigureKind::Fig4, {0.3, 0.1, 0}, std::nullopt, RodriguesVector{0, 0.8, 0.2});
    std::vector<double> sides;
    for (const Primitive& p : s.primitives) {
        if (const auto* arc = std::get_if<Arc>(&p)) sides.push_back(arc->sweep);
    }
    ASSERT_EQ(sides.size(), 12u);
    for (int t = 1; t < 4; ++t) {
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(sides[3 * t + k], sides[k], 1e-12);
    }
}

TEST(FigureSceneTest, Fig5HasTwoPanels) {
    const FigureScene s = figure_scene(FigureKind::Fig5, {1, 0, 0}, std::nullopt, RodriguesVector{0, 1, 0});
    EXPECT_EQ(s.panel_count, 2);
    EXPECT_EQ(count<Segment>(s), 3);
    EXPECT_EQ(count<Arc>(s), 3);
}

TEST(FigureSceneTest, Fig2TangentsMeetOnTheBisector) {
    const RodriguesVector q{0.2, -0.4, 0.9};
    const FigureScene s = figure_scene(FigureKind::Fig2, q, Vec3{1, 0.5, -0.3});
    std::vector<Vec3> tangent_ends;
    for (const Primitive& p : s.primitives) {
        if (const auto* seg = std::get_if<Segment>(&p); seg && seg->role == SegmentRole::Tangent) {
            tangent_ends.push_back(seg->to);
        }
    }
    ASSERT_EQ(tangent_ends.size(), 2u);
    EXPECT_TRUE(VecNear(tangent_ends[0], tangent_ends[1], 1e-15));
}

TEST(FigureSceneTest, MissingInputs) {
    for (FigureKind k : {FigureKind::Fig1a, FigureKind::Fig1b, FigureKind::Fig1c, FigureKind::Fig2}) {
        try {
            (void)figure_scene(k, {0, 0, 1}, std::nullopt);
            ADD_FAILURE() << to_string(k);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::MissingInput);
        }
    }
    EXPECT_THROW((void)figure_scene(FigureKind::Fig4, {0, 0, 1}, Vec3{1, 0, 0}), Error);
    EXPECT_THROW((void)figure_scene(FigureKind::Fig5, {0, 0, 1}, std::nullopt), Error);
}

TEST(FigureSceneTest, KindNamesRoundTrip) {
    for (FigureKind k : {FigureKind::Fig1a, FigureKind::Fig1b, FigureKind::Fig1c, FigureKind::Fig2,
                         FigureKind::Fig4, FigureKind::Fig5}) {
        EXPECT_EQ(parse_figure_kind(to_string(k)), k);
    }
    EXPECT_FALSE(parse_figure_kind("fig3").has_value());
}

// -----------------------------------------------------------------------------
// Properties

TEST(GeometryProperty, TangentLengthLaw) {
    Sampler s(311);
    for (int i = 0; i < kPropertyRuns; ++i) {
        const RodriguesVector q = s.rodrigues(kMaxAngle);
        const Vec3 x = s.vector_in_ball(5.0);
        const Vec3 t = tangent_to_bisector(q, x);
        const double theta = axis_angle_from_rodrigues(q).angle();
        const double radius = norm(cross(q.vec(), x)) / q.norm();
        const double scale = q.norm() * norm(x);
        ASSERT_LE(std::fabs(dot(t, x)), 1e-12 * scale * norm(x));
        ASSERT_LE(std::fabs(dot(t, q.vec())), 1e-12 * scale * q.norm());
        ASSERT_LE(std::fabs(q.norm() - std::tan(theta / 2)), 1e-12 * (1.0 + q.norm() * q.norm()));
        ASSERT_LE(std::fabs(norm(t) - q.norm() * radius), 1e-12 * scale);
    }
}

TEST(GeometryProperty, BisectorHalvesThePlanarAngle) {
    Sampler s(312);
    for (int i = 0; i < kPropertyRuns; ++i) {
        const RodriguesVector q = s.rodrigues(kMaxAngle);
        const Vec3 n = direction(q.vec());
        const UnitVector u = s.unit_vector();
        // Keep x away from the axis, where the planar angle is undefined.
        if (norm(cross(n, u)) < 1e-3) continue;
        const Vec3 x = s.uniform(0.1, 10.0) * u.vec();
        const Vec3 p = bisector_intersection(q, x);
        const double theta = axis_angle_from_rodrigues(q).angle();
        ASSERT_NEAR(planar_angle(n, x, p), theta / 2, 1e-12);
        ASSERT_NEAR(dot(n, p), dot(n, x), 1e-12 * norm(x));
    }
}

TEST(GeometryProperty, HalfAnglePointIsHalfRotation) {
    Sampler s(313);
    for (int i = 0; i < kPropertyRuns; ++i) {
        const RodriguesVector q = s.rodrigues(kMaxAngle);
        if (q.norm() == 0.0) continue;
        const UnitVector a = s.perpendicular_unit(q.vec());
        const AxisAngle aa = axis_angle_from_rodrigues(q);
        ASSERT_TRUE(VecNear(half_angle_point(q, a).vec(),
                            apply_rotation(euler_rodrigues_matrix(aa.axis(), aa.angle() / 2), a), 1e-12));
        ASSERT_TRUE(VecNear(half_angle_point(q, a).vec(), oracle::rotate(aa.axis(), aa.angle() / 2, a), 1e-12));
    }
}

TEST(GeometryProperty, DonkinClosureOnRandomTriangles) {
    Sampler s(314);
    for (int i = 0; i < kPropertyRuns; ++i) {
        const UnitVector a = s.unit_vector();
        const UnitVector b = s.unit_vector();
        const UnitVector c = s.unit_vector();
        if (norm(cross(b.vec() - a.vec(), c.vec() - a.vec())) <= SphericalTriangle::kDegeneracyTolerance) continue;
        ASSERT_LE(donkin_verify(SphericalTriangle(a, b, c)), 1e-10);
    }
}

TEST(GeometryProperty, ComposedRotationCarriesAToC) {
    // (1 + Q3×)A is a multiple of C with the sign of λ = 1 - Q2·Q1: positive
    // while the composed half-angle arc stays below π/2.
    Sampler s(315);
    int positive = 0;
    int negative = 0;
    for (int i = 0; i < kPropertyRuns; ++i) {
        const RodriguesVector q1 = s.rodrigues(kMaxAngle);
        const RodriguesVector q2 = s.rodrigues(kMaxAngle);
        const RotationResult q3 = compose(q2, q1);
        if (!q3.is_regular()) continue;
        const SphericalTriangle tri = donkin_triangle(q1, q2);
        const double lambda = 1.0 - dot(q2.vec(), q1.vec());
        const Vec3 w = bisector_intersection(q3.rodrigues(), tri.a());
        const double sign = lambda > 0 ? 1.0 : -1.0;
        (lambda > 0 ? positive : negative)++;
        ASSERT_LE(norm(sign * direction(w) - tri.c().vec()), 1e-10);
    }
    EXPECT_GT(positive, 0);
    EXPECT_GT(negative, 0);
}
