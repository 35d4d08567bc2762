#include "rodrigues/geometry.hpp"

#include <array>
#include <cmath>

namespace rodrigues {

UnitVector half_angle_point(const RodriguesVector& q, const UnitVector& a) {
    const double qn = q.norm();
    if (qn == 0.0) throw Error(ErrorCode::InvalidArgument, "half-angle point needs a nonzero rotation");
    if (std::fabs(dot(a.vec(), q.vec())) > 1e-9 * qn) {
        throw Error(ErrorCode::NotPerpendicular, "a must lie in the plane perpendicular to the rotation axis");
    }
    return UnitVector::normalize(bisector_intersection(q, a));
}

// -----------------------------------------------------------------------------
// Spherical triangles

SphericalTriangle::SphericalTriangle(const UnitVector& a, const UnitVector& b, const UnitVector& c)
    : a_(a), b_(b), c_(c) {
    if (norm(cross(b.vec() - a.vec(), c.vec() - a.vec())) <= kDegeneracyTolerance) {
        throw Error(ErrorCode::InvalidArgument, "spherical triangle vertices are collinear");
    }
}

RotationMatrix twice_arc_rotation(const UnitVector& u, const UnitVector& v) {
    const Vec3 axis = cross(u.vec(), v.vec());
    if (norm(axis) == 0.0) return RotationMatrix::identity();
    return euler_rodrigues_matrix(UnitVector::normalize(axis), 2.0 * arc_angle(u, v));
}

SphericalTriangle donkin_triangle(const RodriguesVector& first, const RodriguesVector& second) {
    const Vec3 normal = cross(first.vec(), second.vec());
    const double n1 = first.norm();
    const double n2 = second.norm();
    if (n1 == 0.0 || n2 == 0.0 || norm(normal) <= 1e-9 * n1 * n2) {
        throw Error(ErrorCode::ParallelAxes, "rotation axes are parallel; no spherical triangle exists");
    }
    const UnitVector b = UnitVector::normalize(normal);
    const double half_theta1 = std::atan(n1);
    const UnitVector a = UnitVector::normalize(
        apply_rotation(euler_rodrigues_matrix(UnitVector::normalize(first.vec()), -half_theta1), b));
    const UnitVector c = half_angle_point(second, b);
    return SphericalTriangle(a, b, c);
}

double donkin_verify(const UnitVector& a, const UnitVector& b, const UnitVector& c) {
    const RotationMatrix ab = twice_arc_rotation(a, b);
    const RotationMatrix bc = twice_arc_rotation(b, c);
    const RotationMatrix ac = twice_arc_rotation(a, c);
    return max_abs_diff((bc * ab).matrix(), ac.matrix());
}

double donkin_verify(const SphericalTriangle& tri) { return donkin_verify(tri.a(), tri.b(), tri.c()); }

// -----------------------------------------------------------------------------
// Figure scenes

std::string_view to_string(FigureKind kind) {
    switch (kind) {
        case FigureKind::Fig1a: return "fig1a";
        case FigureKind::Fig1b: return "fig1b";
        case FigureKind::Fig1c: return "fig1c";
        case FigureKind::Fig2: return "fig2";
        case FigureKind::Fig4: return "fig4";
        case FigureKind::Fig5: return "fig5";
    }
    return "unknown";
}

std::optional<FigureKind> parse_figure_kind(std::string_view name) {
    for (FigureKind k : {FigureKind::Fig1a, FigureKind::Fig1b, FigureKind::Fig1c, FigureKind::Fig2,
                         FigureKind::Fig4, FigureKind::Fig5}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

std::string_view to_string(SegmentRole role) {
    switch (role) {
        case SegmentRole::Radius: return "radius";
        case SegmentRole::Tangent: return "tangent";
        case SegmentRole::Bisector: return "bisector";
        case SegmentRole::Position: return "position";
        case SegmentRole::Chord: return "chord";
    }
    return "unknown";
}

Vec3 Arc::point_at(double t) const {
    const double len = norm(normal);
    if (len == 0.0 || sweep == 0.0) return start;
    const RotationMatrix r = euler_rodrigues_matrix(UnitVector::normalize(normal), t * sweep);
    return center + apply_rotation(r, start - center);
}

namespace {

struct ArcGeometry {
    UnitVector axis;
    double theta;
    Vec3 center;
};

/// Rotation axis (z for the null rotation), angle and the foot of x on the axis.
ArcGeometry arc_geometry(const RodriguesVector& q, const Vec3& x) {
    const AxisAngle aa = axis_angle_from_rodrigues(q);
    const Vec3& n = aa.axis();
    return {aa.axis(), aa.angle(), dot(n, x) * n};
}

Arc great_arc(const UnitVector& u, const UnitVector& v, int panel, std::string group) {
    const Vec3 axis = cross(u.vec(), v.vec());
    return Arc{Vec3{}, u.vec(), axis, arc_angle(u, v), panel, std::move(group)};
}

Vec3 reflect_through(const Vec3& vertex, const Vec3& p) { return 2.0 * dot(vertex, p) * vertex - p; }

void add_rotation_arc_scene(FigureScene& scene, const RodriguesVector& q, const Vec3& x, bool with_positions) {
    const ArcGeometry g = arc_geometry(q, x);
    const Vec3 tangent = tangent_to_bisector(q, x);
    const Vec3 hit = bisector_intersection(q, x);
    const Vec3 rx = apply_rotation(matrix_from_rodrigues(q), x);
    auto& p = scene.primitives;
    p.emplace_back(Arc{g.center, x, g.axis.vec(), g.theta});
    p.emplace_back(Segment{g.center, x, SegmentRole::Radius});
    p.emplace_back(Segment{x, hit, SegmentRole::Tangent});
    p.emplace_back(Segment{g.center, hit, SegmentRole::Bisector});
    if (with_positions) {
        p.emplace_back(Segment{Vec3{}, x, SegmentRole::Position});
        p.emplace_back(Segment{Vec3{}, hit, SegmentRole::Position});
    }
    p.emplace_back(PointLabel{x, "x"});
    p.emplace_back(PointLabel{rx, "Rx"});
    p.emplace_back(PointLabel{with_positions ? hit : x + 0.5 * tangent, with_positions ? "(1+Q×)x" : "Q×x"});
    scene.view_axis = g.axis.vec();
    scene.degenerate = norm(tangent) == 0.0;
}

}  // namespace

FigureScene figure_scene(FigureKind kind, const RodriguesVector& q, const std::optional<Vec3>& x,
                         const std::optional<RodriguesVector>& second) {
    FigureScene scene;
    scene.kind = kind;
    const bool needs_x = kind == FigureKind::Fig1a || kind == FigureKind::Fig1b || kind == FigureKind::Fig1c ||
                         kind == FigureKind::Fig2;
    if (needs_x && !x) {
        throw Error(ErrorCode::MissingInput, std::string(to_string(kind)) + " needs a point x");
    }
    if (!needs_x && !second) {
        throw Error(ErrorCode::MissingInput, std::string(to_string(kind)) + " needs a second rotation");
    }
    if (x && !is_finite(*x)) throw Error(ErrorCode::NonFinite, "figure point has non-finite component");

    auto& p = scene.primitives;
    switch (kind) {
        case FigureKind::Fig1a:
            add_rotation_arc_scene(scene, q, *x, false);
            break;
        case FigureKind::Fig1b:
            add_rotation_arc_scene(scene, q, *x, true);
            break;
        case FigureKind::Fig1c: {
            const UnitVector a(*x);
            const UnitVector h = half_angle_point(q, a);
            const ArcGeometry g = arc_geometry(q, a);
            const Vec3 hit = bisector_intersection(q, a);
            p.emplace_back(Arc{Vec3{}, a.vec(), g.axis.vec(), g.theta});
            p.emplace_back(Segment{Vec3{}, a.vec(), SegmentRole::Radius});
            p.emplace_back(Segment{a.vec(), hit, SegmentRole::Tangent});
            p.emplace_back(Segment{Vec3{}, hit, SegmentRole::Bisector});
            p.emplace_back(Segment{Vec3{}, h.vec(), SegmentRole::Position});
            p.emplace_back(PointLabel{a.vec(), "a"});
            p.emplace_back(PointLabel{h.vec(), "(1+Q×)a/|(1+Q×)a|"});
            scene.view_axis = g.axis.vec();
            break;
        }
        case FigureKind::Fig2: {
            const ArcGeometry g = arc_geometry(q, *x);
            const Vec3 rx = apply_rotation(matrix_from_rodrigues(q), *x);
            const Vec3 hit = bisector_intersection(q, *x);
            p.emplace_back(Arc{g.center, *x, g.axis.vec(), g.theta});
            p.emplace_back(Segment{g.center, *x, SegmentRole::Radius});
            p.emplace_back(Segment{g.center, rx, SegmentRole::Radius});
            p.emplace_back(Segment{*x, hit, SegmentRole::Tangent});
            // -Q×Rx leads from Rx to the same bisector point.
            p.emplace_back(Segment{rx, rx - cross(q.vec(), rx), SegmentRole::Tangent});
            p.emplace_back(Segment{g.center, hit, SegmentRole::Bisector});
            p.emplace_back(PointLabel{*x, "x"});
            p.emplace_back(PointLabel{rx, "Rx"});
            p.emplace_back(PointLabel{hit, "(1+Q×)x = (1-Q×)Rx"});
            scene.view_axis = g.axis.vec();
            scene.degenerate = norm(cross(q.vec(), *x)) == 0.0;
            break;
        }
        case FigureKind::Fig4: {
            const SphericalTriangle tri = donkin_triangle(q, *second);
            const std::array<UnitVector, 3> v{tri.a(), tri.b(), tri.c()};
            const auto add_triangle = [&p](const std::array<Vec3, 3>& w, const std::string& group) {
                const UnitVector a = UnitVector::normalize(w[0]);
                const UnitVector b = UnitVector::normalize(w[1]);
                const UnitVector c = UnitVector::normalize(w[2]);
                p.emplace_back(great_arc(a, b, 0, group));
                p.emplace_back(great_arc(b, c, 0, group));
                p.emplace_back(great_arc(a, c, 0, group));
            };
            add_triangle({v[0].vec(), v[1].vec(), v[2].vec()}, "triangle-ABC");
            const char* names[3] = {"triangle-A", "triangle-B", "triangle-C"};
            for (int k = 0; k < 3; ++k) {
                std::array<Vec3, 3> w{};
                for (int j = 0; j < 3; ++j) w[j] = reflect_through(v[k].vec(), v[j].vec());
                add_triangle(w, names[k]);
            }
            p.emplace_back(PointLabel{v[0].vec(), "A"});
            p.emplace_back(PointLabel{v[1].vec(), "B"});
            p.emplace_back(PointLabel{v[2].vec(), "C"});
            scene.view_axis = UnitVector::normalize(v[0].vec() + v[1].vec() + v[2].vec()).vec();
            break;
        }
        case FigureKind::Fig5: {
            const SphericalTriangle tri = donkin_triangle(q, *second);
            const Vec3 a = tri.a(), b = tri.b(), c = tri.c();
            // Panel 0: translations compose along straight sides.
            p.emplace_back(Segment{a, b, SegmentRole::Chord, 0, "translation"});
            p.emplace_back(Segment{b, c, SegmentRole::Chord, 0, "translation"});
            p.emplace_back(Segment{a, c, SegmentRole::Chord, 0, "translation"});
            // Panel 1: rotations compose along great arcs of half their angles.
            p.emplace_back(great_arc(tri.a(), tri.b(), 1, "rotation"));
            p.emplace_back(great_arc(tri.b(), tri.c(), 1, "rotation"));
            p.emplace_back(great_arc(tri.a(), tri.c(), 1, "rotation"));
            for (int panel = 0; panel < 2; ++panel) {
                p.emplace_back(PointLabel{a, "A", panel});
                p.emplace_back(PointLabel{b, "B", panel});
                p.emplace_back(PointLabel{c, "C", panel});
            }
            scene.panel_count = 2;
            scene.view_axis = UnitVector::normalize(a + b + c).vec();
            break;
        }
    }
    return scene;
}

}  // namespace rodrigues
