#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rodrigues/rotation.hpp"

namespace rodrigues {

// =============================================================================
// Geometric reading of the Rodrigues vector
// =============================================================================

/// Q × x: tangent to the rotation arc at x, ending on the bisector of the
/// rotation angle. Its length is tan(θ/2) times the arc radius.
inline Vec3 tangent_to_bisector(const RodriguesVector& q, const Vec3& x) { return cross(q.vec(), x); }

/// (1 + Q×)x: the point where that tangent meets the bisector.
inline Vec3 bisector_intersection(const RodriguesVector& q, const Vec3& x) { return x + cross(q.vec(), x); }

/// (1 + Q×)a / ‖(1 + Q×)a‖ for a unit `a` in the plane normal to Q: the
/// point on the unit arc half the rotation angle away from `a`.
/// Throws InvalidArgument for Q = 0 and NotPerpendicular when
/// |a·Q| > 1e-9‖Q‖.
UnitVector half_angle_point(const RodriguesVector& q, const UnitVector& a);

// =============================================================================
// Spherical triangles
// =============================================================================

/// Non-degenerate triangle on the unit sphere: ‖(B - A) × (C - A)‖ > 1e-9.
class SphericalTriangle {
public:
    static constexpr double kDegeneracyTolerance = 1e-9;

    /// Throws InvalidArgument for a degenerate triangle.
    SphericalTriangle(const UnitVector& a, const UnitVector& b, const UnitVector& c);

    const UnitVector& a() const { return a_; }
    const UnitVector& b() const { return b_; }
    const UnitVector& c() const { return c_; }

private:
    UnitVector a_;
    UnitVector b_;
    UnitVector c_;
};

/// Rotation about u × v by twice the arc from u to v (identity when the
/// arc is 0 or π, where twice the arc is a full turn).
RotationMatrix twice_arc_rotation(const UnitVector& u, const UnitVector& v);

/// Triangle whose sides AB and BC are the half-angle arcs of the first and
/// second rotation: B = normalize(Q1 × Q2), A is B turned back by θ1/2 about
/// Q1 and C is B turned forward by θ2/2 about Q2.
/// Throws ParallelAxes unless ‖Q1 × Q2‖ > 1e-9‖Q1‖‖Q2‖ (this includes a
/// zero vector).
SphericalTriangle donkin_triangle(const RodriguesVector& first, const RodriguesVector& second);

/// ‖R_2BC·R_2AB - R_2AC‖∞ where R_2UV = twice_arc_rotation(U, V).
double donkin_verify(const SphericalTriangle& tri);
/// Same check on raw vertices, which may be degenerate.
double donkin_verify(const UnitVector& a, const UnitVector& b, const UnitVector& c);

// =============================================================================
// Figure scenes
// =============================================================================

enum class FigureKind { Fig1a, Fig1b, Fig1c, Fig2, Fig4, Fig5 };

std::string_view to_string(FigureKind kind);
std::optional<FigureKind> parse_figure_kind(std::string_view name);

enum class SegmentRole { Radius, Tangent, Bisector, Position, Chord };

std::string_view to_string(SegmentRole role);

/// Primitives carry the panel they belong to (only fig5 uses two) and an
/// optional group name, used to keep the edges of one triangle together.
struct Segment {
    Vec3 from;
    Vec3 to;
    SegmentRole role = SegmentRole::Radius;
    int panel = 0;
    std::string group;
};

/// Circular arc swept from `start` about `center` by `sweep` radians around
/// the oriented `normal` (right-hand rule).
struct Arc {
    Vec3 center;
    Vec3 start;
    Vec3 normal;
    double sweep = 0.0;
    int panel = 0;
    std::string group;

    double radius() const { return norm(start - center); }
    /// Point at fraction t ∈ [0, 1] of the sweep.
    Vec3 point_at(double t) const;
};

struct PointLabel {
    Vec3 position;
    std::string text;
    int panel = 0;
    std::string group;
};

using Primitive = std::variant<Segment, Arc, PointLabel>;

struct FigureScene {
    FigureKind kind = FigureKind::Fig1a;
    std::vector<Primitive> primitives;
    /// Default orthographic view direction.
    Vec3 view_axis{0, 0, 1};
    int panel_count = 1;
    /// Set when the construction collapses (zero tangent).
    bool degenerate = false;
};

/// Scene data for one of the constructions. Fig1a-Fig2 need `x`; Fig4 and
/// Fig5 need `second`. Throws MissingInput when a required input is absent.
/// Fig1c treats `x` as the unit vector a and inherits the preconditions of
/// half_angle_point.
FigureScene figure_scene(FigureKind kind, const RodriguesVector& q, const std::optional<Vec3>& x,
                         const std::optional<RodriguesVector>& second = std::nullopt);

}  // namespace rodrigues
