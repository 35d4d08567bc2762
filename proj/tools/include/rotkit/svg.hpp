#pragma once

#include <optional>
#include <string>

#include "rodrigues/geometry.hpp"

namespace rotkit {

struct SvgOptions {
    /// Overrides the scene's view axis.
    std::optional<rodrigues::Vec3> view;
    double panel_size = 400.0;
    double margin = 36.0;
    /// Polyline segments per arc.
    int arc_samples = 64;
};

/// Orthographic projection onto the plane normal to `view`, with screen x
/// and y forming a right-handed frame with the view direction pointing at
/// the viewer. Throws InvalidArgument for a zero view axis.
struct Projection {
    explicit Projection(const rodrigues::Vec3& view);

    double x(const rodrigues::Vec3& p) const { return dot(p, u); }
    double y(const rodrigues::Vec3& p) const { return dot(p, v); }

    rodrigues::Vec3 u;
    rodrigues::Vec3 v;
};

/// Standalone SVG 1.1 document. One `<g id="panel-k">` per panel, named
/// groups nested inside it; segments become `<line class="role">`, arcs
/// `<path class="arc">` and labels `<text class="label">`. Output depends
/// only on the scene and options.
std::string render_svg(const rodrigues::FigureScene& scene, const SvgOptions& options = {});

}  // namespace rotkit
