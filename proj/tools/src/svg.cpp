#include "rotkit/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace rotkit {

using namespace rodrigues;

namespace {

struct Point {
    double x;
    double y;
};

std::string fixed3(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 3);
    std::string s(buf.data(), res.ptr);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

int panel_of(const Primitive& p) {
    return std::visit([](const auto& e) { return e.panel; }, p);
}

const std::string& group_of(const Primitive& p) {
    return std::visit([](const auto& e) -> const std::string& { return e.group; }, p);
}

std::vector<Vec3> arc_points(const Arc& a, int samples) {
    std::vector<Vec3> pts;
    for (int i = 0; i <= samples; ++i) pts.push_back(a.point_at(static_cast<double>(i) / samples));
    return pts;
}

/// Maps projected scene coordinates into one panel, y pointing down.
class PanelFrame {
public:
    PanelFrame(const std::vector<Point>& pts, double offset, const SvgOptions& opt) : offset_(offset), opt_(opt) {
        double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x, lo_y = lo_x, hi_y = -lo_x;
        for (const Point& p : pts) {
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_y = std::max(hi_y, p.y);
        }
        if (pts.empty()) lo_x = hi_x = lo_y = hi_y = 0.0;
        cx_ = 0.5 * (lo_x + hi_x);
        cy_ = 0.5 * (lo_y + hi_y);
        const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
        scale_ = (opt.panel_size - 2.0 * opt.margin) / extent;
    }

    Point map(const Point& p) const {
        return {offset_ + 0.5 * opt_.panel_size + scale_ * (p.x - cx_), 0.5 * opt_.panel_size - scale_ * (p.y - cy_)};
    }

private:
    double offset_;
    const SvgOptions& opt_;
    double cx_ = 0.0;
    double cy_ = 0.0;
    double scale_ = 1.0;
};

}  // namespace

Projection::Projection(const Vec3& view) {
    if (!is_finite(view) || norm(view) == 0.0) throw Error(ErrorCode::InvalidArgument, "view axis must be nonzero");
    const Vec3 d = view / norm(view);
    const Vec3 helper = std::fabs(d.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{0, 1, 0};
    // Screen "up" follows the helper axis as closely as possible.
    const Vec3 up = helper - dot(helper, d) * d;
    v = up / norm(up);
    u = cross(v, d);
}

std::string render_svg(const FigureScene& scene, const SvgOptions& opt) {
    const Projection proj(opt.view.value_or(scene.view_axis));
    auto project = [&](const Vec3& p) { return Point{proj.x(p), proj.y(p)}; };

    const int panels = std::max(1, scene.panel_count);
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed3(panels * opt.panel_size)
        << "\" height=\"" << fixed3(opt.panel_size) << "\" viewBox=\"0 0 " << fixed3(panels * opt.panel_size) << ' '
        << fixed3(opt.panel_size) << "\">\n";
    svg << "<title>" << to_string(scene.kind) << "</title>\n";
    svg << "<style>\n"
           "line, path { fill: none; stroke-width: 1.5; }\n"
           ".arc { stroke: #1f4e9c; }\n"
           ".radius { stroke: #555555; }\n"
           ".tangent { stroke: #c0392b; }\n"
           ".bisector { stroke: #27ae60; stroke-dasharray: 6 4; }\n"
           ".position { stroke: #888888; stroke-dasharray: 2 3; }\n"
           ".chord { stroke: #8e44ad; }\n"
           ".label { font-family: serif; font-size: 14px; fill: #000000; }\n"
           "</style>\n";

    for (int k = 0; k < panels; ++k) {
        std::vector<const Primitive*> items;
        std::vector<Point> pts;
        for (const Primitive& p : scene.primitives) {
            if (panel_of(p) != k) continue;
            items.push_back(&p);
            if (const auto* s = std::get_if<Segment>(&p)) {
                pts.push_back(project(s->from));
                pts.push_back(project(s->to));
            } else if (const auto* a = std::get_if<Arc>(&p)) {
                for (const Vec3& q : arc_points(*a, opt.arc_samples)) pts.push_back(project(q));
            } else {
                pts.push_back(project(std::get<PointLabel>(p).position));
            }
        }
        const PanelFrame frame(pts, k * opt.panel_size, opt);
        auto at = [&](const Vec3& p) { return frame.map(project(p)); };

        auto emit = [&](const Primitive& p) {
            if (const auto* s = std::get_if<Segment>(&p)) {
                const Point a = at(s->from);
                const Point b = at(s->to);
                svg << "<line class=\"" << to_string(s->role) << "\" x1=\"" << fixed3(a.x) << "\" y1=\"" << fixed3(a.y)
                    << "\" x2=\"" << fixed3(b.x) << "\" y2=\"" << fixed3(b.y) << "\"/>\n";
            } else if (const auto* arc = std::get_if<Arc>(&p)) {
                svg << "<path class=\"arc\" d=\"";
                const std::vector<Vec3> q = arc_points(*arc, opt.arc_samples);
                for (std::size_t i = 0; i < q.size(); ++i) {
                    const Point m = at(q[i]);
                    svg << (i == 0 ? "M" : " L") << fixed3(m.x) << ' ' << fixed3(m.y);
                }
                svg << "\"/>\n";
            } else {
                const auto& l = std::get<PointLabel>(p);
                const Point m = at(l.position);
                svg << "<text class=\"label\" x=\"" << fixed3(m.x + 6.0) << "\" y=\"" << fixed3(m.y - 6.0) << "\">"
                    << escape(l.text) << "</text>\n";
            }
        };

        svg << "<g id=\"panel-" << k << "\">\n";
        std::vector<std::string> groups;
        for (const Primitive* p : items) {
            const std::string& g = group_of(*p);
            if (g.empty()) {
                emit(*p);
            } else if (std::find(groups.begin(), groups.end(), g) == groups.end()) {
                groups.push_back(g);
            }
        }
        for (const std::string& g : groups) {
            svg << "<g id=\"" << escape(g) << "\">\n";
            for (const Primitive* p : items) {
                if (group_of(*p) == g) emit(*p);
            }
            svg << "</g>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace rotkit
