#pragma once

// SVG 1.1 rendering of a point set and its graph. The drawing uses the
// mathematical orientation (y axis upward) via an explicit transform; edges
// are polylines, vertices circles, and optional cone wedges and a witness
// path can be overlaid.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "conespan/detail/format.hpp"
#include "conespan/geometry.hpp"
#include "conespan/graph.hpp"

namespace conespan {

struct SvgOptions {
    double size = 640.0;                 // longer output dimension, px
    std::optional<int> cones_at;         // draw the k cone wedges at this vertex
    std::optional<int> cone_count;       // k for the wedges
    std::vector<int> witness_path;       // highlighted path, vertex ids
    bool vertex_ids = false;
};

inline std::string render_svg(const PointSet& points, const GeoGraph& graph,
                              const SvgOptions& opt = {}) {
    using detail::format_double;
    double lo_x = 0.0, hi_x = 1.0, lo_y = 0.0, hi_y = 1.0;
    if (points.size() > 0) {
        lo_x = hi_x = points[0].x;
        lo_y = hi_y = points[0].y;
        for (const Point& p : points) {
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_y = std::max(hi_y, p.y);
        }
    }
    const double span_x = std::max(hi_x - lo_x, 1e-9);
    const double span_y = std::max(hi_y - lo_y, 1e-9);
    const double span = std::max(span_x, span_y);
    const double scale = opt.size / span;
    const double margin = 0.05 * opt.size;
    const double width = span_x * scale + 2 * margin;
    const double height = span_y * scale + 2 * margin;
    const double radius = std::max(2.5, opt.size / 200.0);

    auto px = [&](double x) { return format_double((x - lo_x) * scale + margin); };
    auto py = [&](double y) { return format_double((y - lo_y) * scale + margin); };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         format_double(width) + "\" height=\"" + format_double(height) + "\" viewBox=\"0 0 " +
         format_double(width) + " " + format_double(height) + "\">\n";
    // y axis upward
    s += "<g transform=\"translate(0," + format_double(height) + ") scale(1,-1)\">\n";

    if (opt.cones_at && opt.cone_count && points.size() > 0) {
        const Point& apex = points[*opt.cones_at];
        const int k = *opt.cone_count;
        const double r = 0.35 * span * scale;
        const double ax = (apex.x - lo_x) * scale + margin;
        const double ay = (apex.y - lo_y) * scale + margin;
        for (int i = 0; i < k; ++i) {
            const double a0 = i * two_pi / k;
            const double a1 = (i + 1) * two_pi / k;
            const std::string d = "M " + format_double(ax) + " " + format_double(ay) + " L " +
                                  format_double(ax + r * std::cos(a0)) + " " +
                                  format_double(ay + r * std::sin(a0)) + " A " + format_double(r) +
                                  " " + format_double(r) + " 0 0 1 " +
                                  format_double(ax + r * std::cos(a1)) + " " +
                                  format_double(ay + r * std::sin(a1)) + " Z";
            s += "<path class=\"cone\" d=\"" + d +
                 "\" fill=\"#4d88ff\" fill-opacity=\"0.08\" stroke=\"#4d88ff\" "
                 "stroke-width=\"0.6\"/>\n";
        }
    }

    for (const GeoEdge& e : graph.edges) {
        const Point& a = points[e.src];
        const Point& b = points[e.dst];
        s += "<polyline class=\"edge\" points=\"" + px(a.x) + "," + py(a.y) + " " + px(b.x) + "," +
             py(b.y) + "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    }

    if (opt.witness_path.size() >= 2) {
        std::string pts;
        for (int id : opt.witness_path) {
            if (!pts.empty()) pts += ' ';
            pts += px(points[id].x) + "," + py(points[id].y);
        }
        s += "<polyline class=\"witness\" points=\"" + pts +
             "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2.5\"/>\n";
    }

    for (const Point& p : points)
        s += "<circle cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) + "\" r=\"" +
             format_double(radius) + "\" fill=\"#1f77b4\"/>\n";

    s += "</g>\n";

    // Labels go outside the flipped group so the glyphs stay upright.
    if (opt.vertex_ids)
        for (const Point& p : points) {
            const double sx = (p.x - lo_x) * scale + margin;
            const double sy = height - ((p.y - lo_y) * scale + margin);
            s += "<text x=\"" + format_double(sx + radius + 1.0) + "\" y=\"" +
                 format_double(sy - radius - 1.0) + "\" font-size=\"10\" fill=\"#333333\">" +
                 std::to_string(p.id) + "</text>\n";
        }

    s += "</svg>\n";
    return s;
}

}  // namespace conespan
