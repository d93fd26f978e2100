#include "vxb/svg_render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace vxb {
namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

constexpr double kDocWidth = 1000.0;

} // namespace

std::string render_barcode_svg(const Barcode& bc, const RenderStyle& style) {
    const std::vector<int>& rows = bc.betti_domain;
    const double left = style.show_labels ? 48.0 : 8.0;
    const double bottom = style.show_labels ? 28.0 : 8.0;
    const double top = 8.0, right = 8.0;
    const double content_w = left + std::max(1, bc.frame_count) * style.bar_width + right;
    const double content_h =
        top + std::max<std::size_t>(1, rows.size()) * (style.bar_height + style.row_gap) + bottom;
    const double doc_h = kDocWidth * content_h / content_w;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kDocWidth)
        << "\" height=\"" << num(doc_h) << "\" viewBox=\"0 0 " << num(content_w) << " "
        << num(content_h) << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << num(content_w) << "\" height=\""
        << num(content_h) << "\" fill=\"white\"/>\n";

    // bands bottom-up: smallest Betti value in the lowest band
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int value = rows[r];
        const double band_y =
            content_h - bottom - (r + 1) * (style.bar_height + style.row_gap) + style.row_gap;
        const std::string& color = style.cycle_palette[r % style.cycle_palette.size()];
        for (const auto& [frame, values] : bc.entries) {
            if (!std::binary_search(values.begin(), values.end(), value)) continue;
            svg << "<rect class=\"bar\" x=\"" << num(left + frame * style.bar_width) << "\" y=\""
                << num(band_y) << "\" width=\"" << num(style.bar_width) << "\" height=\""
                << num(style.bar_height) << "\" fill=\"" << color << "\"/>\n";
        }
        if (style.show_labels) {
            svg << "<text x=\"" << num(left - 6) << "\" y=\""
                << num(band_y + style.bar_height * 0.8)
                << "\" text-anchor=\"end\" font-size=\"11\">" << value << "</text>\n";
        }
    }

    if (style.show_labels && bc.frame_count > 0) {
        const int step = std::max(1, bc.frame_count / 10);
        for (int f = 0; f < bc.frame_count; f += step) {
            svg << "<text x=\"" << num(left + (f + 0.5) * style.bar_width) << "\" y=\""
                << num(content_h - bottom + 14)
                << "\" text-anchor=\"middle\" font-size=\"10\">" << f << "</text>\n";
        }
        svg << "<text x=\"" << num(left + bc.frame_count * style.bar_width / 2) << "\" y=\""
            << num(content_h - 4) << "\" text-anchor=\"middle\" font-size=\"11\">frame</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_frame_overlay_svg(const Triangulation& tri,
                                     const std::vector<VortexNerve>& nerves,
                                     const RenderStyle& style) {
    // fit the point bounding box into a 1000 px wide viewport, 5% padding
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    if (!tri.points.empty()) {
        min_x = max_x = tri.points[0].x();
        min_y = max_y = tri.points[0].y();
        for (const Point2& p : tri.points) {
            min_x = std::min(min_x, p.x());
            max_x = std::max(max_x, p.x());
            min_y = std::min(min_y, p.y());
            max_y = std::max(max_y, p.y());
        }
    }
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const double pad = 0.05 * std::max(span_x, span_y);
    const double scale = kDocWidth / (span_x + 2 * pad);
    const double doc_h = (span_y + 2 * pad) * scale;
    const auto tx = [&](double x) { return (x - min_x + pad) * scale; };
    const auto ty = [&](double y) { return (y - min_y + pad) * scale; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kDocWidth)
        << "\" height=\"" << num(doc_h) << "\" viewBox=\"0 0 " << num(kDocWidth) << " "
        << num(doc_h) << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << num(kDocWidth) << "\" height=\"" << num(doc_h)
        << "\" fill=\"white\"/>\n";

    for (const Triangle& t : tri.triangles) {
        svg << "<polygon class=\"triangle\" points=\"";
        for (VertexId v : t.vertices()) {
            svg << num(tx(tri.points[v].x())) << "," << num(ty(tri.points[v].y())) << " ";
        }
        svg << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    for (const Triangle& t : tri.triangles) {
        const Barycenter b = barycenter_of(t, tri.points);
        svg << "<circle class=\"barycenter\" cx=\"" << num(tx(b.location.x())) << "\" cy=\""
            << num(ty(b.location.y())) << "\" r=\"3\" fill=\"#2ca02c\"/>\n";
    }

    for (const VortexNerve& vn : nerves) {
        for (const VortexCycle& cycle : vn.cycles) {
            const std::string& color =
                style.cycle_palette[cycle.ring_index % style.cycle_palette.size()];
            svg << "<polygon class=\"cycle\" points=\"";
            for (const Barycenter& b : cycle.vertices) {
                svg << num(tx(b.location.x())) << "," << num(ty(b.location.y())) << " ";
            }
            svg << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        }
        for (const Filament& f : vn.filaments) {
            const Point2& a = vn.cycles[f.outer_ring - 1].vertices[f.inner_vertex].location;
            const Point2& b = vn.cycles[f.outer_ring].vertices[f.outer_vertex].location;
            svg << "<line class=\"filament\" x1=\"" << num(tx(a.x())) << "\" y1=\""
                << num(ty(a.y())) << "\" x2=\"" << num(tx(b.x())) << "\" y2=\""
                << num(ty(b.y())) << "\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
        }
        const Point2& nucleus = tri.points[vn.mnc_nucleus];
        svg << "<circle class=\"nucleus\" cx=\"" << num(tx(nucleus.x())) << "\" cy=\""
            << num(ty(nucleus.y())) << "\" r=\"4\" fill=\"#d62728\"/>\n";
        if (style.show_labels) {
            svg << "<text x=\"" << num(tx(nucleus.x()) + 6) << "\" y=\""
                << num(ty(nucleus.y()) - 6) << "\" font-size=\"12\">B="
                << betti_number(vn).value << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace vxb
