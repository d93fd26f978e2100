#pragma once

#include "vxb/barcode.hpp"
#include "vxb/delaunay.hpp"
#include "vxb/vortex.hpp"

#include <string>
#include <vector>

namespace vxb {

/// Visual conventions for the SVG pictographs.
struct RenderStyle {
    double bar_width = 10.0;
    double bar_height = 14.0;
    double row_gap = 6.0;
    std::vector<std::string> cycle_palette = {"#1f77b4", "#d62728", "#2ca02c",
                                              "#ff7f0e", "#9467bd", "#8c564b"};
    bool show_labels = true;
};

/// Barcode pictograph: one horizontal band per Betti value (ascending from
/// the bottom), one bar per frame where the value occurs. The document is
/// 1000 px wide; height scales with the row count.
std::string render_barcode_svg(const Barcode& bc, const RenderStyle& style);

/// Frame overlay: triangle outlines, barycenter dots, ring cycles stroked by
/// ring index through the palette, filaments as straight segments.
std::string render_frame_overlay_svg(const Triangulation& tri,
                                     const std::vector<VortexNerve>& nerves,
                                     const RenderStyle& style);

} // namespace vxb
