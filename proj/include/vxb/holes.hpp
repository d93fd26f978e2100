#pragma once

#include "vxb/image.hpp"
#include "vxb/point.hpp"

#include <array>
#include <vector>

namespace vxb {

/// One 8-connected dark region that survived the area filter.
struct HoleRegion {
    int label = 0;                                // 1-based, raster discovery order
    std::vector<std::array<int, 2>> pixel_coords; // (x, y), flood-fill order
    std::size_t area = 0;                         // == pixel_coords.size()
};

/// Center of mass of a hole region; the triangulation seed point.
struct Centroid {
    Point2 position;
    int region_label = 0;
};

/// 8-connected components of the dark mask with area >= min_hole_area,
/// labeled 1..k in raster-scan discovery order.
std::vector<HoleRegion> label_holes(const BinaryFrame& bf, int min_hole_area);

/// Arithmetic mean of each region's pixel coordinates.
std::vector<Centroid> compute_centroids(const std::vector<HoleRegion>& regions);

/// Convenience: the bare seed points of a centroid list.
std::vector<Point2> centroid_points(const std::vector<Centroid>& centroids);

} // namespace vxb
