#include "vxb/holes.hpp"

#include "vxb/errors.hpp"

#include <array>

namespace vxb {

std::vector<HoleRegion> label_holes(const BinaryFrame& bf, int min_hole_area) {
    const int w = bf.width;
    const int h = bf.height;
    std::vector<char> seen(std::size_t(w) * h, 0);
    std::vector<HoleRegion> regions;

    std::vector<std::array<int, 2>> stack;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = std::size_t(y) * w + x;
            if (!bf.mask[idx] || seen[idx]) continue;

            HoleRegion region;
            stack.clear();
            stack.push_back({x, y});
            seen[idx] = 1;
            while (!stack.empty()) {
                const auto [cx, cy] = stack.back();
                stack.pop_back();
                region.pixel_coords.push_back({cx, cy});
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int nx = cx + dx;
                        const int ny = cy + dy;
                        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                        const std::size_t nidx = std::size_t(ny) * w + nx;
                        if (!bf.mask[nidx] || seen[nidx]) continue;
                        seen[nidx] = 1;
                        stack.push_back({nx, ny});
                    }
                }
            }
            region.area = region.pixel_coords.size();
            if (static_cast<int>(region.area) >= min_hole_area) {
                region.label = static_cast<int>(regions.size()) + 1;
                regions.push_back(std::move(region));
            }
        }
    }
    return regions;
}

std::vector<Centroid> compute_centroids(const std::vector<HoleRegion>& regions) {
    std::vector<Centroid> centroids;
    centroids.reserve(regions.size());
    for (const HoleRegion& region : regions) {
        if (region.pixel_coords.empty()) throw Error("compute_centroids: empty region");
        double sx = 0, sy = 0;
        for (const auto& [x, y] : region.pixel_coords) {
            sx += x;
            sy += y;
        }
        const double n = static_cast<double>(region.pixel_coords.size());
        centroids.push_back({Point2(sx / n, sy / n), region.label});
    }
    return centroids;
}

std::vector<Point2> centroid_points(const std::vector<Centroid>& centroids) {
    std::vector<Point2> pts;
    pts.reserve(centroids.size());
    for (const Centroid& c : centroids) pts.push_back(c.position);
    return pts;
}

} // namespace vxb
