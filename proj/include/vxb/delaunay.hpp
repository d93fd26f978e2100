#pragma once

#include "vxb/point.hpp"

#include <array>
#include <map>
#include <span>
#include <vector>

namespace vxb {

/// Triangle of a triangulation; vertex indices in counterclockwise order.
struct Triangle {
    VertexId v0, v1, v2;
    int id = -1;

    std::array<VertexId, 3> vertices() const { return {v0, v1, v2}; }
    bool contains_vertex(VertexId v) const { return v == v0 || v == v1 || v == v2; }
};

/// Undirected edge key (smaller vertex first).
using EdgeKey = std::pair<VertexId, VertexId>;

inline EdgeKey edge_key(VertexId a, VertexId b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

/// The one or two triangles incident to an undirected edge.
struct EdgeTriangles {
    int count = 0;
    std::array<int, 2> tri = {-1, -1};

    void push(int t) { tri[count++] = t; }
};

/// Delaunay triangulation of a planar point set. Points closer than the merge
/// tolerance are collapsed before triangulation, so `points` may be shorter
/// than the input.
struct Triangulation {
    std::vector<Point2> points;
    std::vector<Triangle> triangles;
    /// per-vertex incident triangle ids, ascending
    std::vector<std::vector<int>> vertex_stars;
    /// undirected edge -> incident triangles (1 = hull edge, 2 = interior)
    std::map<EdgeKey, EdgeTriangles> edge_adjacency;
    /// true for vertices incident to a hull edge
    std::vector<char> on_hull;

    std::size_t vertex_count() const { return points.size(); }
    std::size_t triangle_count() const { return triangles.size(); }
    std::size_t hull_vertex_count() const;
};

/// Distance below which two input points are considered the same centroid.
inline constexpr double kMergeTolerance = 1e-9;

/// Delaunay triangulation by incremental insertion (Bowyer-Watson with ghost
/// triangles outside the hull). Deterministic for a given input order; exact
/// cocircular ties are canonicalized by flipping toward the diagonal with the
/// smaller lower vertex index. Throws FrameDegenerate when fewer than 3
/// distinct points remain after merging or when all points are collinear.
Triangulation delaunay_triangulate(std::span<const Point2> input_points);

/// Barycenter (median intersection) of a triangle: the mean of its vertices.
struct Barycenter {
    Point2 location;
    int triangle_id = -1;
};

Barycenter barycenter_of(const Triangle& tri, std::span<const Point2> points);

} // namespace vxb
