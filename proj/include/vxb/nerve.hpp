#pragma once

#include "vxb/delaunay.hpp"

#include <vector>

namespace vxb {

/// Alexandroff nerve: all triangles of a triangulation sharing one vertex
/// (the nucleus). Every pair of member triangles intersects at least in the
/// nucleus, so the collection is a nerve complex.
struct AlexandroffNerve {
    VertexId nucleus = 0;
    std::vector<int> triangle_ids; // ascending
    int degree = 0;                // == triangle_ids.size()
    bool on_hull = false;          // nucleus lies on the convex hull boundary
};

/// All nerves of maximal degree, in ascending nucleus order.
struct MncSelection {
    std::vector<AlexandroffNerve> nerves;
    int max_degree = 0;
};

/// The star of vertex v. Throws Error if v is out of range.
AlexandroffNerve vertex_star(const Triangulation& tri, VertexId v);

/// Every vertex whose star reaches the maximal degree. Throws Error on an
/// empty triangulation.
MncSelection maximal_nerves(const Triangulation& tri);

} // namespace vxb
