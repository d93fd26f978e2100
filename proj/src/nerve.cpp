#include "vxb/nerve.hpp"

#include "vxb/errors.hpp"

namespace vxb {

AlexandroffNerve vertex_star(const Triangulation& tri, VertexId v) {
    if (v >= tri.points.size()) throw Error("vertex_star: vertex index out of range");
    AlexandroffNerve nerve;
    nerve.nucleus = v;
    nerve.triangle_ids = tri.vertex_stars[v];
    nerve.degree = static_cast<int>(nerve.triangle_ids.size());
    nerve.on_hull = tri.on_hull[v] != 0;
    return nerve;
}

MncSelection maximal_nerves(const Triangulation& tri) {
    if (tri.triangles.empty()) throw Error("maximal_nerves: empty triangulation");
    MncSelection sel;
    for (VertexId v = 0; v < tri.points.size(); ++v) {
        sel.max_degree = std::max(sel.max_degree, static_cast<int>(tri.vertex_stars[v].size()));
    }
    for (VertexId v = 0; v < tri.points.size(); ++v) {
        if (static_cast<int>(tri.vertex_stars[v].size()) == sel.max_degree) {
            sel.nerves.push_back(vertex_star(tri, v));
        }
    }
    return sel;
}

} // namespace vxb
