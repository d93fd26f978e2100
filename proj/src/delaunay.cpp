// Incremental Delaunay triangulation. The mesh is kept fully triangulated at
// all times by surrounding the hull with ghost triangles that share a single
// symbolic vertex "beyond infinity"; inserting a point outside the current
// hull is then the same cavity-retriangulation step as inserting an interior
// point. All sign decisions go through the exact predicates.

#include "vxb/delaunay.hpp"

#include "vxb/errors.hpp"
#include "vxb/predicates.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <unordered_map>

namespace vxb {
namespace {

constexpr VertexId kGhost = std::numeric_limits<VertexId>::max();

struct MeshTri {
    std::array<VertexId, 3> v;
    std::array<int, 3> nbr = {-1, -1, -1}; // nbr[k] shares edge (v[k], v[k+1])
    bool alive = true;

    bool is_ghost() const { return v[2] == kGhost; }
};

struct Mesh {
    std::span<const Point2> pts;
    std::vector<MeshTri> tris;
    std::vector<int> visit_mark; // cavity-membership stamp per triangle
    int epoch = 0;

    const Point2& at(VertexId v) const { return pts[v]; }

    static int edge_slot(const MeshTri& t, VertexId a, VertexId b) {
        for (int k = 0; k < 3; ++k) {
            if (t.v[k] == a && t.v[(k + 1) % 3] == b) return k;
        }
        return -1;
    }

    // p strictly between a and b on their common line (collinearity assumed)
    static bool between_on_line(const Point2& a, const Point2& b, const Point2& p) {
        if (a.x() != b.x()) {
            return (a.x() < p.x() && p.x() < b.x()) || (b.x() < p.x() && p.x() < a.x());
        }
        return (a.y() < p.y() && p.y() < b.y()) || (b.y() < p.y() && p.y() < a.y());
    }

    bool conflicts(const MeshTri& t, const Point2& p) const {
        if (t.is_ghost()) {
            // ghost (v, u, g) guards hull edge u->v; conflict when p lies
            // strictly outside across that edge, or on its open interior
            const Point2& head = at(t.v[0]);
            const Point2& tail = at(t.v[1]);
            const int s = orient2d(head, tail, p);
            if (s > 0) return true;
            if (s == 0) return between_on_line(tail, head, p);
            return false;
        }
        return in_circle_sign(at(t.v[0]), at(t.v[1]), at(t.v[2]), p) > 0;
    }

    // Rotate a vertex triple (with matching neighbor slots) so that any ghost
    // vertex sits in slot 2.
    static MeshTri normalized(std::array<VertexId, 3> v) {
        MeshTri t;
        int shift = 0;
        for (int k = 0; k < 3; ++k) {
            if (v[k] == kGhost) shift = (k + 1) % 3;
        }
        for (int k = 0; k < 3; ++k) t.v[k] = v[(k + shift) % 3];
        return t;
    }
};

void insert_point(Mesh& mesh, VertexId pid) {
    const Point2& p = mesh.pts[pid];

    // Bowyer-Watson cavity: every live triangle in conflict with p. With
    // exact predicates the conflicting circumdisks form one star-shaped
    // region around p, so a plain scan is enough.
    ++mesh.epoch;
    const int mark_in = mesh.epoch;
    mesh.visit_mark.resize(mesh.tris.size(), 0);
    std::vector<int> cavity;
    for (int t = 0; t < static_cast<int>(mesh.tris.size()); ++t) {
        if (!mesh.tris[t].alive) continue;
        if (mesh.conflicts(mesh.tris[t], p)) {
            cavity.push_back(t);
            mesh.visit_mark[t] = mark_in;
        }
    }
    if (cavity.empty()) throw Error("delaunay: no conflicting triangle found (duplicate point?)");

    // boundary edges of the cavity, with the old outside neighbor
    struct BoundaryEdge {
        VertexId from, to;
        int outside;
        int outside_slot;
    };
    std::vector<BoundaryEdge> boundary;
    for (int t : cavity) {
        for (int k = 0; k < 3; ++k) {
            const int nb = mesh.tris[t].nbr[k];
            if (nb >= 0 && mesh.visit_mark[nb] == mark_in) continue;
            const VertexId a = mesh.tris[t].v[k];
            const VertexId b = mesh.tris[t].v[(k + 1) % 3];
            const int slot = nb >= 0 ? Mesh::edge_slot(mesh.tris[nb], b, a) : -1;
            boundary.push_back({a, b, nb, slot});
        }
    }

    for (int t : cavity) mesh.tris[t].alive = false;

    // one new triangle (a, b, p) per boundary edge, stitched into a fan on p
    std::unordered_map<VertexId, int> tri_starting_at;
    std::vector<int> created;
    created.reserve(boundary.size());
    for (const BoundaryEdge& e : boundary) {
        const int tid = static_cast<int>(mesh.tris.size());
        mesh.tris.push_back(Mesh::normalized({e.from, e.to, pid}));
        mesh.visit_mark.push_back(0);
        created.push_back(tid);
        const bool fresh = tri_starting_at.emplace(e.from, tid).second;
        if (!fresh) throw Error("delaunay: cavity boundary is not a simple loop");
        const int slot = Mesh::edge_slot(mesh.tris[tid], e.from, e.to);
        mesh.tris[tid].nbr[slot] = e.outside;
        if (e.outside >= 0) mesh.tris[e.outside].nbr[e.outside_slot] = tid;
    }
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        const BoundaryEdge& e = boundary[i];
        const int tid = created[i];
        const auto it = tri_starting_at.find(e.to);
        if (it == tri_starting_at.end()) throw Error("delaunay: open cavity boundary");
        const int other = it->second;
        const int s1 = Mesh::edge_slot(mesh.tris[tid], e.to, pid);
        const int s2 = Mesh::edge_slot(mesh.tris[other], pid, e.to);
        assert(s1 >= 0 && s2 >= 0);
        mesh.tris[tid].nbr[s1] = other;
        mesh.tris[other].nbr[s2] = tid;
    }
}

// Flip exactly-cocircular interior quads toward the diagonal whose smaller
// endpoint index is lower. Pure tie canonicalization: the triangulation stays
// Delaunay, and cocircular results no longer depend on insertion order.
void canonicalize_cocircular(Mesh& mesh) {
    auto relink = [&mesh](int nb, VertexId u, VertexId v, int self) {
        if (nb < 0) return;
        const int s = Mesh::edge_slot(mesh.tris[nb], u, v);
        assert(s >= 0);
        mesh.tris[nb].nbr[s] = self;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int t1 = 0; t1 < static_cast<int>(mesh.tris.size()); ++t1) {
            if (!mesh.tris[t1].alive || mesh.tris[t1].is_ghost()) continue;
            for (int k = 0; k < 3; ++k) {
                const int t2 = mesh.tris[t1].nbr[k];
                if (t2 <= t1) continue; // each interior edge once per sweep
                if (!mesh.tris[t2].alive || mesh.tris[t2].is_ghost()) continue;

                const VertexId a = mesh.tris[t1].v[k];
                const VertexId b = mesh.tris[t1].v[(k + 1) % 3];
                const VertexId c = mesh.tris[t1].v[(k + 2) % 3];
                const int slot2 = Mesh::edge_slot(mesh.tris[t2], b, a);
                assert(slot2 >= 0);
                const VertexId d = mesh.tris[t2].v[(slot2 + 2) % 3];

                if (std::min(c, d) >= std::min(a, b)) continue;
                if (in_circle_sign(mesh.at(a), mesh.at(b), mesh.at(c), mesh.at(d)) != 0)
                    continue;
                // strict convexity of the quad around diagonal (c,d)
                if (orient2d(mesh.at(c), mesh.at(d), mesh.at(a)) >= 0) continue;
                if (orient2d(mesh.at(c), mesh.at(d), mesh.at(b)) <= 0) continue;

                // replace (a,b,c) + (b,a,d) with (c,a,d) + (d,b,c)
                const int n_bc = mesh.tris[t1].nbr[(k + 1) % 3];
                const int n_ca = mesh.tris[t1].nbr[(k + 2) % 3];
                const int n_ad = mesh.tris[t2].nbr[(slot2 + 1) % 3];
                const int n_db = mesh.tris[t2].nbr[(slot2 + 2) % 3];

                mesh.tris[t1].v = {c, a, d};
                mesh.tris[t1].nbr = {n_ca, n_ad, t2};
                mesh.tris[t2].v = {d, b, c};
                mesh.tris[t2].nbr = {n_db, n_bc, t1};
                relink(n_ad, mesh.tris[t1].v[1], mesh.tris[t1].v[2], t1); // was t2's
                relink(n_bc, mesh.tris[t2].v[1], mesh.tris[t2].v[2], t2); // was t1's
                changed = true;
                break; // t1's edge slots are stale, restart this triangle
            }
        }
    }
}

} // namespace

std::size_t Triangulation::hull_vertex_count() const {
    std::size_t c = 0;
    for (char f : on_hull) c += (f != 0);
    return c;
}

Barycenter barycenter_of(const Triangle& tri, std::span<const Point2> points) {
    Barycenter b;
    b.location = (points[tri.v0] + points[tri.v1] + points[tri.v2]) / 3.0;
    b.triangle_id = tri.id;
    return b;
}

Triangulation delaunay_triangulate(std::span<const Point2> input_points) {
    for (const Point2& p : input_points) {
        if (!p.allFinite()) throw PredicateError("delaunay: non-finite input point");
    }

    // merge points closer than the tolerance, keeping first occurrences
    std::vector<Point2> pts;
    pts.reserve(input_points.size());
    for (const Point2& p : input_points) {
        bool dup = false;
        for (const Point2& q : pts) {
            if ((p - q).squaredNorm() < kMergeTolerance * kMergeTolerance) {
                dup = true;
                break;
            }
        }
        if (!dup) pts.push_back(p);
    }

    const std::size_t n = pts.size();
    if (n < 3) throw FrameDegenerate("delaunay: fewer than 3 distinct points");

    // first non-collinear triple (p0, p1, pk)
    std::size_t k = 0;
    int orientation = 0;
    for (std::size_t i = 2; i < n; ++i) {
        orientation = orient2d(pts[0], pts[1], pts[i]);
        if (orientation != 0) {
            k = i;
            break;
        }
    }
    if (orientation == 0) throw FrameDegenerate("delaunay: all points are collinear");

    Mesh mesh;
    mesh.pts = pts;

    // initial solid triangle plus its three ghosts
    {
        VertexId a = 0, b = 1, c = static_cast<VertexId>(k);
        if (orientation < 0) std::swap(b, c);
        mesh.tris.push_back({{a, b, c}, {1, 2, 3}, true});
        mesh.tris.push_back({{b, a, kGhost}, {0, 3, 2}, true}); // guards a->b
        mesh.tris.push_back({{c, b, kGhost}, {0, 1, 3}, true}); // guards b->c
        mesh.tris.push_back({{a, c, kGhost}, {0, 2, 1}, true}); // guards c->a
        mesh.visit_mark.assign(4, 0);
    }

    for (std::size_t i = 2; i < n; ++i) {
        if (i == k) continue;
        insert_point(mesh, static_cast<VertexId>(i));
    }

    canonicalize_cocircular(mesh);

    // strip ghosts, canonicalize triangle order, build the public structure
    Triangulation out;
    out.points = std::move(pts);
    for (const MeshTri& t : mesh.tris) {
        if (!t.alive || t.is_ghost()) continue;
        // rotate so the smallest vertex index comes first (orientation kept)
        std::array<VertexId, 3> v = t.v;
        while (!(v[0] < v[1] && v[0] < v[2])) {
            std::rotate(v.begin(), v.begin() + 1, v.end());
        }
        out.triangles.push_back({v[0], v[1], v[2], -1});
    }
    std::sort(out.triangles.begin(), out.triangles.end(),
              [](const Triangle& a, const Triangle& b) { return a.vertices() < b.vertices(); });
    for (std::size_t t = 0; t < out.triangles.size(); ++t) {
        out.triangles[t].id = static_cast<int>(t);
    }

    out.vertex_stars.assign(out.points.size(), {});
    std::vector<std::uint32_t> star_sizes(out.points.size(), 0);
    for (const Triangle& t : out.triangles) {
        for (VertexId v : t.vertices()) ++star_sizes[v];
    }
    for (std::size_t v = 0; v < out.points.size(); ++v) {
        out.vertex_stars[v].reserve(star_sizes[v]);
    }
    std::vector<std::pair<EdgeKey, int>> edges;
    edges.reserve(3 * out.triangles.size());
    for (const Triangle& t : out.triangles) {
        for (VertexId v : t.vertices()) out.vertex_stars[v].push_back(t.id);
        edges.emplace_back(edge_key(t.v0, t.v1), t.id);
        edges.emplace_back(edge_key(t.v1, t.v2), t.id);
        edges.emplace_back(edge_key(t.v2, t.v0), t.id);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [key, tid] : edges) {
        const auto it = out.edge_adjacency.emplace_hint(out.edge_adjacency.end(), key,
                                                        EdgeTriangles{});
        it->second.push(tid);
    }
    out.on_hull.assign(out.points.size(), 0);
    for (const auto& [edge, tris] : out.edge_adjacency) {
        if (tris.count == 1) {
            out.on_hull[edge.first] = 1;
            out.on_hull[edge.second] = 1;
        }
    }
    return out;
}

} // namespace vxb
