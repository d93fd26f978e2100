#include "vxb/vortex.hpp"

#include "vxb/errors.hpp"
#include "vxb/polygon.hpp"
#include "vxb/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace vxb {
namespace {

constexpr double kPi = 3.14159265358979323846;
// safety margin on the wedge test: near-half-plane wedges go to the full check
constexpr double kPiMargin = 1e-9;

// Cycle generators a, b, c, ...; filament generators e1, e2, ...
std::string cycle_label(int ring_index) {
    if (ring_index < 26) return std::string(1, static_cast<char>('a' + ring_index));
    return "c" + std::to_string(ring_index);
}

std::string filament_label(int ordinal) { return "e" + std::to_string(ordinal); }

// Barycenters of the given triangles ordered by (angle about the nucleus,
// radius, triangle id), keeping the angles for the ring validity test.
struct OrderedRing {
    std::vector<Barycenter> vertices;
    std::vector<double> angles;
};

OrderedRing angular_order(const std::vector<int>& triangle_ids, const Triangulation& tri,
                          const Point2& nucleus) {
    struct Keyed {
        double angle;
        double radius2;
        Barycenter b;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(triangle_ids.size());
    for (int t : triangle_ids) {
        Barycenter b = barycenter_of(tri.triangles[t], tri.points);
        const Point2 d = b.location - nucleus;
        keyed.push_back({std::atan2(d.y(), d.x()), d.squaredNorm(), b});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& l, const Keyed& r) {
        if (l.angle != r.angle) return l.angle < r.angle;
        if (l.radius2 != r.radius2) return l.radius2 < r.radius2;
        return l.b.triangle_id < r.b.triangle_id;
    });
    OrderedRing ring;
    ring.vertices.reserve(keyed.size());
    ring.angles.reserve(keyed.size());
    for (Keyed& k : keyed) {
        ring.vertices.push_back(k.b);
        ring.angles.push_back(k.angle);
    }
    return ring;
}

// A ring polygon whose vertices appear at strictly increasing angles with
// every consecutive angular gap (including the wrap) below pi is simple and
// strictly encloses the pivot: each edge stays inside its own convex wedge.
// Ties or wide gaps fall back to the full polygon tests.
bool ring_is_valid(const OrderedRing& ring, const Point2& nucleus) {
    const std::size_t m = ring.vertices.size();
    if (m < 3) return false;
    bool wedge_argument_applies = true;
    for (std::size_t i = 0; i + 1 < m && wedge_argument_applies; ++i) {
        const double gap = ring.angles[i + 1] - ring.angles[i];
        if (gap <= 0.0 || gap >= kPi - kPiMargin) wedge_argument_applies = false;
    }
    if (wedge_argument_applies) {
        const double wrap = ring.angles.front() + 2 * kPi - ring.angles.back();
        if (wrap <= 0.0 || wrap >= kPi - kPiMargin) wedge_argument_applies = false;
    }
    if (wedge_argument_applies) return true;

    std::vector<Point2> poly;
    poly.reserve(m);
    for (const Barycenter& b : ring.vertices) poly.push_back(b.location);
    return polygon_is_simple(poly) && polygon_contains_unchecked(poly, nucleus);
}

bool strictly_contains_all(const std::vector<Point2>& poly, std::span<const Point2> queries) {
    for (const Point2& q : queries) {
        if (!polygon_contains_unchecked(poly, q)) return false;
    }
    return true;
}

} // namespace

std::vector<Point2> VortexCycle::polygon() const {
    std::vector<Point2> poly;
    poly.reserve(vertices.size());
    for (const Barycenter& b : vertices) poly.push_back(b.location);
    return poly;
}

VortexCycle build_inner_cycle(const AlexandroffNerve& nerve, const Triangulation& tri) {
    if (nerve.degree < 3) throw NerveTooSmall("inner cycle needs a nerve of degree >= 3");
    if (nerve.on_hull) throw RingOpen("nucleus on the convex hull: ring cannot close");

    const Point2 nucleus = tri.points[nerve.nucleus];
    OrderedRing ring = angular_order(nerve.triangle_ids, tri, nucleus);
    if (!ring_is_valid(ring, nucleus)) {
        throw RingOpen("inner barycenter cycle does not close around the nucleus");
    }
    VortexCycle cycle;
    cycle.ring_index = 0;
    cycle.generator_label = cycle_label(0);
    cycle.vertices = std::move(ring.vertices);
    return cycle;
}

std::optional<VortexCycle> expand_ring(const VortexNerve& state, const Triangulation& tri) {
    if (state.cycles.empty()) throw Error("expand_ring: no inner cycle built yet");

    std::vector<char> used(tri.triangles.size(), 0);
    for (const VortexCycle& c : state.cycles) {
        for (const Barycenter& b : c.vertices) used[b.triangle_id] = 1;
    }

    // triangles sharing at least one vertex with the current ring's triangles
    const VortexCycle& current = state.cycles.back();
    std::set<int> candidates;
    for (const Barycenter& b : current.vertices) {
        const Triangle& t = tri.triangles[b.triangle_id];
        for (VertexId v : t.vertices()) {
            for (int inc : tri.vertex_stars[v]) {
                if (!used[inc]) candidates.insert(inc);
            }
        }
    }
    if (candidates.empty()) return std::nullopt;

    const Point2 nucleus = tri.points[state.mnc_nucleus];
    OrderedRing ring =
        angular_order(std::vector<int>(candidates.begin(), candidates.end()), tri, nucleus);
    if (ring.vertices.size() < 3) return std::nullopt;
    if (!ring_is_valid(ring, nucleus)) return std::nullopt;

    VortexCycle next;
    next.ring_index = current.ring_index + 1;
    next.generator_label = cycle_label(next.ring_index);
    next.vertices = std::move(ring.vertices);

    // the new ring must encapsulate every vertex of the previous cycle
    if (!strictly_contains_all(next.polygon(), current.polygon())) return std::nullopt;
    return next;
}

std::vector<Filament> attach_filaments(const VortexCycle& inner, const VortexCycle& outer) {
    std::vector<Filament> filaments;
    filaments.reserve(inner.vertices.size());
    for (std::size_t i = 0; i < inner.vertices.size(); ++i) {
        const Point2& p = inner.vertices[i].location;
        int best = 0;
        double best_d2 = (outer.vertices[0].location - p).squaredNorm();
        for (std::size_t o = 1; o < outer.vertices.size(); ++o) {
            const double d2 = (outer.vertices[o].location - p).squaredNorm();
            if (d2 < best_d2) {
                best_d2 = d2;
                best = static_cast<int>(o);
            }
        }
        Filament f;
        f.inner_vertex = static_cast<int>(i);
        f.outer_vertex = best;
        f.outer_ring = outer.ring_index;
        filaments.push_back(f);
    }
    return filaments;
}

VortexNerve build_vortex_nerve(const AlexandroffNerve& nerve, const Triangulation& tri,
                               int max_rings) {
    if (max_rings < 1) throw Error("build_vortex_nerve: max_rings must be >= 1");

    VortexNerve vn;
    vn.mnc_nucleus = nerve.nucleus;
    vn.cycles.push_back(build_inner_cycle(nerve, tri));
    while (static_cast<int>(vn.cycles.size()) < max_rings) {
        std::optional<VortexCycle> ring = expand_ring(vn, tri);
        if (!ring) break;
        vn.cycles.push_back(std::move(*ring));
    }

    int filament_ordinal = 1;
    for (std::size_t j = 1; j < vn.cycles.size(); ++j) {
        std::vector<Filament> fs = attach_filaments(vn.cycles[j - 1], vn.cycles[j]);
        for (Filament& f : fs) {
            f.generator_label = filament_label(filament_ordinal++);
            vn.filaments.push_back(std::move(f));
        }
    }

    for (const VortexCycle& c : vn.cycles) vn.generators.push_back(c.generator_label);
    for (const Filament& f : vn.filaments) vn.generators.push_back(f.generator_label);
    return vn;
}

BettiResult betti_number(const VortexNerve& vn) {
    BettiResult r;
    r.nerve_ref = vn.mnc_nucleus;
    const int generator_count =
        static_cast<int>(vn.cycles.size()) + static_cast<int>(vn.filaments.size());

    r.per_ring_contributions.push_back(1);
    int accumulated = 1;
    for (std::size_t j = 1; j < vn.cycles.size(); ++j) {
        const int contribution = static_cast<int>(vn.cycles[j - 1].vertices.size()) + 1;
        r.per_ring_contributions.push_back(contribution);
        accumulated += contribution;
    }
    if (accumulated != generator_count) {
        throw std::logic_error("betti_number: generator count " +
                               std::to_string(generator_count) +
                               " disagrees with ring accumulation " +
                               std::to_string(accumulated));
    }
    if (static_cast<int>(vn.generators.size()) != generator_count) {
        throw std::logic_error("betti_number: generator list is inconsistent");
    }
    r.value = generator_count;
    return r;
}

std::map<std::string, int> reduce_path_word(const VortexNerve& vn,
                                            std::span<const PathStep> word) {
    std::set<std::string> cycle_gens;
    std::set<std::string> filament_gens;
    for (const VortexCycle& c : vn.cycles) cycle_gens.insert(c.generator_label);
    for (const Filament& f : vn.filaments) filament_gens.insert(f.generator_label);

    std::map<std::string, long long> net; // signed traversal sum per generator
    for (const PathStep& step : word) {
        if (step.direction != 1 && step.direction != -1) {
            throw Error("reduce_path_word: step direction must be +1 or -1");
        }
        if (!cycle_gens.count(step.generator) && !filament_gens.count(step.generator)) {
            throw Error("reduce_path_word: unknown generator '" + step.generator + "'");
        }
        net[step.generator] += step.direction;
    }

    std::map<std::string, int> normal;
    for (const auto& [gen, sum] : net) {
        int coeff;
        if (cycle_gens.count(gen)) {
            coeff = static_cast<int>(((sum % 2) + 2) % 2); // mod-2 coefficient
        } else {
            coeff = (sum != 0) ? 1 : 0; // idempotent traversal
        }
        if (coeff != 0) normal[gen] = coeff;
    }
    return normal;
}

} // namespace vxb
