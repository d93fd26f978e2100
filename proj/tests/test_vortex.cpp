#include "vxb/vortex.hpp"

#include "vxb/errors.hpp"
#include "vxb/polygon.hpp"
#include "support/synthetic.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

using namespace vxb;

namespace {

// structural validity: nesting, simplicity, generator bookkeeping
void check_nerve_invariants(const VortexNerve& vn, const Triangulation& tri) {
    REQUIRE(!vn.cycles.empty());
    const Point2& nucleus = tri.points[vn.mnc_nucleus];
    for (std::size_t j = 0; j < vn.cycles.size(); ++j) {
        const VortexCycle& c = vn.cycles[j];
        CHECK(c.ring_index == static_cast<int>(j));
        CHECK(c.vertices.size() >= 3);
        const std::vector<Point2> poly = c.polygon();
        CHECK(polygon_is_simple(poly));
        CHECK(polygon_contains_unchecked(poly, nucleus));
        if (j > 0) {
            for (const Point2& inner : vn.cycles[j - 1].polygon()) {
                CHECK(polygon_contains_unchecked(poly, inner));
            }
        }
    }
    // one filament per inner vertex of every consecutive ring pair
    std::size_t expected_filaments = 0;
    for (std::size_t j = 1; j < vn.cycles.size(); ++j) {
        expected_filaments += vn.cycles[j - 1].vertices.size();
    }
    CHECK(vn.filaments.size() == expected_filaments);
    CHECK(vn.generators.size() == vn.cycles.size() + vn.filaments.size());
    // labels unique
    std::set<std::string> labels(vn.generators.begin(), vn.generators.end());
    CHECK(labels.size() == vn.generators.size());
}

} // namespace

TEST_CASE("inner cycle of a symmetric hexagonal fan") {
    const Triangulation tri = delaunay_triangulate(synth::wheel(0, 0, 2, 6));
    const VortexCycle cycle = build_inner_cycle(vertex_star(tri, 0), tri);
    REQUIRE(cycle.vertices.size() == 6);
    CHECK(cycle.ring_index == 0);
    CHECK(polygon_contains_unchecked(cycle.polygon(), Point2(0, 0)));
    // angular order is strictly increasing
    for (std::size_t i = 1; i < cycle.vertices.size(); ++i) {
        const Point2 a = cycle.vertices[i - 1].location;
        const Point2 b = cycle.vertices[i].location;
        CHECK(std::atan2(a.y(), a.x()) < std::atan2(b.y(), b.x()));
    }
}

TEST_CASE("inner cycle of a degree-3 fan") {
    const Triangulation tri = delaunay_triangulate(synth::wheel(0, 0, 1, 3));
    const VortexCycle cycle = build_inner_cycle(vertex_star(tri, 0), tri);
    CHECK(cycle.vertices.size() == 3);
    CHECK(polygon_contains_unchecked(cycle.polygon(), Point2(0, 0)));
}

TEST_CASE("inner cycle requires degree 3 and an interior nucleus") {
    const Triangulation small = delaunay_triangulate(std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}});
    CHECK_THROWS_AS(build_inner_cycle(vertex_star(small, 0), small), NerveTooSmall);

    // 3x3 grid: boundary edge midpoints have degree 3 but sit on the hull
    std::vector<Point2> grid;
    for (int y = 0; y < 3; ++y) {
        for (int x = 0; x < 3; ++x) grid.emplace_back(x, y);
    }
    const Triangulation tri = delaunay_triangulate(grid);
    bool found_hull_deg3 = false;
    for (VertexId v = 0; v < tri.points.size(); ++v) {
        const AlexandroffNerve nerve = vertex_star(tri, v);
        if (nerve.on_hull && nerve.degree >= 3) {
            found_hull_deg3 = true;
            CHECK_THROWS_AS(build_inner_cycle(nerve, tri), RingOpen);
        }
    }
    CHECK(found_hull_deg3);
}

TEST_CASE("ring expansion reproduces the 6+12 double-hexagon nerve") {
    // hexagonal fan embedded in a staggered outer ring: ring 1 must close
    // with 12 barycenters around the 6-vertex inner cycle
    const Triangulation tri = delaunay_triangulate(synth::concentric(6, 1.0, 2.0));
    const MncSelection sel = maximal_nerves(tri);
    REQUIRE(sel.nerves.size() == 1);
    CHECK(sel.nerves[0].nucleus == 0);
    CHECK(sel.max_degree == 6);

    const VortexNerve vn = build_vortex_nerve(sel.nerves[0], tri, 8);
    REQUIRE(vn.cycles.size() == 2);
    CHECK(vn.cycles[0].vertices.size() == 6);
    CHECK(vn.cycles[1].vertices.size() == 12);
    CHECK(vn.filaments.size() == 6);
    CHECK(betti_number(vn).value == 8);
    check_nerve_invariants(vn, tri);

    // generator list: cycles then filaments
    REQUIRE(vn.generators.size() == 8);
    CHECK(vn.generators[0] == "a");
    CHECK(vn.generators[1] == "b");
    CHECK(vn.generators[2] == "e1");
    CHECK(vn.generators[7] == "e6");
}

TEST_CASE("isolated fan stops after one cycle") {
    const Triangulation tri = delaunay_triangulate(synth::wheel(0, 0, 1, 6));
    const VortexNerve vn = build_vortex_nerve(vertex_star(tri, 0), tri, 8);
    CHECK(vn.cycles.size() == 1);
    CHECK(vn.filaments.empty());
    CHECK(betti_number(vn).value == 1);
    CHECK(vn.generators == std::vector<std::string>{"a"});

    // expand_ring reports Stop explicitly
    CHECK_FALSE(expand_ring(vn, tri).has_value());
}

TEST_CASE("multi-ring expansion on a triangular lattice") {
    std::size_t center = 0;
    const Triangulation tri = delaunay_triangulate(synth::triangular_lattice(5, center));
    const AlexandroffNerve nerve = vertex_star(tri, static_cast<VertexId>(center));
    REQUIRE(nerve.degree == 6);

    const VortexNerve four = build_vortex_nerve(nerve, tri, 4);
    REQUIRE(four.cycles.size() == 4); // max_rings caps the construction
    CHECK(four.cycles[0].vertices.size() == 6);
    CHECK(four.cycles[1].vertices.size() == 18);
    CHECK(four.cycles[2].vertices.size() == 30);
    CHECK(four.cycles[3].vertices.size() == 42);
    CHECK(four.filaments.size() == 6 + 18 + 30);
    check_nerve_invariants(four, tri);

    const BettiResult betti = betti_number(four);
    CHECK(betti.value == 4 + 54);
    CHECK(betti.per_ring_contributions == std::vector<int>{1, 7, 19, 31});
}

TEST_CASE("k+2 law over concentric two-ring nerves") {
    for (int k = 3; k <= 12; ++k) {
        const Triangulation tri = delaunay_triangulate(synth::concentric(k));
        const AlexandroffNerve nerve = vertex_star(tri, 0);
        REQUIRE(nerve.degree == k);
        const VortexNerve vn = build_vortex_nerve(nerve, tri, 8);
        REQUIRE(vn.cycles.size() == 2);
        CHECK(vn.filaments.size() == static_cast<std::size_t>(k));
        CHECK(betti_number(vn).value == k + 2);
        check_nerve_invariants(vn, tri);
    }
}

TEST_CASE("filaments pick the nearest outer vertex, ties to the lower index") {
    VortexCycle inner;
    inner.ring_index = 0;
    inner.vertices = {{{0.0, 0.0}, 0}};
    VortexCycle outer;
    outer.ring_index = 1;
    // two outer vertices exactly equidistant from the inner vertex
    outer.vertices = {{{1.0, 1.0}, 1}, {{-1.0, 1.0}, 2}, {{5.0, 5.0}, 3}};
    const std::vector<Filament> fs = attach_filaments(inner, outer);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].inner_vertex == 0);
    CHECK(fs[0].outer_vertex == 0); // tie resolved to the lower outer index
    CHECK(fs[0].outer_ring == 1);
}

TEST_CASE("betti accumulation matches generator counts on random clouds") {
    int nerves_built = 0;
    for (unsigned seed = 0; seed < 60; ++seed) {
        std::mt19937 rng(seed);
        const int n = 10 + int(rng() % 50);
        Triangulation tri;
        try {
            tri = delaunay_triangulate(synth::random_points(seed + 1000, n));
        } catch (const FrameDegenerate&) {
            continue;
        }
        for (const AlexandroffNerve& nerve : maximal_nerves(tri).nerves) {
            try {
                const VortexNerve vn = build_vortex_nerve(nerve, tri, 8);
                ++nerves_built;
                const BettiResult betti = betti_number(vn);
                int accumulated = 0;
                for (int c : betti.per_ring_contributions) accumulated += c;
                CHECK(accumulated == betti.value);
                CHECK(betti.value ==
                      static_cast<int>(vn.cycles.size() + vn.filaments.size()));
                check_nerve_invariants(vn, tri);
            } catch (const NerveTooSmall&) {
            } catch (const RingOpen&) {
            }
        }
    }
    CHECK(nerves_built > 20); // the corpus must actually exercise the path
}

TEST_CASE("vortex construction is deterministic") {
    const std::vector<Point2> pts = synth::random_points(4242, 45);
    auto build = [&pts]() {
        const Triangulation tri = delaunay_triangulate(pts);
        std::vector<std::string> trace;
        for (const AlexandroffNerve& nerve : maximal_nerves(tri).nerves) {
            try {
                const VortexNerve vn = build_vortex_nerve(nerve, tri, 8);
                std::string s = std::to_string(vn.mnc_nucleus) + ":";
                for (const VortexCycle& c : vn.cycles) {
                    for (const Barycenter& b : c.vertices) {
                        s += std::to_string(b.triangle_id) + ",";
                    }
                    s += ";";
                }
                for (const Filament& f : vn.filaments) {
                    s += std::to_string(f.inner_vertex) + ">" + std::to_string(f.outer_vertex) + " ";
                }
                trace.push_back(std::move(s));
            } catch (const Error&) {
                trace.push_back("fail");
            }
        }
        return trace;
    };
    CHECK(build() == build());
}

TEST_CASE("path connectivity of cycle edges plus filaments") {
    const Triangulation tri = delaunay_triangulate(synth::concentric(6, 1.0, 2.0));
    const VortexNerve vn = build_vortex_nerve(maximal_nerves(tri).nerves[0], tri, 8);

    // union-find over (ring, index) vertices connected by cycle and filament edges
    std::map<std::pair<int, int>, std::pair<int, int>> parent;
    std::function<std::pair<int, int>(std::pair<int, int>)> find =
        [&](std::pair<int, int> x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
    for (std::size_t j = 0; j < vn.cycles.size(); ++j) {
        for (std::size_t i = 0; i < vn.cycles[j].vertices.size(); ++i) {
            parent[{int(j), int(i)}] = {int(j), int(i)};
        }
    }
    auto unite = [&](std::pair<int, int> a, std::pair<int, int> b) {
        parent[find(a)] = find(b);
    };
    for (std::size_t j = 0; j < vn.cycles.size(); ++j) {
        const std::size_t n = vn.cycles[j].vertices.size();
        for (std::size_t i = 0; i < n; ++i) unite({int(j), int(i)}, {int(j), int((i + 1) % n)});
    }
    for (const Filament& f : vn.filaments) {
        unite({f.outer_ring - 1, f.inner_vertex}, {f.outer_ring, f.outer_vertex});
    }
    const auto root = find({0, 0});
    for (const auto& [node, p] : parent) {
        (void)p;
        CHECK(find(node) == root);
    }
}
