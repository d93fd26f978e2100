// Acceptance suite: one self-contained check per release criterion, each
// printing a single PASS/FAIL line with its runtime. Exits nonzero if any
// criterion fails.

#include "vxb/barcode.hpp"
#include "vxb/bench.hpp"
#include "vxb/errors.hpp"
#include "vxb/pipeline.hpp"
#include "vxb/polygon.hpp"

#include "support/synthetic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace vxb;

namespace {

struct Criterion {
    std::string name;
    double time_limit_seconds;
    std::function<void(std::string& detail)> run; // throws or appends failure text
};

int g_failures = 0;

void run_criterion(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        c.run(detail);
        ok = detail.empty();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.time_limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ");
        detail += "exceeded time limit of " + std::to_string(c.time_limit_seconds) + " s";
    }
    if (ok) {
        std::printf("[PASS] %-28s (%.2f s)\n", c.name.c_str(), elapsed);
    } else {
        ++g_failures;
        std::printf("[FAIL] %-28s (%.2f s): %s\n", c.name.c_str(), elapsed, detail.c_str());
    }
    std::fflush(stdout);
}

void expect(std::string& detail, bool cond, const std::string& msg) {
    if (!cond) {
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
}

// ---------------------------------------------------------------------------

void betti_theorem_reproduction(std::string& detail) {
    // hexagonal fan embedded in a staggered outer ring: the ring expansion
    // must close a 12-vertex outer cycle around the 6-vertex inner cycle
    const Triangulation tri = delaunay_triangulate(synth::concentric(6, 1.0, 2.0));
    const MncSelection sel = maximal_nerves(tri);
    expect(detail, sel.nerves.size() == 1, "expected a unique maximal nerve");
    expect(detail, sel.max_degree == 6, "expected a degree-6 fan");
    const VortexNerve vn = build_vortex_nerve(sel.nerves[0], tri, 8);
    expect(detail, vn.cycles.size() == 2, "expected 2 cycles");
    expect(detail, vn.cycles[0].vertices.size() == 6, "inner cycle must have 6 vertices");
    expect(detail, vn.cycles[1].vertices.size() == 12, "outer cycle must have 12 vertices");
    expect(detail, vn.filaments.size() == 6, "expected 6 filaments");
    expect(detail, betti_number(vn).value == 8, "Betti number must equal 8");
}

void k_plus_2_law(std::string& detail) {
    for (int k = 3; k <= 12; ++k) {
        const Triangulation tri = delaunay_triangulate(synth::concentric(k));
        const AlexandroffNerve nerve = vertex_star(tri, 0);
        if (nerve.degree != k) {
            expect(detail, false, "k=" + std::to_string(k) + ": fan degree mismatch");
            continue;
        }
        const VortexNerve vn = build_vortex_nerve(nerve, tri, 8);
        expect(detail, vn.cycles.size() == 2, "k=" + std::to_string(k) + ": cycle count");
        expect(detail, static_cast<int>(vn.filaments.size()) == k,
               "k=" + std::to_string(k) + ": filament count");
        expect(detail, betti_number(vn).value == k + 2,
               "k=" + std::to_string(k) + ": Betti != k+2");
    }
}

void nerve_checks(const Triangulation& tri, const VortexNerve& vn, std::string& detail) {
    const Point2& nucleus = tri.points[vn.mnc_nucleus];
    for (std::size_t j = 0; j < vn.cycles.size(); ++j) {
        const std::vector<Point2> poly = vn.cycles[j].polygon();
        if (!polygon_is_simple(poly)) {
            expect(detail, false, "ring polygon not simple");
            return;
        }
        expect(detail, polygon_contains_unchecked(poly, nucleus),
               "ring does not enclose the nucleus");
        if (j > 0) {
            for (const Point2& inner : vn.cycles[j - 1].polygon()) {
                if (!polygon_contains_unchecked(poly, inner)) {
                    expect(detail, false, "ring nesting violated");
                    return;
                }
            }
        }
    }
}

int g_formula_nerves = 0;

void formula_agreement(std::string& detail) {
    g_formula_nerves = 0;
    for (unsigned seed = 0; seed < 200 && detail.empty(); ++seed) {
        std::mt19937 rng(seed);
        const int n = 10 + int(rng() % 51); // n <= 60
        Triangulation tri;
        try {
            tri = delaunay_triangulate(synth::random_points(seed * 13 + 5, n));
        } catch (const FrameDegenerate&) {
            continue;
        }
        for (const AlexandroffNerve& nerve : maximal_nerves(tri).nerves) {
            // nerve property: every triangle of the star contains the nucleus
            for (int t : nerve.triangle_ids) {
                expect(detail, tri.triangles[t].contains_vertex(nerve.nucleus),
                       "nerve triangle misses its nucleus");
            }
            try {
                const VortexNerve vn = build_vortex_nerve(nerve, tri, 8);
                ++g_formula_nerves;
                const BettiResult betti = betti_number(vn); // asserts both routes agree
                int accumulated = 0;
                for (int c : betti.per_ring_contributions) accumulated += c;
                expect(detail, accumulated == betti.value, "accumulation mismatch");
                expect(detail,
                       betti.value ==
                           static_cast<int>(vn.cycles.size() + vn.filaments.size()),
                       "generator count mismatch");
                expect(detail,
                       vn.generators.size() == vn.cycles.size() + vn.filaments.size(),
                       "generator list inconsistent");
                nerve_checks(tri, vn, detail);
            } catch (const NerveTooSmall&) {
            } catch (const RingOpen&) {
            }
        }
    }
    expect(detail, g_formula_nerves >= 50,
           "too few vortex nerves built (" + std::to_string(g_formula_nerves) + ")");
}

// shared state between the Delaunay-oracle and nerve-property criteria
std::vector<Triangulation> g_oracle_triangulations;

void delaunay_oracle(std::string& detail) {
    g_oracle_triangulations.clear();
    for (unsigned seed = 0; seed < 100; ++seed) {
        std::mt19937 rng(seed + 7777);
        const int n = 3 + int(rng() % 28); // n <= 30
        Triangulation tri;
        try {
            tri = delaunay_triangulate(synth::random_points(seed + 321, n));
        } catch (const FrameDegenerate&) {
            continue;
        }
        for (const Triangle& t : tri.triangles) {
            for (std::size_t p = 0; p < tri.points.size(); ++p) {
                if (t.contains_vertex(static_cast<VertexId>(p))) continue;
                if (synth::circumcircle_det(tri.points[t.v0], tri.points[t.v1],
                                            tri.points[t.v2], tri.points[p]) > 0.0L) {
                    expect(detail, false,
                           "strict circumcircle violation at seed " + std::to_string(seed));
                    return;
                }
            }
        }
        const std::size_t h = tri.hull_vertex_count();
        expect(detail, tri.triangles.size() == 2 * tri.points.size() - 2 - h,
               "Euler count violated at seed " + std::to_string(seed));
        g_oracle_triangulations.push_back(std::move(tri));
    }
    expect(detail, g_oracle_triangulations.size() >= 95, "too few triangulations checked");
}

void nerve_property(std::string& detail) {
    // over the Delaunay-oracle corpus: star property for every maximal nerve,
    // strict ring nesting for every constructible vortex nerve
    expect(detail, !g_oracle_triangulations.empty(), "oracle corpus missing");
    for (const Triangulation& tri : g_oracle_triangulations) {
        for (const AlexandroffNerve& nerve : maximal_nerves(tri).nerves) {
            for (int t : nerve.triangle_ids) {
                expect(detail, tri.triangles[t].contains_vertex(nerve.nucleus),
                       "nerve triangle misses its nucleus");
            }
            try {
                const VortexNerve vn = build_vortex_nerve(nerve, tri, 8);
                nerve_checks(tri, vn, detail);
            } catch (const NerveTooSmall&) {
            } catch (const RingOpen&) {
            }
        }
        if (!detail.empty()) return;
    }
}

void write_planted_frames(const std::filesystem::path& dir) {
    const std::vector<int> betti8_frames{0, 1, 2, 3, 4, 5, 12, 13, 14, 15};
    for (int f = 0; f < 20; ++f) {
        const bool planted =
            std::find(betti8_frames.begin(), betti8_frames.end(), f) != betti8_frames.end();
        char name[32];
        std::snprintf(name, sizeof name, "fr%03d.pgm", f);
        write_pgm(dir / name, planted ? synth::betti8_frame() : synth::betti1_frame());
    }
}

void barcode_roundtrip_shrink(std::string& detail) {
    synth::TempDir dir("accept_barcode");
    write_planted_frames(dir.path());

    PipelineConfig cfg;
    cfg.frames_dir = dir.path();
    cfg.pattern = "*.pgm";
    cfg.out_dir = dir.path() / "out";
    const PipelineResult result = run_pipeline(cfg);

    std::vector<PersistenceInterval> betti8;
    for (const PersistenceInterval& iv : persistence_intervals(result.barcode)) {
        if (iv.betti_value == 8) betti8.push_back(iv);
    }
    expect(detail, betti8.size() == 2, "expected exactly two Betti-8 intervals");
    if (betti8.size() == 2) {
        expect(detail, betti8[0] == PersistenceInterval{8, 0, 5, 6}, "first interval != [0,5]");
        expect(detail, betti8[1] == PersistenceInterval{8, 12, 15, 4},
               "second interval != [12,15]");
    }

    const ShrinkPlan plan = shrink(result.barcode, 8, 2);
    const std::vector<int> want{0, 1, 2, 3, 4, 5, 12, 13, 14, 15};
    expect(detail, plan.retained_frames == want, "shrink(8, min_run=2) retained wrong frames");

    // serialization round trips reproduce the barcode exactly
    expect(detail,
           read_barcode(cfg.out_dir / "barcode.csv", BarcodeFormat::Csv) == result.barcode,
           "CSV round trip mismatch");
    expect(detail,
           read_barcode(cfg.out_dir / "barcode.json", BarcodeFormat::Json) == result.barcode,
           "JSON round trip mismatch");
}

void complexity_shape(std::string& detail) {
    const BenchResult r = bench_complexity({200, 400, 800, 1600, 3200}, 0, 7, 3);
    std::ostringstream table;
    for (const BenchRow& row : r.rows) {
        table << " n=" << row.n << " m=" << row.m << " t=" << row.median_seconds;
    }
    std::printf("       bench:%s\n       slope=%.3f r2=%.3f k=%.3e\n", table.str().c_str(),
                r.loglog_slope, r.r_squared, r.k);
    expect(detail, r.loglog_slope >= 1.7 && r.loglog_slope <= 2.3,
           "log-log slope " + std::to_string(r.loglog_slope) + " outside [1.7, 2.3]");
    expect(detail, r.r_squared >= 0.8,
           "k*m*n^2 fit r^2 " + std::to_string(r.r_squared) + " below 0.8");
}

void determinism(std::string& detail) {
    synth::TempDir dir("accept_det");
    write_planted_frames(dir.path());

    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    PipelineConfig cfg;
    cfg.frames_dir = dir.path();
    cfg.pattern = "*.pgm";
    cfg.jobs = 4;
    cfg.out_dir = dir.path() / "run1";
    run_pipeline(cfg);
    cfg.out_dir = dir.path() / "run2";
    run_pipeline(cfg);
    const std::string a = slurp(dir.path() / "run1" / "barcode.csv");
    const std::string b = slurp(dir.path() / "run2" / "barcode.csv");
    expect(detail, !a.empty(), "first run produced no barcode.csv");
    expect(detail, a == b, "barcode.csv differs between consecutive runs");
}

void path_word_algebra(std::string& detail) {
    const Triangulation tri = delaunay_triangulate(synth::concentric(6, 1.0, 2.0));
    const VortexNerve vn = build_vortex_nerve(maximal_nerves(tri).nerves[0], tri, 8);

    // anchors: a + a = 0, e - e = 0, e + e + e = e
    expect(detail, reduce_path_word(vn, std::vector<PathStep>{{"a", 1}, {"a", 1}}).empty(),
           "a + a must cancel mod 2");
    expect(detail, reduce_path_word(vn, std::vector<PathStep>{{"e1", 1}, {"e1", -1}}).empty(),
           "e - e must vanish");
    {
        const auto r =
            reduce_path_word(vn, std::vector<PathStep>{{"e1", 1}, {"e1", 1}, {"e1", 1}});
        expect(detail, r.size() == 1 && r.count("e1") && r.at("e1") == 1, "e+e+e must equal e");
    }

    // property: permutation invariance, coefficients reduced to {0,1},
    // cycle coefficients mod 2, filament coefficients idempotent
    std::set<std::string> cycle_gens;
    for (const VortexCycle& c : vn.cycles) cycle_gens.insert(c.generator_label);
    std::mt19937 rng(90210);
    for (int iter = 0; iter < 500 && detail.empty(); ++iter) {
        std::vector<PathStep> word;
        const int len = 1 + int(rng() % 14);
        for (int s = 0; s < len; ++s) {
            word.push_back({vn.generators[rng() % vn.generators.size()],
                            (rng() % 2) ? 1 : -1});
        }
        const auto base = reduce_path_word(vn, word);

        // oracle: count and net per generator
        std::map<std::string, long long> count, net;
        for (const PathStep& s : word) {
            count[s.generator] += 1;
            net[s.generator] += s.direction;
        }
        for (const auto& [gen, c] : count) {
            const bool is_cycle = cycle_gens.count(gen) > 0;
            const int want = is_cycle ? int(c % 2) : (net[gen] != 0 ? 1 : 0);
            const int got = base.count(gen) ? base.at(gen) : 0;
            expect(detail, got == want, "coefficient rule violated for " + gen);
        }
        std::shuffle(word.begin(), word.end(), rng);
        expect(detail, reduce_path_word(vn, word) == base,
               "reduction not permutation invariant");
    }
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    const std::vector<Criterion> criteria{
        {"betti-theorem-reproduction", 1.0, betti_theorem_reproduction},
        {"k-plus-2-law", 1.0, k_plus_2_law},
        {"formula-agreement", 30.0, formula_agreement},
        {"delaunay-oracle", 10.0, delaunay_oracle},
        {"nerve-property", 10.0, nerve_property},
        {"barcode-roundtrip-shrink", 5.0, barcode_roundtrip_shrink},
        {"complexity-shape", 300.0, complexity_shape},
        {"determinism", 30.0, determinism},
        {"path-word-algebra", 1.0, path_word_algebra},
    };
    for (const Criterion& c : criteria) run_criterion(c);
    if (g_failures == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("%d criteria FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
