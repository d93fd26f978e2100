#pragma once

#include "vxb/delaunay.hpp"
#include "vxb/nerve.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vxb {

/// Closed cycle through the barycenters of one ring of triangles, ordered by
/// strictly increasing angle about the nerve nucleus (angle ties broken by
/// radius, then triangle id). Carries one cyclic-group generator.
struct VortexCycle {
    int ring_index = 0;
    std::vector<Barycenter> vertices;
    std::string generator_label;

    std::vector<Point2> polygon() const;
};

/// Edge attached between a vertex of ring (outer_ring - 1) and a vertex of
/// ring outer_ring. Its traversal group contributes one generator.
struct Filament {
    int inner_vertex = 0; // index into cycles[outer_ring - 1].vertices
    int outer_vertex = 0; // index into cycles[outer_ring].vertices
    int outer_ring = 1;
    std::string generator_label;
};

/// Nested vortex cycles on an Alexandroff nerve plus the filaments between
/// consecutive rings; represented by its free-abelian generator list
/// (cycle generators first, then filament generators).
struct VortexNerve {
    VertexId mnc_nucleus = 0;
    std::vector<VortexCycle> cycles;
    std::vector<Filament> filaments;
    std::vector<std::string> generators;
};

/// Betti number of a vortex nerve, computed two ways that must agree:
/// the generator count |cycles| + |filaments|, and the ring accumulation
/// 1 + sum over rings j>=1 of (|cycles[j-1]| + 1).
struct BettiResult {
    int value = 0;
    std::vector<int> per_ring_contributions; // {1, |ring0|+1, |ring1|+1, ...}
    VertexId nerve_ref = 0;                  // nucleus of the source nerve
};

/// Ring 0: the cycle through the barycenters of the nerve triangles.
/// Throws NerveTooSmall when degree < 3 and RingOpen when the nucleus is on
/// the hull or the barycenter ring fails to close strictly around it.
VortexCycle build_inner_cycle(const AlexandroffNerve& nerve, const Triangulation& tri);

/// Next ring outward: barycenters of all unused triangles sharing a vertex
/// with the current ring's triangles. Returns nullopt (Stop) when no such
/// triangles exist or the candidate cycle fails to strictly enclose the
/// previous one.
std::optional<VortexCycle> expand_ring(const VortexNerve& state, const Triangulation& tri);

/// One filament per inner vertex, to its nearest outer vertex (ties to the
/// lower outer index). outer_ring of the result is taken from `outer`.
std::vector<Filament> attach_filaments(const VortexCycle& inner, const VortexCycle& outer);

/// Full construction: inner cycle, outward expansion until Stop or max_rings,
/// filaments between consecutive rings, generator enumeration.
VortexNerve build_vortex_nerve(const AlexandroffNerve& nerve, const Triangulation& tri,
                               int max_rings);

/// Betti number with the cross-checked accumulation; throws std::logic_error
/// if the two formulas disagree.
BettiResult betti_number(const VortexNerve& vn);

/// One step of a traversal word: a generator traversed forward (+1) or
/// backward (-1).
struct PathStep {
    std::string generator;
    int direction = 1;
};

/// Normal form of a traversal word over the nerve's generators: cycle
/// coefficients reduce mod 2, filament coefficients collapse to 0 (net zero
/// traversal) or 1 (any net traversal). Returns the nonzero coefficients.
/// Throws Error on a generator not belonging to the nerve.
std::map<std::string, int> reduce_path_word(const VortexNerve& vn,
                                            std::span<const PathStep> word);

} // namespace vxb
