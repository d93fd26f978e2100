#pragma once

#include "vxb/point.hpp"

#include <span>

namespace vxb {

/// True if the closed polygon through the given vertices is simple: no
/// repeated vertices, no zero-length edges, and no two edges intersecting
/// except consecutive edges at their shared endpoint.
bool polygon_is_simple(std::span<const Point2> poly);

/// Strict containment test: true iff q lies strictly inside the simple closed
/// polygon (boundary points are outside). Winding-number test with exact
/// orientation predicates. Throws PolygonNotSimple if the polygon is not
/// simple, PredicateError if it has fewer than 3 vertices.
bool polygon_contains(std::span<const Point2> poly, const Point2& q);

/// Containment of q without the simplicity check; the caller guarantees the
/// polygon is simple (e.g. validated once and queried many times).
bool polygon_contains_unchecked(std::span<const Point2> poly, const Point2& q);

} // namespace vxb
