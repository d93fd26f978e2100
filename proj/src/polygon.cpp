#include "vxb/polygon.hpp"

#include "vxb/errors.hpp"
#include "vxb/predicates.hpp"

#include <algorithm>

namespace vxb {
namespace {

bool same_point(const Point2& a, const Point2& b) {
    return a.x() == b.x() && a.y() == b.y();
}

// q on the closed segment [a,b], all three collinear not assumed.
bool on_segment(const Point2& a, const Point2& b, const Point2& q) {
    if (orient2d(a, b, q) != 0) return false;
    return std::min(a.x(), b.x()) <= q.x() && q.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= q.y() && q.y() <= std::max(a.y(), b.y());
}

// Any contact between closed segments [a,b] and [c,d].
bool segments_touch(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const int d1 = orient2d(a, b, c);
    const int d2 = orient2d(a, b, d);
    const int d3 = orient2d(c, d, a);
    const int d4 = orient2d(c, d, b);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true; // proper crossing
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
           on_segment(c, d, b);
}

} // namespace

bool polygon_is_simple(std::span<const Point2> poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (same_point(poly[i], poly[(i + 1) % n])) return false; // zero-length edge
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point2& c = poly[j];
            const Point2& d = poly[(j + 1) % n];
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // consecutive edges share exactly one endpoint; any further
                // contact (collinear overlap, the far endpoints touching the
                // partner edge) breaks simplicity
                const Point2& tip1 = (j == i + 1) ? a : b; // endpoint of edge i away from shared
                const Point2& tip2 = (j == i + 1) ? d : c; // endpoint of edge j away from shared
                if (same_point(tip1, tip2)) return false;
                if (on_segment(c, d, tip1) || on_segment(a, b, tip2)) return false;
            } else {
                if (segments_touch(a, b, c, d)) return false;
            }
        }
    }
    return true;
}

bool polygon_contains_unchecked(std::span<const Point2> poly, const Point2& q) {
    const std::size_t n = poly.size();
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % n];
        // boundary is not inside; the bounding-box filter keeps the exact
        // collinearity test off the common path
        if (std::min(a.x(), b.x()) <= q.x() && q.x() <= std::max(a.x(), b.x()) &&
            std::min(a.y(), b.y()) <= q.y() && q.y() <= std::max(a.y(), b.y()) &&
            orient2d(a, b, q) == 0) {
            return false;
        }
        if (a.y() <= q.y()) {
            if (b.y() > q.y() && orient2d(a, b, q) > 0) ++winding;
        } else {
            if (b.y() <= q.y() && orient2d(a, b, q) < 0) --winding;
        }
    }
    return winding != 0;
}

bool polygon_contains(std::span<const Point2> poly, const Point2& q) {
    if (poly.size() < 3) throw PredicateError("polygon_contains: need at least 3 vertices");
    if (!polygon_is_simple(poly)) throw PolygonNotSimple("polygon_contains: polygon is not simple");
    return polygon_contains_unchecked(poly, q);
}

} // namespace vxb
