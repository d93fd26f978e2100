#pragma once

#include "vxb/point.hpp"

namespace vxb {

enum class CirclePosition { Inside, On, Outside };

/// Sign of the signed area of triangle (a,b,c): +1 if counterclockwise,
/// -1 if clockwise, 0 if collinear. Exact for all finite inputs: a floating
/// point filter certifies the common case and degenerate configurations fall
/// back to expansion arithmetic.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Sign of the 4x4 in-circle determinant, assuming (a,b,c) counterclockwise:
/// +1 if d lies strictly inside the circumcircle of (a,b,c), -1 if strictly
/// outside, 0 if cocircular. Same exactness contract as orient2d. If (a,b,c)
/// is clockwise the sign is flipped; collinear (a,b,c) yields 0.
int in_circle_sign(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Position of d relative to the circumcircle of (a,b,c). Orientation of
/// (a,b,c) is normalized internally. Throws PredicateError if a,b,c are
/// collinear (no circumcircle).
CirclePosition in_circle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

} // namespace vxb
