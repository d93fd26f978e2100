#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace vxb {

/// Planar point / vector. Frame coordinates: x grows right, y grows down.
using Point2 = Eigen::Vector2d;

using VertexId = std::uint32_t;

/// z-component of the cross product (b - a) x (c - a), evaluated in plain
/// floating point. Sign-reliable only away from degeneracy; use orient2d
/// when the sign matters.
inline double cross2(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

} // namespace vxb
