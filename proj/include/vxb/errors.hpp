#pragma once

#include <stdexcept>
#include <string>

namespace vxb {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File or directory could not be read/written.
struct IoError : Error {
    using Error::Error;
};

/// A frame cannot be triangulated: fewer than 3 distinct centroids, or all collinear.
struct FrameDegenerate : Error {
    using Error::Error;
};

/// A nerve has fewer than 3 triangles; no cycle can be drawn through its barycenters.
struct NerveTooSmall : Error {
    using Error::Error;
};

/// The barycenter ring of a nerve does not close around its nucleus
/// (nucleus on the convex hull, or the candidate cycle is invalid).
struct RingOpen : Error {
    using Error::Error;
};

struct PolygonNotSimple : Error {
    using Error::Error;
};

/// A geometric predicate was called outside its precondition.
struct PredicateError : Error {
    using Error::Error;
};

} // namespace vxb
