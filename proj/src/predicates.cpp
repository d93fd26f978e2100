// Robust orientation and in-circle predicates: a floating point filter with
// the standard Shewchuk-style error bound, falling back to exact evaluation
// with multi-component floating point expansions when the filter cannot
// certify a sign. Assumes IEEE 754 round-to-nearest and no overflow; gradual
// underflow of intermediate products is not handled (coordinates of magnitude
// roughly within [1e-140, 1e140] are safe).

#include "vxb/predicates.hpp"

#include "vxb/errors.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace vxb {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2; // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// An expansion is a sum of doubles, nonoverlapping and ordered by increasing
// magnitude; the sign of the sum is the sign of the last component.
using Expansion = std::vector<double>;

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bvirt = x - a;
    const double avirt = x - bvirt;
    const double bround = b - bvirt;
    const double around = a - avirt;
    y = around + bround;
}

inline void fast_two_sum(double a, double b, double& x, double& y) {
    // requires |a| >= |b|
    x = a + b;
    const double bvirt = x - a;
    y = b - bvirt;
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    const double bvirt = a - x;
    const double avirt = x + bvirt;
    const double bround = bvirt - b;
    const double around = a - avirt;
    y = around + bround;
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

Expansion make_two_diff(double a, double b) {
    double x, y;
    two_diff(a, b, x, y);
    if (y == 0.0) return {x};
    return {y, x};
}

// Merges two expansions into one (fast_expansion_sum_zeroelim).
Expansion add(const Expansion& e, const Expansion& f) {
    if (e.empty() || (e.size() == 1 && e[0] == 0.0)) return f;
    if (f.empty() || (f.size() == 1 && f[0] == 0.0)) return e;

    Expansion h;
    h.reserve(e.size() + f.size());
    std::size_t ei = 0, fi = 0;
    double enow = e[0], fnow = f[0];
    double q;
    if ((fnow > enow) == (fnow > -enow)) {
        q = enow;
        ++ei;
    } else {
        q = fnow;
        ++fi;
    }
    double qnew, hh;
    if (ei < e.size() && fi < f.size()) {
        enow = e[ei];
        fnow = f[fi];
        if ((fnow > enow) == (fnow > -enow)) {
            fast_two_sum(enow, q, qnew, hh);
            ++ei;
        } else {
            fast_two_sum(fnow, q, qnew, hh);
            ++fi;
        }
        q = qnew;
        if (hh != 0.0) h.push_back(hh);
        while (ei < e.size() && fi < f.size()) {
            enow = e[ei];
            fnow = f[fi];
            if ((fnow > enow) == (fnow > -enow)) {
                two_sum(q, enow, qnew, hh);
                ++ei;
            } else {
                two_sum(q, fnow, qnew, hh);
                ++fi;
            }
            q = qnew;
            if (hh != 0.0) h.push_back(hh);
        }
    }
    while (ei < e.size()) {
        two_sum(q, e[ei], qnew, hh);
        ++ei;
        q = qnew;
        if (hh != 0.0) h.push_back(hh);
    }
    while (fi < f.size()) {
        two_sum(q, f[fi], qnew, hh);
        ++fi;
        q = qnew;
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

// scale_expansion_zeroelim
Expansion scale(const Expansion& e, double b) {
    Expansion h;
    if (e.empty() || b == 0.0) {
        h.push_back(0.0);
        return h;
    }
    h.reserve(2 * e.size());
    double q, hh;
    two_product(e[0], b, q, hh);
    if (hh != 0.0) h.push_back(hh);
    for (std::size_t i = 1; i < e.size(); ++i) {
        double p1, p0, sum;
        two_product(e[i], b, p1, p0);
        two_sum(q, p0, sum, hh);
        if (hh != 0.0) h.push_back(hh);
        fast_two_sum(p1, sum, q, hh);
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

Expansion mul(const Expansion& e, const Expansion& f) {
    Expansion acc{0.0};
    for (double c : f) {
        if (c == 0.0) continue;
        acc = add(acc, scale(e, c));
    }
    return acc;
}

Expansion negate(Expansion e) {
    for (double& c : e) c = -c;
    return e;
}

Expansion sub(const Expansion& e, const Expansion& f) { return add(e, negate(f)); }

inline int sign_of(const Expansion& e) { return e.empty() ? 0 : sign_of(e.back()); }

int orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
    // (ax-cx)(by-cy) - (ay-cy)(bx-cx), every step exact
    const Expansion acx = make_two_diff(a.x(), c.x());
    const Expansion acy = make_two_diff(a.y(), c.y());
    const Expansion bcx = make_two_diff(b.x(), c.x());
    const Expansion bcy = make_two_diff(b.y(), c.y());
    return sign_of(sub(mul(acx, bcy), mul(acy, bcx)));
}

int in_circle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const Expansion adx = make_two_diff(a.x(), d.x());
    const Expansion ady = make_two_diff(a.y(), d.y());
    const Expansion bdx = make_two_diff(b.x(), d.x());
    const Expansion bdy = make_two_diff(b.y(), d.y());
    const Expansion cdx = make_two_diff(c.x(), d.x());
    const Expansion cdy = make_two_diff(c.y(), d.y());

    const Expansion alift = add(mul(adx, adx), mul(ady, ady));
    const Expansion blift = add(mul(bdx, bdx), mul(bdy, bdy));
    const Expansion clift = add(mul(cdx, cdx), mul(cdy, cdy));

    const Expansion bxcy = sub(mul(bdx, cdy), mul(bdy, cdx));
    const Expansion cxay = sub(mul(cdx, ady), mul(cdy, adx));
    const Expansion axby = sub(mul(adx, bdy), mul(ady, bdx));

    const Expansion det = add(add(mul(alift, bxcy), mul(blift, cxay)), mul(clift, axby));
    return sign_of(det);
}

} // namespace

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    const double detleft = (a.x() - c.x()) * (b.y() - c.y());
    const double detright = (a.y() - c.y()) * (b.x() - c.x());
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return sign_of(det);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return sign_of(det);
        detsum = -detleft - detright;
    } else {
        // detleft is exactly zero, so the sign of det is the sign of -detright,
        // which is already exact.
        return sign_of(det);
    }

    const double errbound = kCcwErrBound * detsum;
    if (det >= errbound || -det >= errbound) return sign_of(det);
    return orient2d_exact(a, b, c);
}

int in_circle_sign(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const double adx = a.x() - d.x();
    const double bdx = b.x() - d.x();
    const double cdx = c.x() - d.x();
    const double ady = a.y() - d.y();
    const double bdy = b.y() - d.y();
    const double cdy = c.y() - d.y();

    const double bdxcdy = bdx * cdy;
    const double cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;

    const double cdxady = cdx * ady;
    const double adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;

    const double adxbdy = adx * bdy;
    const double bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);

    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    const double errbound = kIccErrBound * permanent;
    if (det > errbound || -det > errbound) return sign_of(det);
    return in_circle_exact(a, b, c, d);
}

CirclePosition in_circle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const int orientation = orient2d(a, b, c);
    if (orientation == 0) throw PredicateError("in_circle: a, b, c are collinear");
    const int s = orientation * in_circle_sign(a, b, c, d);
    if (s > 0) return CirclePosition::Inside;
    if (s < 0) return CirclePosition::Outside;
    return CirclePosition::On;
}

} // namespace vxb
