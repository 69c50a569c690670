#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bilab/curve.hpp"
#include "bilab/mat2.hpp"

namespace bilab {

/// A plane point with mode-homogeneous coordinates.
struct Point {
    Scalar x, y;

    Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {
        if (x.mode() != y.mode()) throw ModeMismatch("point coordinates must share a mode");
    }
    Mode mode() const { return x.mode(); }
    std::string str() const;
};

/// Ordered, duplicate-free point list. star means no two points lie on a
/// common line through the origin, so every two-point row matrix built from
/// the set is invertible.
struct PointSet {
    std::vector<Point> points;
    Mode mode = Mode::Exact;
    bool star = false;

    size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    void push(Point p);
};

/// Points (b^(l i), b^(k i)), i = 1..n, on the model x^k = y^l; for l < 0
/// the points are (b^(|l| i), b^(-k i)) on x^k y^|l| = 1. Exact base only;
/// bases 0, 1, -1, i, -i would collapse the progression and are rejected.
PointSet geometric_progression_set(long k, long l, unsigned n, const Scalar& base);

/// Deterministic fiber sampling over seeded abscissas: integers seed+1,
/// seed+2, ... first, then positive non-integer rationals by ascending
/// height. Exact mode admits only Q(i) fiber roots and reports when fibers
/// with roots outside Q(i) block progress.
PointSet sample_curve_points(const Curve& c, unsigned n, Mode mode, uint64_t seed,
                             mpfr_prec_t prec = 256);

/// First point of each proportionality class in input order, origin dropped.
/// degree_hint names the source-curve degree behind the |S*| >= |S|/d size
/// guarantee; it is documentation for callers, not an enforced check.
PointSet prune_star(const PointSet& s, unsigned degree_hint);

/// Pointwise image under an invertible exact matrix; star survives because
/// proportionality is a linear invariant.
PointSet linear_image(const PointSet& s, const Mat2Q& m);

} // namespace bilab
