#pragma once

// Shared test helpers. The oracle_* functions deliberately recompute geometry
// through routes independent of the library implementation.

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "radloc/geom.hpp"
#include "radloc/locate.hpp"
#include "radloc/rng.hpp"

namespace testsupport {

using radloc::AnchorSet;
using radloc::Circle;
using radloc::Point;
using radloc::SplitMix64;

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// "Relative" comparison that stays meaningful near zero: the tolerance is
// scaled by max(1, |a|, |b|).
inline bool rel_near(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool point_near(Point p, Point q, double tol) {
    return near(p.x, q.x, tol) && near(p.y, q.y, tol);
}

inline double oracle_distance(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

// Direct range-constraint check: inside or on every circle.
inline bool oracle_inside_all(Point p, const std::vector<Circle>& circles) {
    for (const Circle& c : circles) {
        if (oracle_distance(p, c.center) > c.radius) {
            return false;
        }
    }
    return true;
}

// Per-circle clamped overshoot, summed; independent residual evaluation.
inline double oracle_residual(Point p, const std::vector<Circle>& circles) {
    double s = 0.0;
    for (const Circle& c : circles) {
        const double overshoot = oracle_distance(p, c.center) - c.radius;
        if (overshoot > 0.0) {
            s += overshoot;
        }
    }
    return s;
}

// Exhaustive search for the farthest-apart pair of centers.
inline std::pair<std::size_t, std::size_t> oracle_max_pair(const std::vector<Circle>& circles) {
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < circles.size(); ++i) {
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            const double d = oracle_distance(circles[i].center, circles[j].center);
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    return {bi, bj};
}

// Grid search at `step` resolution for any point inside all circles.
inline std::optional<Point> grid_zero_residual_point(const std::vector<Circle>& circles, double x0,
                                                     double y0, double x1, double y1, double step) {
    for (double x = x0; x <= x1 + 1e-12; x += step) {
        for (double y = y0; y <= y1 + 1e-12; y += step) {
            if (oracle_inside_all({x, y}, circles)) {
                return Point{x, y};
            }
        }
    }
    return std::nullopt;
}

struct Rigid {
    double c = 1.0, s = 0.0, tx = 0.0, ty = 0.0;

    Point apply(Point p) const { return {c * p.x - s * p.y + tx, s * p.x + c * p.y + ty}; }
    Circle apply(const Circle& circle) const { return {apply(circle.center), circle.radius}; }
    AnchorSet apply(const AnchorSet& set) const {
        AnchorSet out;
        out.reserve(set.size());
        for (const Circle& circle : set) {
            out.push_back(apply(circle));
        }
        return out;
    }
};

inline Rigid random_rigid(SplitMix64& rng) {
    const double angle = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    return {std::cos(angle), std::sin(angle), rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
}

inline Point random_point(SplitMix64& rng, double lo = 0.0, double hi = 100.0) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

// Random pair with |r1 - r2| < d < r1 + r2 by construction (with margin), so
// half_chord_sq > 0 is guaranteed.
inline std::pair<Circle, Circle> random_intersecting_pair(SplitMix64& rng) {
    Point p = random_point(rng);
    Point q = random_point(rng);
    double d = oracle_distance(p, q);
    while (d < 1.0) {
        q = random_point(rng);
        d = oracle_distance(p, q);
    }
    const double r1 = rng.uniform(0.55 * d, 1.5 * d);
    const double r2 = rng.uniform(std::abs(d - r1) + 0.02 * d, d + r1 - 0.02 * d);
    return {Circle{p, r1}, Circle{q, r2}};
}

inline AnchorSet random_anchor_set(SplitMix64& rng, int n, double r_lo = 5.0, double r_hi = 60.0) {
    AnchorSet set;
    set.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        set.push_back(Circle{random_point(rng), rng.uniform(r_lo, r_hi)});
    }
    return set;
}

// Guards radical-center checks against numerically near-collinear triples,
// where the solve is arbitrarily ill-conditioned and point-wise assertions
// at 1e-9 stop being meaningful.
inline bool well_conditioned_triple(const Circle& c1, const Circle& c2, const Circle& c3) {
    const double det =
        (c2.center.x - c1.center.x) * (c3.center.y - c1.center.y) -
        (c2.center.y - c1.center.y) * (c3.center.x - c1.center.x);
    const double scale =
        std::max({oracle_distance(c1.center, c2.center), oracle_distance(c1.center, c3.center),
                  oracle_distance(c2.center, c3.center)});
    return std::abs(det) > 1e-3 * scale * scale;
}

} // namespace testsupport
