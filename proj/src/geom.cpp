#include "radloc/geom.hpp"

#include <cmath>

#include "radloc/errors.hpp"
#include "radloc/testhooks.hpp"

namespace radloc {

namespace testhooks {
bool flip_radical_foot_sign = false;
} // namespace testhooks

namespace {

constexpr double kCoincidentCenters = 1e-9; // meters
constexpr double kCollinearRel = 1e-9;      // relative determinant threshold

double distance_sq(Point p, Point q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

} // namespace

double distance(Point p, Point q) {
    return std::sqrt(distance_sq(p, q));
}

std::pair<std::size_t, std::size_t> max_separation_pair(std::span<const Circle> circles) {
    if (circles.size() < 2) {
        throw PreconditionError("max_separation_pair: need at least 2 circles");
    }
    std::size_t best_i = 0;
    std::size_t best_j = 1;
    double best_sq = distance_sq(circles[0].center, circles[1].center);
    // Scan order makes ties resolve to the smallest i, then smallest j.
    for (std::size_t i = 0; i + 1 < circles.size(); ++i) {
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            const double d_sq = distance_sq(circles[i].center, circles[j].center);
            if (d_sq > best_sq) {
                best_sq = d_sq;
                best_i = i;
                best_j = j;
            }
        }
    }
    return {best_i, best_j};
}

RadicalFoot radical_foot(const Circle& c1, const Circle& c2) {
    const double d = distance(c1.center, c2.center);
    if (d <= kCoincidentCenters) {
        throw DegenerateGeometryError("radical_foot: coincident centers, radical line undefined");
    }
    const double r1_sq = c1.radius * c1.radius;
    const double r2_sq = c2.radius * c2.radius;
    double radii_term = r1_sq - r2_sq;
    if (testhooks::flip_radical_foot_sign) {
        radii_term = -radii_term;
    }
    const double d_o1 = (radii_term + d * d) / (2.0 * d);

    RadicalFoot out;
    out.d_o1 = d_o1;
    out.half_chord_sq = r1_sq - d_o1 * d_o1;
    const double t = d_o1 / d;
    out.foot = c1.center + t * (c2.center - c1.center);
    return out;
}

RadicalSegment radical_segment(const Circle& c1, const Circle& c2) {
    const RadicalFoot f = radical_foot(c1, c2);
    if (f.half_chord_sq <= 0.0) {
        throw NoIntersectionError("radical_segment: circles do not properly intersect");
    }
    const double m = std::sqrt(f.half_chord_sq);
    const double d = distance(c1.center, c2.center);
    // Unit perpendicular of the center-line direction. Equivalent to the
    // m/d_o1 offset form when d_o1 != 0 and well-defined when d_o1 == 0.
    const double ux = (c2.center.x - c1.center.x) / d;
    const double uy = (c2.center.y - c1.center.y) / d;
    RadicalSegment seg;
    seg.a = {f.foot.x - m * uy, f.foot.y + m * ux};
    seg.b = {f.foot.x + m * uy, f.foot.y - m * ux};
    return seg;
}

std::optional<Point> radical_center(const Circle& c1, const Circle& c2, const Circle& c3) {
    const Point p1 = c1.center;
    const Point p2 = c2.center;
    const Point p3 = c3.center;

    const double a11 = p2.x - p1.x;
    const double a12 = p2.y - p1.y;
    const double a21 = p3.x - p1.x;
    const double a22 = p3.y - p1.y;
    const double det = a11 * a22 - a12 * a21;

    const double d12 = distance(p1, p2);
    const double d13 = distance(p1, p3);
    const double d23 = distance(p2, p3);
    const double scale = std::max(d12, std::max(d13, d23));
    if (std::abs(det) <= kCollinearRel * scale * scale) {
        return std::nullopt;
    }

    const double k1 = p1.x * p1.x + p1.y * p1.y;
    const double k2 = p2.x * p2.x + p2.y * p2.y;
    const double k3 = p3.x * p3.x + p3.y * p3.y;
    const double r1_sq = c1.radius * c1.radius;
    const double b1 = 0.5 * (k2 - k1 + r1_sq - c2.radius * c2.radius);
    const double b2 = 0.5 * (k3 - k1 + r1_sq - c3.radius * c3.radius);

    return Point{(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
}

std::vector<Point> sample_segment(const RadicalSegment& seg, int count) {
    if (count < 1) {
        throw PreconditionError("sample_segment: need at least 1 test point");
    }
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));
    const Point delta = seg.b - seg.a;
    for (int l = 1; l <= count; ++l) {
        const double t = static_cast<double>(l) / static_cast<double>(count + 1);
        points.push_back(seg.a + t * delta);
    }
    return points;
}

double residual(Point p, std::span<const Circle> circles) {
    if (circles.empty()) {
        throw PreconditionError("residual: empty circle list");
    }
    double sum = 0.0;
    for (const Circle& c : circles) {
        sum += std::max(0.0, distance(p, c.center) - c.radius);
    }
    return sum;
}

} // namespace radloc
