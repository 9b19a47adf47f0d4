#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace radloc {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point p, Point q) { return p.x == q.x && p.y == q.y; }

// One range constraint: anchor position plus the radius the algorithm
// believes in (the nominal range, not the DOI-shrunken actual range).
struct Circle {
    Point center;
    double radius = 0.0;
};

// Intersection O of the radical line of two circles with the line joining
// their centers. half_chord_sq is R1^2 - d_o1^2 and may be <= 0; that is a
// valid result meaning the circles are disjoint or nested, not an error.
struct RadicalFoot {
    Point foot;                 // O
    double d_o1 = 0.0;          // signed distance from c1.center to O along the center line
    double half_chord_sq = 0.0; // m^2
};

// The common chord of two properly intersecting circles.
struct RadicalSegment {
    Point a; // I_a
    Point b; // I_b
};

// Euclidean distance.
double distance(Point p, Point q);

// Indices (i, j), i < j, of the pair of centers with maximal separation.
// Ties break to the lexicographically smallest pair. Requires >= 2 circles.
std::pair<std::size_t, std::size_t> max_separation_pair(std::span<const Circle> circles);

// Foot of the radical line of two circles with non-coincident centers.
// Throws DegenerateGeometryError when the centers coincide (within 1e-9 m).
RadicalFoot radical_foot(const Circle& c1, const Circle& c2);

// Endpoints of the common chord. Requires proper intersection
// (half_chord_sq > 0); tangent circles count as non-intersecting.
// Throws NoIntersectionError / DegenerateGeometryError otherwise.
RadicalSegment radical_segment(const Circle& c1, const Circle& c2);

// Point with equal power to all three circles, or nullopt when the centers
// are collinear (|det| <= 1e-9 * scale^2, scale = max pairwise center distance).
std::optional<Point> radical_center(const Circle& c1, const Circle& c2, const Circle& c3);

// Exactly `count` evenly spaced interior points of the segment; the endpoints
// themselves are never returned. Requires count >= 1.
std::vector<Point> sample_segment(const RadicalSegment& seg, int count);

// Sum over circles of max(0, distance(p, center) - radius). Zero exactly when
// p lies inside or on every circle. Requires a non-empty list.
double residual(Point p, std::span<const Circle> circles);

} // namespace radloc
