#include "radloc/locate.hpp"

#include "radloc/errors.hpp"

namespace radloc {

namespace {

constexpr double kCoincidentCenters = 1e-9; // meters

Point centroid_point(const AnchorSet& set) {
    double sx = 0.0;
    double sy = 0.0;
    for (const Circle& c : set) {
        sx += c.center.x;
        sy += c.center.y;
    }
    const double n = static_cast<double>(set.size());
    return {sx / n, sy / n};
}

Point midpoint(Point p, Point q) {
    return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
}

Estimate finish(Point p, Branch branch, const AnchorSet& set, int test_point = 0) {
    Estimate e;
    e.point = p;
    e.method = Method::RLA;
    e.branch = branch;
    e.test_point = test_point;
    e.score = residual(p, set);
    return e;
}

Estimate rla_two(const AnchorSet& set) {
    const Circle& c1 = set[0];
    const Circle& c2 = set[1];
    if (distance(c1.center, c2.center) <= kCoincidentCenters) {
        return finish(midpoint(c1.center, c2.center), Branch::PairMidpointFallback, set);
    }
    return finish(radical_foot(c1, c2).foot, Branch::TwoCircleFoot, set);
}

Estimate rla_three(const AnchorSet& set) {
    if (auto center = radical_center(set[0], set[1], set[2])) {
        bool inside = true;
        for (const Circle& c : set) {
            if (distance(*center, c.center) > c.radius) {
                inside = false;
                break;
            }
        }
        if (inside) {
            return finish(*center, Branch::RadicalCenter, set);
        }
    }
    // Collinear centers or center outside the RI: midpoint of the widest pair.
    const auto [i, j] = max_separation_pair(set);
    return finish(midpoint(set[i].center, set[j].center), Branch::PairMidpointFallback, set);
}

Estimate rla_many(const AnchorSet& set, int test_points) {
    const auto [i, j] = max_separation_pair(set);
    const Circle& c1 = set[i];
    const Circle& c2 = set[j];

    const Point centroid = centroid_point(set);
    if (distance(c1.center, c2.center) <= kCoincidentCenters) {
        return finish(centroid, Branch::CentroidFallback, set);
    }
    if (radical_foot(c1, c2).half_chord_sq <= 0.0) {
        // The widest pair is disjoint, nested or tangent: no segment to
        // sample, so the candidate list degenerates to the centroid.
        return finish(centroid, Branch::CentroidFallback, set);
    }

    const RadicalSegment seg = radical_segment(c1, c2);
    const std::vector<Point> samples = sample_segment(seg, test_points);

    std::vector<double> scores;
    scores.reserve(samples.size());
    for (const Point& sample : samples) {
        scores.push_back(residual(sample, set));
    }

    // Zero-score samples lie inside the RI. The RI is an intersection of
    // discs, hence convex, so they form one contiguous run along the
    // segment; the middle of the run is the sampled center of the feasible
    // chord section.
    std::size_t zero_lo = samples.size();
    std::size_t zero_count = 0;
    for (std::size_t l = 0; l < scores.size(); ++l) {
        if (scores[l] == 0.0) {
            if (zero_count == 0) {
                zero_lo = l;
            }
            ++zero_count;
        }
    }
    if (zero_count > 0) {
        const std::size_t pick = zero_lo + (zero_count - 1) / 2;
        return finish(samples[pick], Branch::TestPoint, set, static_cast<int>(pick) + 1);
    }

    // Otherwise the minimum over {t_1..t_L, centroid}, earliest candidate on ties.
    std::size_t best = 0;
    for (std::size_t l = 1; l < scores.size(); ++l) {
        if (scores[l] < scores[best]) {
            best = l;
        }
    }
    const double centroid_score = residual(centroid, set);
    if (centroid_score < scores[best]) {
        return finish(centroid, Branch::CentroidFallback, set);
    }
    return finish(samples[best], Branch::TestPoint, set, static_cast<int>(best) + 1);
}

} // namespace

Estimate centroid_estimate(const AnchorSet& set) {
    if (set.empty()) {
        throw PreconditionError("centroid_estimate: empty anchor set");
    }
    Estimate e;
    e.point = centroid_point(set);
    e.method = Method::CA;
    e.branch = Branch::Centroid;
    e.score = residual(e.point, set);
    return e;
}

Estimate rla_estimate(const AnchorSet& set, int test_points) {
    if (set.empty()) {
        throw PreconditionError("rla_estimate: empty anchor set");
    }
    if (test_points < 1) {
        throw PreconditionError("rla_estimate: need at least 1 test point");
    }
    switch (set.size()) {
    case 1:
        return finish(set[0].center, Branch::SingleAnchor, set);
    case 2:
        return rla_two(set);
    case 3:
        return rla_three(set);
    default:
        return rla_many(set, test_points);
    }
}

} // namespace radloc
