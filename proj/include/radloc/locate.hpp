#pragma once

#include "radloc/geom.hpp"

namespace radloc {

// In-contact anchors in stable contact-discovery order. The circle radius is
// the working range the estimator trusts; index identity matters for
// deterministic tie-breaks.
using AnchorSet = std::vector<Circle>;

enum class Method {
    CA,  // centroid algorithm
    RLA, // radical line algorithm
};

enum class Branch {
    Centroid,             // CA's only branch
    SingleAnchor,         // RLA, N = 1
    TwoCircleFoot,        // RLA, N = 2: the radical-line foot O
    RadicalCenter,        // RLA, N = 3: three-line intersection, inside the RI
    TestPoint,            // RLA, N > 3: a sampled radical-segment point
    CentroidFallback,     // RLA, N > 3: the centroid candidate won (or no segment)
    PairMidpointFallback, // RLA: midpoint of the max-separation pair
};

struct Estimate {
    Point point;
    Method method = Method::CA;
    Branch branch = Branch::Centroid;
    int test_point = 0; // 1-based index l, set only when branch == TestPoint
    double score = 0.0; // residual of `point` against the full anchor set
};

// Arithmetic mean of the anchor positions. Requires a non-empty set.
Estimate centroid_estimate(const AnchorSet& set);

// Radical line estimator. Dispatches on N = |set|:
//   N = 1  the anchor position itself
//   N = 2  the radical-line foot O (midpoint fallback for coincident centers)
//   N = 3  the radical center when it exists and lies inside every circle,
//          else the midpoint of the max-separation pair
//   N > 3  `test_points` samples on the max-separation pair's radical
//          segment, scored by residual against all anchors: the middle
//          zero-score sample when any sample reaches zero, else the best of
//          the samples and the centroid; the centroid alone when that pair's
//          circles do not properly intersect
// Requires a non-empty set and test_points >= 1.
Estimate rla_estimate(const AnchorSet& set, int test_points = 4);

} // namespace radloc
