#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "radloc/errors.hpp"
#include "radloc/locate.hpp"
#include "test_support.hpp"

using namespace radloc;
using namespace testsupport;

TEST_CASE("centroid_estimate is the anchor mean") {
    const AnchorSet three{{{0, 0}, 7}, {{2, 0}, 3}, {{4, 6}, 11}};
    const Estimate e = centroid_estimate(three);
    CHECK(point_near(e.point, {2, 2}, 1e-12));
    CHECK(e.method == Method::CA);
    CHECK(e.branch == Branch::Centroid);
    CHECK(e.score == residual(e.point, three));

    CHECK(point_near(centroid_estimate({{{5, 5}, 1}}).point, {5, 5}, 1e-12));
    const AnchorSet square{{{0, 0}, 1}, {{10, 0}, 1}, {{0, 10}, 1}, {{10, 10}, 1}};
    CHECK(point_near(centroid_estimate(square).point, {5, 5}, 1e-12));

    CHECK_THROWS_AS(centroid_estimate(AnchorSet{}), PreconditionError);
}

TEST_CASE("rla N=1 returns the sole anchor") {
    const Estimate e = rla_estimate({{{5, 5}, 20}});
    CHECK(point_near(e.point, {5, 5}, 1e-12));
    CHECK(e.method == Method::RLA);
    CHECK(e.branch == Branch::SingleAnchor);
}

TEST_CASE("rla N=2 returns the radical-line foot") {
    const Estimate e = rla_estimate({{{0, 0}, 5}, {{6, 0}, 5}});
    CHECK(point_near(e.point, {3, 0}, 1e-12));
    CHECK(e.branch == Branch::TwoCircleFoot);

    // Foot exists even when the circles do not intersect.
    const Estimate apart = rla_estimate({{{0, 0}, 1}, {{10, 0}, 2}});
    CHECK(apart.branch == Branch::TwoCircleFoot);
    CHECK(near(apart.point.y, 0.0, 1e-12));

    // Coincident centers: no radical line, midpoint fallback.
    const Estimate coincident = rla_estimate({{{1, 1}, 2}, {{1, 1}, 5}});
    CHECK(point_near(coincident.point, {1, 1}, 1e-12));
    CHECK(coincident.branch == Branch::PairMidpointFallback);
}

TEST_CASE("rla N=3 radical center inside the intersection region") {
    const AnchorSet set{{{0, 0}, 3}, {{4, 0}, 3}, {{0, 4}, 3}};
    const Estimate e = rla_estimate(set);
    CHECK(point_near(e.point, {2, 2}, 1e-12));
    CHECK(e.branch == Branch::RadicalCenter);
    CHECK(e.score == 0.0);
}

TEST_CASE("rla N=3 collinear centers fall back to the widest pair midpoint") {
    const AnchorSet set{{{0, 0}, 3}, {{2, 0}, 3}, {{6, 0}, 5}};
    // Oracle: the determinant of the radical-line system vanishes...
    const double det = (2.0 - 0.0) * (0.0 - 0.0) - (0.0 - 0.0) * (6.0 - 0.0);
    CHECK(det == 0.0);
    // ...and exhaustive pair distances say (0, 2) is the widest pair.
    CHECK(oracle_max_pair(set) == std::pair<std::size_t, std::size_t>{0, 2});

    const Estimate e = rla_estimate(set);
    CHECK(point_near(e.point, {3, 0}, 1e-12));
    CHECK(e.branch == Branch::PairMidpointFallback);
}

TEST_CASE("rla N=3 radical center outside the region falls back") {
    // Well-separated unit circles: the radical center exists but is far
    // outside every circle.
    const AnchorSet set{{{0, 0}, 1}, {{10, 0}, 1}, {{5, 8}, 1}};
    const Estimate e = rla_estimate(set);
    CHECK(e.branch == Branch::PairMidpointFallback);
    CHECK(point_near(e.point, {5, 0}, 1e-12));
}

TEST_CASE("rla N=4 selects the best-scoring candidate") {
    const AnchorSet set{{{0, 0}, 45}, {{60, 0}, 45}, {{30, 25}, 45}, {{30, -25}, 45}};
    const int test_points = 4;
    const Estimate e = rla_estimate(set, test_points);

    // Oracle: rebuild the candidate list (4 samples on the widest pair's
    // radical segment, then the centroid) and score each independently.
    CHECK(oracle_max_pair(set) == std::pair<std::size_t, std::size_t>{0, 1});
    const RadicalSegment seg = radical_segment(set[0], set[1]);
    std::vector<Point> candidates = sample_segment(seg, test_points);
    double cx = 0.0, cy = 0.0;
    for (const Circle& c : set) {
        cx += c.center.x;
        cy += c.center.y;
    }
    candidates.push_back({cx / 4.0, cy / 4.0});

    std::vector<double> scores;
    for (const Point& p : candidates) {
        scores.push_back(oracle_residual(p, set));
    }
    const std::size_t best =
        static_cast<std::size_t>(std::min_element(scores.begin(), scores.end()) - scores.begin());
    CHECK(near(e.score, scores[best], 1e-12));
    CHECK(point_near(e.point, candidates[best], 1e-12));
    // This geometry has a zero-score test point, which wins outright.
    CHECK(e.branch == Branch::TestPoint);
    CHECK(e.score == 0.0);
}

TEST_CASE("rla N>3 with a disjoint widest pair returns the centroid") {
    const AnchorSet set{{{0, 0}, 1}, {{100, 0}, 1}, {{0, 100}, 1}, {{100, 100}, 1}};
    const Estimate e = rla_estimate(set);
    CHECK(e.branch == Branch::CentroidFallback);
    CHECK(point_near(e.point, {50, 50}, 1e-12));
    CHECK(near(e.score, centroid_estimate(set).score, 1e-15));
}

TEST_CASE("property: rla never scores worse than the centroid for N > 3") {
    SplitMix64 rng(201);
    for (int i = 0; i < 1000; ++i) {
        const int n = 4 + static_cast<int>(rng.next() % 7);
        const AnchorSet set = random_anchor_set(rng, n);
        const Estimate rla = rla_estimate(set);
        const Estimate ca = centroid_estimate(set);
        REQUIRE(rla.score <= ca.score);
    }
}

TEST_CASE("property: zero score means the point satisfies every range constraint") {
    SplitMix64 rng(202);
    int zero_scores = 0;
    for (int i = 0; i < 500; ++i) {
        const int n = 2 + static_cast<int>(rng.next() % 7);
        // Anchors all within range of a common point: non-empty region.
        const Point truth = random_point(rng, 20.0, 80.0);
        AnchorSet set;
        for (int k = 0; k < n; ++k) {
            const Point a = random_point(rng);
            set.push_back({a, oracle_distance(a, truth) + rng.uniform(0.5, 20.0)});
        }
        const Estimate e = rla_estimate(set);
        if (e.score == 0.0) {
            ++zero_scores;
            REQUIRE(oracle_inside_all(e.point, set));
        }
    }
    CHECK(zero_scores > 100); // the branch under test must actually fire
}

TEST_CASE("property: test points with zero residual certified by grid search") {
    SplitMix64 rng(203);
    int certified = 0;
    for (int i = 0; i < 100; ++i) {
        // Ground truth on the 0.1 m grid so certification always succeeds.
        const Point truth{0.1 * static_cast<double>(20 + rng.next() % 60),
                          0.1 * static_cast<double>(20 + rng.next() % 60)};
        const int n = 4 + static_cast<int>(rng.next() % 4);
        AnchorSet set;
        for (int k = 0; k < n; ++k) {
            const Point a = random_point(rng, 0.0, 10.0);
            set.push_back({a, oracle_distance(a, truth) + rng.uniform(0.2, 3.0)});
        }
        const auto grid_point = grid_zero_residual_point(set, 0.0, 0.0, 10.0, 10.0, 0.1);
        REQUIRE(grid_point.has_value());
        ++certified;

        const Estimate e = rla_estimate(set);
        if (e.branch == Branch::TestPoint && e.score == 0.0) {
            REQUIRE(residual(e.point, set) == 0.0);
            REQUIRE(oracle_inside_all(e.point, set));
        }
    }
    CHECK(certified == 100);
}

TEST_CASE("property: estimators commute with rigid motions") {
    SplitMix64 rng(204);
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + static_cast<int>(rng.next() % 8);
        const AnchorSet set = random_anchor_set(rng, n);
        const Rigid t = random_rigid(rng);
        const AnchorSet moved = t.apply(set);

        const Estimate ca = centroid_estimate(set);
        const Estimate ca_moved = centroid_estimate(moved);
        REQUIRE(point_near(ca_moved.point, t.apply(ca.point), 1e-9));

        const Estimate rla = rla_estimate(set);
        const Estimate rla_moved = rla_estimate(moved);
        REQUIRE(point_near(rla_moved.point, t.apply(rla.point), 1e-9));
    }
}

TEST_CASE("property: permutations preserve the estimates") {
    SplitMix64 rng(205);
    for (int i = 0; i < 200; ++i) {
        const int n = 5 + static_cast<int>(rng.next() % 4);
        AnchorSet set = random_anchor_set(rng, n);
        const auto [pi, pj] = oracle_max_pair(set);

        const Estimate ca = centroid_estimate(set);
        const Estimate rla = rla_estimate(set);

        // The centroid ignores order entirely.
        AnchorSet reversed(set.rbegin(), set.rend());
        REQUIRE(point_near(centroid_estimate(reversed).point, ca.point, 1e-9));

        // rla's contract covers permutations that preserve the
        // max-separation outcome: keep the widest pair in place and reverse
        // the remaining anchors.
        AnchorSet shuffled = set;
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < set.size(); ++k) {
            if (k != pi && k != pj) {
                rest.push_back(k);
            }
        }
        for (std::size_t a = 0, b = rest.size() - 1; a < b; ++a, --b) {
            std::swap(shuffled[rest[a]], shuffled[rest[b]]);
        }
        REQUIRE(point_near(centroid_estimate(shuffled).point, ca.point, 1e-9));
        REQUIRE(point_near(rla_estimate(shuffled).point, rla.point, 1e-9));
    }
}

TEST_CASE("determinism: identical inputs give bit-identical estimates") {
    SplitMix64 rng(206);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng.next() % 9);
        const AnchorSet set = random_anchor_set(rng, n);
        const Estimate a = rla_estimate(set);
        const Estimate b = rla_estimate(set);
        REQUIRE(a.point == b.point);
        REQUIRE(a.score == b.score);
        REQUIRE(a.branch == b.branch);
        REQUIRE(a.test_point == b.test_point);
    }
}

TEST_CASE("estimate scores are self-consistent with residual") {
    SplitMix64 rng(207);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng.next() % 9);
        const AnchorSet set = random_anchor_set(rng, n);
        const Estimate rla = rla_estimate(set);
        const Estimate ca = centroid_estimate(set);
        REQUIRE(rla.score == residual(rla.point, set));
        REQUIRE(ca.score == residual(ca.point, set));
    }
}

TEST_CASE("rla rejects empty sets and bad sample counts") {
    CHECK_THROWS_AS(rla_estimate(AnchorSet{}), PreconditionError);
    CHECK_THROWS_AS(rla_estimate({{{0, 0}, 1}}, 0), PreconditionError);
}
