#include "radloc/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "radloc/locate.hpp"
#include "radloc/rng.hpp"
#include "radloc/sim.hpp"
#include "radloc/testhooks.hpp"

namespace radloc {

namespace {

struct Rigid {
    double c = 1.0, s = 0.0, tx = 0.0, ty = 0.0;

    Point apply(Point p) const { return {c * p.x - s * p.y + tx, s * p.x + c * p.y + ty}; }
    Circle apply(const Circle& circle) const { return {apply(circle.center), circle.radius}; }
};

Rigid random_rigid(SplitMix64& rng) {
    const double angle = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    return {std::cos(angle), std::sin(angle), rng.uniform(-80.0, 80.0), rng.uniform(-80.0, 80.0)};
}

Point random_point(SplitMix64& rng) {
    return {rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
}

// Two circles guaranteed to properly intersect: |r1 - r2| < D < r1 + r2
// with margin on both sides.
std::pair<Circle, Circle> random_intersecting_pair(SplitMix64& rng) {
    Point p = random_point(rng);
    Point q = random_point(rng);
    double d = distance(p, q);
    while (d < 1.0) {
        q = random_point(rng);
        d = distance(p, q);
    }
    const double r1 = rng.uniform(0.55 * d, 1.5 * d);
    const double lo = std::abs(d - r1) + 0.02 * d;
    const double hi = d + r1 - 0.02 * d;
    const double r2 = rng.uniform(lo, hi);
    return {Circle{p, r1}, Circle{q, r2}};
}

double power(Point p, const Circle& c) {
    const double d = distance(p, c.center);
    return d * d - c.radius * c.radius;
}

AnchorSet random_anchor_set(SplitMix64& rng, int n) {
    AnchorSet set;
    set.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        set.push_back(Circle{random_point(rng), rng.uniform(5.0, 60.0)});
    }
    return set;
}

bool check_foot_power(SplitMix64& rng) {
    for (int i = 0; i < 2000; ++i) {
        const auto [c1, c2] = random_intersecting_pair(rng);
        const RadicalFoot f = radical_foot(c1, c2);
        const double d = distance(c1.center, c2.center);
        if (std::abs(power(f.foot, c1) - power(f.foot, c2)) > 1e-9 * (1.0 + d * d)) {
            return false;
        }
    }
    return true;
}

bool check_segment_on_circles(SplitMix64& rng) {
    for (int i = 0; i < 2000; ++i) {
        const auto [c1, c2] = random_intersecting_pair(rng);
        const RadicalSegment seg = radical_segment(c1, c2);
        for (const Point& endpoint : {seg.a, seg.b}) {
            if (std::abs(distance(endpoint, c1.center) - c1.radius) > 1e-9 ||
                std::abs(distance(endpoint, c2.center) - c2.radius) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

bool check_segment_perpendicular(SplitMix64& rng) {
    for (int i = 0; i < 2000; ++i) {
        const auto [c1, c2] = random_intersecting_pair(rng);
        const RadicalSegment seg = radical_segment(c1, c2);
        const Point chord = seg.b - seg.a;
        const Point axis = c2.center - c1.center;
        const double dot = chord.x * axis.x + chord.y * axis.y;
        const double d = distance(c1.center, c2.center);
        if (std::abs(dot) > 1e-9 * distance(seg.a, seg.b) * d) {
            return false;
        }
    }
    return true;
}

bool check_center_power(SplitMix64& rng) {
    for (int i = 0; i < 2000; ++i) {
        const Circle c1{random_point(rng), rng.uniform(5.0, 60.0)};
        const Circle c2{random_point(rng), rng.uniform(5.0, 60.0)};
        const Circle c3{random_point(rng), rng.uniform(5.0, 60.0)};
        const double scale = std::max(distance(c1.center, c2.center),
                                      std::max(distance(c1.center, c3.center),
                                               distance(c2.center, c3.center)));
        const double det = (c2.center.x - c1.center.x) * (c3.center.y - c1.center.y) -
                           (c2.center.y - c1.center.y) * (c3.center.x - c1.center.x);
        if (std::abs(det) <= 1e-3 * scale * scale) {
            continue; // too close to collinear to evaluate powers meaningfully
        }
        const auto center = radical_center(c1, c2, c3);
        if (!center) {
            continue;
        }
        const double tol = 1e-9 * scale * scale;
        const double p1 = power(*center, c1);
        if (std::abs(p1 - power(*center, c2)) > tol || std::abs(p1 - power(*center, c3)) > tol) {
            return false;
        }
    }
    return true;
}

bool check_sample_spacing(SplitMix64& rng) {
    for (int i = 0; i < 500; ++i) {
        const auto [c1, c2] = random_intersecting_pair(rng);
        const RadicalSegment seg = radical_segment(c1, c2);
        const auto points = sample_segment(seg, 7);
        const double first_gap = distance(seg.a, points[0]);
        for (std::size_t l = 1; l < points.size(); ++l) {
            const double gap = distance(points[l - 1], points[l]);
            if (std::abs(gap - first_gap) > 1e-12 * first_gap) {
                return false;
            }
        }
    }
    return true;
}

bool check_candidate_optimality(SplitMix64& rng) {
    for (int i = 0; i < 500; ++i) {
        const int n = 4 + static_cast<int>(rng.next() % 7);
        const AnchorSet set = random_anchor_set(rng, n);
        if (rla_estimate(set, 4).score > centroid_estimate(set).score) {
            return false;
        }
    }
    return true;
}

bool check_determinism(SplitMix64&) {
    ScenarioConfig cfg;
    cfg.num_sensors = 40;
    cfg.num_anchors = 12;
    cfg.num_trials = 6;
    cfg.doi = 0.1;
    cfg.mixed_ranges = true;
    const std::vector<int> values{10, 14};
    const auto serial = run_scenario(cfg, SweepParam::NumAnchors, values, 1);
    const auto again = run_scenario(cfg, SweepParam::NumAnchors, values, 1);
    const auto parallel = run_scenario(cfg, SweepParam::NumAnchors, values, 4);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        const auto bits = [](double v) {
            std::uint64_t u;
            std::memcpy(&u, &v, sizeof(u));
            return u;
        };
        for (const auto* other : {&again[i], &parallel[i]}) {
            if (bits(serial[i].errors.e_ca) != bits(other->errors.e_ca) ||
                bits(serial[i].errors.e_rla) != bits(other->errors.e_rla) ||
                bits(serial[i].errors.localized_fraction) !=
                    bits(other->errors.localized_fraction)) {
                return false;
            }
        }
    }
    return true;
}

bool check_equivariance(SplitMix64& rng) {
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng.next() % 8);
        const AnchorSet set = random_anchor_set(rng, n);
        const Rigid t = random_rigid(rng);
        AnchorSet moved;
        moved.reserve(set.size());
        for (const Circle& c : set) {
            moved.push_back(t.apply(c));
        }
        for (const bool use_rla : {false, true}) {
            const Estimate base = use_rla ? rla_estimate(set, 4) : centroid_estimate(set);
            const Estimate after = use_rla ? rla_estimate(moved, 4) : centroid_estimate(moved);
            const Point expect = t.apply(base.point);
            if (std::abs(after.point.x - expect.x) > 1e-9 ||
                std::abs(after.point.y - expect.y) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool run_verify(std::ostream& out, const VerifyOptions& options) {
    testhooks::flip_radical_foot_sign = options.inject_fault;

    struct Check {
        const char* name;
        std::function<bool(SplitMix64&)> run;
    };
    const std::vector<Check> checks{
        {"radical_foot power equality", check_foot_power},
        {"radical_segment endpoints on both circles", check_segment_on_circles},
        {"radical_segment perpendicular to center line", check_segment_perpendicular},
        {"radical_center power equality", check_center_power},
        {"sample_segment even spacing", check_sample_spacing},
        {"candidate optimality", check_candidate_optimality},
        {"scenario determinism (serial == parallel)", check_determinism},
        {"rigid-motion equivariance", check_equivariance},
    };

    const auto start = std::chrono::steady_clock::now();
    bool all_ok = true;
    for (const Check& check : checks) {
        SplitMix64 rng(options.seed);
        bool ok = false;
        std::string note;
        try {
            ok = check.run(rng);
        } catch (const std::exception& e) {
            note = std::string("  (") + e.what() + ")";
        }
        out << (ok ? "PASS " : "FAIL ") << check.name << note << "\n";
        all_ok = all_ok && ok;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > 60.0) {
        out << "WARN suite took " << elapsed << " s (budget 60 s)\n";
    }

    testhooks::flip_radical_foot_sign = false;
    return all_ok;
}

} // namespace radloc
