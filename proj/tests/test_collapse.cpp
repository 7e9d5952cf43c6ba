#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "pathtri/collapse.hpp"
#include "pathtri/cycles.hpp"

using namespace pathtri;
namespace pt = pathtri::testing;

namespace {

const ConeSpec kCone{{2, 3}, {0, 1}, {4, 1}};

/// Perpendicular-foot oracle: station fractions (i+1)/(m+1) along the
/// base, fiber direction orthogonal to it.
Point2 station_oracle(const ConeSpec& spec, int i, int m) {
    const double s = static_cast<double>(i + 1) / (m + 1);
    return spec.base_b + s * (spec.base_c - spec.base_b);
}

}  // namespace

TEST_CASE("collapse_cone fibers sit at uniform perpendicular stations") {
    const auto trace = collapse_cone(kCone, 2);
    REQUIRE(trace.fibers.size() == 2);
    // base (0,1)-(4,1) with m = 2: feet at x = 4/3 and x = 8/3, vertical
    CHECK(trace.fibers[0].samples.back().x == doctest::Approx(4.0 / 3.0));
    CHECK(trace.fibers[0].samples.back().y == doctest::Approx(1.0));
    CHECK(trace.fibers[1].samples.back().x == doctest::Approx(8.0 / 3.0));

    const Point2 base_dir = kCone.base_c - kCone.base_b;
    for (int i = 0; i < 2; ++i) {
        const auto& f = trace.fibers[i];
        const Point2 oracle_foot = station_oracle(kCone, i, 2);
        CHECK(distance(f.samples.back(), oracle_foot) < 1e-12);
        // fiber direction has zero dot product with the base chord
        const Point2 d = f.samples.front() - f.samples.back();
        CHECK(std::abs(dot(d, base_dir)) < kEpsilon * norm(base_dir) * norm(d) + 1e-15);
        // endpoint 0 on the non-base boundary, endpoint 1 on the base
        CHECK(f.samples.back().y == doctest::Approx(1.0));
        CHECK(f.samples.front().y > 1.0);
    }
}

TEST_CASE("collapse_cone analytic bound |bc|/m") {
    const auto trace = collapse_cone(kCone, 1000);
    CHECK(trace.hausdorff_bound <= 4.0 / 1000.0);
    CHECK(trace.fibers.size() == 1000);
}

TEST_CASE("collapse_cone rejects degenerate specs") {
    CHECK_THROWS_AS(collapse_cone({{2, 1}, {0, 1}, {4, 1}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(collapse_cone(kCone, 1), std::invalid_argument);
}

TEST_CASE("doubling fibers never increases the measured bound") {
    double prev = std::numeric_limits<double>::infinity();
    for (int m : {5, 10, 20, 40, 80, 160}) {
        const auto trace = collapse_cone(kCone, m);
        CHECK(trace.hausdorff_bound <= prev);
        prev = trace.hausdorff_bound;
    }
}

TEST_CASE("random interior points fall within |bc|/m of the fiber union") {
    pt::Rng rng(2024);
    for (int iter = 0; iter < 5; ++iter) {
        // apex over the middle half of the base, moderate height
        const double len = rng.uniform(2.0, 6.0);
        const ConeSpec spec{{rng.uniform(0.3, 0.7) * len, rng.uniform(0.2, 0.4) * len},
                            {0, 0},
                            {len, 0}};
        const int m = 64;
        const auto trace = collapse_cone(spec, m);
        REQUIRE(trace.hausdorff_bound <= len / m);
        for (int k = 0; k < 2000; ++k) {
            // uniform barycentric sample
            double u = rng.unit(), v = rng.unit();
            if (u + v > 1) {
                u = 1 - u;
                v = 1 - v;
            }
            const Point2 q = spec.apex + u * (spec.base_b - spec.apex) +
                             v * (spec.base_c - spec.apex);
            double best = std::numeric_limits<double>::infinity();
            for (const auto& f : trace.fibers)
                best = std::min(best,
                                point_segment_distance(q, f.samples.front(), f.samples.back()));
            REQUIRE(best <= len / m);
        }
    }
}

TEST_CASE("collapse_cone_to_path_triangle") {
    const auto [trace, tri] = collapse_cone_to_path_triangle(kCone, 8, 16);
    // v1 = b, v2 = apex, v3 = c with the boundary identities of a path triangle
    CHECK(tri.vertex_points()[0] == kCone.base_b);
    CHECK(tri.vertex_points()[1] == kCone.apex);
    CHECK(tri.vertex_points()[2] == kCone.base_c);
    CHECK(tri.paths[0].start == tri.paths[2].end);
    CHECK(tri.paths[0].end == tri.paths[1].start);
    CHECK(tri.paths[1].end == tri.paths[2].start);
    CHECK(validate_cycle(boundary_cycle(tri)).empty());

    SUBCASE("S=2 boundary equals the residual triangle") {
        const auto [t2, tri2] = collapse_cone_to_path_triangle(kCone, 4, 2);
        for (const auto& p : tri2.paths) CHECK(p.sample_count() == 2);
        CHECK(tri2.vertex_points()[0] == t2.residual[1]);
        CHECK(tri2.vertex_points()[1] == t2.residual[0]);
        CHECK(tri2.vertex_points()[2] == t2.residual[2]);
    }
}

TEST_CASE("collapse_sphere produces a round path triangle on the circle") {
    // circle parameterization oracle: vertices at 90, 210, 330 degrees of
    // the circle centered (2,2) radius 1.4 form an equilateral round
    // triangle with 120-degree arcs
    const auto spec = sphere_from_angles({2, 2}, 1.4, {90, 210, 330});
    const auto [trace, tri] = collapse_sphere(spec, 16, 9);
    CHECK(tri.kind == TriangleKind::round);

    for (const auto& path : tri.paths) {
        for (const Point2& s : path.samples)
            CHECK(std::abs(distance(s, spec.center) - spec.radius) <= 1e-9);
        // central angle spanned by the arc is 120 degrees
        const Point2 a = path.start_point() - spec.center;
        const Point2 b = path.end_point() - spec.center;
        const double angle = std::atan2(cross(a, b), dot(a, b));
        CHECK(std::abs(angle) == doctest::Approx(2.0 * 3.14159265358979323846 / 3.0));
    }
    CHECK(validate_cycle(boundary_cycle(tri)).empty());

    SUBCASE("S=3 arc midpoint stays at radius distance") {
        const auto [t3, tri3] = collapse_sphere(spec, 4, 3);
        for (const auto& path : tri3.paths)
            CHECK(std::abs(distance(path.samples[1], spec.center) - spec.radius) <= 1e-9);
    }
}

TEST_CASE("collapse_sphere rejects bad specs") {
    const auto off = SphereSpec{{0, 0}, 1.0, {{{1, 0}, {0, 1}, {0.5, 0.5}}}};
    CHECK_THROWS_AS(collapse_sphere(off, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(collapse_sphere(sphere_from_angles({0, 0}, 1, {0, 180, 90}), 4, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(collapse_sphere(sphere_from_angles({0, 0}, 1, {0, 0, 90}), 4, 5),
                    std::invalid_argument);
}

TEST_CASE("elementary collapse of a single triangle") {
    const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 2}, {2, 0}});
    const auto seq = elementary_collapse_sequence(t);
    REQUIRE(seq.steps.size() == 3);  // 1 face step + 2 vertex steps
    CHECK(seq.steps[0].kind == StepKind::face);
    CHECK(seq.steps[1].kind == StepKind::vertex);
    CHECK(seq.steps[2].kind == StepKind::vertex);
    CHECK(seq.terminal_vertex == 0);

    const auto snaps = replay_collapse(t, seq);
    REQUIRE(snaps.size() == 4);
    CHECK(snaps.front().faces.size() == 1);
    CHECK(snaps.back().faces.empty());
    CHECK(snaps.back().edges.empty());
    CHECK(snaps.back().vertices == std::set<VertexId>{0});
}

TEST_CASE("elementary collapse of the square complex") {
    // hand enumeration: 2 face steps then 3 vertex steps
    const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto seq = elementary_collapse_sequence(t);
    REQUIRE(seq.steps.size() == 5);
    int face_steps = 0, vertex_steps = 0;
    for (const auto& s : seq.steps)
        (s.kind == StepKind::face ? face_steps : vertex_steps) += 1;
    CHECK(face_steps == 2);
    CHECK(vertex_steps == 3);
    CHECK(seq.terminal_vertex == 0);
    // every step is verified free by the replay
    const auto snaps = replay_collapse(t, seq);
    CHECK(snaps.back().vertices == std::set<VertexId>{0});
}

TEST_CASE("every step shrinks the complex by exactly two cells") {
    const auto t = triangulate(pt::convex_position_points(5));
    const auto seq = elementary_collapse_sequence(t);
    const auto snaps = replay_collapse(t, seq);
    for (std::size_t i = 1; i < snaps.size(); ++i) {
        const auto cells = [](const ComplexSnapshot& s) {
            return s.faces.size() + s.edges.size() + s.vertices.size();
        };
        CHECK(cells(snaps[i - 1]) - cells(snaps[i]) == 2);
    }
}

TEST_CASE("convex-position triangulations collapse to a vertex (100 seeds)") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto pts = pt::convex_position_points(seed);
        REQUIRE(pts.size() >= 4);
        const auto t = triangulate(pts);
        const auto seq = elementary_collapse_sequence(t);
        CAPTURE(seed);
        const auto snaps = replay_collapse(t, seq);  // throws if any step is not free
        REQUIRE(snaps.back().vertices.size() == 1);
        REQUIRE(snaps.back().edges.empty());
        REQUIRE(snaps.back().faces.empty());
        REQUIRE(*snaps.back().vertices.begin() == seq.terminal_vertex);
    }
}

TEST_CASE("annulus reports a stuck complex instead of guessing") {
    // outer triangle with an inner triangular hole: faces peel away, then
    // the inner boundary cycle has no free pair
    const auto ring = pt::build_manual_triangulation(
        {{0, 0}, {8, 0}, {4, 7}, {3, 2}, {5, 2}, {4, 3.8}},
        {{0, 1, 3}, {1, 4, 3}, {1, 2, 4}, {2, 5, 4}, {0, 3, 5}, {2, 0, 5}});
    CHECK_THROWS_AS(elementary_collapse_sequence(ring), CollapseStuck);
}

TEST_CASE("tampered sequences fail replay validation") {
    const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto seq = elementary_collapse_sequence(t);
    std::swap(seq.steps[0], seq.steps[4]);
    CHECK_THROWS_AS(replay_collapse(t, seq), std::invalid_argument);
}
