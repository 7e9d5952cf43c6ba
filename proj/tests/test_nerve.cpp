#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "pathtri/nerve.hpp"

using namespace pathtri;
namespace pt = pathtri::testing;

TEST_CASE("nerve_at") {
    SUBCASE("single triangle") {
        const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 2}, {2, 0}});
        for (VertexId v = 0; v < 3; ++v) {
            const auto nrv = nerve_at(t, v);
            CHECK(nrv.nucleus == v);
            CHECK(nrv.triangles.size() == 1);
        }
        CHECK_THROWS_AS(nerve_at(t, 3), std::invalid_argument);
    }
    SUBCASE("hexagon fan center holds 6 triangles") {
        const auto t = pt::hexagon_fan();
        CHECK(nerve_at(t, 0).triangles.size() == 6);
    }
    SUBCASE("square: the tie-break diagonal endpoint holds 2 triangles") {
        const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        CHECK(nerve_at(t, 0).triangles.size() == 2);
        CHECK(nerve_at(t, 1).triangles.size() == 1);
    }
}

TEST_CASE("nerve triangles all contain the nucleus") {
    const auto t = triangulate(pt::random_points(25, 4004));
    for (const Nerve& nrv : nerve_census(t)) {
        CHECK_FALSE(nrv.triangles.empty());
        for (int ti : nrv.triangles) {
            const auto ids = t.triangles[ti].vertex_ids();
            CHECK((ids[0] == nrv.nucleus || ids[1] == nrv.nucleus || ids[2] == nrv.nucleus));
        }
    }
}

TEST_CASE("nerve census: one nerve per vertex") {
    SUBCASE("three points give three nerves") {
        const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 2}, {2, 0}});
        CHECK(nerve_census(t).size() == 3);
    }
    SUBCASE("random instance, nuclei pairwise distinct") {
        const auto t = triangulate(pt::random_points(25, 12021));
        const auto census = nerve_census(t);
        CHECK(census.size() == 25);
        std::set<VertexId> nuclei;
        for (const Nerve& nrv : census) {
            CHECK_FALSE(nrv.triangles.empty());
            nuclei.insert(nrv.nucleus);
        }
        CHECK(nuclei.size() == 25);
    }
}

TEST_CASE("maximal nucleus complex") {
    SUBCASE("hexagon fan picks the center") {
        const auto nrv = maximal_nucleus_complex(pt::hexagon_fan());
        CHECK(nrv.nucleus == 0);
        CHECK(nrv.triangles.size() == 6);
    }
    SUBCASE("single triangle tie-break takes the smallest id") {
        const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 2}, {2, 0}});
        CHECK(maximal_nucleus_complex(t).nucleus == 0);
    }
    SUBCASE("fish complex nucleus is p") {
        const auto nrv = maximal_nucleus_complex(pt::fish_complex());
        CHECK(nrv.nucleus == 6);
        CHECK(nrv.triangles.size() == 6);
    }
    SUBCASE("MNC size dominates every nerve") {
        const auto t = triangulate(pt::random_points(30, 660));
        const auto mnc = maximal_nucleus_complex(t);
        for (const Nerve& nrv : nerve_census(t))
            CHECK(mnc.triangles.size() >= nrv.triangles.size());
    }
}

TEST_CASE("check_good_cover accepts triangulate output") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto t = triangulate(pt::random_points(4 + static_cast<int>(seed) * 5,
                                                     9090 + seed));
        const auto rep = check_good_cover(t);
        CAPTURE(seed);
        CHECK(rep.covers);
        CHECK(rep.intersections_ok);
        CHECK(rep.good_cover());
        CHECK(rep.nerve_count == t.vertex_count());
        CHECK_FALSE(rep.witness.has_value());
        CHECK(rep.sampled_points == 10000);
        CHECK(rep.sampled_points_covered == 10000);
    }
}

TEST_CASE("single triangle is a good cover; global intersection is itself") {
    const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 2}, {2, 0}});
    const auto rep = check_good_cover(t);
    CHECK(rep.good_cover());
    CHECK(rep.global_intersection == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("star-shaped complexes record the nucleus as global intersection") {
    const auto rep = check_good_cover(pt::hexagon_fan());
    CHECK(rep.good_cover());
    CHECK(rep.global_intersection == std::vector<VertexId>{0});
}

TEST_CASE("adversarial overlapping triangles fail with a witness") {
    // two triangles overlapping in a 2D region, no shared vertices
    const auto bad = pt::build_manual_triangulation(
        {{0, 0}, {4, 0}, {2, 3}, {0.5, 1}, {3.5, 1}, {2, -2}},
        {{0, 1, 2}, {3, 4, 5}});
    const auto rep = check_good_cover(bad);
    CHECK_FALSE(rep.intersections_ok);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->first == 0);
    CHECK(rep.witness->second == 1);

    // oracle: polygon intersection area is clearly positive
    const auto a = bad.triangles[0].vertex_points();
    const auto b = bad.triangles[1].vertex_points();
    CHECK(convex_intersection_area(std::span<const Point2>(a.data(), 3),
                                   std::span<const Point2>(b.data(), 3)) > 1e-6);
}

TEST_CASE("a shared edge between two triangles stays contractible") {
    const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto rep = check_good_cover(t);
    CHECK(rep.intersections_ok);
}
