#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "pathtri/nerve.hpp"
#include "pathtri/presentation.hpp"

using namespace pathtri;
namespace pt = pathtri::testing;

namespace {

PathCycle polygon_cycle(int n) {
    std::vector<Point2> table;
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * 3.14159265358979323846 * i / n;
        table.push_back({std::cos(a), std::sin(a)});
    }
    std::vector<SampledPath> paths;
    for (int i = 0; i < n; ++i) paths.push_back(make_path(table, i, (i + 1) % n, {}, 4));
    return make_path_cycle(std::move(paths), 0);
}

Word single_term(long long k, VertexId g) {
    Word w;
    w.terms = {WordTerm{k, g}};
    return w;
}

}  // namespace

TEST_CASE("present_cycle relations walk out from the generator") {
    const auto c = polygon_cycle(3);
    const auto p = present_cycle(c, 0);
    REQUIRE(p.basis.size() == 1);
    CHECK(p.generator() == c.vertex_at(0));
    REQUIRE(p.relations.size() == 3);
    // relations {v0: 0g, v1: 1g, v2: 2g}
    for (int k = 0; k < 3; ++k) {
        const VertexId v = c.vertex_at(k);
        REQUIRE(p.relations.count(v) == 1);
        CHECK(p.relations.at(v).terms.front().coefficient == k);
    }
    // evaluating the relation of v2 is the same as walking 2 from g
    CHECK(evaluate_word(p, p.relations.at(c.vertex_at(2))) == walk(c, 0, 2));
    CHECK_THROWS_AS(present_cycle(c, 5), std::invalid_argument);
    CHECK_THROWS_AS(present_cycle(c, -1), std::invalid_argument);
}

TEST_CASE("present_triangulation distances via the witness walk") {
    SUBCASE("single triangle from v1") {
        const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 2}, {2, 0}});
        const auto p = present_triangulation(t, 0);
        CHECK(p.relations.at(0).terms.front().coefficient == 0);
        CHECK(p.relations.at(1).terms.front().coefficient == 1);
        CHECK(p.relations.at(2).terms.front().coefficient == 1);
    }
    SUBCASE("fish complex presents from its nucleus p") {
        const auto fish = pt::fish_complex();
        const VertexId p_vertex = maximal_nucleus_complex(fish).nucleus;
        CHECK(p_vertex == 6);
        const auto pres = present_triangulation(fish, p_vertex);
        CHECK(pres.basis == std::vector<VertexId>{6});  // G({p}, +)
        CHECK(pres.relations.size() == static_cast<std::size_t>(fish.vertex_count()));
        for (const auto& [v, word] : pres.relations)
            CHECK(evaluate_word(pres, word) == v);
    }
    SUBCASE("unknown generator throws") {
        const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 2}, {2, 0}});
        CHECK_THROWS_AS(present_triangulation(t, 17), std::invalid_argument);
    }
}

TEST_CASE("evaluate_word semantics") {
    const auto c = polygon_cycle(3);
    const auto p = present_cycle(c, 0);
    const VertexId g = p.generator();

    SUBCASE("kg + k'g composes moves") {
        Word w;
        w.terms = {WordTerm{1, g}, WordTerm{1, g}};
        CHECK(evaluate_word(p, w) == c.vertex_at(2));
        CHECK(evaluate_word(p, w) == move_add(c, 0, 1, 1));
    }
    SUBCASE("empty word is the generator") {
        CHECK(evaluate_word(p, Word{}) == g);
    }
    SUBCASE("coefficients wrap mod n") {
        const auto c5 = polygon_cycle(5);
        const auto p5 = present_cycle(c5, 0);
        CHECK(evaluate_word(p5, single_term(7, p5.generator())) == c5.vertex_at(2));
    }
    SUBCASE("foreign generator is rejected") {
        CHECK_THROWS_AS(evaluate_word(p, single_term(1, 999)), std::invalid_argument);
    }
    SUBCASE("free-group additivity on cycle carriers") {
        for (int n = 3; n <= 8; ++n) {
            const auto cn = polygon_cycle(n);
            const auto pn = present_cycle(cn, 0);
            const VertexId gn = pn.generator();
            for (long long k = 0; k < 2 * n; ++k) {
                CHECK(evaluate_word(pn, single_term(k, gn)) == walk(cn, 0, k));
                for (long long kp = 0; kp < n; ++kp) {
                    Word two;
                    two.terms = {WordTerm{k, gn}, WordTerm{kp, gn}};
                    CHECK(evaluate_word(pn, two) ==
                          evaluate_word(pn, single_term(k + kp, gn)));
                }
            }
        }
    }
}

TEST_CASE("complex-carrier words replay witnesses and catch overruns") {
    const auto t = triangulate(pt::random_points(12, 808));
    const auto p = present_triangulation(t, 0);
    for (const auto& [v, word] : p.relations) CHECK(evaluate_word(p, word) == v);

    // overrun: more steps than the witness has
    Word bad = p.relations.rbegin()->second;
    bad.terms.front().coefficient += static_cast<long long>(t.vertex_count());
    CHECK_THROWS_AS(evaluate_word(p, bad), std::domain_error);
}

TEST_CASE("build_homotopy_system shapes") {
    SUBCASE("single triangle: one full presentation plus 3 stars") {
        const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 2}, {2, 0}});
        const auto sys = build_homotopy_system(t);
        CHECK(sys.stars.size() == 3);
        CHECK(sys.full.relations.size() == 3);
        CHECK(validate_system(sys).empty());
    }
    SUBCASE("hexagon fan: generated by the center, 7 stars") {
        const auto t = pt::hexagon_fan();
        const auto sys = build_homotopy_system(t);
        CHECK(sys.full.generator() == 0);  // center is the maximal nucleus
        CHECK(sys.stars.size() == 7);
        CHECK(validate_system(sys).empty());
        // the center's star is the whole fan
        CHECK(sys.stars.at(0).relations.size() == 7);
    }
}

TEST_CASE("realize_system") {
    SUBCASE("single triangle realization") {
        const auto t = triangulate(std::vector<Point2>{{0, 0}, {1, 2}, {2, 0}});
        const auto rep = realize_system(build_homotopy_system(t));
        CHECK(rep.ok);
        CHECK(rep.full_vertices_checked == 3);
        CHECK(rep.full_vertices_hit == 3);
        CHECK(rep.cycles_recovered == 1);
        CHECK(rep.triangle_count == 1);
        CHECK(rep.defects.empty());
    }
    SUBCASE("random instance recovers every boundary cycle") {
        const auto t = triangulate(pt::random_points(20, 1999));
        const auto rep = realize_system(build_homotopy_system(t));
        CHECK(rep.ok);
        CHECK(rep.vertices_hit == rep.vertices_checked);
        CHECK(rep.cycles_recovered == t.triangle_count());
    }
    SUBCASE("fault injection: corrupted coefficient is detected") {
        const auto t = triangulate(pt::random_points(10, 555));
        auto sys = build_homotopy_system(t);
        // pick a non-generator relation and damage its coefficient
        for (auto& [v, word] : sys.full.relations) {
            if (v == sys.full.generator()) continue;
            word.terms.front().coefficient += 1;
            break;
        }
        const auto rep = realize_system(sys);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.defects.empty());
    }
}

TEST_CASE("round trip: every relation of every carrier evaluates to its key") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto t = triangulate(pt::random_points(14, 7700 + seed));
        const auto sys = build_homotopy_system(t);
        for (const auto& [v, word] : sys.full.relations)
            REQUIRE(evaluate_word(sys.full, word) == v);
        for (const auto& [s, pres] : sys.stars)
            for (const auto& [v, word] : pres.relations)
                REQUIRE(evaluate_word(pres, word) == v);
        REQUIRE(sys.full.relations.size() ==
                static_cast<std::size_t>(t.vertex_count()));
    }
}
