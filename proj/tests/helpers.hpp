#ifndef PATHTRI_TEST_HELPERS_HPP
#define PATHTRI_TEST_HELPERS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "pathtri/triangulation.hpp"

namespace pathtri::testing {

// -- deterministic RNG (splitmix64), independent of <random> ----------------

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline std::vector<Point2> random_points(int n, std::uint64_t seed, double lo = 0.0,
                                         double hi = 100.0) {
    Rng rng(seed);
    std::vector<Point2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = rng.uniform(lo, hi);
        const double y = rng.uniform(lo, hi);
        pts.push_back({x, y});
    }
    return pts;
}

/// Convex-position point set with 4..20 vertices: hull of a random cloud,
/// retried deterministically until the hull is large enough.
inline std::vector<Point2> convex_position_points(std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        const int cloud = 6 + static_cast<int>((seed + 7 * attempt) % 30);
        const auto pts = random_points(cloud, seed * 977 + attempt * 131 + 13);
        const auto hull = convex_hull_indices(pts);
        if (hull.size() < 4 || hull.size() > 20) continue;
        std::vector<Point2> out;
        out.reserve(hull.size());
        for (int i : hull) out.push_back(pts[i]);
        return out;
    }
}

// -- independent oracles -----------------------------------------------------

/// Barycentric strict point-in-triangle, written directly from the
/// coordinate solve (not via orientation predicates).
inline bool barycentric_strictly_inside(Point2 q, Point2 a, Point2 b, Point2 c,
                                        double tol = 1e-12) {
    const double det = (b.y - c.y) * (a.x - c.x) + (c.x - b.x) * (a.y - c.y);
    if (det == 0.0) return false;
    const double l1 = ((b.y - c.y) * (q.x - c.x) + (c.x - b.x) * (q.y - c.y)) / det;
    const double l2 = ((c.y - a.y) * (q.x - c.x) + (a.x - c.x) * (q.y - c.y)) / det;
    const double l3 = 1.0 - l1 - l2;
    return l1 > tol && l2 > tol && l3 > tol;
}

/// Plain queue-based breadth-first distances over an explicit adjacency
/// map, independent of the library's skeleton code.
inline std::map<VertexId, int> bfs_oracle(const std::map<VertexId, std::set<VertexId>>& adj,
                                          VertexId source) {
    std::map<VertexId, int> dist{{source, 0}};
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        const auto it = adj.find(v);
        if (it == adj.end()) continue;
        for (VertexId w : it->second)
            if (!dist.count(w)) {
                dist[w] = dist.at(v) + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

inline std::map<VertexId, std::set<VertexId>> adjacency_of(const Triangulation& t) {
    std::map<VertexId, std::set<VertexId>> adj;
    for (const auto& [k, p] : t.edges) {
        adj[k.first].insert(k.second);
        adj[k.second].insert(k.first);
    }
    return adj;
}

// -- fixtures ----------------------------------------------------------------

/// Hand-assembled triangulation from explicit vertex/triangle tables
/// (edges, paths, and adjacency derived). Bypasses the Delaunay scaffold
/// so figures and adversarial complexes can be encoded directly.
inline Triangulation build_manual_triangulation(std::vector<Point2> vertices,
                                                const std::vector<std::array<VertexId, 3>>& tris,
                                                int samples_per_edge = 8,
                                                int fiber_count = 256) {
    Triangulation t;
    t.vertices = std::move(vertices);
    t.samples_per_edge = samples_per_edge;

    std::vector<std::array<VertexId, 3>> triples;
    for (auto v : tris) {
        if (orient(t.vertices[v[0]], t.vertices[v[1]], t.vertices[v[2]]) < 0)
            std::swap(v[1], v[2]);
        const int lo = static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
        std::rotate(v.begin(), v.begin() + lo, v.end());
        triples.push_back(v);
    }
    std::sort(triples.begin(), triples.end());

    const auto straight = [&](VertexId a, VertexId b) {
        return make_path(t.vertices, a, b, {}, samples_per_edge);
    };
    for (const auto& v : triples) {
        for (int i = 0; i < 3; ++i) {
            const EdgeKey k = edge_key(v[i], v[(i + 1) % 3]);
            if (!t.edges.count(k)) t.edges.emplace(k, straight(k.first, k.second));
        }
        t.triangles.push_back(make_path_triangle(straight(v[0], v[1]), straight(v[1], v[2]),
                                                 straight(v[2], v[0]), TriangleKind::straight,
                                                 fiber_count));
    }
    for (const auto& [k, p] : t.edges) {
        t.vertex_edges[k.first].push_back(k);
        t.vertex_edges[k.second].push_back(k);
    }
    for (int i = 0; i < t.triangle_count(); ++i)
        for (VertexId v : t.triangles[i].vertex_ids()) t.vertex_triangles[v].push_back(i);
    for (int v = 0; v < t.vertex_count(); ++v) {
        t.vertex_edges.try_emplace(v);
        t.vertex_triangles.try_emplace(v);
    }
    return t;
}

/// Regular hexagon around a center vertex (id 0 = center), fanned into 6
/// triangles.
inline Triangulation hexagon_fan() {
    std::vector<Point2> pts{{0, 0}};
    for (int k = 0; k < 6; ++k) {
        const double a = k * 3.14159265358979323846 / 3.0;
        pts.push_back({2.0 * std::cos(a), 2.0 * std::sin(a)});
    }
    std::vector<std::array<VertexId, 3>> tris;
    for (int k = 0; k < 6; ++k) tris.push_back({0, 1 + k, 1 + (k + 1) % 6});
    return build_manual_triangulation(std::move(pts), tris);
}

/// Fish-shaped complex modeled on a fan of six triangles around a nucleus
/// vertex plus a three-triangle tail cluster, bridged by two triangles.
/// Vertex 6 is the nucleus (six incident triangles).
inline Triangulation fish_complex() {
    std::vector<Point2> pts{
        {0.5, 1.5},   // 0
        {1.0, 2.0},   // 1
        {1.5, 2.2},   // 2
        {3.0, 1.8},   // 3
        {4.0, 2.2},   // 4
        {3.5, 1.6},   // 5
        {1.2, 1.5},   // 6  nucleus p
        {3.0, 1.4},   // 7
        {1.0, 1.0},   // 8
        {2.0, 0.75},  // 9
        {4.0, 1.2},   // 10
        {2.5, 1.5},   // 11 q
    };
    const std::vector<std::array<VertexId, 3>> tris{
        {6, 0, 1},   // fan around nucleus 6
        {6, 1, 2},   {6, 2, 11}, {6, 11, 9}, {6, 9, 8}, {6, 8, 0},
        {2, 3, 11},  // bridge
        {3, 7, 11},
        {3, 5, 7},   // tail cluster
        {3, 4, 5},   {5, 10, 7},
    };
    return build_manual_triangulation(std::move(pts), tris);
}

}  // namespace pathtri::testing

#endif
