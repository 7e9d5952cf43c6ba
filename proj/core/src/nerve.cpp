#include "pathtri/nerve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace pathtri {

Nerve nerve_at(const Triangulation& t, VertexId v) {
    if (v < 0 || v >= t.vertex_count())
        throw std::invalid_argument("nerve_at: unknown vertex");
    Nerve nrv;
    nrv.nucleus = v;
    nrv.triangles = t.vertex_triangles.at(v);
    std::sort(nrv.triangles.begin(), nrv.triangles.end());
    return nrv;
}

std::vector<Nerve> nerve_census(const Triangulation& t) {
    std::vector<Nerve> census;
    census.reserve(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) census.push_back(nerve_at(t, v));
    return census;
}

Nerve maximal_nucleus_complex(const Triangulation& t) {
    if (t.vertex_count() == 0)
        throw std::invalid_argument("maximal_nucleus_complex: empty triangulation");
    Nerve best = nerve_at(t, 0);
    for (int v = 1; v < t.vertex_count(); ++v) {
        Nerve cand = nerve_at(t, v);
        if (cand.triangles.size() > best.triangles.size()) best = std::move(cand);
    }
    return best;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_double(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double triangle_area(const std::array<Point2, 3>& v) {
    return std::abs(orient(v[0], v[1], v[2])) / 2.0;
}

}  // namespace

CoverReport check_good_cover(const Triangulation& t) {
    CoverReport rep;
    rep.nerve_count = t.vertex_count();

    const auto hull = convex_hull_indices(t.vertices);
    std::vector<Point2> hull_pts;
    hull_pts.reserve(hull.size());
    for (int i : hull) hull_pts.push_back(t.vertices[i]);
    rep.hull_area = polygon_area(hull_pts);

    double area_sum = 0.0;
    for (const PathTriangle& tri : t.triangles) area_sum += triangle_area(tri.vertex_points());
    rep.triangle_area_sum = area_sum;
    const bool area_match =
        std::abs(area_sum - rep.hull_area) <= 1e-9 * std::max(rep.hull_area, 1.0);

    // membership sampling: seeded rejection sampling inside the hull, every
    // accepted point must land in some triangle (closed membership)
    double min_x = hull_pts[0].x, max_x = hull_pts[0].x;
    double min_y = hull_pts[0].y, max_y = hull_pts[0].y;
    for (const Point2& p : hull_pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const auto inside_hull = [&](Point2 q) {
        const std::size_t m = hull_pts.size();
        for (std::size_t i = 0; i < m; ++i)
            if (orient_sign(hull_pts[i], hull_pts[(i + 1) % m], q) < 0) return false;
        return true;
    };
    const int target = 10000;
    int covered = 0;
    std::uint64_t state = 0x9d2c5680c0ffee01ULL;
    for (int accepted = 0; accepted < target;) {
        state = mix64(state);
        const double qx = min_x + (max_x - min_x) * unit_double(state);
        state = mix64(state);
        const double qy = min_y + (max_y - min_y) * unit_double(state);
        const Point2 q{qx, qy};
        if (!inside_hull(q)) continue;
        ++accepted;
        for (const PathTriangle& tri : t.triangles) {
            const auto v = tri.vertex_points();
            if (point_in_triangle(q, v[0], v[1], v[2])) {
                ++covered;
                break;
            }
        }
    }
    rep.sampled_points = target;
    rep.sampled_points_covered = covered;
    rep.covers = area_match && covered == target;

    // pairwise intersections: shared vertex / shared edge / empty are
    // contractible; any positive-area overlap fails
    rep.intersections_ok = true;
    const int tc = t.triangle_count();
    const double area_tol = 1e-9 * std::max(rep.hull_area, 1.0);
    for (int i = 0; i < tc && rep.intersections_ok; ++i) {
        const auto vi = t.triangles[i].vertex_ids();
        const auto pi = t.triangles[i].vertex_points();
        for (int j = i + 1; j < tc; ++j) {
            const auto vj = t.triangles[j].vertex_ids();
            int shared = 0;
            for (VertexId a : vi)
                for (VertexId b : vj)
                    if (a == b) ++shared;
            if (shared >= 3) {
                rep.intersections_ok = false;  // duplicate triangle
                rep.witness = {i, j};
                break;
            }
            const auto pj = t.triangles[j].vertex_points();
            const double overlap = convex_intersection_area(
                std::span<const Point2>(pi.data(), 3), std::span<const Point2>(pj.data(), 3));
            if (overlap > area_tol) {
                rep.intersections_ok = false;
                rep.witness = {i, j};
                break;
            }
        }
    }

    // k-wise: no edge may carry more than two triangles, so any nonvoid
    // intersection of >= 3 mutually incident triangles is a single vertex
    if (rep.intersections_ok) {
        std::map<EdgeKey, std::vector<int>> face_count;
        for (int i = 0; i < tc; ++i) {
            const auto ids = t.triangles[i].vertex_ids();
            for (int e = 0; e < 3; ++e)
                face_count[edge_key(ids[e], ids[(e + 1) % 3])].push_back(i);
        }
        for (const auto& [k, faces] : face_count) {
            if (faces.size() > 2) {
                rep.intersections_ok = false;
                rep.witness = {faces[0], faces[1]};
                break;
            }
        }
    }

    if (tc > 0) {
        const auto first_ids = t.triangles[0].vertex_ids();
        std::set<VertexId> common(first_ids.begin(), first_ids.end());
        for (int i = 1; i < tc && !common.empty(); ++i) {
            const auto ids = t.triangles[i].vertex_ids();
            std::set<VertexId> next;
            for (VertexId v : ids)
                if (common.count(v)) next.insert(v);
            common = std::move(next);
        }
        rep.global_intersection.assign(common.begin(), common.end());
    }

    return rep;
}

}  // namespace pathtri
