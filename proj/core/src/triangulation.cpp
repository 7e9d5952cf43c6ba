#include "pathtri/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace pathtri {

namespace {

struct Tri {
    int a, b, c;
};

bool lex_less(Point2 p, Point2 q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
}

Tri ccw(const std::vector<Point2>& pts, Tri t) {
    if (orient(pts[t.a], pts[t.b], pts[t.c]) < 0) std::swap(t.b, t.c);
    return t;
}

/// Bowyer-Watson over a super-triangle; returns triangles on real vertex ids.
std::vector<Tri> bowyer_watson(const std::vector<Point2>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<Point2> pts = points;

    double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (const Point2& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double cx = (min_x + max_x) / 2, cy = (min_y + max_y) / 2;
    const double d = std::max({max_x - min_x, max_y - min_y, 1.0});
    pts.push_back({cx - 20 * d, cy - 10 * d});
    pts.push_back({cx + 20 * d, cy - 10 * d});
    pts.push_back({cx, cy + 20 * d});

    std::vector<Tri> tris{{n, n + 1, n + 2}};
    for (int p = 0; p < n; ++p) {
        std::vector<Tri> bad, keep;
        for (const Tri& t : tris) {
            const Tri u = ccw(pts, t);
            if (incircle_normalized(pts[u.a], pts[u.b], pts[u.c], pts[p]) > kEpsilon)
                bad.push_back(t);
            else
                keep.push_back(t);
        }
        // cavity boundary = edges of bad triangles not shared by two of them
        std::map<EdgeKey, int> count;
        for (const Tri& t : bad) {
            ++count[edge_key(t.a, t.b)];
            ++count[edge_key(t.b, t.c)];
            ++count[edge_key(t.c, t.a)];
        }
        tris = std::move(keep);
        for (const auto& [k, c] : count) {
            if (c != 1) continue;
            tris.push_back(ccw(pts, Tri{k.first, k.second, p}));
        }
    }

    std::vector<Tri> out;
    for (const Tri& t : tris)
        if (t.a < n && t.b < n && t.c < n) out.push_back(t);
    return out;
}

/// Normalize cocircular quads: the diagonal of each ambiguous pair must be
/// incident to the lexicographically smallest of the four vertices.
void normalize_cocircular(const std::vector<Point2>& pts, std::vector<Tri>& tris) {
    const int cap = 16 + 4 * static_cast<int>(tris.size() * tris.size());
    for (int pass = 0; pass < cap; ++pass) {
        std::map<EdgeKey, std::vector<int>> incident;
        for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
            const Tri& t = tris[i];
            incident[edge_key(t.a, t.b)].push_back(i);
            incident[edge_key(t.b, t.c)].push_back(i);
            incident[edge_key(t.c, t.a)].push_back(i);
        }
        bool flipped = false;
        for (const auto& [k, inc] : incident) {
            if (inc.size() != 2) continue;
            const auto [u, v] = k;
            const auto third = [&](const Tri& t) {
                if (t.a != u && t.a != v) return t.a;
                if (t.b != u && t.b != v) return t.b;
                return t.c;
            };
            const int w = third(tris[inc[0]]);
            const int x = third(tris[inc[1]]);
            const Tri t0 = ccw(pts, tris[inc[0]]);
            if (std::abs(incircle_normalized(pts[t0.a], pts[t0.b], pts[t0.c], pts[x])) > kEpsilon)
                continue;  // not cocircular
            // proper crossing required for a valid flip
            if (orient_sign(pts[w], pts[x], pts[u]) * orient_sign(pts[w], pts[x], pts[v]) >= 0)
                continue;
            int best = u;
            for (int cand : {v, w, x})
                if (lex_less(pts[cand], pts[best])) best = cand;
            if (best != w && best != x) continue;  // diagonal already incident to it
            tris[inc[0]] = ccw(pts, Tri{w, x, u});
            tris[inc[1]] = ccw(pts, Tri{x, w, v});
            flipped = true;
            break;
        }
        if (!flipped) return;
    }
}

SampledPath straight_path(const std::vector<Point2>& vertices, VertexId a, VertexId b, int samples) {
    return make_path(vertices, a, b, {}, samples);
}

}  // namespace

Triangulation triangulate(std::span<const Point2> points, const TriangulateConfig& config) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw std::invalid_argument("triangulate: need at least 3 points");
    if (config.samples_per_edge < 2)
        throw std::invalid_argument("triangulate: samples_per_edge must be >= 2");
    for (const Point2& p : points)
        if (!finite(p)) throw std::invalid_argument("triangulate: non-finite point");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coincident(points[i], points[j]))
                throw std::invalid_argument("triangulate: duplicate points");
    {
        bool all_collinear = true;
        for (int k = 2; k < n && all_collinear; ++k)
            if (!collinear(points[0], points[1], points[k])) all_collinear = false;
        if (all_collinear) throw std::invalid_argument("triangulate: all points collinear");
    }

    Triangulation out;
    out.vertices.assign(points.begin(), points.end());
    out.samples_per_edge = config.samples_per_edge;

    std::vector<Tri> tris = bowyer_watson(out.vertices);
    normalize_cocircular(out.vertices, tris);

    // canonical order: CCW, smallest vertex first, sorted by vertex triple
    std::vector<std::array<int, 3>> triples;
    triples.reserve(tris.size());
    for (Tri t : tris) {
        t = ccw(out.vertices, t);
        std::array<int, 3> v{t.a, t.b, t.c};
        const int lo = static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
        std::rotate(v.begin(), v.begin() + lo, v.end());
        triples.push_back(v);
    }
    std::sort(triples.begin(), triples.end());

    for (const auto& v : triples) {
        for (int i = 0; i < 3; ++i) {
            const EdgeKey k = edge_key(v[i], v[(i + 1) % 3]);
            if (!out.edges.count(k))
                out.edges.emplace(k, straight_path(out.vertices, k.first, k.second,
                                                   config.samples_per_edge));
        }
        out.triangles.push_back(make_path_triangle(
            straight_path(out.vertices, v[0], v[1], config.samples_per_edge),
            straight_path(out.vertices, v[1], v[2], config.samples_per_edge),
            straight_path(out.vertices, v[2], v[0], config.samples_per_edge),
            TriangleKind::straight, config.fiber_count));
    }

    for (const auto& [k, path] : out.edges) {
        out.vertex_edges[k.first].push_back(k);
        out.vertex_edges[k.second].push_back(k);
    }
    for (int i = 0; i < static_cast<int>(out.triangles.size()); ++i)
        for (VertexId v : out.triangles[i].vertex_ids()) out.vertex_triangles[v].push_back(i);
    for (int v = 0; v < n; ++v) {
        out.vertex_edges.try_emplace(v);
        out.vertex_triangles.try_emplace(v);
    }

    return out;
}

std::vector<VertexId> find_orphans(int vertex_count, std::span<const EdgeKey> edges) {
    std::vector<bool> attached(vertex_count, false);
    for (const EdgeKey& k : edges) {
        if (k.first >= 0 && k.first < vertex_count) attached[k.first] = true;
        if (k.second >= 0 && k.second < vertex_count) attached[k.second] = true;
    }
    std::vector<VertexId> orphans;
    for (int v = 0; v < vertex_count; ++v)
        if (!attached[v]) orphans.push_back(v);
    return orphans;
}

std::vector<VertexId> find_orphans(const Triangulation& t) {
    std::vector<EdgeKey> keys;
    keys.reserve(t.edges.size());
    for (const auto& [k, p] : t.edges) keys.push_back(k);
    return find_orphans(t.vertex_count(), keys);
}

namespace {

// splitmix64; deterministic across platforms
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_double(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Largest step t such that mid + t*dir stays inside triangle (a, b, c),
/// found by intersecting the ray with the triangle's edges.
double ray_exit_distance(Point2 mid, Point2 dir, Point2 a, Point2 b, Point2 c) {
    double best = std::numeric_limits<double>::infinity();
    const std::array<std::pair<Point2, Point2>, 3> sides{{{a, b}, {b, c}, {c, a}}};
    for (const auto& [p, q] : sides) {
        const Point2 e = q - p;
        const double denom = cross(dir, e);
        if (std::abs(denom) < 1e-300) continue;
        const double t = cross(p - mid, e) / denom;
        const double s = cross(p - mid, dir) / denom;
        if (t > kEpsilon && s >= -kEpsilon && s <= 1 + kEpsilon) best = std::min(best, t);
    }
    return best;
}

}  // namespace

ClassTriangulation path_class_triangulate(std::span<const Point2> points, int representatives,
                                          const TriangulateConfig& config) {
    if (representatives < 1)
        throw std::invalid_argument("path_class_triangulate: need at least 1 representative");
    ClassTriangulation ct;
    ct.base = triangulate(points, config);
    ct.representatives = representatives;

    for (const auto& [key, base_path] : ct.base.edges) {
        std::vector<SampledPath> reps{base_path};
        const auto& inc = ct.base.vertex_triangles;
        // triangles incident to both endpoints = triangles containing the edge
        std::vector<int> side_tris;
        for (int ti : inc.at(key.first)) {
            const auto ids = ct.base.triangles[ti].vertex_ids();
            if (std::find(ids.begin(), ids.end(), key.second) != ids.end())
                side_tris.push_back(ti);
        }
        const Point2 pu = ct.base.vertices[key.first];
        const Point2 pv = ct.base.vertices[key.second];
        const Point2 mid = 0.5 * (pu + pv);
        const double elen = distance(pu, pv);
        const Point2 nrm = (1.0 / elen) * perp(pv - pu);

        for (int j = 1; j < representatives; ++j) {
            const int ti = side_tris[(j - 1) % side_tris.size()];
            const auto vp = ct.base.triangles[ti].vertex_points();
            VertexId opp = -1;
            for (VertexId w : ct.base.triangles[ti].vertex_ids())
                if (w != key.first && w != key.second) opp = w;
            const double side = dot(ct.base.vertices[opp] - mid, nrm) > 0 ? 1.0 : -1.0;
            const std::uint64_t h = mix64(config.seed ^ mix64((std::uint64_t(key.first) << 40) ^
                                                              (std::uint64_t(key.second) << 16) ^
                                                              std::uint64_t(j)));
            const double frac = 0.05 + 0.20 * unit_double(h);  // <= 0.25 of edge length
            const double exit = ray_exit_distance(mid, side * nrm, vp[0], vp[1], vp[2]);
            const double offset = std::min(frac * elen, 0.45 * exit);
            const Point2 waypoint = mid + (side * offset) * nrm;
            const std::array<Point2, 1> wp{waypoint};
            reps.push_back(make_path(ct.base.vertices, key.first, key.second, wp,
                                     config.samples_per_edge));
        }
        ct.classes.emplace(key, make_path_class(std::move(reps)));
    }
    return ct;
}

PathClassTriangle class_triangle_at(const ClassTriangulation& ct, int tri_index) {
    if (tri_index < 0 || tri_index >= ct.base.triangle_count())
        throw std::invalid_argument("class_triangle_at: triangle index out of range");
    const auto ids = ct.base.triangles[tri_index].vertex_ids();
    std::array<PathClass, 3> oriented;
    for (int i = 0; i < 3; ++i) {
        const VertexId a = ids[i], b = ids[(i + 1) % 3];
        const PathClass& cls = ct.classes.at(edge_key(a, b));
        std::vector<SampledPath> reps;
        reps.reserve(cls.representatives.size());
        for (const SampledPath& r : cls.representatives)
            reps.push_back(r.start == a ? r : reverse_path(r));
        oriented[i] = make_path_class(std::move(reps));
    }
    return make_path_class_triangle(std::move(oriented[0]), std::move(oriented[1]),
                                    std::move(oriented[2]));
}

std::map<VertexId, VertexIncidence> adjacency_report(const Triangulation& t) {
    std::map<VertexId, VertexIncidence> rep;
    for (int v = 0; v < t.vertex_count(); ++v)
        rep[v] = VertexIncidence{static_cast<int>(t.vertex_edges.at(v).size()),
                                 static_cast<int>(t.vertex_triangles.at(v).size())};
    return rep;
}

std::vector<std::string> validate_triangulation(const Triangulation& t) {
    std::vector<std::string> issues;
    const auto bad = [&](std::string msg) { issues.push_back(std::move(msg)); };
    const int n = t.vertex_count();

    for (int i = 0; i < n; ++i)
        if (!finite(t.vertices[i])) bad("vertex " + std::to_string(i) + " not finite");

    for (const auto& [k, p] : t.edges) {
        const auto [u, v] = k;
        if (u < 0 || v < 0 || u >= n || v >= n) {
            bad("edge endpoint out of range");
            continue;
        }
        if (u >= v) bad("edge key not canonical (u < v expected)");
        if (p.start != u || p.end != v) bad("edge path endpoints disagree with key");
        if (p.sample_count() < 2) bad("edge path has fewer than 2 samples");
        if (!coincident(p.start_point(), t.vertices[u]) ||
            !coincident(p.end_point(), t.vertices[v]))
            bad("edge path endpoint coordinates disagree with vertex table");
        for (int j = 1; j < p.sample_count(); ++j)
            if (coincident(p.samples[j - 1], p.samples[j]))
                bad("edge path has zero-length segment");
        for (int j = 1; j + 1 < p.sample_count(); ++j)
            for (int w = 0; w < n; ++w)
                if (coincident(p.samples[j], t.vertices[w]))
                    bad("interior path sample coincides with vertex " + std::to_string(w));
    }

    for (int i = 0; i < t.triangle_count(); ++i) {
        const auto& tri = t.triangles[i];
        const auto ids = tri.vertex_ids();
        for (int e = 0; e < 3; ++e)
            if (!t.edges.count(edge_key(ids[e], ids[(e + 1) % 3])))
                bad("triangle " + std::to_string(i) + " references missing edge");
        if (tri.paths[0].end != tri.paths[1].start || tri.paths[1].end != tri.paths[2].start ||
            tri.paths[2].end != tri.paths[0].start)
            bad("triangle " + std::to_string(i) + " boundary not cyclically matched");
        const auto vp = tri.vertex_points();
        if (tri.kind == TriangleKind::straight && orient(vp[0], vp[1], vp[2]) <= 0)
            bad("triangle " + std::to_string(i) + " not CCW");
    }

    if (const auto orphans = find_orphans(t); !orphans.empty())
        bad("triangulation has " + std::to_string(orphans.size()) + " orphan vertices");

    // adjacency tables must match a recount
    std::map<VertexId, std::set<EdgeKey>> ve;
    for (const auto& [k, p] : t.edges) {
        ve[k.first].insert(k);
        ve[k.second].insert(k);
    }
    for (int v = 0; v < n; ++v) {
        const auto it = t.vertex_edges.find(v);
        const std::set<EdgeKey> got(it == t.vertex_edges.end() ? std::set<EdgeKey>{}
                                                               : std::set<EdgeKey>(it->second.begin(),
                                                                                   it->second.end()));
        if (got != ve[v]) bad("vertex_edges inconsistent at vertex " + std::to_string(v));
    }
    std::map<VertexId, std::set<int>> vt;
    for (int i = 0; i < t.triangle_count(); ++i)
        for (VertexId v : t.triangles[i].vertex_ids()) vt[v].insert(i);
    for (int v = 0; v < n; ++v) {
        const auto it = t.vertex_triangles.find(v);
        const std::set<int> got(it == t.vertex_triangles.end()
                                    ? std::set<int>{}
                                    : std::set<int>(it->second.begin(), it->second.end()));
        if (got != vt[v]) bad("vertex_triangles inconsistent at vertex " + std::to_string(v));
    }

    return issues;
}

std::vector<std::string> delaunay_violations(const Triangulation& t) {
    std::vector<std::string> issues;
    for (int i = 0; i < t.triangle_count(); ++i) {
        const auto ids = t.triangles[i].vertex_ids();
        const auto vp = t.triangles[i].vertex_points();
        for (int v = 0; v < t.vertex_count(); ++v) {
            if (v == ids[0] || v == ids[1] || v == ids[2]) continue;
            if (incircle_normalized(vp[0], vp[1], vp[2], t.vertices[v]) > kEpsilon)
                issues.push_back("vertex " + std::to_string(v) +
                                 " inside circumcircle of triangle " + std::to_string(i));
        }
    }
    return issues;
}

}  // namespace pathtri
