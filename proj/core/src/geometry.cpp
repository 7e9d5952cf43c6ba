#include "pathtri/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pathtri {

bool finite(Point2 p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

int orient_sign(Point2 a, Point2 b, Point2 c, double tol) {
    const double v = orient(a, b, c);
    const double scale = std::max(1.0, distance(a, b) * std::max(distance(a, c), distance(b, c)));
    if (std::abs(v) <= tol * scale) return 0;
    return v > 0 ? 1 : -1;
}

bool collinear(Point2 a, Point2 b, Point2 c, double tol) {
    return orient_sign(a, b, c, tol) == 0;
}

double incircle_normalized(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double ad = adx * adx + ady * ady;
    const double bd = bdx * bdx + bdy * bdy;
    const double cd = cdx * cdx + cdy * cdy;
    const double det = adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
                       ad * (bdx * cdy - bdy * cdx);
    const double m = std::max({ad, bd, cd, 1e-300});
    return det / (m * m);
}

double point_segment_distance(Point2 q, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(q, a);
    const double t = std::clamp(dot(q - a, ab) / len2, 0.0, 1.0);
    return distance(q, a + t * ab);
}

bool point_in_triangle(Point2 q, Point2 a, Point2 b, Point2 c, bool strict, double tol) {
    if (orient(a, b, c) < 0) std::swap(b, c);  // normalize to CCW
    const double scale = std::max({1.0, distance(a, b), distance(b, c), distance(c, a)});
    const double band = tol * scale;
    const double s1 = orient(a, b, q);
    const double s2 = orient(b, c, q);
    const double s3 = orient(c, a, q);
    if (strict) return s1 > band && s2 > band && s3 > band;
    return s1 >= -band && s2 >= -band && s3 >= -band;
}

std::vector<int> convex_hull_indices(std::span<const Point2> points) {
    const int n = static_cast<int>(points.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (points[i].x != points[j].x) return points[i].x < points[j].x;
        return points[i].y < points[j].y;
    });
    if (n < 3) return order;

    std::vector<int> hull;
    // lower chain
    for (int idx : order) {
        while (hull.size() >= 2 &&
               orient(points[hull[hull.size() - 2]], points[hull.back()], points[idx]) <= 0)
            hull.pop_back();
        hull.push_back(idx);
    }
    // upper chain
    const std::size_t lower = hull.size() + 1;
    for (int k = n - 2; k >= 0; --k) {
        int idx = order[k];
        while (hull.size() >= lower &&
               orient(points[hull[hull.size() - 2]], points[hull.back()], points[idx]) <= 0)
            hull.pop_back();
        hull.push_back(idx);
    }
    hull.pop_back();  // last == first
    return hull;
}

double polygon_area(std::span<const Point2> polygon) {
    const std::size_t n = polygon.size();
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = polygon[i];
        const Point2 q = polygon[(i + 1) % n];
        a += cross(p, q);
    }
    return std::abs(a) / 2.0;
}

double convex_intersection_area(std::span<const Point2> a, std::span<const Point2> b) {
    // Clip polygon a against each directed edge of (CCW-normalized) b.
    std::vector<Point2> clip(b.begin(), b.end());
    {
        double sa = 0.0;
        for (std::size_t i = 0; i < clip.size(); ++i)
            sa += cross(clip[i], clip[(i + 1) % clip.size()]);
        if (sa < 0) std::reverse(clip.begin(), clip.end());
    }
    std::vector<Point2> poly(a.begin(), a.end());
    for (std::size_t i = 0; i < clip.size() && !poly.empty(); ++i) {
        const Point2 e0 = clip[i];
        const Point2 e1 = clip[(i + 1) % clip.size()];
        std::vector<Point2> out;
        const std::size_t m = poly.size();
        for (std::size_t j = 0; j < m; ++j) {
            const Point2 p = poly[j];
            const Point2 q = poly[(j + 1) % m];
            const double sp = orient(e0, e1, p);
            const double sq = orient(e0, e1, q);
            if (sp >= 0) out.push_back(p);
            if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
                const double t = sp / (sp - sq);
                out.push_back(p + t * (q - p));
            }
        }
        poly = std::move(out);
    }
    if (poly.size() < 3) return 0.0;
    return polygon_area(poly);
}

namespace {

double polyline_length(const std::vector<Point2>& pts) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
    return len;
}

/// Point at arc length s along the polyline.
Point2 polyline_at_arclength(const std::vector<Point2>& pts, double s) {
    double acc = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double seg = distance(pts[i - 1], pts[i]);
        if (acc + seg >= s || i + 1 == pts.size()) {
            const double t = seg > 0 ? std::clamp((s - acc) / seg, 0.0, 1.0) : 0.0;
            return pts[i - 1] + t * (pts[i] - pts[i - 1]);
        }
        acc += seg;
    }
    return pts.back();
}

}  // namespace

SampledPath make_path(std::span<const Point2> vertex_table, VertexId a, VertexId b,
                      std::span<const Point2> waypoints, int samples) {
    if (a == b) throw std::invalid_argument("make_path: self-loop (a == b) is forbidden");
    if (a < 0 || b < 0 || a >= static_cast<int>(vertex_table.size()) ||
        b >= static_cast<int>(vertex_table.size()))
        throw std::invalid_argument("make_path: vertex id out of range");
    if (samples < 2) throw std::invalid_argument("make_path: need at least 2 samples");

    std::vector<Point2> polyline;
    polyline.reserve(waypoints.size() + 2);
    polyline.push_back(vertex_table[a]);
    polyline.insert(polyline.end(), waypoints.begin(), waypoints.end());
    polyline.push_back(vertex_table[b]);
    for (std::size_t i = 1; i < polyline.size(); ++i) {
        if (coincident(polyline[i - 1], polyline[i]))
            throw std::invalid_argument("make_path: coincident consecutive waypoints");
        if (!finite(polyline[i - 1]) || !finite(polyline[i]))
            throw std::invalid_argument("make_path: non-finite coordinates");
    }

    const double total = polyline_length(polyline);
    SampledPath p;
    p.start = a;
    p.end = b;
    p.samples.resize(samples);
    for (int j = 0; j < samples; ++j) {
        const double s = total * static_cast<double>(j) / static_cast<double>(samples - 1);
        p.samples[j] = polyline_at_arclength(polyline, s);
    }
    p.samples.front() = vertex_table[a];
    p.samples.back() = vertex_table[b];
    for (int j = 1; j < samples; ++j)
        if (coincident(p.samples[j - 1], p.samples[j]))
            throw std::invalid_argument("make_path: zero-length segment after resampling");
    return p;
}

SampledPath reverse_path(const SampledPath& p) {
    SampledPath r;
    r.start = p.end;
    r.end = p.start;
    r.samples.assign(p.samples.rbegin(), p.samples.rend());
    return r;
}

Edge realize_path(const SampledPath& p) {
    Edge e;
    e.endpoints = edge_key(p.start, p.end);
    e.polyline = p.samples;
    return e;
}

PathTriangle make_path_triangle(SampledPath h1, SampledPath h2, SampledPath h3,
                                TriangleKind kind, int fiber_count) {
    if (fiber_count < 1) throw std::invalid_argument("make_path_triangle: fiber count must be >= 1");
    const auto check_link = [](const SampledPath& u, const SampledPath& v, const char* what) {
        if (u.end != v.start || !coincident(u.end_point(), v.start_point()))
            throw std::invalid_argument(std::string("make_path_triangle: endpoint mismatch at ") + what);
    };
    check_link(h1, h2, "h1.end/h2.start");
    check_link(h2, h3, "h2.end/h3.start");
    check_link(h3, h1, "h3.end/h1.start");

    const VertexId v1 = h1.start, v2 = h2.start, v3 = h3.start;
    if (v1 == v2 || v2 == v3 || v3 == v1)
        throw std::invalid_argument("make_path_triangle: duplicate vertices");
    const Point2 p1 = h1.start_point(), p2 = h2.start_point(), p3 = h3.start_point();
    if (coincident(p1, p2) || coincident(p2, p3) || coincident(p3, p1))
        throw std::invalid_argument("make_path_triangle: duplicate vertex coordinates");
    if (kind == TriangleKind::straight && collinear(p1, p2, p3))
        throw std::invalid_argument("make_path_triangle: degenerate (collinear) vertices");

    PathTriangle t;
    t.paths = {std::move(h1), std::move(h2), std::move(h3)};
    t.kind = kind;
    t.fiber_count = fiber_count;
    return t;
}

namespace {

/// Intersections of the line {origin + t*dir} with a sampled polyline,
/// returned as sorted t values (near-duplicates at shared sample points merged).
std::vector<double> line_polyline_hits(Point2 origin, Point2 dir, const std::vector<Point2>& pts) {
    std::vector<double> ts;
    const Point2 n = perp(dir);  // signed distance from the line along n
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double sp = dot(pts[i - 1] - origin, n);
        const double sq = dot(pts[i] - origin, n);
        if ((sp > 0 && sq > 0) || (sp < 0 && sq < 0)) continue;
        if (sp == sq) continue;  // segment parallel and on the line: endpoints caught by neighbors
        const double u = sp / (sp - sq);
        const Point2 hit = pts[i - 1] + u * (pts[i] - pts[i - 1]);
        ts.push_back(dot(hit - origin, dir));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](double a, double b) { return std::abs(a - b) <= kEpsilon; }),
             ts.end());
    return ts;
}

struct FiberFrame {
    Point2 base0, base1;  // chord of the base path h3 (start -> end)
    Point2 dir, nrm;      // unit chord direction; unit normal toward the apex
    double chord_len;
};

FiberFrame fiber_frame(const PathTriangle& t) {
    FiberFrame f;
    f.base0 = t.paths[2].start_point();
    f.base1 = t.paths[2].end_point();
    f.chord_len = distance(f.base0, f.base1);
    f.dir = (1.0 / f.chord_len) * (f.base1 - f.base0);
    f.nrm = perp(f.dir);
    const Point2 apex = t.paths[1].start_point();
    if (dot(apex - f.base0, f.nrm) < 0) f.nrm = -1.0 * f.nrm;
    return f;
}

/// Clipped fiber segment at base-chord offset u: (t_base, t_top) along nrm,
/// or nullopt when the fiber line misses the boundary.
std::optional<std::pair<double, double>> fiber_span(const PathTriangle& t, const FiberFrame& f,
                                                    double u) {
    const Point2 foot = f.base0 + u * f.dir;
    const auto base_hits = line_polyline_hits(foot, f.nrm, t.paths[2].samples);
    if (base_hits.empty()) return std::nullopt;
    const double t_base = base_hits.front();

    auto top_hits = line_polyline_hits(foot, f.nrm, t.paths[0].samples);
    const auto h2_hits = line_polyline_hits(foot, f.nrm, t.paths[1].samples);
    top_hits.insert(top_hits.end(), h2_hits.begin(), h2_hits.end());
    std::sort(top_hits.begin(), top_hits.end());
    for (double tt : top_hits)
        if (tt > t_base + kEpsilon) return std::make_pair(t_base, tt);
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<Point2, Point2>> fiber_at_station(const PathTriangle& t, int i) {
    if (i < 0 || i >= t.fiber_count) return std::nullopt;
    const FiberFrame f = fiber_frame(t);
    const double u = f.chord_len * static_cast<double>(i + 1) / static_cast<double>(t.fiber_count + 1);
    const auto span = fiber_span(t, f, u);
    if (!span) return std::nullopt;
    const Point2 foot = f.base0 + u * f.dir;
    const Point2 base_pt = foot + span->first * f.nrm;
    const Point2 top_pt = foot + span->second * f.nrm;
    return std::make_pair(top_pt, base_pt);
}

bool interior_contains(const PathTriangle& t, Point2 q) {
    const FiberFrame f = fiber_frame(t);
    const double u = dot(q - f.base0, f.dir);
    const double w = dot(q - f.base0, f.nrm);
    const int m = t.fiber_count;
    const double pitch = f.chord_len / static_cast<double>(m + 1);

    const long station = std::lround(u / pitch) - 1;
    if (station < 0 || station >= m) return false;
    const double su = pitch * static_cast<double>(station + 1);
    if (std::abs(u - su) > pitch / 2.0 + kEpsilon) return false;

    const auto span = fiber_span(t, f, su);
    if (!span) return false;
    // strictly inside the open fiber segment; fiber endpoints are boundary
    return w > span->first + kEpsilon && w < span->second - kEpsilon;
}

bool interior_contains_exact(const PathTriangle& t, Point2 q) {
    if (t.kind != TriangleKind::straight)
        throw std::invalid_argument("interior_contains_exact: only defined for straight triangles");
    const auto v = t.vertex_points();
    return point_in_triangle(q, v[0], v[1], v[2], /*strict=*/true);
}

std::array<Edge, 3> boundary(const PathTriangle& t) {
    return {realize_path(t.paths[0]), realize_path(t.paths[1]), realize_path(t.paths[2])};
}

PathClass make_path_class(std::vector<SampledPath> representatives) {
    if (representatives.empty())
        throw std::invalid_argument("make_path_class: need at least one representative");
    const VertexId s = representatives.front().start;
    const VertexId e = representatives.front().end;
    const Point2 sp = representatives.front().start_point();
    const Point2 ep = representatives.front().end_point();
    for (const auto& r : representatives) {
        if (r.start != s || r.end != e || !coincident(r.start_point(), sp) ||
            !coincident(r.end_point(), ep))
            throw std::invalid_argument("make_path_class: representatives disagree on endpoints");
    }
    return PathClass{s, e, std::move(representatives)};
}

PathClassTriangle make_path_class_triangle(PathClass c1, PathClass c2, PathClass c3) {
    if (c1.end != c2.start || c2.end != c3.start || c3.end != c1.start)
        throw std::invalid_argument("make_path_class_triangle: cyclic endpoint mismatch");
    if (c1.start == c2.start || c2.start == c3.start || c3.start == c1.start)
        throw std::invalid_argument("make_path_class_triangle: duplicate vertices");
    return PathClassTriangle{{std::move(c1), std::move(c2), std::move(c3)}};
}

}  // namespace pathtri
