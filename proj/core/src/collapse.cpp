#include "pathtri/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace pathtri {

namespace {

constexpr double kPi = std::numbers::pi;

/// Smallest positive t where {origin + t*dir} crosses segment (p, q).
double ray_segment_hit(Point2 origin, Point2 dir, Point2 p, Point2 q) {
    const Point2 e = q - p;
    const double denom = cross(dir, e);
    if (std::abs(denom) < 1e-300) return std::numeric_limits<double>::infinity();
    const double t = cross(p - origin, e) / denom;
    const double s = cross(p - origin, dir) / denom;
    if (t <= kEpsilon || s < -kEpsilon || s > 1 + kEpsilon)
        return std::numeric_limits<double>::infinity();
    return t;
}

double measure_hausdorff(const std::array<Point2, 3>& tri,
                         const std::vector<SampledPath>& fibers) {
    // barycentric grid of ~1e4 points, boundary included
    const int res = 139;
    double worst = 0.0;
    for (int i = 0; i <= res; ++i) {
        for (int j = 0; i + j <= res; ++j) {
            const int k = res - i - j;
            const Point2 q = (static_cast<double>(i) / res) * tri[0] +
                             (static_cast<double>(j) / res) * tri[1] +
                             (static_cast<double>(k) / res) * tri[2];
            double best = std::numeric_limits<double>::infinity();
            for (const SampledPath& f : fibers) {
                best = std::min(best, point_segment_distance(q, f.samples.front(),
                                                             f.samples.back()));
                if (best == 0.0) break;
            }
            worst = std::max(worst, best);
        }
    }
    return worst;
}

}  // namespace

CollapseTrace collapse_cone(const ConeSpec& spec, int fiber_count) {
    if (fiber_count < 2) throw std::invalid_argument("collapse_cone: need at least 2 fibers");
    if (collinear(spec.apex, spec.base_b, spec.base_c))
        throw std::invalid_argument("collapse_cone: degenerate (collinear) spec");

    CollapseTrace trace;
    trace.residual = {spec.apex, spec.base_b, spec.base_c};
    trace.vertices = {spec.apex, spec.base_b, spec.base_c};

    const double base_len = distance(spec.base_b, spec.base_c);
    const Point2 dir = (1.0 / base_len) * (spec.base_c - spec.base_b);
    Point2 nrm = perp(dir);
    if (dot(spec.apex - spec.base_b, nrm) < 0) nrm = -1.0 * nrm;

    for (int i = 0; i < fiber_count; ++i) {
        const double u = base_len * static_cast<double>(i + 1) /
                         static_cast<double>(fiber_count + 1);
        const Point2 foot = spec.base_b + u * dir;
        const double t_left = ray_segment_hit(foot, nrm, spec.base_b, spec.apex);
        const double t_right = ray_segment_hit(foot, nrm, spec.apex, spec.base_c);
        const double t_top = std::min(t_left, t_right);
        if (!std::isfinite(t_top))
            throw std::invalid_argument("collapse_cone: fiber misses the boundary");
        const Point2 top = foot + t_top * nrm;

        SampledPath fiber;
        fiber.start = static_cast<VertexId>(trace.vertices.size());
        trace.vertices.push_back(top);
        fiber.end = static_cast<VertexId>(trace.vertices.size());
        trace.vertices.push_back(foot);
        fiber.samples = {top, foot};
        trace.fibers.push_back(std::move(fiber));
    }

    trace.hausdorff_bound = measure_hausdorff(trace.residual, trace.fibers);
    return trace;
}

std::pair<CollapseTrace, PathTriangle> collapse_cone_to_path_triangle(const ConeSpec& spec,
                                                                      int fiber_count,
                                                                      int samples) {
    if (samples < 2)
        throw std::invalid_argument("collapse_cone_to_path_triangle: need at least 2 samples");
    CollapseTrace trace = collapse_cone(spec, fiber_count);

    // v1 = b, v2 = apex, v3 = c; boundary runs v1 -> v2 -> v3 -> v1
    const std::vector<Point2> table{spec.base_b, spec.apex, spec.base_c};
    PathTriangle tri = make_path_triangle(make_path(table, 0, 1, {}, samples),
                                          make_path(table, 1, 2, {}, samples),
                                          make_path(table, 2, 0, {}, samples),
                                          TriangleKind::straight, fiber_count);
    return {std::move(trace), std::move(tri)};
}

SphereSpec sphere_from_angles(Point2 center, double radius, std::array<double, 3> angles_deg) {
    if (!(radius > 0)) throw std::invalid_argument("sphere_from_angles: radius must be positive");
    SphereSpec spec;
    spec.center = center;
    spec.radius = radius;
    for (int i = 0; i < 3; ++i) {
        const double a = angles_deg[i] * kPi / 180.0;
        spec.boundary[i] = center + Point2{radius * std::cos(a), radius * std::sin(a)};
    }
    return spec;
}

namespace {

double wrap_signed_angle(double a) {
    while (a > kPi) a -= 2 * kPi;
    while (a <= -kPi) a += 2 * kPi;
    return a;
}

/// Minor arc from p to q on the circle, sampled at `samples` points.
SampledPath arc_path(const SphereSpec& spec, VertexId a, VertexId b, int samples) {
    const Point2 p = spec.boundary[a];
    const Point2 q = spec.boundary[b];
    const double ta = std::atan2(p.y - spec.center.y, p.x - spec.center.x);
    const double tb = std::atan2(q.y - spec.center.y, q.x - spec.center.x);
    const double span = wrap_signed_angle(tb - ta);
    if (std::abs(std::abs(span) - kPi) <= 1e-12)
        throw std::invalid_argument("collapse_sphere: antipodal vertices (ambiguous arc)");

    SampledPath path;
    path.start = a;
    path.end = b;
    path.samples.resize(samples);
    for (int j = 0; j < samples; ++j) {
        const double t = ta + span * static_cast<double>(j) / static_cast<double>(samples - 1);
        path.samples[j] = spec.center + Point2{spec.radius * std::cos(t),
                                               spec.radius * std::sin(t)};
    }
    path.samples.front() = p;
    path.samples.back() = q;
    return path;
}

}  // namespace

std::pair<CollapseTrace, PathTriangle> collapse_sphere(const SphereSpec& spec, int fiber_count,
                                                       int samples) {
    if (samples < 3) throw std::invalid_argument("collapse_sphere: need at least 3 samples");
    if (!(spec.radius > 0)) throw std::invalid_argument("collapse_sphere: radius must be positive");
    for (const Point2& v : spec.boundary)
        if (std::abs(distance(v, spec.center) - spec.radius) > kEpsilon)
            throw std::invalid_argument("collapse_sphere: vertex not on the circle");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (coincident(spec.boundary[i], spec.boundary[j]))
                throw std::invalid_argument("collapse_sphere: duplicate vertices");

    PathTriangle tri = make_path_triangle(arc_path(spec, 0, 1, samples),
                                          arc_path(spec, 1, 2, samples),
                                          arc_path(spec, 2, 0, samples),
                                          TriangleKind::round, fiber_count);

    // fibers on the chord of the base arc h3 (v3 -> v1), apex v2
    CollapseTrace trace = collapse_cone(
        ConeSpec{spec.boundary[1], spec.boundary[2], spec.boundary[0]}, fiber_count);
    return {std::move(trace), std::move(tri)};
}

CollapseSequence elementary_collapse_sequence(const Triangulation& t) {
    std::vector<EdgeKey> edge_keys;
    edge_keys.reserve(t.edges.size());
    for (const auto& [k, p] : t.edges) edge_keys.push_back(k);
    std::sort(edge_keys.begin(), edge_keys.end());
    std::map<EdgeKey, int> edge_index;
    for (int i = 0; i < static_cast<int>(edge_keys.size()); ++i) edge_index[edge_keys[i]] = i;

    const int nf = t.triangle_count();
    const int ne = static_cast<int>(edge_keys.size());
    const int nv = t.vertex_count();
    std::vector<bool> face_alive(nf, true), edge_alive(ne, true), vertex_alive(nv, true);
    std::vector<std::array<int, 3>> face_edges(nf);
    std::vector<std::vector<int>> edge_faces(ne);
    for (int f = 0; f < nf; ++f) {
        const auto ids = t.triangles[f].vertex_ids();
        for (int e = 0; e < 3; ++e) {
            const int ei = edge_index.at(edge_key(ids[e], ids[(e + 1) % 3]));
            face_edges[f][e] = ei;
            edge_faces[ei].push_back(f);
        }
    }
    std::vector<int> vertex_degree(nv, 0);
    for (const EdgeKey& k : edge_keys) {
        ++vertex_degree[k.first];
        ++vertex_degree[k.second];
    }

    CollapseSequence seq;
    int faces_left = nf;
    int stage = 0;

    while (faces_left > 0) {
        int pick_edge = -1, pick_face = -1;
        for (int e = 0; e < ne && pick_edge == -1; ++e) {
            if (!edge_alive[e]) continue;
            int live_face = -1, live_count = 0;
            for (int f : edge_faces[e])
                if (face_alive[f]) {
                    live_face = f;
                    ++live_count;
                }
            if (live_count == 1) {
                pick_edge = e;
                pick_face = live_face;
            }
        }
        if (pick_edge == -1)
            throw CollapseStuck(
                "elementary_collapse_sequence: no free edge while 2-cells remain");
        face_alive[pick_face] = false;
        edge_alive[pick_edge] = false;
        --vertex_degree[edge_keys[pick_edge].first];
        --vertex_degree[edge_keys[pick_edge].second];
        --faces_left;
        seq.steps.push_back(
            {stage++, StepKind::face, pick_face, edge_keys[pick_edge], -1});
    }

    int vertices_left = nv;
    while (vertices_left > 1) {
        // remove the largest-id leaf, so the sequence terminates at the
        // smallest remaining vertex
        int pick_vertex = -1;
        for (int v = nv - 1; v >= 0; --v)
            if (vertex_alive[v] && vertex_degree[v] == 1) {
                pick_vertex = v;
                break;
            }
        if (pick_vertex == -1)
            throw CollapseStuck(
                "elementary_collapse_sequence: 1-skeleton is not collapsible to a vertex");
        int pick_edge = -1;
        for (int e = 0; e < ne; ++e) {
            if (!edge_alive[e]) continue;
            if (edge_keys[e].first == pick_vertex || edge_keys[e].second == pick_vertex) {
                pick_edge = e;
                break;
            }
        }
        vertex_alive[pick_vertex] = false;
        edge_alive[pick_edge] = false;
        --vertex_degree[edge_keys[pick_edge].first];
        --vertex_degree[edge_keys[pick_edge].second];
        --vertices_left;
        seq.steps.push_back(
            {stage++, StepKind::vertex, -1, edge_keys[pick_edge], pick_vertex});
    }

    for (int v = 0; v < nv; ++v)
        if (vertex_alive[v]) seq.terminal_vertex = v;
    return seq;
}

std::vector<ComplexSnapshot> replay_collapse(const Triangulation& t,
                                             const CollapseSequence& seq) {
    ComplexSnapshot state;
    for (int f = 0; f < t.triangle_count(); ++f) state.faces.insert(f);
    for (const auto& [k, p] : t.edges) state.edges.insert(k);
    for (int v = 0; v < t.vertex_count(); ++v) state.vertices.insert(v);

    const auto face_has_edge = [&](int f, const EdgeKey& k) {
        const auto ids = t.triangles[f].vertex_ids();
        for (int e = 0; e < 3; ++e)
            if (edge_key(ids[e], ids[(e + 1) % 3]) == k) return true;
        return false;
    };

    std::vector<ComplexSnapshot> snapshots{state};
    for (const ElementaryStep& step : seq.steps) {
        if (!state.edges.count(step.free_edge))
            throw std::invalid_argument("replay_collapse: removed edge not alive");
        if (step.kind == StepKind::face) {
            if (!state.faces.count(step.removed_face))
                throw std::invalid_argument("replay_collapse: removed face not alive");
            if (!face_has_edge(step.removed_face, step.free_edge))
                throw std::invalid_argument("replay_collapse: edge not on removed face");
            int live = 0;
            for (int f : state.faces)
                if (face_has_edge(f, step.free_edge)) ++live;
            if (live != 1)
                throw std::invalid_argument("replay_collapse: edge is not free");
            state.faces.erase(step.removed_face);
            state.edges.erase(step.free_edge);
        } else {
            if (!state.vertices.count(step.removed_vertex))
                throw std::invalid_argument("replay_collapse: removed vertex not alive");
            int degree = 0;
            for (const EdgeKey& k : state.edges)
                if (k.first == step.removed_vertex || k.second == step.removed_vertex) ++degree;
            if (degree != 1)
                throw std::invalid_argument("replay_collapse: vertex is not free");
            if (step.free_edge.first != step.removed_vertex &&
                step.free_edge.second != step.removed_vertex)
                throw std::invalid_argument("replay_collapse: edge not incident to vertex");
            state.vertices.erase(step.removed_vertex);
            state.edges.erase(step.free_edge);
        }
        snapshots.push_back(state);
    }
    return snapshots;
}

}  // namespace pathtri
