#ifndef PATHTRI_GEOMETRY_HPP
#define PATHTRI_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pathtri {

/// Dense non-negative index into a vertex table. -1 marks "unset".
using VertexId = int;

/// Unordered vertex pair, stored as (min, max).
using EdgeKey = std::pair<VertexId, VertexId>;

inline EdgeKey edge_key(VertexId a, VertexId b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

/// Absolute geometric tolerance (input units) for coincidence and
/// collinearity predicates. Fixed so predicates are deterministic.
constexpr double kEpsilon = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

inline bool coincident(Point2 a, Point2 b, double tol = kEpsilon) {
    return distance(a, b) <= tol;
}

bool finite(Point2 p);

/// Twice the signed area of triangle (a, b, c); positive for CCW.
inline double orient(Point2 a, Point2 b, Point2 c) {
    return cross(b - a, c - a);
}

/// Sign of orient with tolerance scaled by the local edge lengths, so the
/// collinearity decision is independent of coordinate magnitude.
int orient_sign(Point2 a, Point2 b, Point2 c, double tol = kEpsilon);

bool collinear(Point2 a, Point2 b, Point2 c, double tol = kEpsilon);

/// Normalized in-circumcircle predicate for CCW triangle (a, b, c):
/// positive when d lies strictly inside, ~0 when cocircular. The raw 3x3
/// determinant is divided by the 4th power of the largest offset so the
/// value is dimensionless and comparable against kEpsilon.
double incircle_normalized(Point2 a, Point2 b, Point2 c, Point2 d);

double point_segment_distance(Point2 q, Point2 a, Point2 b);

/// Closed point-in-triangle test with tolerance; strict=true excludes an
/// epsilon collar around the boundary instead.
bool point_in_triangle(Point2 q, Point2 a, Point2 b, Point2 c, bool strict = false,
                       double tol = kEpsilon);

/// Indices of the convex hull in CCW order, starting from the
/// lexicographically smallest point (monotone chain).
std::vector<int> convex_hull_indices(std::span<const Point2> points);

double polygon_area(std::span<const Point2> polygon);

/// Area of the intersection of two convex polygons (Sutherland-Hodgman).
double convex_intersection_area(std::span<const Point2> a, std::span<const Point2> b);

/// Discretized continuous map h : [0,1] -> plane. Samples are stored at
/// uniform arc-length parameter spacing; sample j sits at t = j/(S-1).
/// start/end index the ambient vertex table; samples carry coordinates.
struct SampledPath {
    VertexId start = -1;
    VertexId end = -1;
    std::vector<Point2> samples;

    Point2 start_point() const { return samples.front(); }
    Point2 end_point() const { return samples.back(); }
    int sample_count() const { return static_cast<int>(samples.size()); }
};

/// Build the path from vertex a to vertex b along the given waypoint
/// polyline, resampled to exactly `samples` points uniformly in arc
/// length. Empty waypoints give the straight segment.
///
/// Throws std::invalid_argument for a == b (self-loop), samples < 2, or
/// coincident consecutive waypoints.
SampledPath make_path(std::span<const Point2> vertex_table, VertexId a, VertexId b,
                      std::span<const Point2> waypoints, int samples);

/// Same path traversed end-to-start.
SampledPath reverse_path(const SampledPath& p);

/// 1-cell: geometric realization of a path.
struct Edge {
    EdgeKey endpoints;
    std::vector<Point2> polyline;
};

/// Realize a path as an edge with the same endpoints and polyline;
/// interior samples (t in (0,1)) form the edge interior.
Edge realize_path(const SampledPath& p);

enum class TriangleKind { straight, round };

/// Three cyclically matched paths: h1.end = h2.start, h2.end = h3.start,
/// h3.end = h1.start. The interior is discretized by fiber_count fibers
/// perpendicular to the chord of the base path h3.
struct PathTriangle {
    std::array<SampledPath, 3> paths;
    TriangleKind kind = TriangleKind::straight;
    int fiber_count = 1;

    std::array<VertexId, 3> vertex_ids() const {
        return {paths[0].start, paths[1].start, paths[2].start};
    }
    std::array<Point2, 3> vertex_points() const {
        return {paths[0].start_point(), paths[1].start_point(), paths[2].start_point()};
    }
};

/// Validates cyclic endpoint matching (as VertexId identities and as
/// coordinates), pairwise distinct vertices, and non-collinearity for
/// kind=straight. Throws std::invalid_argument on violation.
PathTriangle make_path_triangle(SampledPath h1, SampledPath h2, SampledPath h3,
                                TriangleKind kind, int fiber_count);

/// Fiber-discretized interior membership: q belongs to the interior iff
/// its projection onto the nearest of the m fiber lines lands strictly
/// inside that fiber's clipped segment. Boundary points are excluded.
/// For kind=straight this agrees with the exact strict test on all
/// points farther than 2*|base|/m from the boundary.
bool interior_contains(const PathTriangle& t, Point2 q);

/// Exact strict point-in-triangle on the vertex chords. Only valid for
/// kind=straight; throws std::invalid_argument for round triangles.
bool interior_contains_exact(const PathTriangle& t, Point2 q);

/// The three boundary edges, realized in order (h1, h2, h3).
std::array<Edge, 3> boundary(const PathTriangle& t);

/// Clipped fiber of a path triangle at station index i (0-based among
/// fiber_count stations): endpoint 0 on the non-base boundary, endpoint 1
/// on the base. Exposed for collapse traces and rendering.
std::optional<std::pair<Point2, Point2>> fiber_at_station(const PathTriangle& t, int i);

/// Collection of paths sharing the same start and end vertices.
struct PathClass {
    VertexId start = -1;
    VertexId end = -1;
    std::vector<SampledPath> representatives;
};

/// Validates that all representatives share endpoints (ids and coordinates).
PathClass make_path_class(std::vector<SampledPath> representatives);

/// Three path classes with cyclic endpoint matching.
struct PathClassTriangle {
    std::array<PathClass, 3> classes;
};

PathClassTriangle make_path_class_triangle(PathClass c1, PathClass c2, PathClass c3);

}  // namespace pathtri

#endif
