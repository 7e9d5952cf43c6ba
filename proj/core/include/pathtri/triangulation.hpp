#ifndef PATHTRI_TRIANGULATION_HPP
#define PATHTRI_TRIANGULATION_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pathtri/geometry.hpp"

namespace pathtri {

struct TriangulateConfig {
    int samples_per_edge = 16;
    int fiber_count = 1024;
    std::uint64_t seed = 42;  // class-representative perturbation seed
};

/// Path triangulation of a planar point set on a Delaunay scaffold.
/// Every 1-cell is carried by a SampledPath; construction leaves zero
/// orphan vertices. Immutable after construction.
struct Triangulation {
    std::vector<Point2> vertices;               // VertexId = index (input order)
    std::map<EdgeKey, SampledPath> edges;       // canonical orientation min->max
    std::vector<PathTriangle> triangles;        // CCW, smallest vertex first; sorted
    std::map<VertexId, std::vector<EdgeKey>> vertex_edges;
    std::map<VertexId, std::vector<int>> vertex_triangles;
    int samples_per_edge = 16;

    std::array<VertexId, 3> triangle_vertex_ids(int i) const {
        return triangles[i].vertex_ids();
    }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }
};

/// Delaunay path triangulation of the points. Cocircular ties are broken
/// by flipping each ambiguous quad's diagonal onto its lexicographically
/// smallest vertex, so output is deterministic.
///
/// Throws std::invalid_argument: fewer than 3 points ("need at least 3
/// points"), duplicate points within kEpsilon, all points collinear.
Triangulation triangulate(std::span<const Point2> points, const TriangulateConfig& config = {});

/// Vertices that are an endpoint of no edge, ascending.
std::vector<VertexId> find_orphans(int vertex_count, std::span<const EdgeKey> edges);
std::vector<VertexId> find_orphans(const Triangulation& t);

/// Triangulation whose edges carry path classes of r representatives:
/// representative 0 is the straight edge path, the rest are seeded
/// polyline perturbations confined to the triangles incident to the edge.
struct ClassTriangulation {
    Triangulation base;  // representative 0 of every class
    std::map<EdgeKey, PathClass> classes;
    int representatives = 1;
};

ClassTriangulation path_class_triangulate(std::span<const Point2> points, int representatives,
                                          const TriangulateConfig& config = {});

/// The class triangle of base triangle `tri_index`, classes oriented
/// along the triangle's cyclic boundary.
PathClassTriangle class_triangle_at(const ClassTriangulation& ct, int tri_index);

struct VertexIncidence {
    int degree = 0;
    int triangle_count = 0;
    friend bool operator==(const VertexIncidence&, const VertexIncidence&) = default;
};

std::map<VertexId, VertexIncidence> adjacency_report(const Triangulation& t);

/// Structural invariant check: edge endpoints exist, triangle edges exist,
/// no orphans, consistent adjacency, interior path samples clear of
/// vertices. Returns human-readable violations; empty means valid.
std::vector<std::string> validate_triangulation(const Triangulation& t);

/// Empty-circumcircle violations with kEpsilon slack for cocircularity.
std::vector<std::string> delaunay_violations(const Triangulation& t);

}  // namespace pathtri

#endif
