#ifndef PATHTRI_NERVE_HPP
#define PATHTRI_NERVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pathtri/triangulation.hpp"

namespace pathtri {

/// Alexandrov-Hopf nerve: the triangles attached to a nucleus vertex.
/// Their pairwise intersection contains the nucleus, so it is nonvoid.
struct Nerve {
    VertexId nucleus = -1;
    std::vector<int> triangles;  // ascending triangle indices
};

/// Nerve at vertex v; non-empty for every vertex of a valid triangulation.
/// Throws std::invalid_argument for an unknown vertex.
Nerve nerve_at(const Triangulation& t, VertexId v);

/// One nerve per vertex, in vertex order (exactly n nerves).
std::vector<Nerve> nerve_census(const Triangulation& t);

/// The nerve with the most triangles; ties go to the smallest nucleus id.
Nerve maximal_nucleus_complex(const Triangulation& t);

struct CoverReport {
    bool covers = false;            // union of triangles fills the hull
    bool intersections_ok = false;  // nonvoid intersections contractible
    int nerve_count = 0;
    std::optional<std::pair<int, int>> witness;  // failing triangle pair

    double hull_area = 0.0;
    double triangle_area_sum = 0.0;
    int sampled_points = 0;
    int sampled_points_covered = 0;
    /// Vertices common to all triangles (recorded, not asserted: empty for
    /// most complexes, a single nucleus for star-shaped ones).
    std::vector<VertexId> global_intersection;

    bool good_cover() const { return covers && intersections_ok; }
};

/// Good-cover verdict: area accounting plus point-sampling for coverage,
/// combinatorial-plus-geometric classification of pairwise intersections
/// (vertex / edge / empty pass; positive-area overlap fails with witness),
/// and the edge-manifold condition bounding k-wise intersections.
CoverReport check_good_cover(const Triangulation& t);

}  // namespace pathtri

#endif
