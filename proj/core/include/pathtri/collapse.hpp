#ifndef PATHTRI_COLLAPSE_HPP
#define PATHTRI_COLLAPSE_HPP

#include <array>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pathtri/geometry.hpp"
#include "pathtri/triangulation.hpp"

namespace pathtri {

/// Planar silhouette of a cone: apex above a base segment b-c.
struct ConeSpec {
    Point2 apex;
    Point2 base_b;
    Point2 base_c;
};

/// Billiard-ball slice: a circle with three boundary vertices on it.
struct SphereSpec {
    Point2 center;
    double radius = 0.0;
    std::array<Point2, 3> boundary;
};

/// SphereSpec from boundary vertex angles in degrees. Throws
/// std::invalid_argument for non-positive radius or duplicate angles.
SphereSpec sphere_from_angles(Point2 center, double radius, std::array<double, 3> angles_deg);

/// Record of a fiber-family collapse: m fibers perpendicular to the base
/// chord, each a 2-sample path with endpoint 0 on the non-base boundary
/// and endpoint 1 on the base. hausdorff_bound is the measured one-sided
/// Hausdorff distance from a dense deterministic grid of residual-triangle
/// points to the fiber union.
struct CollapseTrace {
    std::vector<Point2> vertices;      // trace-local table: residual corners, then fiber endpoints
    std::vector<SampledPath> fibers;
    std::array<Point2, 3> residual;    // apex, base_b, base_c
    double hausdorff_bound = 0.0;
};

/// Collapse the cone onto its silhouette triangle through m uniform-station
/// fibers. The bound |bc|/m holds for the measured Hausdorff distance.
/// Throws std::invalid_argument for collinear specs or m < 2.
CollapseTrace collapse_cone(const ConeSpec& spec, int fiber_count);

/// Collapse onto a straight path triangle (v1 = b, v2 = apex, v3 = c) whose
/// boundary paths carry `samples` points each.
std::pair<CollapseTrace, PathTriangle> collapse_cone_to_path_triangle(const ConeSpec& spec,
                                                                      int fiber_count,
                                                                      int samples);

/// Collapse a billiard ball onto the round path triangle whose edges are
/// the minor circular arcs between consecutive boundary vertices. Fibers
/// are built on the chord of the base arc. Throws std::invalid_argument
/// when vertices are off the circle, duplicated, or antipodal.
std::pair<CollapseTrace, PathTriangle> collapse_sphere(const SphereSpec& spec, int fiber_count,
                                                       int samples);

enum class StepKind { face, vertex };

/// One elementary collapse: a (free edge, unique incident face) pair, or a
/// (free vertex, unique incident edge) pair once no 2-cells remain.
struct ElementaryStep {
    int stage = 0;
    StepKind kind = StepKind::face;
    int removed_face = -1;       // face steps
    EdgeKey free_edge{-1, -1};
    VertexId removed_vertex = -1;  // vertex steps
};

struct CollapseSequence {
    std::vector<ElementaryStep> steps;
    VertexId terminal_vertex = -1;
};

/// Raised when greedy free-pair collapsing cannot continue; the complex
/// is reported stuck rather than resolved by backtracking.
struct CollapseStuck : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Greedy elementary collapse of the triangulation down to one vertex.
/// Face steps take the smallest free edge; vertex steps remove the
/// largest-id leaf so the sequence terminates at the smallest vertex.
CollapseSequence elementary_collapse_sequence(const Triangulation& t);

/// Cells alive before a given step (or after the last).
struct ComplexSnapshot {
    std::set<int> faces;
    std::set<EdgeKey> edges;
    std::set<VertexId> vertices;
};

/// Replays the steps against the triangulation, verifying each removed
/// pair is free at its stage, and returns every intermediate complex
/// (snapshots[i] = state before step i; back() = terminal state).
/// Throws std::invalid_argument when a step is not a free pair.
std::vector<ComplexSnapshot> replay_collapse(const Triangulation& t, const CollapseSequence& seq);

}  // namespace pathtri

#endif
