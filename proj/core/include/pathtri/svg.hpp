#ifndef PATHTRI_SVG_HPP
#define PATHTRI_SVG_HPP

#include <optional>
#include <string>
#include <vector>

#include "pathtri/collapse.hpp"
#include "pathtri/triangulation.hpp"

namespace pathtri::svg {

struct RenderOptions {
    /// Vertex drawn emphasized (nucleus highlighting).
    std::optional<VertexId> highlight_vertex;
    /// Triangles filled darker (nerve rendering).
    std::vector<int> highlight_triangles;
};

/// Deterministic SVG of the triangulation: filled triangles, edge
/// polylines, vertex dots. View box is the hull box padded by 5%.
std::string render_triangulation(const Triangulation& t, const RenderOptions& opts = {});

/// Deterministic SVG of a collapse trace: residual triangle (or the path
/// triangle's curved boundary when given) with fibers as thin strokes.
std::string render_trace(const CollapseTrace& trace, const PathTriangle* tri = nullptr);

}  // namespace pathtri::svg

#endif
