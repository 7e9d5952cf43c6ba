#include "pathtri/svg.hpp"

#include <algorithm>
#include <sstream>

#include "pathtri/io.hpp"

namespace pathtri::svg {

namespace {

struct ViewBox {
    double min_x, min_y, max_x, max_y;

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    /// SVG's y axis points down; flip within the box.
    double flip_y(double y) const { return min_y + max_y - y; }
};

ViewBox padded_box(const std::vector<Point2>& pts) {
    ViewBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const Point2& p : pts) {
        b.min_x = std::min(b.min_x, p.x);
        b.min_y = std::min(b.min_y, p.y);
        b.max_x = std::max(b.max_x, p.x);
        b.max_y = std::max(b.max_y, p.y);
    }
    const double pad = 0.05 * std::max({b.width(), b.height(), 1.0});
    b.min_x -= pad;
    b.min_y -= pad;
    b.max_x += pad;
    b.max_y += pad;
    return b;
}

std::string num(double v) { return io::format_number(v); }

void open_svg(std::ostringstream& out, const ViewBox& b) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(b.min_x) << ' '
        << num(b.min_y) << ' ' << num(b.width()) << ' ' << num(b.height())
        << "\" width=\"640\" height=\"640\" preserveAspectRatio=\"xMidYMid meet\">\n";
}

void polyline_points(std::ostringstream& out, const std::vector<Point2>& pts, const ViewBox& b) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << num(pts[i].x) << ',' << num(b.flip_y(pts[i].y));
    }
}

double stroke_width(const ViewBox& b) { return std::max(b.width(), b.height()) / 400.0; }

}  // namespace

std::string render_triangulation(const Triangulation& t, const RenderOptions& opts) {
    ViewBox box = padded_box(t.vertices);
    std::ostringstream out;
    open_svg(out, box);
    const double sw = stroke_width(box);

    for (int i = 0; i < t.triangle_count(); ++i) {
        const bool hl = std::find(opts.highlight_triangles.begin(),
                                  opts.highlight_triangles.end(),
                                  i) != opts.highlight_triangles.end();
        const auto v = t.triangles[i].vertex_points();
        out << "  <polygon points=\"";
        polyline_points(out, {v[0], v[1], v[2]}, box);
        out << "\" fill=\"" << (hl ? "#74c476" : "#e8f4e8") << "\" stroke=\"none\"/>\n";
    }
    for (const auto& [k, path] : t.edges) {
        out << "  <polyline points=\"";
        polyline_points(out, path.samples, box);
        out << "\" fill=\"none\" stroke=\"#2b5f8a\" stroke-width=\"" << num(sw) << "\"/>\n";
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        const bool hl = opts.highlight_vertex && *opts.highlight_vertex == v;
        out << "  <circle cx=\"" << num(t.vertices[v].x) << "\" cy=\""
            << num(box.flip_y(t.vertices[v].y)) << "\" r=\"" << num(sw * (hl ? 4.0 : 2.0))
            << "\" fill=\"" << (hl ? "#d62728" : "#1f3350") << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_trace(const CollapseTrace& trace, const PathTriangle* tri) {
    std::vector<Point2> extent(trace.residual.begin(), trace.residual.end());
    if (tri)
        for (const SampledPath& p : tri->paths)
            extent.insert(extent.end(), p.samples.begin(), p.samples.end());
    ViewBox box = padded_box(extent);
    std::ostringstream out;
    open_svg(out, box);
    const double sw = stroke_width(box);

    if (tri) {
        out << "  <path d=\"";
        for (int i = 0; i < 3; ++i) {
            const auto& s = tri->paths[i].samples;
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (i == 0 && j == 0)
                    out << 'M';
                else
                    out << " L";
                out << ' ' << num(s[j].x) << ' ' << num(box.flip_y(s[j].y));
            }
        }
        out << " Z\" fill=\"#e8f4e8\" stroke=\"#2b5f8a\" stroke-width=\"" << num(sw) << "\"/>\n";
    } else {
        out << "  <polygon points=\"";
        polyline_points(out, extent, box);
        out << "\" fill=\"#e8f4e8\" stroke=\"#2b5f8a\" stroke-width=\"" << num(sw) << "\"/>\n";
    }
    for (const SampledPath& f : trace.fibers) {
        out << "  <line x1=\"" << num(f.samples.front().x) << "\" y1=\""
            << num(box.flip_y(f.samples.front().y)) << "\" x2=\"" << num(f.samples.back().x)
            << "\" y2=\"" << num(box.flip_y(f.samples.back().y))
            << "\" stroke=\"#d62728\" stroke-width=\"" << num(sw * 0.5) << "\"/>\n";
    }
    for (Point2 p : trace.residual)
        out << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(box.flip_y(p.y)) << "\" r=\""
            << num(sw * 3.0) << "\" fill=\"#1f3350\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace pathtri::svg
