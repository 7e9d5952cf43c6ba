#ifndef PATHTRI_IO_HPP
#define PATHTRI_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathtri/collapse.hpp"
#include "pathtri/cycles.hpp"
#include "pathtri/nerve.hpp"
#include "pathtri/presentation.hpp"
#include "pathtri/triangulation.hpp"

namespace pathtri::io {

/// Malformed input file or JSON not matching a report schema.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing file, unwritable path).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coordinates are carried at 6-decimal fixed-point resolution; inputs are
/// quantized on read so emitted files round-trip bit-exactly.
double quantize(double v);

/// Fixed-point "%.6f" rendering of a quantized value (no negative zero).
std::string format_number(double v);

struct PointSet {
    std::vector<Point2> points;
    std::vector<std::string> labels;  // empty or aligned with points
};

PointSet parse_point_set(const std::string& json_text);
PointSet read_point_set(const std::string& path);

std::string write_point_set(const PointSet& ps);

/// Reports share the envelope {"command", "payload", "schema_version"}
/// with alphabetical keys, 2-space indent, and a trailing newline.
std::string triangulation_report(const Triangulation& t);
std::string class_triangulation_report(const ClassTriangulation& ct);

/// Rebuilds the triangulation (and its path classes when present) from a
/// triangulate report. Throws SchemaError on malformed input.
ClassTriangulation parse_triangulation_report(const std::string& json_text);
ClassTriangulation read_triangulation_report(const std::string& path);

std::string cycles_report(const std::vector<PathCycle>& cycles);
std::string presentation_report(const Presentation& p);
std::string system_report(const HomotopySystem& s, const RealizationReport& r);
std::string nerve_report(const Nerve& n);
std::string nerve_census_report(const std::vector<Nerve>& census);
std::string cover_report(const CoverReport& r);
std::string cone_trace_report(const ConeSpec& spec, const CollapseTrace& trace);
std::string sphere_trace_report(const SphereSpec& spec, const CollapseTrace& trace,
                                const PathTriangle& tri);
std::string collapse_sequence_report(const CollapseSequence& seq);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace pathtri::io

#endif
