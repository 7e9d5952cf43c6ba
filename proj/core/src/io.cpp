#include "pathtri/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pathtri::io {

using nlohmann::json;

double quantize(double v) {
    return std::round(v * 1e6) / 1e6;
}

std::string format_number(double v) {
    double q = quantize(v);
    if (q == 0.0) q = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", q);
    return buf;
}

namespace {

/// Minimal ordered JSON value for canonical emission: object keys are
/// emitted in insertion order (callers insert alphabetically), reals in
/// 6-decimal fixed point.
struct JVal {
    enum class Kind { null, boolean, integer, real, string, array, object };
    Kind kind = Kind::null;
    bool b = false;
    long long i = 0;
    double r = 0.0;
    std::string s;
    std::vector<JVal> arr;
    std::vector<std::pair<std::string, JVal>> obj;

    static JVal null() { return {}; }
    static JVal of(bool v) {
        JVal j;
        j.kind = Kind::boolean;
        j.b = v;
        return j;
    }
    static JVal of(long long v) {
        JVal j;
        j.kind = Kind::integer;
        j.i = v;
        return j;
    }
    static JVal of(int v) { return of(static_cast<long long>(v)); }
    static JVal of(double v) {
        JVal j;
        j.kind = Kind::real;
        j.r = v;
        return j;
    }
    static JVal of(std::string v) {
        JVal j;
        j.kind = Kind::string;
        j.s = std::move(v);
        return j;
    }
    static JVal of(const char* v) { return of(std::string(v)); }
    static JVal array() {
        JVal j;
        j.kind = Kind::array;
        return j;
    }
    static JVal object() {
        JVal j;
        j.kind = Kind::object;
        return j;
    }
    JVal& push(JVal v) {
        arr.push_back(std::move(v));
        return *this;
    }
    JVal& set(std::string key, JVal v) {
        obj.emplace_back(std::move(key), std::move(v));
        return *this;
    }
};

JVal point_json(Point2 p) {
    JVal a = JVal::array();
    a.push(JVal::of(p.x));
    a.push(JVal::of(p.y));
    return a;
}

JVal polyline_json(const std::vector<Point2>& pts) {
    JVal a = JVal::array();
    for (Point2 p : pts) a.push(point_json(p));
    return a;
}

void escape_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    out += '"';
}

void dump(const JVal& v, std::string& out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    switch (v.kind) {
        case JVal::Kind::null: out += "null"; break;
        case JVal::Kind::boolean: out += v.b ? "true" : "false"; break;
        case JVal::Kind::integer: out += std::to_string(v.i); break;
        case JVal::Kind::real: out += format_number(v.r); break;
        case JVal::Kind::string: escape_string(out, v.s); break;
        case JVal::Kind::array: {
            if (v.arr.empty()) {
                out += "[]";
                break;
            }
            // flat arrays of scalars stay on one line
            bool scalars = true;
            for (const JVal& e : v.arr)
                if (e.kind == JVal::Kind::array || e.kind == JVal::Kind::object) scalars = false;
            if (scalars) {
                out += '[';
                for (std::size_t i = 0; i < v.arr.size(); ++i) {
                    if (i) out += ", ";
                    dump(v.arr[i], out, 0);
                }
                out += ']';
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < v.arr.size(); ++i) {
                out += pad_in;
                dump(v.arr[i], out, depth + 1);
                if (i + 1 < v.arr.size()) out += ',';
                out += '\n';
            }
            out += pad + ']';
            break;
        }
        case JVal::Kind::object: {
            if (v.obj.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            for (std::size_t i = 0; i < v.obj.size(); ++i) {
                out += pad_in;
                escape_string(out, v.obj[i].first);
                out += ": ";
                dump(v.obj[i].second, out, depth + 1);
                if (i + 1 < v.obj.size()) out += ',';
                out += '\n';
            }
            out += pad + '}';
            break;
        }
    }
}

std::string write_report(const std::string& command, JVal payload) {
    JVal doc = JVal::object();
    doc.set("command", JVal::of(command));
    doc.set("payload", std::move(payload));
    doc.set("schema_version", JVal::of("1"));
    std::string out;
    dump(doc, out, 0);
    out += '\n';
    return out;
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

double read_real(const json& j, const char* what) {
    if (!j.is_number()) throw SchemaError(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw SchemaError(std::string(what) + " must be finite");
    return quantize(v);
}

Point2 read_point(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError(std::string(what) + " must be an [x, y] pair");
    return {read_real(j[0], what), read_real(j[1], what)};
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw SchemaError("invalid JSON");
    return j;
}

}  // namespace

PointSet parse_point_set(const std::string& json_text) {
    const json j = parse_json(json_text);
    const json& pts = require(j, "points");
    if (!pts.is_array()) throw SchemaError("\"points\" must be an array");
    PointSet ps;
    for (const json& p : pts) ps.points.push_back(read_point(p, "point"));
    if (j.contains("labels")) {
        const json& labels = j.at("labels");
        if (!labels.is_array() || labels.size() != ps.points.size())
            throw SchemaError("\"labels\" must align with \"points\"");
        for (const json& l : labels) {
            if (!l.is_string()) throw SchemaError("labels must be strings");
            ps.labels.push_back(l.get<std::string>());
        }
    }
    return ps;
}

std::string write_point_set(const PointSet& ps) {
    JVal doc = JVal::object();
    if (!ps.labels.empty()) {
        JVal labels = JVal::array();
        for (const std::string& l : ps.labels) labels.push(JVal::of(l));
        doc.set("labels", std::move(labels));
    }
    JVal pts = JVal::array();
    for (Point2 p : ps.points) pts.push(point_json(p));
    doc.set("points", std::move(pts));
    std::string out;
    dump(doc, out, 0);
    out += '\n';
    return out;
}

namespace {

JVal triangulation_payload(const Triangulation& t, const ClassTriangulation* ct) {
    JVal payload = JVal::object();
    payload.set("class_representatives", JVal::of(ct ? ct->representatives : 1));
    JVal edges = JVal::array();
    for (const auto& [k, path] : t.edges) {
        JVal e = JVal::object();
        JVal paths = JVal::array();
        if (ct) {
            for (const SampledPath& rep : ct->classes.at(k).representatives)
                paths.push(polyline_json(rep.samples));
        } else {
            paths.push(polyline_json(path.samples));
        }
        e.set("paths", std::move(paths));
        e.set("u", JVal::of(k.first));
        e.set("v", JVal::of(k.second));
        edges.push(std::move(e));
    }
    payload.set("edges", std::move(edges));
    payload.set("fiber_count",
                JVal::of(t.triangles.empty() ? 1 : t.triangles.front().fiber_count));
    payload.set("samples_per_edge", JVal::of(t.samples_per_edge));
    JVal tris = JVal::array();
    for (const PathTriangle& tri : t.triangles) {
        const auto ids = tri.vertex_ids();
        JVal triple = JVal::array();
        for (VertexId v : ids) triple.push(JVal::of(v));
        tris.push(std::move(triple));
    }
    payload.set("triangles", std::move(tris));
    JVal verts = JVal::array();
    for (Point2 p : t.vertices) verts.push(point_json(p));
    payload.set("vertices", std::move(verts));
    return payload;
}

}  // namespace

std::string triangulation_report(const Triangulation& t) {
    return write_report("triangulate", triangulation_payload(t, nullptr));
}

std::string class_triangulation_report(const ClassTriangulation& ct) {
    return write_report("triangulate", triangulation_payload(ct.base, &ct));
}

ClassTriangulation parse_triangulation_report(const std::string& json_text) {
    const json doc = parse_json(json_text);
    const json& cmd = require(doc, "command");
    if (!cmd.is_string() || cmd.get<std::string>() != "triangulate")
        throw SchemaError("not a triangulate report");
    const json& payload = require(doc, "payload");

    ClassTriangulation ct;
    Triangulation& t = ct.base;

    const json& verts = require(payload, "vertices");
    if (!verts.is_array() || verts.size() < 3) throw SchemaError("need at least 3 vertices");
    for (const json& v : verts) t.vertices.push_back(read_point(v, "vertex"));
    const int n = t.vertex_count();

    const json& spe = require(payload, "samples_per_edge");
    if (!spe.is_number_integer() || spe.get<int>() < 2)
        throw SchemaError("samples_per_edge must be an integer >= 2");
    t.samples_per_edge = spe.get<int>();

    const json& fc = require(payload, "fiber_count");
    if (!fc.is_number_integer() || fc.get<int>() < 1)
        throw SchemaError("fiber_count must be a positive integer");
    const int fiber_count = fc.get<int>();

    const json& reps_j = require(payload, "class_representatives");
    if (!reps_j.is_number_integer() || reps_j.get<int>() < 1)
        throw SchemaError("class_representatives must be a positive integer");
    ct.representatives = reps_j.get<int>();

    const json& edges = require(payload, "edges");
    if (!edges.is_array()) throw SchemaError("\"edges\" must be an array");
    for (const json& e : edges) {
        const json& uj = require(e, "u");
        const json& vj = require(e, "v");
        if (!uj.is_number_integer() || !vj.is_number_integer())
            throw SchemaError("edge endpoints must be integers");
        const VertexId u = uj.get<int>(), v = vj.get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw SchemaError("edge endpoint out of range");
        if (u >= v) throw SchemaError("edge keys must satisfy u < v");
        const json& paths = require(e, "paths");
        if (!paths.is_array() || paths.empty())
            throw SchemaError("edge must carry at least one path");
        if (static_cast<int>(paths.size()) != ct.representatives)
            throw SchemaError("edge path count disagrees with class_representatives");
        std::vector<SampledPath> reps;
        for (const json& pj : paths) {
            if (!pj.is_array() || pj.size() < 2) throw SchemaError("path needs >= 2 samples");
            SampledPath sp;
            sp.start = u;
            sp.end = v;
            for (const json& s : pj) sp.samples.push_back(read_point(s, "sample"));
            if (!coincident(sp.start_point(), t.vertices[u]) ||
                !coincident(sp.end_point(), t.vertices[v]))
                throw SchemaError("path endpoints disagree with vertex table");
            reps.push_back(std::move(sp));
        }
        const EdgeKey key{u, v};
        if (t.edges.count(key)) throw SchemaError("duplicate edge");
        t.edges.emplace(key, reps.front());
        try {
            ct.classes.emplace(key, make_path_class(std::move(reps)));
        } catch (const std::invalid_argument& ex) {
            throw SchemaError(ex.what());
        }
    }

    const json& tris = require(payload, "triangles");
    if (!tris.is_array()) throw SchemaError("\"triangles\" must be an array");
    for (const json& tj : tris) {
        if (!tj.is_array() || tj.size() != 3) throw SchemaError("triangle must be a vertex triple");
        std::array<VertexId, 3> ids{};
        for (int i = 0; i < 3; ++i) {
            if (!tj[i].is_number_integer()) throw SchemaError("triangle vertex must be an integer");
            ids[i] = tj[i].get<int>();
            if (ids[i] < 0 || ids[i] >= n) throw SchemaError("triangle vertex out of range");
        }
        std::array<SampledPath, 3> sides;
        for (int i = 0; i < 3; ++i) {
            const VertexId a = ids[i], b = ids[(i + 1) % 3];
            const auto it = t.edges.find(edge_key(a, b));
            if (it == t.edges.end()) throw SchemaError("triangle references missing edge");
            sides[i] = it->second.start == a ? it->second : reverse_path(it->second);
        }
        try {
            t.triangles.push_back(make_path_triangle(std::move(sides[0]), std::move(sides[1]),
                                                     std::move(sides[2]), TriangleKind::straight,
                                                     fiber_count));
        } catch (const std::invalid_argument& ex) {
            throw SchemaError(ex.what());
        }
    }

    for (const auto& [k, path] : t.edges) {
        t.vertex_edges[k.first].push_back(k);
        t.vertex_edges[k.second].push_back(k);
    }
    for (int i = 0; i < t.triangle_count(); ++i)
        for (VertexId v : t.triangles[i].vertex_ids()) t.vertex_triangles[v].push_back(i);
    for (int v = 0; v < n; ++v) {
        t.vertex_edges.try_emplace(v);
        t.vertex_triangles.try_emplace(v);
    }
    return ct;
}

std::string cycles_report(const std::vector<PathCycle>& cycles) {
    JVal arr = JVal::array();
    for (const PathCycle& c : cycles) {
        JVal cj = JVal::object();
        cj.set("kind", JVal::of(c.size() == 3 ? "triangle" : "hull"));
        cj.set("n", JVal::of(c.size()));
        JVal verts = JVal::array();
        for (int i = 0; i < c.size(); ++i) verts.push(JVal::of(c.vertex_at(i)));
        cj.set("vertices", std::move(verts));
        arr.push(std::move(cj));
    }
    JVal payload = JVal::object();
    payload.set("cycles", std::move(arr));
    return write_report("cycles", payload);
}

namespace {

JVal presentation_json(const Presentation& p) {
    JVal pj = JVal::object();
    JVal basis = JVal::array();
    for (VertexId g : p.basis) basis.push(JVal::of(g));
    pj.set("basis", std::move(basis));
    pj.set("carrier",
           JVal::of(p.carrier->kind == CarrierKind::cycle ? "cycle" : "complex"));
    pj.set("generator", JVal::of(p.generator()));
    JVal rels = JVal::array();
    for (const auto& [v, word] : p.relations) {
        JVal rj = JVal::object();
        JVal terms = JVal::array();
        for (const WordTerm& term : word.terms) {
            JVal tj = JVal::array();
            tj.push(JVal::of(term.coefficient));
            tj.push(JVal::of(term.generator));
            terms.push(std::move(tj));
        }
        rj.set("terms", std::move(terms));
        rj.set("vertex", JVal::of(v));
        rels.push(std::move(rj));
    }
    pj.set("relations", std::move(rels));
    return pj;
}

}  // namespace

std::string presentation_report(const Presentation& p) {
    JVal payload = JVal::object();
    payload.set("presentation", presentation_json(p));
    return write_report("present", payload);
}

std::string system_report(const HomotopySystem& s, const RealizationReport& r) {
    JVal payload = JVal::object();
    payload.set("full", presentation_json(s.full));
    JVal realization = JVal::object();
    realization.set("cycles_recovered", JVal::of(r.cycles_recovered));
    realization.set("ok", JVal::of(r.ok));
    realization.set("triangle_count", JVal::of(r.triangle_count));
    realization.set("vertices_checked", JVal::of(r.vertices_checked));
    realization.set("vertices_hit", JVal::of(r.vertices_hit));
    payload.set("realization", std::move(realization));
    JVal stars = JVal::array();
    for (const auto& [v, pres] : s.stars) {
        JVal sj = JVal::object();
        sj.set("presentation", presentation_json(pres));
        sj.set("vertex", JVal::of(v));
        stars.push(std::move(sj));
    }
    payload.set("stars", std::move(stars));
    return write_report("present", payload);
}

namespace {

JVal nerve_json(const Nerve& n) {
    JVal nj = JVal::object();
    nj.set("nucleus", JVal::of(n.nucleus));
    nj.set("triangle_count", JVal::of(static_cast<int>(n.triangles.size())));
    JVal tris = JVal::array();
    for (int t : n.triangles) tris.push(JVal::of(t));
    nj.set("triangles", std::move(tris));
    return nj;
}

}  // namespace

std::string nerve_report(const Nerve& n) {
    JVal payload = JVal::object();
    payload.set("nerve", nerve_json(n));
    return write_report("nerve", payload);
}

std::string nerve_census_report(const std::vector<Nerve>& census) {
    JVal arr = JVal::array();
    for (const Nerve& n : census) arr.push(nerve_json(n));
    JVal payload = JVal::object();
    payload.set("nerves", std::move(arr));
    return write_report("nerve", payload);
}

std::string cover_report(const CoverReport& r) {
    JVal payload = JVal::object();
    payload.set("covers", JVal::of(r.covers));
    JVal global = JVal::array();
    for (VertexId v : r.global_intersection) global.push(JVal::of(v));
    payload.set("global_intersection", std::move(global));
    payload.set("hull_area", JVal::of(r.hull_area));
    payload.set("intersections_ok", JVal::of(r.intersections_ok));
    payload.set("nerve_count", JVal::of(r.nerve_count));
    payload.set("sampled_points", JVal::of(r.sampled_points));
    payload.set("sampled_points_covered", JVal::of(r.sampled_points_covered));
    payload.set("triangle_area_sum", JVal::of(r.triangle_area_sum));
    if (r.witness) {
        JVal w = JVal::array();
        w.push(JVal::of(r.witness->first));
        w.push(JVal::of(r.witness->second));
        payload.set("witness", std::move(w));
    } else {
        payload.set("witness", JVal::null());
    }
    return write_report("cover-check", payload);
}

namespace {

JVal trace_json(const CollapseTrace& trace) {
    JVal fibers = JVal::array();
    for (const SampledPath& f : trace.fibers) {
        JVal fj = JVal::object();
        fj.set("base_point", point_json(f.samples.back()));
        fj.set("top_point", point_json(f.samples.front()));
        fibers.push(std::move(fj));
    }
    return fibers;
}

JVal residual_json(const CollapseTrace& trace) {
    JVal res = JVal::array();
    for (Point2 p : trace.residual) res.push(point_json(p));
    return res;
}

}  // namespace

std::string cone_trace_report(const ConeSpec& spec, const CollapseTrace& trace) {
    JVal payload = JVal::object();
    payload.set("apex", point_json(spec.apex));
    JVal base = JVal::array();
    base.push(point_json(spec.base_b));
    base.push(point_json(spec.base_c));
    payload.set("base", std::move(base));
    payload.set("fiber_count", JVal::of(static_cast<int>(trace.fibers.size())));
    payload.set("fibers", trace_json(trace));
    payload.set("hausdorff_bound", JVal::of(trace.hausdorff_bound));
    payload.set("residual", residual_json(trace));
    return write_report("collapse-cone", payload);
}

std::string sphere_trace_report(const SphereSpec& spec, const CollapseTrace& trace,
                                const PathTriangle& tri) {
    JVal payload = JVal::object();
    payload.set("center", point_json(spec.center));
    payload.set("fiber_count", JVal::of(static_cast<int>(trace.fibers.size())));
    payload.set("fibers", trace_json(trace));
    payload.set("hausdorff_bound", JVal::of(trace.hausdorff_bound));
    payload.set("radius", JVal::of(spec.radius));
    payload.set("residual", residual_json(trace));
    JVal tj = JVal::object();
    tj.set("kind", JVal::of("round"));
    JVal paths = JVal::array();
    for (const SampledPath& p : tri.paths) paths.push(polyline_json(p.samples));
    tj.set("paths", std::move(paths));
    JVal verts = JVal::array();
    for (Point2 p : tri.vertex_points()) verts.push(point_json(p));
    tj.set("vertices", std::move(verts));
    payload.set("triangle", std::move(tj));
    return write_report("collapse-sphere", payload);
}

std::string collapse_sequence_report(const CollapseSequence& seq) {
    JVal steps = JVal::array();
    for (const ElementaryStep& s : seq.steps) {
        JVal sj = JVal::object();
        JVal ej = JVal::array();
        ej.push(JVal::of(s.free_edge.first));
        ej.push(JVal::of(s.free_edge.second));
        sj.set("edge", std::move(ej));
        sj.set("face", s.kind == StepKind::face ? JVal::of(s.removed_face) : JVal::null());
        sj.set("kind", JVal::of(s.kind == StepKind::face ? "face" : "vertex"));
        sj.set("stage", JVal::of(s.stage));
        sj.set("vertex",
               s.kind == StepKind::vertex ? JVal::of(s.removed_vertex) : JVal::null());
        steps.push(std::move(sj));
    }
    JVal payload = JVal::object();
    payload.set("steps", std::move(steps));
    payload.set("terminal_vertex", JVal::of(seq.terminal_vertex));
    return write_report("collapse-seq", payload);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PointSet read_point_set(const std::string& path) {
    return parse_point_set(read_text_file(path));
}

ClassTriangulation read_triangulation_report(const std::string& path) {
    return parse_triangulation_report(read_text_file(path));
}

}  // namespace pathtri::io
