// pathtri: path triangulations, cycles, free group presentations, nerve
// covers, and Zeeman-style collapses from the command line.

#include <array>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathtri/collapse.hpp"
#include "pathtri/cycles.hpp"
#include "pathtri/io.hpp"
#include "pathtri/nerve.hpp"
#include "pathtri/presentation.hpp"
#include "pathtri/svg.hpp"
#include "pathtri/triangulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

void emit(const std::string& content, const std::string& output_path) {
    if (output_path.empty())
        std::cout << content;
    else
        pathtri::io::write_text_file(output_path, content);
}

std::uint64_t class_seed() {
    if (const char* env = std::getenv("PATHTRI_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw pathtri::io::SchemaError("PATHTRI_SEED must be an unsigned integer");
        }
    }
    return 42;
}

std::vector<double> parse_csv_numbers(const std::string& text, std::size_t expect,
                                      const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "expected comma-separated numbers");
        }
    }
    if (out.size() != expect)
        throw CLI::ValidationError(what, "expected " + std::to_string(expect) + " numbers");
    return out;
}

struct Cli {
    CLI::App app{"path triangulation toolkit", "pathtri"};

    // triangulate
    std::string tri_input, tri_output, tri_svg;
    int tri_samples = 16;
    int tri_class_reps = 1;

    // commands consuming tri.json
    std::string input, output, svg_path;
    std::optional<int> generator;
    bool system_flag = false;
    std::optional<int> nerve_vertex;
    bool mnc_flag = false;

    // collapse-cone / collapse-sphere
    std::string apex_text, base_text, center_text, angles_text;
    double radius = 0.0;
    int fibers = 0;
    int shape_samples = 16;

    CLI::App* cmd_triangulate = nullptr;
    CLI::App* cmd_cycles = nullptr;
    CLI::App* cmd_present = nullptr;
    CLI::App* cmd_nerve = nullptr;
    CLI::App* cmd_cover = nullptr;
    CLI::App* cmd_cone = nullptr;
    CLI::App* cmd_sphere = nullptr;
    CLI::App* cmd_seq = nullptr;
};

void configure(Cli& c) {
    c.app.require_subcommand(1);

    c.cmd_triangulate = c.app.add_subcommand("triangulate", "Delaunay path triangulation");
    c.cmd_triangulate->add_option("--input", c.tri_input, "points.json")->required();
    c.cmd_triangulate->add_option("--output", c.tri_output, "tri.json")->required();
    c.cmd_triangulate->add_option("--svg", c.tri_svg, "render to SVG file");
    c.cmd_triangulate->add_option("--samples", c.tri_samples, "samples per edge path");
    c.cmd_triangulate->add_option("--class-reps", c.tri_class_reps,
                                  "path-class representatives per edge");

    c.cmd_cycles = c.app.add_subcommand("cycles", "triangle boundary and hull cycles");
    c.cmd_cycles->add_option("--input", c.input, "tri.json")->required();
    c.cmd_cycles->add_option("--output", c.output, "cycles.json (default stdout)");

    c.cmd_present = c.app.add_subcommand("present", "free group presentation");
    c.cmd_present->add_option("--input", c.input, "tri.json")->required();
    c.cmd_present->add_option("--generator", c.generator, "generator vertex id");
    c.cmd_present->add_flag("--system", c.system_flag, "full homotopy system with realization");
    c.cmd_present->add_option("--output", c.output, "report file (default stdout)");

    c.cmd_nerve = c.app.add_subcommand("nerve", "Alexandrov-Hopf nerves");
    c.cmd_nerve->add_option("--input", c.input, "tri.json")->required();
    c.cmd_nerve->add_option("--vertex", c.nerve_vertex, "nerve at this vertex");
    c.cmd_nerve->add_flag("--mnc", c.mnc_flag, "maximal nucleus complex");
    c.cmd_nerve->add_option("--svg", c.svg_path, "render highlighted nerve to SVG file");
    c.cmd_nerve->add_option("--output", c.output, "report file (default stdout)");

    c.cmd_cover = c.app.add_subcommand("cover-check", "good-cover verdict");
    c.cmd_cover->add_option("--input", c.input, "tri.json")->required();
    c.cmd_cover->add_option("--output", c.output, "report file (default stdout)");

    c.cmd_cone = c.app.add_subcommand("collapse-cone", "cone onto its silhouette triangle");
    c.cmd_cone->add_option("--apex", c.apex_text, "x,y")->required();
    c.cmd_cone->add_option("--base", c.base_text, "x1,y1,x2,y2")->required();
    c.cmd_cone->add_option("--fibers", c.fibers, "fiber count m")->required();
    c.cmd_cone->add_option("--svg", c.svg_path, "render trace to SVG file");
    c.cmd_cone->add_option("--output", c.output, "report file (default stdout)");

    c.cmd_sphere = c.app.add_subcommand("collapse-sphere", "billiard ball onto a round triangle");
    c.cmd_sphere->add_option("--center", c.center_text, "x,y")->required();
    c.cmd_sphere->add_option("--radius", c.radius, "circle radius")->required();
    c.cmd_sphere->add_option("--angles", c.angles_text, "a1,a2,a3 in degrees")->required();
    c.cmd_sphere->add_option("--fibers", c.fibers, "fiber count m")->required();
    c.cmd_sphere->add_option("--samples", c.shape_samples, "samples per arc");
    c.cmd_sphere->add_option("--svg", c.svg_path, "render trace to SVG file");
    c.cmd_sphere->add_option("--output", c.output, "report file (default stdout)");

    c.cmd_seq = c.app.add_subcommand("collapse-seq", "greedy elementary collapse sequence");
    c.cmd_seq->add_option("--input", c.input, "tri.json")->required();
    c.cmd_seq->add_option("--output", c.output, "report file (default stdout)");
}

int run(Cli& c) {
    namespace io = pathtri::io;
    using namespace pathtri;

    if (c.cmd_triangulate->parsed()) {
        const io::PointSet ps = io::read_point_set(c.tri_input);
        TriangulateConfig config;
        config.samples_per_edge = c.tri_samples;
        config.seed = class_seed();
        if (c.tri_class_reps > 1) {
            const ClassTriangulation ct =
                path_class_triangulate(ps.points, c.tri_class_reps, config);
            io::write_text_file(c.tri_output, io::class_triangulation_report(ct));
            if (!c.tri_svg.empty())
                io::write_text_file(c.tri_svg, svg::render_triangulation(ct.base));
        } else {
            const Triangulation t = triangulate(ps.points, config);
            io::write_text_file(c.tri_output, io::triangulation_report(t));
            if (!c.tri_svg.empty()) io::write_text_file(c.tri_svg, svg::render_triangulation(t));
        }
        return kExitOk;
    }

    if (c.cmd_cycles->parsed()) {
        const Triangulation t = io::read_triangulation_report(c.input).base;
        emit(io::cycles_report(enumerate_cycles(t)), c.output);
        return kExitOk;
    }

    if (c.cmd_present->parsed()) {
        const Triangulation t = io::read_triangulation_report(c.input).base;
        if (c.system_flag) {
            const HomotopySystem sys = build_homotopy_system(t);
            emit(io::system_report(sys, realize_system(sys)), c.output);
        } else {
            const VertexId g =
                c.generator ? *c.generator : maximal_nucleus_complex(t).nucleus;
            emit(io::presentation_report(present_triangulation(t, g)), c.output);
        }
        return kExitOk;
    }

    if (c.cmd_nerve->parsed()) {
        const Triangulation t = io::read_triangulation_report(c.input).base;
        Nerve nrv;
        if (c.nerve_vertex)
            nrv = nerve_at(t, *c.nerve_vertex);
        else if (c.mnc_flag)
            nrv = maximal_nucleus_complex(t);
        if (c.nerve_vertex || c.mnc_flag) {
            emit(io::nerve_report(nrv), c.output);
            if (!c.svg_path.empty()) {
                svg::RenderOptions opts;
                opts.highlight_vertex = nrv.nucleus;
                opts.highlight_triangles = nrv.triangles;
                io::write_text_file(c.svg_path, svg::render_triangulation(t, opts));
            }
        } else {
            emit(io::nerve_census_report(nerve_census(t)), c.output);
            if (!c.svg_path.empty())
                io::write_text_file(c.svg_path, svg::render_triangulation(t));
        }
        return kExitOk;
    }

    if (c.cmd_cover->parsed()) {
        const Triangulation t = io::read_triangulation_report(c.input).base;
        emit(io::cover_report(check_good_cover(t)), c.output);
        return kExitOk;
    }

    if (c.cmd_cone->parsed()) {
        const auto a = parse_csv_numbers(c.apex_text, 2, "--apex");
        const auto b = parse_csv_numbers(c.base_text, 4, "--base");
        const ConeSpec spec{{io::quantize(a[0]), io::quantize(a[1])},
                            {io::quantize(b[0]), io::quantize(b[1])},
                            {io::quantize(b[2]), io::quantize(b[3])}};
        const CollapseTrace trace = collapse_cone(spec, c.fibers);
        emit(io::cone_trace_report(spec, trace), c.output);
        if (!c.svg_path.empty()) io::write_text_file(c.svg_path, svg::render_trace(trace));
        return kExitOk;
    }

    if (c.cmd_sphere->parsed()) {
        const auto ctr = parse_csv_numbers(c.center_text, 2, "--center");
        const auto ang = parse_csv_numbers(c.angles_text, 3, "--angles");
        const SphereSpec spec =
            sphere_from_angles({io::quantize(ctr[0]), io::quantize(ctr[1])},
                               io::quantize(c.radius), {ang[0], ang[1], ang[2]});
        const auto [trace, tri] = collapse_sphere(spec, c.fibers, c.shape_samples);
        emit(io::sphere_trace_report(spec, trace, tri), c.output);
        if (!c.svg_path.empty()) io::write_text_file(c.svg_path, svg::render_trace(trace, &tri));
        return kExitOk;
    }

    if (c.cmd_seq->parsed()) {
        const Triangulation t = io::read_triangulation_report(c.input).base;
        emit(io::collapse_sequence_report(elementary_collapse_sequence(t)), c.output);
        return kExitOk;
    }

    return kExitIo;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    configure(cli);
    try {
        cli.app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    }

    try {
        return run(cli);
    } catch (const pathtri::io::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitIo;
    } catch (const pathtri::io::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
