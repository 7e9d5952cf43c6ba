#ifndef PATHTRI_PRESENTATION_HPP
#define PATHTRI_PRESENTATION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pathtri/cycles.hpp"
#include "pathtri/triangulation.hpp"

namespace pathtri {

/// One term k*g of a relation word.
struct WordTerm {
    long long coefficient = 0;
    VertexId generator = -1;
};

/// Relation word v := sum k_i * g_j. On complex carriers the word also
/// names its target vertex: evaluation replays the breadth-first witness
/// from the generator toward that target.
struct Word {
    std::vector<WordTerm> terms;
    std::optional<VertexId> target;
};

enum class CarrierKind { cycle, complex };

/// What a presentation presents: a path cycle, or the 1-skeleton of a
/// (sub)complex. Immutable and shared between presentations.
struct Carrier {
    CarrierKind kind = CarrierKind::complex;
    std::optional<PathCycle> cycle;
    std::vector<VertexId> vertices;                       // complex carriers
    std::vector<EdgeKey> edges;                           // complex carriers
    std::map<VertexId, std::vector<VertexId>> adjacency;  // sorted neighbor lists
};

/// Free group presentation G(B,+): single-generator basis, one relation
/// word per carrier vertex, each evaluating back to its keyed vertex.
struct Presentation {
    std::vector<VertexId> basis;
    std::map<VertexId, Word> relations;
    std::shared_ptr<const Carrier> carrier;
    int generator_index = 0;  // position of the generator in a cycle carrier

    // breadth-first data for complex carriers (witness replay)
    std::map<VertexId, int> distance;
    std::map<VertexId, VertexId> parent;

    VertexId generator() const { return basis.front(); }
};

/// Presentation of a cycle with basis {h_{g_index}(0)}: the vertex at
/// position (g_index + k) mod n gets the single-term word (k, g).
Presentation present_cycle(const PathCycle& c, int g_index);

/// Presentation of a triangulation with basis {g}: each vertex v gets the
/// word (k, g) where k is its breadth-first edge distance from g.
/// Throws std::invalid_argument for an unknown generator vertex.
Presentation present_triangulation(const Triangulation& t, VertexId g);

/// Deterministic word evaluation. Cycle carriers move by mod-n index
/// arithmetic; complex carriers replay the witness walk toward the word's
/// target. Empty words evaluate to the generator. Throws
/// std::invalid_argument for foreign generators, std::domain_error when a
/// replay step count exceeds the witness length.
VertexId evaluate_word(const Presentation& p, const Word& word);

/// Presentations of the full complex (generated by the maximal nucleus)
/// and of every vertex-star subcomplex (generated by its own vertex).
struct HomotopySystem {
    Triangulation carrier;
    Presentation full;
    std::map<VertexId, Presentation> stars;
};

HomotopySystem build_homotopy_system(const Triangulation& t);

/// Issues from the containment check "every star carrier is a
/// sub-collection of the full carrier"; empty means valid.
std::vector<std::string> validate_system(const HomotopySystem& s);

struct RealizationDefect {
    VertexId vertex = -1;
    std::string reason;
};

struct RealizationReport {
    bool ok = false;
    int vertices_checked = 0;  // across the full presentation and all stars
    int vertices_hit = 0;
    int full_vertices_checked = 0;  // full presentation only
    int full_vertices_hit = 0;
    int cycles_recovered = 0;
    int triangle_count = 0;
    std::vector<RealizationDefect> defects;
};

/// Geometric realization check: every relation of every presentation must
/// evaluate to its keyed vertex, and the full carrier's triangle-boundary
/// 1-cycles must all pass the closed-chain validator. Defective relations
/// are reported, not thrown.
RealizationReport realize_system(const HomotopySystem& s);

}  // namespace pathtri

#endif
