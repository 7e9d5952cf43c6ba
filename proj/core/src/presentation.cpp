#include "pathtri/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "pathtri/nerve.hpp"

namespace pathtri {

namespace {

int mod_index(long long v, int n) {
    long long r = v % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

/// Breadth-first distances and smallest-id parents over a carrier skeleton.
void bfs_carrier(const Carrier& c, VertexId source, std::map<VertexId, int>& dist,
                 std::map<VertexId, VertexId>& parent) {
    dist.clear();
    parent.clear();
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        const auto it = c.adjacency.find(v);
        if (it == c.adjacency.end()) continue;
        for (VertexId w : it->second) {
            if (!dist.count(w)) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    for (VertexId w : c.vertices) {
        const auto dit = dist.find(w);
        if (dit == dist.end() || dit->second == 0) continue;
        for (VertexId u : c.adjacency.at(w)) {
            const auto uit = dist.find(u);
            if (uit != dist.end() && uit->second == dit->second - 1) {
                const auto pit = parent.find(w);
                if (pit == parent.end() || u < pit->second) parent[w] = u;
            }
        }
    }
}

Presentation present_complex_carrier(std::shared_ptr<const Carrier> carrier, VertexId g) {
    Presentation p;
    p.carrier = std::move(carrier);
    p.basis = {g};
    bfs_carrier(*p.carrier, g, p.distance, p.parent);
    for (VertexId v : p.carrier->vertices) {
        const auto it = p.distance.find(v);
        if (it == p.distance.end())
            throw std::invalid_argument("present: carrier is not connected from generator " +
                                        std::to_string(g));
        Word w;
        w.terms = {WordTerm{it->second, g}};
        w.target = v;
        p.relations.emplace(v, std::move(w));
    }
    return p;
}

}  // namespace

Presentation present_cycle(const PathCycle& c, int g_index) {
    if (g_index < 0 || g_index >= c.size())
        throw std::invalid_argument("present_cycle: generator index out of range");
    auto carrier = std::make_shared<Carrier>();
    carrier->kind = CarrierKind::cycle;
    carrier->cycle = c;

    Presentation p;
    p.carrier = std::move(carrier);
    p.generator_index = g_index;
    const VertexId g = c.vertex_at(g_index);
    p.basis = {g};
    for (int k = 0; k < c.size(); ++k) {
        const VertexId v = c.vertex_at(mod_index(g_index + k, c.size()));
        Word w;
        w.terms = {WordTerm{k, g}};
        p.relations.emplace(v, std::move(w));
    }
    return p;
}

namespace {

std::shared_ptr<Carrier> skeleton_carrier(const std::vector<VertexId>& vertices,
                                          const std::vector<EdgeKey>& edges) {
    auto carrier = std::make_shared<Carrier>();
    carrier->kind = CarrierKind::complex;
    carrier->vertices = vertices;
    std::sort(carrier->vertices.begin(), carrier->vertices.end());
    carrier->edges = edges;
    std::sort(carrier->edges.begin(), carrier->edges.end());
    for (const EdgeKey& k : carrier->edges) {
        carrier->adjacency[k.first].push_back(k.second);
        carrier->adjacency[k.second].push_back(k.first);
    }
    for (auto& [v, nbrs] : carrier->adjacency) std::sort(nbrs.begin(), nbrs.end());
    return carrier;
}

}  // namespace

Presentation present_triangulation(const Triangulation& t, VertexId g) {
    if (g < 0 || g >= t.vertex_count())
        throw std::invalid_argument("present_triangulation: unknown generator vertex");
    std::vector<VertexId> vertices(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) vertices[v] = v;
    std::vector<EdgeKey> edges;
    edges.reserve(t.edges.size());
    for (const auto& [k, path] : t.edges) edges.push_back(k);
    return present_complex_carrier(skeleton_carrier(vertices, edges), g);
}

VertexId evaluate_word(const Presentation& p, const Word& word) {
    const VertexId g = p.generator();
    for (const WordTerm& term : word.terms)
        if (term.generator != g)
            throw std::invalid_argument("evaluate_word: foreign generator " +
                                        std::to_string(term.generator));
    long long total = 0;
    for (const WordTerm& term : word.terms) total += term.coefficient;

    if (p.carrier->kind == CarrierKind::cycle) {
        const PathCycle& c = *p.carrier->cycle;
        return c.vertex_at(mod_index(p.generator_index + total, c.size()));
    }

    // complex carrier: replay the breadth-first witness toward the target
    if (word.terms.empty()) return g;
    if (!word.target)
        throw std::invalid_argument("evaluate_word: word on a complex carrier has no target");
    const VertexId target = *word.target;
    if (!p.distance.count(target))
        throw std::domain_error("evaluate_word: target not reachable from generator");
    std::vector<VertexId> chain{target};
    for (VertexId cur = target; cur != g;) {
        cur = p.parent.at(cur);
        chain.push_back(cur);
    }
    std::reverse(chain.begin(), chain.end());  // g .. target
    if (total < 0 || total >= static_cast<long long>(chain.size()))
        throw std::domain_error("evaluate_word: step count exceeds witness length");
    return chain[static_cast<std::size_t>(total)];
}

HomotopySystem build_homotopy_system(const Triangulation& t) {
    HomotopySystem sys;
    sys.carrier = t;
    sys.full = present_triangulation(t, maximal_nucleus_complex(t).nucleus);

    for (int v = 0; v < t.vertex_count(); ++v) {
        std::set<VertexId> verts{v};
        std::set<EdgeKey> edges;
        for (int ti : t.vertex_triangles.at(v)) {
            const auto ids = t.triangles[ti].vertex_ids();
            for (int i = 0; i < 3; ++i) {
                verts.insert(ids[i]);
                edges.insert(edge_key(ids[i], ids[(i + 1) % 3]));
            }
        }
        // isolated star (no incident triangles) still presents the vertex
        // together with its incident edges
        for (const EdgeKey& k : t.vertex_edges.at(v)) {
            verts.insert(k.first);
            verts.insert(k.second);
            edges.insert(k);
        }
        sys.stars.emplace(
            v, present_complex_carrier(
                   skeleton_carrier(std::vector<VertexId>(verts.begin(), verts.end()),
                                    std::vector<EdgeKey>(edges.begin(), edges.end())),
                   v));
    }
    return sys;
}

std::vector<std::string> validate_system(const HomotopySystem& s) {
    std::vector<std::string> issues;
    std::set<VertexId> full_verts(s.full.carrier->vertices.begin(),
                                  s.full.carrier->vertices.end());
    std::set<EdgeKey> full_edges(s.full.carrier->edges.begin(), s.full.carrier->edges.end());
    for (const auto& [v, pres] : s.stars) {
        for (VertexId w : pres.carrier->vertices)
            if (!full_verts.count(w))
                issues.push_back("star " + std::to_string(v) + " has foreign vertex " +
                                 std::to_string(w));
        for (const EdgeKey& k : pres.carrier->edges)
            if (!full_edges.count(k))
                issues.push_back("star " + std::to_string(v) + " has foreign edge");
    }
    if (s.full.relations.size() != s.full.carrier->vertices.size())
        issues.push_back("full presentation relation count mismatch");
    return issues;
}

RealizationReport realize_system(const HomotopySystem& s) {
    RealizationReport rep;

    const auto check_presentation = [&rep](const Presentation& p, const std::string& label) {
        int hit_count = 0;
        for (const auto& [v, word] : p.relations) {
            ++rep.vertices_checked;
            try {
                const VertexId hit = evaluate_word(p, word);
                if (hit == v) {
                    ++rep.vertices_hit;
                    ++hit_count;
                } else {
                    rep.defects.push_back(
                        {v, label + ": relation evaluates to " + std::to_string(hit)});
                }
            } catch (const std::exception& e) {
                rep.defects.push_back({v, label + ": " + e.what()});
            }
        }
        return hit_count;
    };

    rep.full_vertices_checked = static_cast<int>(s.full.relations.size());
    rep.full_vertices_hit = check_presentation(s.full, "full");
    for (const auto& [v, pres] : s.stars) check_presentation(pres, "star " + std::to_string(v));

    rep.triangle_count = s.carrier.triangle_count();
    for (const PathTriangle& tri : s.carrier.triangles) {
        const PathCycle cycle = boundary_cycle(tri);
        if (validate_cycle(cycle).empty()) ++rep.cycles_recovered;
    }

    rep.ok = rep.defects.empty() && rep.vertices_hit == rep.vertices_checked &&
             rep.cycles_recovered == rep.triangle_count;
    return rep;
}

}  // namespace pathtri
