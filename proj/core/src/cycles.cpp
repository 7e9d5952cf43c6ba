#include "pathtri/cycles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace pathtri {

namespace {

int mod_index(long long v, int n) {
    long long r = v % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

}  // namespace

PathCycle make_path_cycle(std::vector<SampledPath> paths, int basepoint) {
    PathCycle c{std::move(paths), basepoint};
    if (basepoint < 0 || basepoint >= c.size())
        throw std::invalid_argument("make_path_cycle: basepoint out of range");
    const auto issues = validate_cycle(c);
    if (!issues.empty()) throw std::invalid_argument("make_path_cycle: " + issues.front());
    return c;
}

std::vector<std::string> validate_cycle(const PathCycle& c) {
    std::vector<std::string> issues;
    const int n = c.size();
    if (n < 3) {
        issues.push_back("cycle length must be >= 3");
        return issues;
    }
    for (int i = 0; i < n; ++i) {
        const SampledPath& cur = c.paths[i];
        const SampledPath& nxt = c.paths[(i + 1) % n];
        if (cur.end != nxt.start)
            issues.push_back("chain broken at position " + std::to_string(i));
        else if (!coincident(cur.end_point(), nxt.start_point()))
            issues.push_back("chain coordinates broken at position " + std::to_string(i));
    }
    // degree 2 everywhere: each vertex appears exactly once as a start and
    // once as an end, and no end vertex exists
    std::set<VertexId> starts, ends;
    for (const SampledPath& p : c.paths) {
        if (!starts.insert(p.start).second)
            issues.push_back("vertex " + std::to_string(p.start) + " repeated in cycle");
        ends.insert(p.end);
    }
    if (starts != ends) issues.push_back("cycle has an end vertex");
    return issues;
}

PathCycle boundary_cycle(const PathTriangle& t) {
    return make_path_cycle({t.paths[0], t.paths[1], t.paths[2]}, 0);
}

VertexId walk(const PathCycle& c, int i, long long k) {
    if (i < 0 || i >= c.size()) throw std::invalid_argument("walk: index out of range");
    return c.vertex_at(mod_index(i + k, c.size()));
}

VertexId walk_back(const PathCycle& c, int i, long long k) {
    if (i < 0 || i >= c.size()) throw std::invalid_argument("walk_back: index out of range");
    return c.vertex_at(mod_index(i - k, c.size()));
}

VertexId move_add(const PathCycle& c, int i, long long k, long long kprime) {
    if (i < 0 || i >= c.size()) throw std::invalid_argument("move_add: index out of range");
    return c.vertex_at(mod_index(i + k + kprime, c.size()));
}

namespace {

/// Deterministic BFS layers: dist from source, parent = smallest-id
/// neighbor in the previous layer.
void bfs_layers(const Triangulation& t, VertexId source, std::vector<int>& dist,
                std::vector<VertexId>& parent) {
    const int n = t.vertex_count();
    dist.assign(n, -1);
    parent.assign(n, -1);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const EdgeKey& k : t.vertex_edges.at(v)) {
            const VertexId w = k.first == v ? k.second : k.first;
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    for (int w = 0; w < n; ++w) {
        if (dist[w] <= 0) continue;
        for (const EdgeKey& k : t.vertex_edges.at(w)) {
            const VertexId u = k.first == w ? k.second : k.first;
            if (dist[u] == dist[w] - 1 && (parent[w] == -1 || u < parent[w])) parent[w] = u;
        }
    }
}

}  // namespace

ConnectivityResult is_path_connected(const Triangulation& t, VertexId u, VertexId v) {
    const int n = t.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("is_path_connected: unknown vertex id");
    if (u == v) return {true, {}};

    std::vector<int> dist;
    std::vector<VertexId> parent;
    bfs_layers(t, u, dist, parent);
    if (dist[v] == -1) return {false, {}};

    std::vector<VertexId> chain{v};
    for (VertexId cur = v; cur != u; cur = parent[cur]) chain.push_back(parent[cur]);
    std::reverse(chain.begin(), chain.end());

    ConnectivityResult res;
    res.connected = true;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const SampledPath& stored = t.edges.at(edge_key(chain[i - 1], chain[i]));
        res.witness.push_back(stored.start == chain[i - 1] ? stored : reverse_path(stored));
    }
    return res;
}

std::vector<PathCycle> enumerate_cycles(const Triangulation& t) {
    std::vector<PathCycle> cycles;
    cycles.reserve(t.triangles.size() + 1);
    for (const PathTriangle& tri : t.triangles) cycles.push_back(boundary_cycle(tri));

    // outer hull cycle: edges incident to exactly one triangle
    std::map<EdgeKey, int> face_count;
    for (const PathTriangle& tri : t.triangles) {
        const auto ids = tri.vertex_ids();
        for (int i = 0; i < 3; ++i) ++face_count[edge_key(ids[i], ids[(i + 1) % 3])];
    }
    std::map<VertexId, std::vector<VertexId>> boundary_adj;
    for (const auto& [k, c] : face_count) {
        if (c != 1) continue;
        boundary_adj[k.first].push_back(k.second);
        boundary_adj[k.second].push_back(k.first);
    }
    if (boundary_adj.empty()) return cycles;

    const VertexId start = boundary_adj.begin()->first;
    std::vector<VertexId> loop{start};
    VertexId prev = -1, cur = start;
    // first hop: CCW orientation, decided by the signed area of the finished loop
    while (true) {
        const auto& nbrs = boundary_adj.at(cur);
        VertexId next = -1;
        for (VertexId cand : nbrs)
            if (cand != prev && (next == -1 || cand < next)) next = cand;
        if (next == -1) break;
        if (next == start) break;
        loop.push_back(next);
        prev = cur;
        cur = next;
    }
    if (loop.size() >= 3) {
        double area = 0.0;
        for (std::size_t i = 0; i < loop.size(); ++i)
            area += cross(t.vertices[loop[i]], t.vertices[loop[(i + 1) % loop.size()]]);
        if (area < 0) {  // make CCW, keeping the smallest vertex first
            std::reverse(loop.begin() + 1, loop.end());
        }
        std::vector<SampledPath> paths;
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const VertexId a = loop[i], b = loop[(i + 1) % loop.size()];
            const SampledPath& stored = t.edges.at(edge_key(a, b));
            paths.push_back(stored.start == a ? stored : reverse_path(stored));
        }
        cycles.push_back(make_path_cycle(std::move(paths), 0));
    }
    return cycles;
}

}  // namespace pathtri
