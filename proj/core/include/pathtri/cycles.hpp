#ifndef PATHTRI_CYCLES_HPP
#define PATHTRI_CYCLES_HPP

#include <string>
#include <vector>

#include "pathtri/geometry.hpp"
#include "pathtri/triangulation.hpp"

namespace pathtri {

/// Cyclic sequence of paths h_0 .. h_{n-1} with h_i.end = h_{i+1 mod n}.start.
/// Position i carries the vertex h_i(0); indices wrap with mathematical mod.
struct PathCycle {
    std::vector<SampledPath> paths;
    int basepoint = 0;

    int size() const { return static_cast<int>(paths.size()); }
    VertexId vertex_at(int i) const { return paths[i].start; }
};

/// Validates cyclic chaining, n >= 3, and distinct position vertices.
PathCycle make_path_cycle(std::vector<SampledPath> paths, int basepoint = 0);

/// Violations of the closed-chain / degree-2 / distinct-vertex conditions;
/// empty means the cycle is a valid 1-cycle realization.
std::vector<std::string> validate_cycle(const PathCycle& c);

/// The 3-cycle (h1, h2, h3) of a path triangle's boundary.
PathCycle boundary_cycle(const PathTriangle& t);

/// Walk forward k vertices from position i: returns h_{(i+k) mod n}(0).
/// k may be negative or exceed n.
VertexId walk(const PathCycle& c, int i, long long k);

/// Walk back k vertices from position i: returns h_{(i-k) mod n}(0).
VertexId walk_back(const PathCycle& c, int i, long long k);

/// The "+" move: h_{(i+k+k') mod n}(0).
VertexId move_add(const PathCycle& c, int i, long long k, long long kprime);

struct ConnectivityResult {
    bool connected = false;
    /// Chained witness: witness[0].start = u, each path's end is the next
    /// path's start, witness.back().end = v. Empty when u == v.
    std::vector<SampledPath> witness;
};

/// Breadth-first witness over the 1-skeleton, shortest edge count, ties
/// broken by smallest VertexId. Always connected for triangulate output.
/// Throws std::invalid_argument for unknown vertex ids.
ConnectivityResult is_path_connected(const Triangulation& t, VertexId u, VertexId v);

/// Triangle boundary cycles in triangle order, then the outer hull cycle
/// (boundary edges walked CCW from the smallest boundary vertex).
std::vector<PathCycle> enumerate_cycles(const Triangulation& t);

}  // namespace pathtri

#endif
