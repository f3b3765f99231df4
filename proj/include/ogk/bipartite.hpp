#pragma once

#include <variant>
#include <vector>

#include "ogk/graph.hpp"

namespace ogk {

/// The two color classes of a connected bipartite graph. u_side is the class
/// containing vertex 0, which makes the split unique and reproducible.
struct Bipartition {
    VertexSet u_side;
    VertexSet w_side;
    bool in_u(int v) const { return u_side.test(v); }
};

/// Witness that a graph is not bipartite: a cycle of odd length, listed as
/// distinct vertices with consecutive ones (and last-to-first) adjacent.
struct NotBipartite {
    std::vector<int> odd_cycle;
};

using BipartitionResult = std::variant<Bipartition, NotBipartite>;

/// Two-colors a connected graph by breadth-first layers. Throws
/// DisconnectedError on disconnected input.
BipartitionResult bipartition(const Graph& g);

} // namespace ogk
