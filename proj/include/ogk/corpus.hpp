#pragma once

#include <string>
#include <vector>

#include "ogk/graph.hpp"

namespace ogk {

struct CorpusGraph {
    std::string name;
    Graph graph;
};

/// Deterministic pool of small connected bipartite graphs: hand-listed
/// families (paths, even cycles, stars, small complete bipartite graphs and
/// one-edge deletions) plus seeded random edge subsets on up to 6 vertices,
/// deduplicated by exact edge set. At least 50 entries.
std::vector<CorpusGraph> small_bipartite_corpus();

/// Same idea without the bipartite filter, for coloring cross-checks.
std::vector<CorpusGraph> small_connected_corpus();

/// Cycle of length cycle_len times an edge; 3-regular.
Graph prism_graph(int cycle_len);

/// Row of hexagons sharing vertical edges: two paths on 2*hexagons+1
/// vertices joined by a rung at every even position.
Graph hexagon_chain(int hexagons);

/// Path of length rungs - 1 times an edge.
Graph ladder_graph(int rungs);

} // namespace ogk
