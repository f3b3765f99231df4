#pragma once

#include <vector>

#include "ogk/graph.hpp"

namespace ogk {

/// Proper vertex coloring with colors 1..num_colors, every color used.
struct ProperColoring {
    std::vector<int> colors;
    int num_colors = 0;
};

/// Adjacent vertices differ, colors lie in 1..num_colors, every color used.
bool is_proper(const Graph& g, const ProperColoring& c);

/// First-fit coloring along the given vertex permutation. Uses at most
/// max_degree + 1 colors.
ProperColoring greedy_coloring(const Graph& g, const std::vector<int>& order);

/// Greedy with a descending-degree order (ties by index).
ProperColoring greedy_coloring(const Graph& g);

/// Minimum proper coloring by saturation-degree branch and bound seeded with
/// a greedy upper bound and a greedy clique lower bound. Branching always
/// picks the lowest-index vertex among those of maximum saturation, so node
/// counts and the returned coloring are reproducible. Throws ResourceError
/// above vertex_limit, advising the greedy fallback.
ProperColoring chi_exact(const Graph& g, int vertex_limit = 40);

/// Proper coloring of the circulant with offsets {1,2} on n vertices, n odd:
/// 3 colors when n is divisible by 3, 5 when n = 5 (the graph is complete),
/// 4 otherwise. Vertex v of the canonical circulant gets colors[v].
ProperColoring circulant_12_coloring(int n);

} // namespace ogk
