#pragma once

#include <random>
#include <vector>

#include "ogk/graph.hpp"
#include "ogk/labeling.hpp"

namespace ogk::testutil {

// Deterministic draw; plain modulo keeps the sequence toolchain-independent.
inline int draw_below(std::mt19937& rng, int n) { return int(rng() % uint32_t(n)); }

// All-pairs distances by Floyd-Warshall, independent of the library BFS.
inline std::vector<std::vector<int>> all_distances(const Graph& g) {
    int n = g.vertex_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(size_t(n), std::vector<int>(size_t(n), inf));
    for (int v = 0; v < n; ++v) d[size_t(v)][size_t(v)] = 0;
    for (auto [u, v] : g.edges()) d[size_t(u)][size_t(v)] = d[size_t(v)][size_t(u)] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[size_t(i)][size_t(k)] + d[size_t(k)][size_t(j)] < d[size_t(i)][size_t(j)])
                    d[size_t(i)][size_t(j)] = d[size_t(i)][size_t(k)] + d[size_t(k)][size_t(j)];
    return d;
}

// Exact chromatic number by plain backtracking: try c = 1, 2, ... until a
// proper coloring exists.
inline bool colorable_with(const Graph& g, int c, std::vector<int>& colors, int v) {
    int n = g.vertex_count();
    if (v == n) return true;
    for (int col = 1; col <= c; ++col) {
        bool ok = true;
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            if (u < v && colors[size_t(u)] == col) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[size_t(v)] = col;
        if (colorable_with(g, c, colors, v + 1)) return true;
    }
    colors[size_t(v)] = 0;
    return false;
}

inline int brute_chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int c = 1;; ++c) {
        std::vector<int> colors(size_t(g.vertex_count()), 0);
        if (colorable_with(g, c, colors, 0)) return c;
    }
}

inline Labeling random_labeling(std::mt19937& rng, int n, int k) {
    Labeling lab{std::vector<int>(size_t(n)), k};
    for (int& x : lab.labels) x = 1 + draw_below(rng, k);
    return lab;
}

} // namespace ogk::testutil
