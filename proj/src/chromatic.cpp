#include "ogk/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ogk/errors.hpp"

namespace ogk {

bool is_proper(const Graph& g, const ProperColoring& c) {
    int n = g.vertex_count();
    if (int(c.colors.size()) != n) return false;
    std::vector<char> used(size_t(c.num_colors) + 1, 0);
    for (int v = 0; v < n; ++v) {
        int col = c.colors[size_t(v)];
        if (col < 1 || col > c.num_colors) return false;
        used[size_t(col)] = 1;
        for (int u = g.neighbors(v).next(v); u != -1; u = g.neighbors(v).next(u))
            if (c.colors[size_t(u)] == col) return false;
    }
    for (int col = 1; col <= c.num_colors; ++col)
        if (!used[size_t(col)]) return false;
    return true;
}

ProperColoring greedy_coloring(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (int(order.size()) != n) throw ParameterError("order must be a permutation of all vertices");
    std::vector<char> seen(size_t(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[size_t(v)])
            throw ParameterError("order must be a permutation of all vertices");
        seen[size_t(v)] = 1;
    }
    ProperColoring out{std::vector<int>(size_t(n), 0), 0};
    std::vector<char> blocked(size_t(n) + 2, 0);
    for (int v : order) {
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            if (out.colors[size_t(u)] != 0) blocked[size_t(out.colors[size_t(u)])] = 1;
        int c = 1;
        while (blocked[size_t(c)]) ++c;
        out.colors[size_t(v)] = c;
        out.num_colors = std::max(out.num_colors, c);
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            if (out.colors[size_t(u)] != 0) blocked[size_t(out.colors[size_t(u)])] = 0;
    }
    return out;
}

ProperColoring greedy_coloring(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return greedy_coloring(g, order);
}

namespace {

// Greedy clique: repeatedly add the candidate with the most candidate
// neighbors, lowest index on ties.
int greedy_clique_size(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    VertexSet cand(n);
    for (int v = 0; v < n; ++v) cand.set(v);
    int size = 0;
    while (!cand.empty()) {
        int best = -1, best_deg = -1;
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            int d = (g.neighbors(v) & cand).count();
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        ++size;
        cand &= g.neighbors(best);
    }
    return size;
}

struct ExactColorer {
    const Graph& g;
    int n;
    int best;
    std::vector<int> best_colors;
    std::vector<int> colors;
    int lower;

    ExactColorer(const Graph& graph, const ProperColoring& initial, int clique)
        : g(graph), n(graph.vertex_count()), best(initial.num_colors),
          best_colors(initial.colors), colors(size_t(graph.vertex_count()), 0), lower(clique) {}

    int saturation(int v) const {
        std::vector<char> seen(size_t(best) + 2, 0);
        int s = 0;
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u)) {
            int c = colors[size_t(u)];
            if (c != 0 && !seen[size_t(c)]) {
                seen[size_t(c)] = 1;
                ++s;
            }
        }
        return s;
    }

    void dfs(int assigned, int max_used) {
        if (best == lower) return;
        if (assigned == n) {
            if (max_used < best) {
                best = max_used;
                best_colors = colors;
            }
            return;
        }
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (colors[size_t(v)] != 0) continue;
            int s = saturation(v);
            if (s > pick_sat) {
                pick_sat = s;
                pick = v;
            }
        }
        // best can shrink inside the loop, so the cap is re-read every pass.
        for (int c = 1; c <= max_used + 1 && c < best; ++c) {
            bool ok = true;
            for (int u = g.neighbors(pick).first(); u != -1; u = g.neighbors(pick).next(u))
                if (colors[size_t(u)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            colors[size_t(pick)] = c;
            dfs(assigned + 1, std::max(max_used, c));
            colors[size_t(pick)] = 0;
            if (best == lower) return;
        }
    }
};

} // namespace

ProperColoring chi_exact(const Graph& g, int vertex_limit) {
    int n = g.vertex_count();
    if (n > vertex_limit)
        throw ResourceError("chi_exact limited to " + std::to_string(vertex_limit) +
                            " vertices; use greedy_coloring for larger graphs");
    if (n == 0) return ProperColoring{};
    ProperColoring initial = greedy_coloring(g);
    int clique = greedy_clique_size(g);
    if (initial.num_colors == clique) return initial;
    ExactColorer search(g, initial, clique);
    search.dfs(0, 0);
    return ProperColoring{std::move(search.best_colors), search.best};
}

ProperColoring circulant_12_coloring(int n) {
    if (n < 3 || n % 2 == 0)
        throw ParameterError("circulant {1,2} coloring requires odd n >= 3");
    std::vector<int> colors(static_cast<size_t>(n));
    if (n == 5) {
        // Offsets {1,2} on five vertices give the complete graph.
        for (int v = 0; v < n; ++v) colors[size_t(v)] = v + 1;
        return ProperColoring{std::move(colors), 5};
    }
    // Base pattern cycles through 1,2,3; proper exactly when 3 divides n.
    for (int v = 0; v < n; ++v) colors[size_t(v)] = v % 3 + 1;
    if (n % 3 == 0) return ProperColoring{std::move(colors), 3};
    // Otherwise patch the first five vertices with a fourth color.
    colors[0] = 4;
    colors[1] = 3;
    colors[2] = 1;
    colors[3] = 2;
    colors[4] = 4;
    return ProperColoring{std::move(colors), 4};
}

} // namespace ogk
