#include "ogk/corpus.hpp"

#include <random>
#include <set>
#include <variant>

#include "ogk/bipartite.hpp"
#include "ogk/errors.hpp"
#include "ogk/families.hpp"

namespace ogk {

namespace {

// mt19937 output is pinned by the standard; avoiding distributions keeps the
// draw sequence identical across toolchains.
int draw_below(std::mt19937& rng, int n) { return int(rng() % uint32_t(n)); }

std::vector<CorpusGraph> hand_listed() {
    std::vector<CorpusGraph> out;
    auto add = [&](const std::string& dsl) {
        out.push_back({dsl, generate(parse_family(dsl))});
    };
    for (int n = 2; n <= 6; ++n) add("path " + std::to_string(n));
    add("cycle 4");
    add("cycle 6");
    for (int leaves = 2; leaves <= 5; ++leaves) add("K " + std::to_string(leaves) + " 1");
    add("K 2 2");
    add("K 3 2");
    add("K 3 3");
    add("K 4 2");
    add("K 3 3 - K1 1");
    add("K 3 3 - K1 2");
    add("K 3 2 - K1 1");
    return out;
}

std::vector<CorpusGraph> random_pool(bool bipartite_only, int want, uint32_t seed) {
    std::vector<CorpusGraph> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    std::mt19937 rng(seed);
    int attempts = 0;
    while (int(out.size()) < want && attempts < 40000) {
        ++attempts;
        int n = 4 + draw_below(rng, 3); // 4..6 vertices
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1u) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        if (bipartite_only && std::holds_alternative<NotBipartite>(bipartition(g))) continue;
        if (!seen.insert(g.edges()).second) continue;
        out.push_back({"random-" + std::to_string(out.size()), std::move(g)});
    }
    return out;
}

} // namespace

std::vector<CorpusGraph> small_bipartite_corpus() {
    std::vector<CorpusGraph> out = hand_listed();
    for (auto& g : random_pool(true, 40, 0x5eed0101u)) out.push_back(std::move(g));
    return out;
}

std::vector<CorpusGraph> small_connected_corpus() {
    std::vector<CorpusGraph> out;
    for (const char* dsl : {"path 4", "cycle 5", "cycle 7", "K 3 3", "K 5 1", "circulant 5 1,2"})
        out.push_back({dsl, generate(parse_family(dsl))});
    for (auto& g : random_pool(false, 44, 0x5eed0202u)) out.push_back(std::move(g));
    return out;
}

Graph prism_graph(int cycle_len) {
    if (cycle_len < 3) throw ParameterError("prism requires a cycle of length >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < cycle_len; ++i) {
        int j = (i + 1) % cycle_len;
        edges.emplace_back(i, j);
        edges.emplace_back(cycle_len + i, cycle_len + j);
        edges.emplace_back(i, cycle_len + i);
    }
    return Graph::from_edges(2 * cycle_len, edges);
}

Graph hexagon_chain(int hexagons) {
    if (hexagons < 1) throw ParameterError("hexagon chain requires at least one hexagon");
    int cols = 2 * hexagons + 1; // top row 0..cols-1, bottom row cols..2*cols-1
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < cols; ++i) {
        edges.emplace_back(i, i + 1);
        edges.emplace_back(cols + i, cols + i + 1);
    }
    for (int i = 0; i < cols; i += 2) edges.emplace_back(i, cols + i);
    return Graph::from_edges(2 * cols, edges);
}

Graph ladder_graph(int rungs) {
    if (rungs < 2) throw ParameterError("ladder requires at least two rungs");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < rungs; ++i) {
        edges.emplace_back(i, i + 1);
        edges.emplace_back(rungs + i, rungs + i + 1);
    }
    for (int i = 0; i < rungs; ++i) edges.emplace_back(i, rungs + i);
    return Graph::from_edges(2 * rungs, edges);
}

} // namespace ogk
