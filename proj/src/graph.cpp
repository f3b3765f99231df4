#include "ogk/graph.hpp"

#include <queue>
#include <string>

#include "ogk/errors.hpp"

namespace ogk {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParameterError("edge endpoint " + std::to_string(u >= 0 && u < n ? v : u) +
                                 " outside 0.." + std::to_string(n - 1));
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        if (g.adj_[size_t(u)].test(v)) continue;
        g.adj_[size_t(u)].set(v);
        g.adj_[size_t(v)].set(u);
        ++g.degrees_[size_t(u)];
        ++g.degrees_[size_t(v)];
        ++g.edge_count_;
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[size_t(u)].next(u); v != -1; v = adj_[size_t(u)].next(v))
            out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(size_t(g.vertex_count()), -1);
    std::queue<int> q;
    dist[size_t(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = g.neighbors(u).first(); v != -1; v = g.neighbors(u).next(v)) {
            if (dist[size_t(v)] == -1) {
                dist[size_t(v)] = dist[size_t(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    auto dist = bfs_distances(g, 0);
    for (int v = 0; v < n; ++v)
        if (dist[size_t(v)] == -1) return false;
    return true;
}

std::vector<int> component_ids(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(size_t(n), -1);
    int next_id = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[size_t(s)] != -1) continue;
        comp[size_t(s)] = next_id;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = g.neighbors(u).first(); v != -1; v = g.neighbors(u).next(v)) {
                if (comp[size_t(v)] == -1) {
                    comp[size_t(v)] = next_id;
                    q.push(v);
                }
            }
        }
        ++next_id;
    }
    return comp;
}

int diameter(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw ParameterError("diameter of the empty graph is undefined");
    int best = 0;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) {
            if (dist[size_t(v)] == -1)
                throw DisconnectedError("diameter requires a connected graph");
            if (dist[size_t(v)] > best) best = dist[size_t(v)];
        }
    }
    return best;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > best) best = g.degree(v);
    return best;
}

bool is_complete(const Graph& g) {
    long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_odd_cycle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || n % 2 == 0) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

InducedSquare square_induced(const Graph& g, const VertexSet& members) {
    if (members.universe() != g.vertex_count())
        throw ParameterError("member set universe does not match the graph");
    std::vector<int> ids = members.to_vector();
    int m = int(ids.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            int u = ids[size_t(i)], v = ids[size_t(j)];
            if (g.adjacent(u, v) || g.neighbors(u).intersects(g.neighbors(v)))
                edges.emplace_back(i, j);
        }
    }
    return InducedSquare{Graph::from_edges(m, edges), std::move(ids)};
}

InducedSquare square_induced(const Graph& g, const std::vector<int>& members) {
    VertexSet s(g.vertex_count());
    for (int v : members) {
        if (v < 0 || v >= g.vertex_count())
            throw ParameterError("member vertex " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return square_induced(g, s);
}

} // namespace ogk
