#include "ogk/bipartite.hpp"

#include <algorithm>
#include <queue>

#include "ogk/errors.hpp"

namespace ogk {

namespace {

// Tree path u -> lca -> v plus the edge uv closes an odd cycle: u and v sit
// in the same BFS parity class, so depth(u) + depth(v) is even.
std::vector<int> odd_cycle_through(const std::vector<int>& parent, const std::vector<int>& depth,
                                   int u, int v) {
    std::vector<int> up_u{u}, up_v{v};
    int a = u, b = v;
    while (depth[size_t(a)] > depth[size_t(b)]) up_u.push_back(a = parent[size_t(a)]);
    while (depth[size_t(b)] > depth[size_t(a)]) up_v.push_back(b = parent[size_t(b)]);
    while (a != b) {
        up_u.push_back(a = parent[size_t(a)]);
        up_v.push_back(b = parent[size_t(b)]);
    }
    // up_u ends at the lca, up_v repeats it; splice into u..lca..v order.
    std::vector<int> cycle(up_u.begin(), up_u.end());
    for (size_t i = up_v.size() - 1; i-- > 0;) cycle.push_back(up_v[i]);
    return cycle;
}

} // namespace

BipartitionResult bipartition(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw ParameterError("bipartition of the empty graph is undefined");
    std::vector<int> color(size_t(n), -1), parent(size_t(n), -1), depth(size_t(n), 0);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    int seen = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = g.neighbors(u).first(); v != -1; v = g.neighbors(u).next(v)) {
            if (color[size_t(v)] == -1) {
                color[size_t(v)] = color[size_t(u)] ^ 1;
                parent[size_t(v)] = u;
                depth[size_t(v)] = depth[size_t(u)] + 1;
                q.push(v);
                ++seen;
            } else if (color[size_t(v)] == color[size_t(u)]) {
                return NotBipartite{odd_cycle_through(parent, depth, u, v)};
            }
        }
    }
    if (seen != n)
        throw DisconnectedError("bipartition requires a connected graph");
    Bipartition parts{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v)
        (color[size_t(v)] == 0 ? parts.u_side : parts.w_side).set(v);
    return parts;
}

} // namespace ogk
