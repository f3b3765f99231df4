#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace ogk {

/// Fixed-universe vertex set backed by 64-bit words. Intersection and
/// iteration cost O(n/64).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    /// Smallest member strictly greater than v (pass -1 to start), or -1.
    int next(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        size_t w = size_t(start) >> 6;
        uint64_t bits = words_[w] & (~uint64_t{0} << (start & 63));
        while (true) {
            if (bits) return int(w * 64) + std::countr_zero(bits);
            if (++w == words_.size()) return -1;
            bits = words_[w];
        }
    }
    int first() const { return next(-1); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size_t(count()));
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    bool operator==(const VertexSet&) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency is
/// symmetric, self-loops are rejected, duplicate edges collapse. Instances
/// never change after construction and are safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(size_t(n), VertexSet(n)), degrees_(size_t(n), 0) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return edge_count_; }
    bool adjacent(int u, int v) const { return adj_[size_t(u)].test(v); }
    int degree(int v) const { return degrees_[size_t(v)]; }
    const VertexSet& neighbors(int v) const { return adj_[size_t(v)]; }
    std::vector<int> neighbor_list(int v) const { return adj_[size_t(v)].to_vector(); }

    /// All edges as (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    long long edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> degrees_;
};

/// Distances from source by breadth-first search; -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

/// Component id per vertex, numbered by first-seen vertex order.
std::vector<int> component_ids(const Graph& g);

/// Longest shortest-path distance. Throws DisconnectedError when some pair
/// is unreachable; ParameterError on the empty graph.
int diameter(const Graph& g);

int max_degree(const Graph& g);
bool is_complete(const Graph& g);

/// Connected, 2-regular, odd order.
bool is_odd_cycle(const Graph& g);

/// Subgraph of the square induced by `members`: two members are adjacent
/// when their distance in g is 1 or 2 (paths may leave the member set).
/// Vertices are re-indexed in ascending order of original id;
/// vertex_map[new_id] = original id.
struct InducedSquare {
    Graph graph;
    std::vector<int> vertex_map;
};
InducedSquare square_induced(const Graph& g, const VertexSet& members);
InducedSquare square_induced(const Graph& g, const std::vector<int>& members);

} // namespace ogk
