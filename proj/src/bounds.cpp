#include "ogk/bounds.hpp"

#include <algorithm>

#include "ogk/errors.hpp"

namespace ogk {

std::string to_string(BoundSource source) {
    switch (source) {
    case BoundSource::TrivialDegree: return "TrivialDegree";
    case BoundSource::SquareChromatic: return "SquareChromatic";
    case BoundSource::BrooksSquare: return "BrooksSquare";
    case BoundSource::VertexCount: return "VertexCount";
    case BoundSource::VertexCountNonComplete: return "VertexCountNonComplete";
    case BoundSource::KnownExactFamily: return "KnownExactFamily";
    }
    return "?";
}

namespace {

Bipartition require_bipartite(const Graph& g, const char* what) {
    auto split = bipartition(g);
    if (std::holds_alternative<NotBipartite>(split))
        throw NotBipartiteError(std::string(what) + " requires a bipartite graph");
    return std::get<Bipartition>(split);
}

} // namespace

std::optional<int> lower_bound_degree(const Graph& g) {
    auto split = bipartition(g); // throws DisconnectedError when appropriate
    if (std::holds_alternative<NotBipartite>(split)) return std::nullopt;
    return 2 * max_degree(g);
}

SquareBound upper_bound_square(const Graph& g, bool exact) {
    if (g.edge_count() == 0)
        throw ParameterError("square bound requires a graph with at least one edge");
    Bipartition parts = require_bipartite(g, "square bound");
    InducedSquare sq_u = square_induced(g, parts.u_side);
    InducedSquare sq_w = square_induced(g, parts.w_side);
    ProperColoring cu = exact ? chi_exact(sq_u.graph) : greedy_coloring(sq_u.graph);
    ProperColoring cw = exact ? chi_exact(sq_w.graph) : greedy_coloring(sq_w.graph);
    int value = 2 * (cu.num_colors + cw.num_colors - 1);
    return SquareBound{value, std::move(parts), std::move(cu), std::move(cw)};
}

int upper_bound_brooks(const Graph& g) {
    Bipartition parts = require_bipartite(g, "Brooks bound");
    int d = max_degree(g);
    if (d < 2) throw ParameterError("Brooks bound requires max degree >= 2");
    Graph sq_u = square_induced(g, parts.u_side).graph;
    Graph sq_w = square_induced(g, parts.w_side).graph;
    bool exceptional = is_odd_cycle(sq_u) || is_complete(sq_u) || is_odd_cycle(sq_w) ||
                       is_complete(sq_w);
    return 4 * d * d - 4 * d + (exceptional ? 2 : -2);
}

bool prop_d2_applicable(const Graph& g) {
    Bipartition parts = require_bipartite(g, "diameter predicate");
    int small = parts.u_side.count(), large = parts.w_side.count();
    if (small > large) std::swap(small, large);
    return small >= 4 && g.edge_count() > 2 * large && diameter(g) >= 5;
}

int upper_bound_vertices(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw ParameterError("vertex-count bound requires at least two vertices");
    Bipartition parts = require_bipartite(g, "vertex-count bound");
    long long cross = 1LL * parts.u_side.count() * parts.w_side.count();
    bool complete_bipartite = g.edge_count() == cross;
    return complete_bipartite ? 2 * n - 2 : 2 * n - 4;
}

namespace {

int complete_bipartite_value(int m, int n) { // oriented m >= n >= 2
    bool tight = m % 2 == 0 && (n == m || n == 2);
    return 2 * m + 2 * n - (tight ? 3 : 2);
}

} // namespace

std::optional<int> known_exact(const FamilySpec& spec) {
    if (const auto* k = std::get_if<CompleteBipartiteSpec>(&spec)) {
        int m = std::max(k->m, k->n), n = std::min(k->m, k->n);
        if (n < 2) return std::nullopt; // stars have a degree/size mismatch, left to the solver
        return complete_bipartite_value(m, n);
    }
    if (const auto* nc = std::get_if<NearCompleteSpec>(&spec)) {
        int m = nc->m, n = nc->n, r = nc->r;
        if (m < 2 || n < 2 || r < 1 || r > n) return std::nullopt;
        if (r == n) {
            // All partners removed: one vertex detaches and any in-range
            // label fits it, leaving the complete bipartite remainder.
            if (m - 1 < 2) return std::nullopt;
            return complete_bipartite_value(std::max(m - 1, n), std::min(m - 1, n));
        }
        bool drops_one_more = false;
        if (m == 3 && n % 2 == 0 && r >= 2) drops_one_more = true;
        if (m == n + 1 && n % 2 == 0 && n >= 4) {
            int s = n / 2;
            if (r >= s && r <= 2 * s - 1) drops_one_more = true;
            if (r == s - 1 && s >= 5 && s % 2 == 1) drops_one_more = true;
        }
        return 2 * m + 2 * n - (drops_one_more ? 5 : 4);
    }
    return std::nullopt;
}

BoundReport bound_report(const Graph& g, const FamilySpec* family, bool exact) {
    BoundReport report;
    if (g.vertex_count() == 0) throw ParameterError("bound report of the empty graph");
    auto split = bipartition(g);
    if (std::holds_alternative<NotBipartite>(split)) {
        report.infinite = true;
        return report;
    }

    if (g.edge_count() == 0) { // single vertex: one label suffices
        report.lower.push_back({1, BoundSource::TrivialDegree});
        report.upper.push_back({1, BoundSource::VertexCount});
    } else {
        report.lower.push_back({2 * max_degree(g), BoundSource::TrivialDegree});
        report.upper.push_back({upper_bound_square(g, exact).value, BoundSource::SquareChromatic});
        if (max_degree(g) >= 2)
            report.upper.push_back({upper_bound_brooks(g), BoundSource::BrooksSquare});
        int vertices = upper_bound_vertices(g);
        bool complete_bip = vertices == 2 * g.vertex_count() - 2;
        report.upper.push_back({vertices, complete_bip ? BoundSource::VertexCount
                                                       : BoundSource::VertexCountNonComplete});
    }
    if (family) {
        if (auto value = known_exact(*family)) {
            report.lower.push_back({*value, BoundSource::KnownExactFamily});
            report.upper.push_back({*value, BoundSource::KnownExactFamily});
        }
    }
    report.best_lower = 0;
    for (const auto& e : report.lower) report.best_lower = std::max(report.best_lower, e.value);
    report.best_upper = report.upper.front().value;
    for (const auto& e : report.upper) report.best_upper = std::min(report.best_upper, e.value);
    return report;
}

} // namespace ogk
