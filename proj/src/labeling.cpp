#include "ogk/labeling.hpp"

#include <cstdlib>

#include "ogk/bipartite.hpp"
#include "ogk/errors.hpp"

namespace ogk {

namespace {

void require_sized(const Graph& g, const Labeling& lab) {
    if (int(lab.labels.size()) != g.vertex_count())
        throw ParameterError("labeling has " + std::to_string(lab.labels.size()) +
                             " entries for a graph on " + std::to_string(g.vertex_count()) +
                             " vertices");
}

} // namespace

std::string violation_text(const Violation& v) {
    struct Printer {
        std::string operator()(const LabelOutOfRange& x) const {
            return "LabelOutOfRange(v=" + std::to_string(x.v) + ")";
        }
        std::string operator()(const AdjacentEqualLabels& x) const {
            return "AdjacentEqualLabels(u=" + std::to_string(x.u) + ", v=" + std::to_string(x.v) +
                   ")";
        }
        std::string operator()(const EvenEdgeLabel& x) const {
            return "EvenEdgeLabel(u=" + std::to_string(x.u) + ", v=" + std::to_string(x.v) +
                   ", value=" + std::to_string(x.value) + ")";
        }
        std::string operator()(const EqualIncidentEdgeLabels& x) const {
            return "EqualIncidentEdgeLabels(center=" + std::to_string(x.center) +
                   ", a=" + std::to_string(x.a) + ", c=" + std::to_string(x.c) + ")";
        }
    };
    return std::visit(Printer{}, v);
}

std::vector<EdgeLabel> induced_edge_labels(const Graph& g, const Labeling& lab) {
    require_sized(g, lab);
    std::vector<EdgeLabel> out;
    out.reserve(size_t(g.edge_count()));
    for (auto [u, v] : g.edges())
        out.push_back({u, v, std::abs(lab.labels[size_t(u)] - lab.labels[size_t(v)])});
    return out;
}

VerificationReport verify(const Graph& g, const Labeling& lab) {
    require_sized(g, lab);
    int n = g.vertex_count();
    VerificationReport report;
    report.vertex_proper = true;
    report.edges_all_odd = true;
    report.edge_proper = true;

    for (int v = 0; v < n; ++v)
        if (lab.labels[size_t(v)] < 1 || lab.labels[size_t(v)] > lab.k)
            report.violations.push_back(LabelOutOfRange{v});

    for (auto [u, v] : g.edges()) {
        int d = std::abs(lab.labels[size_t(u)] - lab.labels[size_t(v)]);
        if (d == 0) {
            report.vertex_proper = false;
            report.violations.push_back(AdjacentEqualLabels{u, v});
        }
        if (d % 2 == 0) {
            report.edges_all_odd = false;
            report.violations.push_back(EvenEdgeLabel{u, v, d});
        }
    }

    for (int b = 0; b < n; ++b) {
        const VertexSet& nb = g.neighbors(b);
        int lb = lab.labels[size_t(b)];
        for (int a = nb.first(); a != -1; a = nb.next(a)) {
            for (int c = nb.next(a); c != -1; c = nb.next(c)) {
                if (std::abs(lab.labels[size_t(a)] - lb) == std::abs(lab.labels[size_t(c)] - lb)) {
                    report.edge_proper = false;
                    report.violations.push_back(EqualIncidentEdgeLabels{b, a, c});
                }
            }
        }
    }

    report.valid = report.violations.empty();
    return report;
}

bool is_valid_labeling(const Graph& g, const Labeling& lab) {
    require_sized(g, lab);
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (lab.labels[size_t(v)] < 1 || lab.labels[size_t(v)] > lab.k) return false;
    for (int u = 0; u < n; ++u) {
        const VertexSet& nb = g.neighbors(u);
        int lu = lab.labels[size_t(u)];
        for (int v = nb.next(u); v != -1; v = nb.next(v)) {
            int d = lu - lab.labels[size_t(v)];
            if (d == 0 || (d & 1) == 0) return false;
        }
    }
    for (int b = 0; b < n; ++b) {
        const VertexSet& nb = g.neighbors(b);
        int twice = 2 * lab.labels[size_t(b)];
        for (int a = nb.first(); a != -1; a = nb.next(a)) {
            int la = lab.labels[size_t(a)];
            for (int c = nb.next(a); c != -1; c = nb.next(c)) {
                int lc = lab.labels[size_t(c)];
                if (la == lc || la + lc == twice) return false;
            }
        }
    }
    return true;
}

ParitySplit parity_split(const Graph& g, const Labeling& lab) {
    require_sized(g, lab);
    auto split = bipartition(g);
    if (std::holds_alternative<NotBipartite>(split))
        throw NotBipartiteError("parity split requires a bipartite graph");
    const Bipartition& parts = std::get<Bipartition>(split);
    ParitySplit out;
    out.u_side_odd = (lab.labels[0] % 2 != 0);
    out.consistent = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool odd = (lab.labels[size_t(v)] % 2 != 0);
        bool expect_odd = parts.in_u(v) ? out.u_side_odd : !out.u_side_odd;
        if (odd != expect_odd) out.consistent = false;
    }
    return out;
}

Labeling complement(const Labeling& lab) {
    Labeling out{lab.labels, lab.k};
    for (int& x : out.labels) x = lab.k + 1 - x;
    return out;
}

} // namespace ogk
