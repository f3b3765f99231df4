#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ogk/graph.hpp"

namespace ogk {

/// Vertex labeling with a declared bound k. Labels of a valid odd graceful
/// coloring live in {1,...,k}; 0 is deliberately out of range. A Labeling
/// value may hold arbitrary integers, the verifier reports offenders.
struct Labeling {
    std::vector<int> labels;
    int k = 0;
};

struct AdjacentEqualLabels {
    int u, v;
};
struct EvenEdgeLabel {
    int u, v;
    int value;
};
/// Two edges at `center` carry the same induced label: |l(a) - l(center)| =
/// |l(c) - l(center)|.
struct EqualIncidentEdgeLabels {
    int center, a, c;
};
struct LabelOutOfRange {
    int v;
};
using Violation =
    std::variant<LabelOutOfRange, AdjacentEqualLabels, EvenEdgeLabel, EqualIncidentEdgeLabels>;

std::string violation_text(const Violation& v);

/// Exhaustive verification outcome. valid holds exactly when violations is
/// empty, i.e. the three structural flags hold and every label is in range.
/// Violations are listed in a stable order: range offenders by vertex, then
/// edge offenders by edge, then incident-pair offenders by (center, a, c).
struct VerificationReport {
    bool valid = false;
    bool vertex_proper = false;
    bool edges_all_odd = false;
    bool edge_proper = false;
    std::vector<Violation> violations;
};

struct EdgeLabel {
    int u, v;
    int value;
};

/// Induced edge labels |l(u) - l(v)|, one entry per edge, (u, v) ascending.
std::vector<EdgeLabel> induced_edge_labels(const Graph& g, const Labeling& lab);

/// Full report. vertex_proper: no edge joins equal labels. edges_all_odd:
/// every induced edge label is odd. edge_proper: edges sharing a vertex
/// carry distinct induced labels, checked as |l(a)-l(b)| != |l(c)-l(b)| over
/// all length-two paths a-b-c.
VerificationReport verify(const Graph& g, const Labeling& lab);

/// Early-exit equivalent of verify(g, lab).valid, computed through the
/// algebraic form of the incident-edge condition: l(a) != l(c) and
/// l(a) + l(c) != 2 l(b). Kept as a second route so the two can be checked
/// against each other.
bool is_valid_labeling(const Graph& g, const Labeling& lab);

/// Parity structure of a labeling on a connected bipartite graph. consistent
/// holds when one side is labeled all-odd and the other all-even; u_side_odd
/// reports the parity of vertex 0's class (meaningful when consistent).
struct ParitySplit {
    bool u_side_odd = false;
    bool consistent = false;
};
ParitySplit parity_split(const Graph& g, const Labeling& lab);

/// Label reflection x -> k+1-x. Preserves all absolute differences, hence
/// validity; an involution.
Labeling complement(const Labeling& lab);

} // namespace ogk
