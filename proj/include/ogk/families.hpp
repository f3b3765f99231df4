#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "ogk/graph.hpp"

namespace ogk {

// Graph families with fixed, documented vertex numbering so labelings and
// fixtures stay bit-stable:
//   path n / cycle n      vertices 0..n-1 in path/cycle order
//   K m n                 0..m-1 is the m-side, m..m+n-1 the n-side
//   K m n - K1 r          K m n minus the edges (m-1, m), ..., (m-1, m+r-1):
//                         the last m-side vertex loses the first r n-side
//                         partners
//   mobius 2n             circulant on 0..2n-1 with offsets {1, n}
//   circulant n s1,...    edges v ~ (v+s) mod n; offsets reduced mod n and
//                         deduplicated, offset n/2 gives one edge per pair

struct PathSpec {
    int n;
};
struct CycleSpec {
    int n;
};
struct CompleteBipartiteSpec {
    int m, n;
};
struct NearCompleteSpec {
    int m, n, r;
};
struct MobiusSpec {
    int order; // total vertex count 2n; bipartite exactly when n is odd
};
struct CirculantSpec {
    int n;
    std::vector<int> offsets;
};
struct EdgeListSpec {
    std::string path;
};

using FamilySpec = std::variant<PathSpec, CycleSpec, CompleteBipartiteSpec, NearCompleteSpec,
                                MobiusSpec, CirculantSpec, EdgeListSpec>;

/// Builds the named graph. Throws ParameterError naming the violated
/// constraint when parameters are invalid.
Graph generate(const FamilySpec& spec);

/// Parses the family DSL: "K m n", "K m n - K1 r", "mobius N", "cycle n",
/// "path n", "circulant n s1,s2,...".
FamilySpec parse_family(const std::string& text);

std::string family_name(const FamilySpec& spec);

/// Edge-list text format: '#' starts a comment line, an optional first line
/// "n <count>" fixes the vertex count, every other line is one edge as two
/// 0-based indices. Without a header the vertex count is 1 + max index.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace ogk
