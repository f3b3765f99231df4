#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ogk/bipartite.hpp"
#include "ogk/chromatic.hpp"
#include "ogk/families.hpp"
#include "ogk/graph.hpp"

namespace ogk {

enum class BoundSource {
    TrivialDegree,          // lower: twice the maximum degree
    SquareChromatic,        // upper: 2(chi(square of U) + chi(square of W) - 1)
    BrooksSquare,           // upper: 4 D^2 - 4 D -/+ 2 via Brooks on the side squares
    VertexCount,            // upper: 2|V| - 2 (complete bipartite graphs)
    VertexCountNonComplete, // upper: 2|V| - 4 (everything else)
    KnownExactFamily,       // both: closed-form value for recognized families
};
std::string to_string(BoundSource source);

struct BoundEntry {
    int value;
    BoundSource source;
};

/// Named bounds for one graph. infinite marks non-bipartite input, where no
/// odd graceful coloring exists at any bound.
struct BoundReport {
    bool infinite = false;
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    int best_lower = 0;
    int best_upper = 0;
};

/// 2 * max degree for connected bipartite g; nullopt when g is not
/// bipartite (the chromatic number is infinite there). Throws
/// DisconnectedError on disconnected input.
std::optional<int> lower_bound_degree(const Graph& g);

/// The square-coloring upper bound together with the side colorings that
/// witness it (feed them to from_square_colorings). exact selects chi_exact
/// for the side squares, otherwise greedy.
struct SquareBound {
    int value;
    Bipartition parts;
    ProperColoring side_u;
    ProperColoring side_w;
};
SquareBound upper_bound_square(const Graph& g, bool exact);

/// 4 D^2 - 4 D - 2 when neither side square is an odd cycle or complete
/// (Brooks' theorem then saves one color per side), else 4 D^2 - 4 D + 2.
/// Requires connected bipartite g with max degree >= 2.
int upper_bound_brooks(const Graph& g);

/// Structural test that certifies the -2 branch without inspecting the
/// squares: with sides oriented so |U| <= |W|, requires diameter >= 5,
/// |E| > 2|W| and |U| >= 4.
bool prop_d2_applicable(const Graph& g);

/// 2|V| - 4 for connected bipartite graphs that are not complete bipartite,
/// 2|V| - 2 for complete bipartite ones. Requires |V| >= 2.
int upper_bound_vertices(const Graph& g);

/// Closed-form chromatic number for recognized families:
///   K m n (both sides >= 2, oriented m >= n):
///     2m+2n-3 when m is even and n is m or 2, else 2m+2n-2.
///   K m n - K1 r with r < n:
///     2m+2n-5 when (m = 3, n even, r >= 2), or (m = n+1, n = 2s, s >= 2,
///     s <= r <= 2s-1), or (m = n+1, n = 2s, odd s >= 5, r = s-1);
///     2m+2n-4 otherwise.
///   K m n - K1 r with r = n: the detached vertex is unconstrained, so the
///     value is that of K (m-1) n.
/// nullopt for families outside this table (including stars).
std::optional<int> known_exact(const FamilySpec& spec);

/// Collects every applicable bound. A family, when given, contributes its
/// closed-form value to both lists. exact selects chi_exact for the square
/// bound.
BoundReport bound_report(const Graph& g, const FamilySpec* family = nullptr, bool exact = true);

} // namespace ogk
