#pragma once

#include "ogk/bipartite.hpp"
#include "ogk/chromatic.hpp"
#include "ogk/graph.hpp"
#include "ogk/labeling.hpp"

namespace ogk {

/// Turns proper colorings of the two side squares into an odd graceful
/// coloring: u-side vertices get 2*color - 1, w-side vertices get
/// 2*(color + c_u - 1) where c_u is the u-side color count. The bound is
/// k = 2*(c_u + c_w - 1). Any proper colorings work, minimality is not
/// required. Coloring entry i refers to the i-th smallest vertex of the
/// side, matching square_induced's re-indexing.
Labeling from_square_colorings(const Graph& g, const Bipartition& parts,
                               const ProperColoring& side_u, const ProperColoring& side_w);

/// Optimal-bound labeling of K m n for m >= n >= 2, on generate's vertex
/// numbering. Reaches 2m+2n-3 when m is even and n equals m or 2, and
/// 2m+2n-2 otherwise.
Labeling label_complete_bipartite(int m, int n);

/// Labeling of K m n - K1 r on generate's numbering. Reaches the exact
/// bound for every case it targets; for parameter corners outside the tight
/// constructions it restricts a one-edge-removed labeling, still a valid
/// upper bound since labelings survive edge deletion.
Labeling label_near_complete(int m, int n, int r);

/// Labeling of the Moebius ladder on two_n vertices (two_n/2 odd), composed
/// from the circulant {1,2} colorings of the two side squares. The bound is
/// 10, 14 or 18 according to two_n/2 modulo 6.
Labeling label_mobius(int two_n);

} // namespace ogk
