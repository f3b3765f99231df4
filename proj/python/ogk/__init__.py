"""Odd graceful colorings of graphs.

A labeling of the vertices with integers from {1, ..., k} is an odd graceful
coloring when adjacent vertices get distinct labels, every edge difference
|l(u) - l(v)| is odd, and edges sharing a vertex carry distinct differences.
This package verifies such labelings, builds closed-form ones for complete
bipartite, near-complete bipartite and Moebius ladder graphs, reports lower
and upper bounds, and computes the exact minimum bound chi_og by exhaustive
search at small scale.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
