#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ogk/errors.hpp"
#include "ogk/graph.hpp"
#include "ogk/labeling.hpp"

namespace ogk {

struct SolveOptions {
    /// Trusted bound overrides for the chromatic search. k_min asserts that
    /// no labeling exists below it; k_max caps the search and makes the run
    /// fail with ParameterError instead of certifying a value beyond it.
    std::optional<int> k_min;
    std::optional<int> k_max;
    /// Return the lexicographically smallest valid label vector.
    bool canonical_witness = false;
    long long node_limit = 100'000'000;
    double time_limit_s = 600.0;
};

/// Exact chromatic value. chi empty means no odd graceful coloring exists at
/// any bound (non-bipartite input); otherwise witness is a valid labeling
/// with bound chi, and every smaller bound was refuted exhaustively.
struct SolveResult {
    std::optional<int> chi;
    std::optional<Labeling> witness;
    SearchStats stats;
    bool infinite() const { return !chi.has_value(); }
};

/// Backtracking feasibility test at a fixed bound k. Searches the two
/// label-parity cases over parity-restricted domains, propagating
/// distance-two distinctness and the incident-difference constraint, with
/// the reflection x -> k+1-x broken out of the search space. Returns a
/// valid labeling or nullopt when none exists at this k. Throws
/// ResourceError (carrying partial stats) on budget exhaustion, and accepts
/// graphs whose edges form one connected block plus isolated vertices;
/// isolated vertices take label 1.
std::optional<Labeling> exists_labeling(const Graph& g, int k, const SolveOptions& opts = {},
                                        SearchStats* stats = nullptr);

/// Exact odd graceful chromatic number by iterative deepening on k from the
/// degree lower bound to the cheapest certified upper bound. Infeasibility
/// at each intermediate k is proved by exhaustion, so the first feasible k
/// is the chromatic value.
SolveResult solve_chi_og(const Graph& g, const SolveOptions& opts = {});

/// Emits every valid labeling with bound exactly k (labels drawn from
/// 1..k; vectors whose maximum stays below k are included). No symmetry is
/// broken: reflections and both parity cases all appear. The sink returns
/// false to stop early. Requires a connected graph.
void enumerate_optimal(const Graph& g, int k,
                       const std::function<bool(const Labeling&)>& sink,
                       const SolveOptions& opts = {}, SearchStats* stats = nullptr);

/// Enumeration collapsed to unordered pairs of per-side label sets.
struct LabelSetPair {
    std::vector<int> first, second; // sorted; first <= second lexicographically
    bool operator==(const LabelSetPair&) const = default;
};
struct DedupedOptima {
    std::vector<LabelSetPair> pairs; // sorted, unique
    long long labeling_count = 0;
    /// Labelings whose maximum label stayed below k; expected to be zero at
    /// the exact bound of the classified families, flagged for review.
    long long below_bound_count = 0;
};
DedupedOptima enumerate_optimal_deduped(const Graph& g, int k, const SolveOptions& opts = {});

/// Independent oracle: for k = 1..k_cap enumerate every vector in {1..k}^n
/// and report the first k admitting a valid labeling, nullopt when none is
/// found below the cap. No pruning beyond stopping at the first hit; capped
/// at 7 vertices.
std::optional<int> brute_force_chi(const Graph& g, int k_cap);

} // namespace ogk
