#pragma once

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>

#include "ogk/bounds.hpp"
#include "ogk/chromatic.hpp"
#include "ogk/graph.hpp"
#include "ogk/labeling.hpp"
#include "ogk/solver.hpp"

namespace ogk {

// JSON layouts (keys are emitted sorted, so dumps are byte-stable):
//   graph        {"n": int, "edge_count": int, "edges": [[u, v], ...]}
//   labeling     {"k": int, "labels": [int, ...]}
//   coloring     {"num_colors": int, "colors": [int, ...]}
//   report       {"valid": bool, "vertex_proper": bool, "edges_all_odd":
//                 bool, "edge_proper": bool, "violations": [...]}
//   bounds       {"chi_og": "infinite"} or {"lower": [...], "upper": [...],
//                 "best_lower": int, "best_upper": int}
//   solve result {"chi": int | "infinite", "witness"?: labeling,
//                 "stats": {...}}

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Labeling& lab);
nlohmann::json to_json(const ProperColoring& coloring);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const SolveResult& result);
nlohmann::json to_json(const DedupedOptima& optima, int k);

Labeling labeling_from_json(const nlohmann::json& j);
Labeling read_labeling_file(const std::string& path);

/// Graphviz output; with a labeling, vertices render as "v (label)" and
/// edges carry their induced label.
void write_dot(std::ostream& out, const Graph& g, const Labeling* lab = nullptr);

} // namespace ogk
