#pragma once

#include <string>
#include <vector>

namespace ogk {

/// One self-check row: a mathematical claim about odd graceful chromatic
/// numbers together with the verdict of re-deriving it from scratch.
struct CheckResult {
    std::string id;
    std::string claim;
    bool pass = false;
    std::string detail; // first few failures, empty on pass
    double seconds = 0.0;
};

/// Re-derives the library's headline exact values, classifications, bound
/// relations and construction validity from first principles (search and
/// brute force). include_deep adds the two 13-vertex exact computations,
/// which dominate the runtime.
std::vector<CheckResult> run_theorem_checks(bool include_deep);

/// Only the two deep 13-vertex computations.
std::vector<CheckResult> run_deep_checks();

} // namespace ogk
