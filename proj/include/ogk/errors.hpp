#pragma once

#include <stdexcept>
#include <string>

namespace ogk {

/// Invalid argument or family parameter. The message names the violated
/// constraint.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by operations whose scope is connected graphs.
class DisconnectedError : public std::runtime_error {
public:
    explicit DisconnectedError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by operations that require a bipartite graph.
class NotBipartiteError : public std::runtime_error {
public:
    explicit NotBipartiteError(const std::string& what) : std::runtime_error(what) {}
};

/// Search effort counters. Shared by the solver and by ResourceError so a
/// failed run can still report how far it got.
struct SearchStats {
    long long nodes_explored = 0;
    int parity_cases_tried = 0;
    double wall_time_s = 0.0;
};

/// Node or time budget exhausted. Never means "infeasible": an exhausted
/// search proves nothing about the instance.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what, SearchStats partial = {})
        : std::runtime_error(what), stats(partial) {}
    SearchStats stats;
};

} // namespace ogk
