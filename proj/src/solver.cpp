#include "ogk/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "ogk/bipartite.hpp"
#include "ogk/bounds.hpp"

namespace ogk {

namespace {

using Clock = std::chrono::steady_clock;

// Value domain over labels 1..127.
struct Mask128 {
    uint64_t lo = 0, hi = 0;

    static Mask128 closed_range(int a, int b) {
        Mask128 m;
        for (int v = std::max(a, 0); v <= b && v < 128; ++v) m.set(v);
        return m;
    }
    static Mask128 below(int v) { // bits 0..v-1
        Mask128 m;
        if (v > 0) {
            m.lo = v < 64 ? (uint64_t{1} << v) - 1 : ~uint64_t{0};
            if (v > 64) m.hi = v < 128 ? (uint64_t{1} << (v - 64)) - 1 : ~uint64_t{0};
        }
        return m;
    }
    static Mask128 above(int v) { // bits v+1..127
        Mask128 m = below(v + 1);
        m.lo = ~m.lo;
        m.hi = ~m.hi;
        return m;
    }
    bool test(int v) const { return v < 64 ? (lo >> v) & 1u : (hi >> (v - 64)) & 1u; }
    void set(int v) { (v < 64 ? lo : hi) |= uint64_t{1} << (v & 63); }
    void clear(int v) { (v < 64 ? lo : hi) &= ~(uint64_t{1} << (v & 63)); }
    bool empty() const { return lo == 0 && hi == 0; }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    int next(int v) const { // smallest member > v, or -1
        ++v;
        if (v < 64) {
            uint64_t bits = lo & (~uint64_t{0} << v);
            if (bits) return std::countr_zero(bits);
            v = 64;
        }
        uint64_t bits = hi & (v < 128 ? ~uint64_t{0} << (v - 64) : 0);
        return bits ? 64 + std::countr_zero(bits) : -1;
    }
    Mask128& operator&=(const Mask128& o) {
        lo &= o.lo;
        hi &= o.hi;
        return *this;
    }
    Mask128& operator|=(const Mask128& o) {
        lo |= o.lo;
        hi |= o.hi;
        return *this;
    }
};

enum class Mode { FirstSolution, Enumerate };

struct CoreSplit {
    Graph core;                 // the one component that carries every edge
    std::vector<int> core_to_g; // core vertex -> original vertex
    std::vector<int> isolates;  // original ids of degree-0 vertices
};

// Accept a graph whose edges all live in one component; remaining vertices
// must be isolated. Anything else is out of scope for the solver.
CoreSplit split_isolates(const Graph& g) {
    CoreSplit out;
    int n = g.vertex_count();
    std::vector<int> comp = component_ids(g);
    int edge_comp = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) {
            out.isolates.push_back(v);
            continue;
        }
        if (edge_comp == -1) edge_comp = comp[size_t(v)];
        if (comp[size_t(v)] != edge_comp)
            throw DisconnectedError("graph has more than one component with edges");
        out.core_to_g.push_back(v);
    }
    std::vector<int> g_to_core(size_t(n), -1);
    for (size_t i = 0; i < out.core_to_g.size(); ++i) g_to_core[size_t(out.core_to_g[i])] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(g_to_core[size_t(u)], g_to_core[size_t(v)]);
    out.core = Graph::from_edges(int(out.core_to_g.size()), edges);
    return out;
}

// Backtracking search over one parity case. Domains are label bitmasks;
// assigning a vertex forward-checks three constraint families:
//   (a) vertices with a common neighbor take distinct labels,
//   (b) for a path a-b-c with b assigned, c must avoid 2 l(b) - l(a),
//   (c) for a path a-b-c with b open and both ends assigned, b must avoid
//       (l(a) + l(c)) / 2.
// When a side's square is complete the side additionally needs as many
// remaining values as open vertices, which catches dead ends long before
// single domains empty out.
class LabelSearch {
public:
    LabelSearch(const Graph& core, const Bipartition& parts, const SolveOptions& opts,
                SearchStats& stats, Clock::time_point start)
        : g_(core), n_(core.vertex_count()), opts_(opts), stats_(stats), start_(start) {
        nbrs_.resize(size_t(n_));
        shared_.resize(size_t(n_));
        side_.resize(size_t(n_));
        VertexSet sides[2] = {parts.u_side, parts.w_side};
        for (int s = 0; s < 2; ++s)
            for (int v = sides[s].first(); v != -1; v = sides[s].next(v)) {
                side_[size_t(v)] = int8_t(s);
                side_members_[s].push_back(v);
            }
        for (int v = 0; v < n_; ++v) {
            nbrs_[size_t(v)] = g_.neighbor_list(v);
            VertexSet reach(n_);
            for (int b : nbrs_[size_t(v)]) reach |= g_.neighbors(b);
            reach.reset(v);
            shared_[size_t(v)] = reach.to_vector();
        }
        for (int s = 0; s < 2; ++s) {
            side_square_complete_[s] = true;
            const auto& members = side_members_[s];
            for (size_t i = 0; i < members.size() && side_square_complete_[s]; ++i) {
                VertexSet reach(n_);
                for (int b : nbrs_[size_t(members[i])]) reach |= g_.neighbors(b);
                for (size_t j = i + 1; j < members.size(); ++j)
                    if (!reach.test(members[j])) {
                        side_square_complete_[s] = false;
                        break;
                    }
            }
        }
        // Vertices with identical neighborhoods are interchangeable by an
        // automorphism, so feasibility search may force ascending labels
        // along each such class (enumeration must not).
        {
            std::map<std::vector<int>, std::vector<int>> classes;
            for (int v = 0; v < n_; ++v) classes[nbrs_[size_t(v)]].push_back(v);
            twin_earlier_.resize(size_t(n_));
            twin_later_.resize(size_t(n_));
            for (const auto& [key, members] : classes)
                for (size_t i = 0; i < members.size(); ++i)
                    for (size_t j = i + 1; j < members.size(); ++j) {
                        twin_later_[size_t(members[i])].push_back(members[j]);
                        twin_earlier_[size_t(members[j])].push_back(members[i]);
                    }
        }

        // Static branching order: square degree descending, index ascending.
        std::vector<int> sq_degree(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            VertexSet reach = g_.neighbors(v);
            for (int b : nbrs_[size_t(v)]) reach |= g_.neighbors(b);
            reach.reset(v);
            sq_degree[size_t(v)] = reach.count();
        }
        order_.resize(size_t(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return sq_degree[size_t(a)] > sq_degree[size_t(b)];
        });
        label_.assign(size_t(n_), 0);
    }

    void use_index_order() { std::iota(order_.begin(), order_.end(), 0); }

    /// Runs one parity case. Returns true when the search was cut short
    /// (first solution found, or the sink asked to stop).
    bool run(int k, bool u_side_odd, bool break_reflection, bool break_twins, Mode mode,
             const std::function<bool(const std::vector<int>&)>* sink) {
        k_ = k;
        mode_ = mode;
        break_twins_ = break_twins;
        sink_ = sink;
        found_.reset();
        ++stats_.parity_cases_tried;
        Mask128 parity_dom[2];
        for (int v = 1; v <= k; ++v) {
            bool odd = v % 2 != 0;
            parity_dom[odd == u_side_odd ? 0 : 1].set(v);
        }
        domains_.assign(size_t(n_) * size_t(n_ + 1), Mask128{});
        Mask128* root = level(0);
        for (int v = 0; v < n_; ++v) root[v] = parity_dom[side_[size_t(v)]];
        if (break_reflection && n_ > 0)
            root[order_[0]] &= Mask128::closed_range(1, (k + 1) / 2);
        std::fill(label_.begin(), label_.end(), 0);
        return dfs(0);
    }

    const std::optional<std::vector<int>>& found() const { return found_; }

private:
    Mask128* level(int depth) { return domains_.data() + size_t(depth) * size_t(n_); }

    void bump() {
        ++stats_.nodes_explored;
        if (stats_.nodes_explored > opts_.node_limit)
            throw ResourceError("node limit exceeded", snapshot());
        if ((stats_.nodes_explored & 0xFFF) == 0) {
            double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
            if (elapsed > opts_.time_limit_s)
                throw ResourceError("time limit exceeded", snapshot());
        }
    }

    SearchStats snapshot() const {
        SearchStats s = stats_;
        s.wall_time_s = std::chrono::duration<double>(Clock::now() - start_).count();
        return s;
    }

    bool drop(Mask128* dom, int vertex, int value) {
        if (value < 1 || value > k_) return true;
        dom[vertex].clear(value);
        return label_[size_t(vertex)] != 0 || !dom[vertex].empty();
    }

    bool propagate(int v, int x, Mask128* dom) {
        for (int t : shared_[size_t(v)])
            if (label_[size_t(t)] == 0 && !drop(dom, t, x)) return false;
        if (break_twins_) {
            for (int t : twin_later_[size_t(v)])
                if (label_[size_t(t)] == 0) {
                    dom[t] &= Mask128::above(x);
                    if (dom[t].empty()) return false;
                }
            for (int t : twin_earlier_[size_t(v)])
                if (label_[size_t(t)] == 0) {
                    dom[t] &= Mask128::below(x);
                    if (dom[t].empty()) return false;
                }
        }
        for (int b : nbrs_[size_t(v)]) {
            int lb = label_[size_t(b)];
            if (lb != 0) {
                int forbidden = 2 * lb - x;
                for (int c : nbrs_[size_t(b)])
                    if (c != v && label_[size_t(c)] == 0 && !drop(dom, c, forbidden)) return false;
            } else {
                for (int c : nbrs_[size_t(b)]) {
                    int lc = c == v ? 0 : label_[size_t(c)];
                    if (lc != 0 && !drop(dom, b, (x + lc) / 2)) return false;
                }
                if (dom[b].empty()) return false;
            }
        }
        for (int a : nbrs_[size_t(v)]) {
            int la = label_[size_t(a)];
            if (la == 0) continue;
            int forbidden = 2 * x - la;
            for (int c : nbrs_[size_t(v)])
                if (c != a && label_[size_t(c)] == 0 && !drop(dom, c, forbidden)) return false;
        }
        for (int s = 0; s < 2; ++s) {
            if (!side_square_complete_[s]) continue;
            Mask128 pool;
            int open = 0;
            for (int t : side_members_[s])
                if (label_[size_t(t)] == 0) {
                    pool |= dom[t];
                    ++open;
                }
            if (pool.count() < open) return false;
        }
        return true;
    }

    bool dfs(int depth) {
        if (depth == n_) {
            if (mode_ == Mode::FirstSolution) {
                found_ = label_;
                return true;
            }
            return sink_ && !(*sink_)(label_);
        }
        int v = order_[size_t(depth)];
        Mask128 dom = level(depth)[v];
        Mask128* child = level(depth + 1);
        for (int x = dom.next(0); x != -1; x = dom.next(x)) {
            bump();
            std::copy(level(depth), level(depth) + n_, child);
            label_[size_t(v)] = x;
            if (propagate(v, x, child) && dfs(depth + 1)) {
                label_[size_t(v)] = 0;
                return true;
            }
            label_[size_t(v)] = 0;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    const SolveOptions& opts_;
    SearchStats& stats_;
    Clock::time_point start_;

    std::vector<std::vector<int>> nbrs_;
    std::vector<std::vector<int>> shared_; // distance-2 partners (common neighbor)
    std::vector<int8_t> side_;
    std::vector<int> side_members_[2];
    std::vector<std::vector<int>> twin_earlier_;
    std::vector<std::vector<int>> twin_later_;
    bool side_square_complete_[2] = {false, false};
    bool break_twins_ = false;
    std::vector<int> order_;

    int k_ = 0;
    Mode mode_ = Mode::FirstSolution;
    const std::function<bool(const std::vector<int>&)>* sink_ = nullptr;
    std::vector<int> label_;
    std::vector<Mask128> domains_;
    std::optional<std::vector<int>> found_;
};

Labeling assemble(const CoreSplit& split, int n_total, const std::vector<int>& core_labels,
                  int k) {
    Labeling lab{std::vector<int>(size_t(n_total), 1), k};
    for (size_t i = 0; i < split.core_to_g.size(); ++i)
        lab.labels[size_t(split.core_to_g[i])] = core_labels[i];
    return lab;
}

void check_k(int k) {
    if (k < 1) throw ParameterError("label bound k must be at least 1");
    if (k > 127) throw ParameterError("label bound k exceeds the solver capacity of 127");
}

} // namespace

std::optional<Labeling> exists_labeling(const Graph& g, int k, const SolveOptions& opts,
                                        SearchStats* stats_out) {
    check_k(k);
    SearchStats stats;
    auto start = Clock::now();
    auto finish = [&](std::optional<Labeling> result) {
        stats.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
        if (stats_out) *stats_out = stats;
        return result;
    };

    CoreSplit split = split_isolates(g);
    if (split.core.vertex_count() == 0)
        return finish(Labeling{std::vector<int>(size_t(g.vertex_count()), 1), k});
    auto parts_or = bipartition(split.core);
    if (std::holds_alternative<NotBipartite>(parts_or)) return finish(std::nullopt);
    const Bipartition& parts = std::get<Bipartition>(parts_or);

    LabelSearch search(split.core, parts, opts, stats, start);
    try {
        if (opts.canonical_witness) {
            // Lexicographic order with no reflection breaking: the first
            // solution of each parity case is its lexicographic minimum.
            search.use_index_order();
            std::optional<std::vector<int>> best;
            for (bool u_odd : {true, false}) {
                search.run(k, u_odd, false, true, Mode::FirstSolution, nullptr);
                if (search.found() && (!best || *search.found() < *best)) best = search.found();
            }
            if (!best) return finish(std::nullopt);
            return finish(assemble(split, g.vertex_count(), *best, k));
        }
        // Even k: reflection swaps the parity cases, so one case decides
        // feasibility. Odd k: reflection fixes each case; pin the first
        // branching vertex to the lower half instead.
        bool both_cases = k % 2 != 0;
        if (search.run(k, true, both_cases, true, Mode::FirstSolution, nullptr))
            return finish(assemble(split, g.vertex_count(), *search.found(), k));
        if (both_cases && search.run(k, false, true, true, Mode::FirstSolution, nullptr))
            return finish(assemble(split, g.vertex_count(), *search.found(), k));
        return finish(std::nullopt);
    } catch (ResourceError& e) {
        e.stats.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
        if (stats_out) *stats_out = e.stats;
        throw;
    }
}

SolveResult solve_chi_og(const Graph& g, const SolveOptions& opts) {
    SolveResult result;
    auto start = Clock::now();
    auto stamp = [&] {
        result.stats.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    };

    CoreSplit split = split_isolates(g);
    if (split.core.vertex_count() == 0) {
        result.chi = 1;
        result.witness = Labeling{std::vector<int>(size_t(g.vertex_count()), 1), 1};
        stamp();
        return result;
    }
    auto parts_or = bipartition(split.core);
    if (std::holds_alternative<NotBipartite>(parts_or)) {
        stamp();
        return result; // chi stays empty: infinite
    }

    const Graph& core = split.core;
    int lower = std::max(1, 2 * max_degree(core));
    int upper = upper_bound_square(core, core.vertex_count() <= 40).value;
    if (core.vertex_count() >= 2) upper = std::min(upper, upper_bound_vertices(core));
    if (max_degree(core) >= 2) upper = std::min(upper, upper_bound_brooks(core));

    int k_lo = std::max(opts.k_min.value_or(lower), 1);
    int k_hi = opts.k_max.value_or(upper);
    for (int k = k_lo; k <= k_hi; ++k) {
        // The budget covers the whole deepening run, not one bound.
        SolveOptions remaining = opts;
        remaining.node_limit = opts.node_limit - result.stats.nodes_explored;
        remaining.time_limit_s =
            opts.time_limit_s - std::chrono::duration<double>(Clock::now() - start).count();
        if (remaining.node_limit <= 0 || remaining.time_limit_s <= 0) {
            stamp();
            throw ResourceError("budget exhausted at bound " + std::to_string(k), result.stats);
        }
        SearchStats step;
        std::optional<Labeling> witness;
        try {
            witness = exists_labeling(g, k, remaining, &step);
        } catch (ResourceError& e) {
            e.stats.nodes_explored += result.stats.nodes_explored;
            e.stats.parity_cases_tried += result.stats.parity_cases_tried;
            e.stats.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
            throw;
        }
        result.stats.nodes_explored += step.nodes_explored;
        result.stats.parity_cases_tried += step.parity_cases_tried;
        if (witness) {
            result.chi = k;
            result.witness = std::move(witness);
            stamp();
            return result;
        }
    }
    if (opts.k_max)
        throw ParameterError("no valid labeling with bound at most " + std::to_string(k_hi) +
                             "; raise k_max");
    throw std::logic_error("search refuted a certified upper bound; solver defect");
}

void enumerate_optimal(const Graph& g, int k, const std::function<bool(const Labeling&)>& sink,
                       const SolveOptions& opts, SearchStats* stats_out) {
    check_k(k);
    SearchStats stats;
    auto start = Clock::now();
    CoreSplit split = split_isolates(g);
    if (!split.isolates.empty())
        throw ParameterError("enumeration requires a graph without isolated vertices");
    if (split.core.vertex_count() != g.vertex_count() || g.vertex_count() == 0)
        throw DisconnectedError("enumeration requires a connected graph");
    auto parts_or = bipartition(g);
    if (std::holds_alternative<NotBipartite>(parts_or))
        throw NotBipartiteError("enumeration requires a bipartite graph");
    const Bipartition& parts = std::get<Bipartition>(parts_or);

    LabelSearch search(g, parts, opts, stats, start);
    std::function<bool(const std::vector<int>&)> emit = [&](const std::vector<int>& labels) {
        return sink(Labeling{labels, k});
    };
    try {
        // Every valid labeling is all-odd on one side and all-even on the
        // other, so the two parity cases cover the space exactly once.
        if (!search.run(k, true, false, false, Mode::Enumerate, &emit))
            search.run(k, false, false, false, Mode::Enumerate, &emit);
    } catch (ResourceError& e) {
        e.stats.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
        if (stats_out) *stats_out = e.stats;
        throw;
    }
    stats.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    if (stats_out) *stats_out = stats;
}

DedupedOptima enumerate_optimal_deduped(const Graph& g, int k, const SolveOptions& opts) {
    auto parts_or = bipartition(g);
    if (std::holds_alternative<NotBipartite>(parts_or))
        throw NotBipartiteError("enumeration requires a bipartite graph");
    const Bipartition& parts = std::get<Bipartition>(parts_or);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    DedupedOptima out;
    enumerate_optimal(
        g, k,
        [&](const Labeling& lab) {
            ++out.labeling_count;
            int max_label = *std::max_element(lab.labels.begin(), lab.labels.end());
            if (max_label < k) ++out.below_bound_count;
            std::vector<int> a, b;
            for (int v = 0; v < g.vertex_count(); ++v)
                (parts.in_u(v) ? a : b).push_back(lab.labels[size_t(v)]);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (b < a) std::swap(a, b);
            seen.emplace(std::move(a), std::move(b));
            return true;
        },
        opts);
    for (const auto& [a, b] : seen) out.pairs.push_back(LabelSetPair{a, b});
    return out;
}

std::optional<int> brute_force_chi(const Graph& g, int k_cap) {
    int n = g.vertex_count();
    if (n > 7) throw ParameterError("brute-force oracle is capped at 7 vertices");
    if (n == 0) throw ParameterError("brute-force oracle needs a nonempty graph");
    if (k_cap < 1) throw ParameterError("k_cap must be at least 1");
    for (int k = 1; k <= k_cap; ++k) {
        Labeling lab{std::vector<int>(size_t(n), 1), k};
        while (true) {
            if (is_valid_labeling(g, lab)) return k;
            int pos = 0;
            while (pos < n && lab.labels[size_t(pos)] == k) lab.labels[size_t(pos++)] = 1;
            if (pos == n) break;
            ++lab.labels[size_t(pos)];
        }
    }
    return std::nullopt;
}

} // namespace ogk
