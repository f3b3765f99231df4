#include "ogk/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ogk/bipartite.hpp"
#include "ogk/bounds.hpp"
#include "ogk/constructions.hpp"
#include "ogk/errors.hpp"
#include "ogk/families.hpp"
#include "ogk/serialize.hpp"
#include "ogk/solver.hpp"
#include "ogk/theorem_checks.hpp"

namespace ogk {

namespace {

using nlohmann::json;

struct GraphInput {
    std::string family;
    std::string path;

    void attach(CLI::App* cmd, bool family_only = false) {
        auto* pos =
            cmd->add_option("family", family, "family DSL, e.g. \"K 4 4\" or \"mobius 18\"");
        if (family_only) {
            pos->required();
        } else {
            auto* file = cmd->add_option("--input", path, "edge-list file");
            pos->excludes(file);
        }
    }

    bool has_family() const { return !family.empty(); }

    Graph load(FamilySpec* spec_out = nullptr) const {
        if (has_family()) {
            FamilySpec spec = parse_family(family);
            if (spec_out) *spec_out = spec;
            return generate(spec);
        }
        if (!path.empty()) return read_edge_list_file(path);
        throw ParameterError("give a family DSL or --input FILE");
    }
};

SolveOptions env_defaults() {
    SolveOptions opts;
    if (const char* env = std::getenv("OGK_NODE_LIMIT")) {
        try {
            opts.node_limit = std::stoll(env);
        } catch (const std::exception&) {
            throw ParameterError("OGK_NODE_LIMIT is not an integer");
        }
    }
    return opts;
}

void attach_solve_flags(CLI::App* cmd, const std::shared_ptr<SolveOptions>& opts) {
    cmd->add_option("--k-min", opts->k_min, "trusted lower bound override");
    cmd->add_option("--k-max", opts->k_max, "cap the searched bound");
    cmd->add_flag("--canonical", opts->canonical_witness,
                  "return the lexicographically smallest witness");
    cmd->add_option("--node-limit", opts->node_limit, "search node budget");
    cmd->add_option("--time-limit", opts->time_limit_s, "search time budget in seconds");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

} // namespace

namespace {

int run_cli_impl(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"odd graceful coloring toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen
    auto gen_input = std::make_shared<GraphInput>();
    auto gen_format = std::make_shared<std::string>("json");
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen_input->attach(gen);
    gen->add_option("--format", *gen_format, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    gen->callback([&out, gen_input, gen_format] {
        Graph g = gen_input->load();
        if (*gen_format == "json") emit(out, to_json(g));
        else if (*gen_format == "dot") write_dot(out, g);
        else write_edge_list(out, g);
    });

    // chi
    auto chi_input = std::make_shared<GraphInput>();
    auto* chi = app.add_subcommand("chi", "exact chromatic number of a graph");
    chi_input->attach(chi);
    chi->callback([&out, chi_input] { emit(out, to_json(chi_exact(chi_input->load()))); });

    // bound
    auto bound_input = std::make_shared<GraphInput>();
    auto bound_greedy = std::make_shared<bool>(false);
    auto* bound = app.add_subcommand("bound", "report all applicable bounds");
    bound_input->attach(bound);
    bound->add_flag("--greedy", *bound_greedy, "greedy side-square colorings (skip chi_exact)");
    bound->callback([&out, bound_input, bound_greedy] {
        FamilySpec spec;
        bool has_family = bound_input->has_family();
        Graph g = bound_input->load(&spec);
        emit(out, to_json(bound_report(g, has_family ? &spec : nullptr, !*bound_greedy)));
    });

    // solve
    auto solve_input = std::make_shared<GraphInput>();
    auto solve_opts = std::make_shared<SolveOptions>(env_defaults());
    auto* solve = app.add_subcommand("solve", "exact odd graceful chromatic number");
    solve_input->attach(solve);
    attach_solve_flags(solve, solve_opts);
    solve->callback([&out, solve_input, solve_opts] {
        emit(out, to_json(solve_chi_og(solve_input->load(), *solve_opts)));
    });

    // exists
    auto exists_input = std::make_shared<GraphInput>();
    auto exists_k = std::make_shared<int>(0);
    auto exists_opts = std::make_shared<SolveOptions>(env_defaults());
    auto* exists = app.add_subcommand("exists", "feasibility at a fixed bound");
    exists_input->attach(exists);
    exists->add_option("-k,--k", *exists_k, "label bound")->required();
    attach_solve_flags(exists, exists_opts);
    exists->callback([&out, exists_input, exists_k, exists_opts] {
        auto witness = exists_labeling(exists_input->load(), *exists_k, *exists_opts);
        json j{{"k", *exists_k}, {"feasible", witness.has_value()}};
        if (witness) j["labeling"] = to_json(*witness);
        emit(out, j);
    });

    // enumerate
    auto enum_input = std::make_shared<GraphInput>();
    auto enum_k = std::make_shared<int>(0);
    auto enum_dedupe = std::make_shared<bool>(false);
    auto enum_limit = std::make_shared<long long>(-1);
    auto enum_opts = std::make_shared<SolveOptions>(env_defaults());
    auto* enumerate = app.add_subcommand("enumerate", "all valid labelings at a fixed bound");
    enum_input->attach(enumerate);
    enumerate->add_option("-k,--k", *enum_k, "label bound")->required();
    enumerate->add_flag("--dedupe", *enum_dedupe, "collapse to per-side label sets");
    enumerate->add_option("--limit", *enum_limit, "stop after this many labelings");
    attach_solve_flags(enumerate, enum_opts);
    enumerate->callback([&out, enum_input, enum_k, enum_dedupe, enum_limit, enum_opts] {
        Graph g = enum_input->load();
        if (*enum_dedupe) {
            emit(out, to_json(enumerate_optimal_deduped(g, *enum_k, *enum_opts), *enum_k));
            return;
        }
        long long seen = 0;
        enumerate_optimal(
            g, *enum_k,
            [&](const Labeling& lab) {
                out << to_json(lab).dump() << "\n";
                ++seen;
                return *enum_limit < 0 || seen < *enum_limit;
            },
            *enum_opts);
    });

    // construct
    auto cons_input = std::make_shared<GraphInput>();
    auto cons_format = std::make_shared<std::string>("json");
    auto* construct = app.add_subcommand("construct", "build the stored labeling of a family");
    cons_input->attach(construct, /*family_only=*/true);
    construct->add_option("--format", *cons_format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));
    construct->callback([&out, cons_input, cons_format] {
        FamilySpec spec = parse_family(cons_input->family);
        Graph g = generate(spec);
        Labeling lab;
        if (const auto* kmn = std::get_if<CompleteBipartiteSpec>(&spec))
            lab = label_complete_bipartite(kmn->m, kmn->n);
        else if (const auto* nc = std::get_if<NearCompleteSpec>(&spec))
            lab = label_near_complete(nc->m, nc->n, nc->r);
        else if (const auto* mob = std::get_if<MobiusSpec>(&spec))
            lab = label_mobius(mob->order);
        else
            throw ParameterError("construct covers K m n, K m n - K1 r and mobius families");
        if (*cons_format == "dot") {
            write_dot(out, g, &lab);
        } else {
            emit(out, json{{"family", family_name(spec)},
                           {"graph", to_json(g)},
                           {"labeling", to_json(lab)}});
        }
    });

    // verify
    auto verify_graph = std::make_shared<std::string>();
    auto verify_lab = std::make_shared<std::string>();
    auto verify_family = std::make_shared<std::string>();
    auto* verify_cmd = app.add_subcommand("verify", "check a labeling against a graph");
    auto* vg = verify_cmd->add_option("graph", *verify_graph, "edge-list file");
    verify_cmd->add_option("labeling", *verify_lab, "labeling JSON file")->required();
    verify_cmd->add_option("--family", *verify_family, "family DSL instead of a graph file")
        ->excludes(vg);
    verify_cmd->callback([&out, verify_graph, verify_lab, verify_family] {
        if (verify_family->empty() && verify_graph->empty())
            throw ParameterError("give an edge-list file or --family");
        Graph g = verify_family->empty() ? read_edge_list_file(*verify_graph)
                                         : generate(parse_family(*verify_family));
        emit(out, to_json(verify(g, read_labeling_file(*verify_lab))));
    });

    // oracle
    auto oracle_input = std::make_shared<GraphInput>();
    auto oracle_cap = std::make_shared<int>(0);
    auto* oracle = app.add_subcommand("oracle", "brute-force chromatic value (up to 7 vertices)");
    oracle_input->attach(oracle);
    oracle->add_option("--cap", *oracle_cap, "largest bound to try (default 2n)");
    oracle->callback([&out, oracle_input, oracle_cap] {
        Graph g = oracle_input->load();
        int cap = *oracle_cap > 0 ? *oracle_cap : 2 * g.vertex_count();
        auto chi_value = brute_force_chi(g, cap);
        json j{{"k_cap", cap}};
        j["chi"] = chi_value ? json(*chi_value) : json(nullptr);
        emit(out, j);
    });

    // theorem-check
    auto deep = std::make_shared<bool>(false);
    auto tc_json = std::make_shared<bool>(false);
    auto* tc = app.add_subcommand("theorem-check", "re-derive the headline results from scratch");
    tc->add_flag("--deep", *deep, "include the two 13-vertex exact computations");
    tc->add_flag("--json", *tc_json, "machine-readable output");
    tc->callback([&out, &exit_code, deep, tc_json] {
        auto results = run_theorem_checks(*deep);
        bool all_pass = true;
        for (const auto& r : results) all_pass = all_pass && r.pass;
        if (*tc_json) {
            json rows = json::array();
            for (const auto& r : results)
                rows.push_back(json{{"id", r.id},
                                    {"claim", r.claim},
                                    {"pass", r.pass},
                                    {"detail", r.detail},
                                    {"seconds", r.seconds}});
            emit(out, rows);
        } else {
            for (const auto& r : results) {
                out << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(26) << r.id
                    << " [" << std::fixed << std::setprecision(1) << r.seconds << "s] " << r.claim
                    << "\n";
                if (!r.pass) out << "      " << r.detail << "\n";
            }
        }
        if (!all_pass) exit_code = 3;
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    try {
        return run_cli_impl(std::move(args), out, err);
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << " (nodes=" << e.stats.nodes_explored << ")\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace ogk
