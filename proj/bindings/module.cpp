#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ogk/bipartite.hpp"
#include "ogk/bounds.hpp"
#include "ogk/constructions.hpp"
#include "ogk/corpus.hpp"
#include "ogk/errors.hpp"
#include "ogk/families.hpp"
#include "ogk/labeling.hpp"
#include "ogk/solver.hpp"
#include "ogk/theorem_checks.hpp"

namespace py = pybind11;
using namespace ogk;

namespace {

Bipartition require_parts(const Graph& g) {
    auto split = bipartition(g);
    if (std::holds_alternative<NotBipartite>(split))
        throw NotBipartiteError("graph is not bipartite");
    return std::get<Bipartition>(split);
}

py::dict bipartition_dict(const Graph& g) {
    py::dict out;
    auto split = bipartition(g);
    if (const auto* parts = std::get_if<Bipartition>(&split)) {
        out["bipartite"] = true;
        out["u_side"] = parts->u_side.to_vector();
        out["w_side"] = parts->w_side.to_vector();
    } else {
        out["bipartite"] = false;
        out["odd_cycle"] = std::get<NotBipartite>(split).odd_cycle;
    }
    return out;
}

py::dict bounds_dict(const Graph& g, const std::string& family, bool exact) {
    FamilySpec spec;
    bool has_family = !family.empty();
    if (has_family) spec = parse_family(family);
    BoundReport report = bound_report(g, has_family ? &spec : nullptr, exact);
    py::dict out;
    out["infinite"] = report.infinite;
    if (report.infinite) return out;
    auto entries = [](const std::vector<BoundEntry>& list) {
        py::list rows;
        for (const auto& e : list) rows.append(py::make_tuple(e.value, to_string(e.source)));
        return rows;
    };
    out["lower"] = entries(report.lower);
    out["upper"] = entries(report.upper);
    out["best_lower"] = report.best_lower;
    out["best_upper"] = report.best_upper;
    return out;
}

SolveOptions make_options(std::optional<int> k_min, std::optional<int> k_max, bool canonical,
                          long long node_limit, double time_limit_s) {
    SolveOptions opts;
    opts.k_min = k_min;
    opts.k_max = k_max;
    opts.canonical_witness = canonical;
    opts.node_limit = node_limit;
    opts.time_limit_s = time_limit_s;
    return opts;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "odd graceful colorings: verification, constructions, bounds and exact search";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DisconnectedError>(m, "DisconnectedError", PyExc_RuntimeError);
    py::register_exception<NotBipartiteError>(m, "NotBipartiteError", PyExc_RuntimeError);
    py::register_exception<ResourceError>(m, "ResourceLimitError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbor_list)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<Labeling>(m, "Labeling")
        .def(py::init([](std::vector<int> labels, int k) { return Labeling{std::move(labels), k}; }),
             py::arg("labels"), py::arg("k"))
        .def_readonly("labels", &Labeling::labels)
        .def_readonly("k", &Labeling::k)
        .def("__repr__", [](const Labeling& lab) {
            std::string out = "Labeling(k=" + std::to_string(lab.k) + ", labels=[";
            for (size_t i = 0; i < lab.labels.size(); ++i)
                out += (i ? "," : "") + std::to_string(lab.labels[i]);
            return out + "])";
        });

    py::class_<ProperColoring>(m, "ProperColoring")
        .def_readonly("colors", &ProperColoring::colors)
        .def_readonly("num_colors", &ProperColoring::num_colors);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("valid", &VerificationReport::valid)
        .def_readonly("vertex_proper", &VerificationReport::vertex_proper)
        .def_readonly("edges_all_odd", &VerificationReport::edges_all_odd)
        .def_readonly("edge_proper", &VerificationReport::edge_proper)
        .def_property_readonly("violations", [](const VerificationReport& r) {
            std::vector<std::string> out;
            for (const auto& v : r.violations) out.push_back(violation_text(v));
            return out;
        });

    py::class_<SolveResult>(m, "SolveResult")
        .def_property_readonly("chi",
                               [](const SolveResult& r) {
                                   return r.chi ? py::cast(*r.chi) : py::none().cast<py::object>();
                               })
        .def_property_readonly("infinite", &SolveResult::infinite)
        .def_property_readonly("witness",
                               [](const SolveResult& r) {
                                   return r.witness ? py::cast(*r.witness)
                                                    : py::none().cast<py::object>();
                               })
        .def_property_readonly("stats", [](const SolveResult& r) {
            py::dict d;
            d["nodes_explored"] = r.stats.nodes_explored;
            d["parity_cases_tried"] = r.stats.parity_cases_tried;
            d["wall_time_s"] = r.stats.wall_time_s;
            return d;
        });

    m.def("generate", [](const std::string& dsl) { return generate(parse_family(dsl)); },
          py::arg("family"), "Build a graph from the family DSL, e.g. 'K 4 4'.");
    m.def("read_edge_list", &read_edge_list_file, py::arg("path"));
    m.def("bipartition", &bipartition_dict, py::arg("g"));
    m.def("square_induced",
          [](const Graph& g, const std::vector<int>& members) {
              InducedSquare sq = square_induced(g, members);
              return py::make_tuple(sq.graph, sq.vertex_map);
          },
          py::arg("g"), py::arg("members"));
    m.def("diameter", &diameter);
    m.def("max_degree", &max_degree);
    m.def("is_complete", &is_complete);
    m.def("is_odd_cycle", &is_odd_cycle);
    m.def("is_connected", &is_connected);

    m.def("greedy_coloring",
          [](const Graph& g, std::optional<std::vector<int>> order) {
              return order ? greedy_coloring(g, *order) : greedy_coloring(g);
          },
          py::arg("g"), py::arg("order") = std::nullopt);
    m.def("chi_exact", &chi_exact, py::arg("g"), py::arg("vertex_limit") = 40);
    m.def("circulant_12_coloring", &circulant_12_coloring, py::arg("n"));

    m.def("induced_edge_labels",
          [](const Graph& g, const Labeling& lab) {
              std::vector<std::tuple<int, int, int>> out;
              for (const auto& e : induced_edge_labels(g, lab))
                  out.emplace_back(e.u, e.v, e.value);
              return out;
          },
          py::arg("g"), py::arg("labeling"));
    m.def("verify", &verify, py::arg("g"), py::arg("labeling"));
    m.def("is_valid_labeling", &is_valid_labeling, py::arg("g"), py::arg("labeling"));
    m.def("parity_split",
          [](const Graph& g, const Labeling& lab) {
              ParitySplit p = parity_split(g, lab);
              py::dict d;
              d["u_side_odd"] = p.u_side_odd;
              d["consistent"] = p.consistent;
              return d;
          },
          py::arg("g"), py::arg("labeling"));
    m.def("complement", &complement, py::arg("labeling"));

    m.def("from_square_colorings",
          [](const Graph& g, const ProperColoring& side_u, const ProperColoring& side_w) {
              return from_square_colorings(g, require_parts(g), side_u, side_w);
          },
          py::arg("g"), py::arg("side_u"), py::arg("side_w"),
          "Compose side-square colorings into a labeling (sides from the canonical bipartition).");
    m.def("label_complete_bipartite", &label_complete_bipartite, py::arg("m"), py::arg("n"));
    m.def("label_near_complete", &label_near_complete, py::arg("m"), py::arg("n"), py::arg("r"));
    m.def("label_mobius", &label_mobius, py::arg("two_n"));

    m.def("bound_report", &bounds_dict, py::arg("g"), py::arg("family") = std::string(),
          py::arg("exact") = true);
    m.def("known_exact",
          [](const std::string& family) { return known_exact(parse_family(family)); },
          py::arg("family"));

    m.def("solve_chi_og",
          [](const Graph& g, std::optional<int> k_min, std::optional<int> k_max, bool canonical,
             long long node_limit, double time_limit_s) {
              return solve_chi_og(g, make_options(k_min, k_max, canonical, node_limit,
                                                  time_limit_s));
          },
          py::arg("g"), py::arg("k_min") = std::nullopt, py::arg("k_max") = std::nullopt,
          py::arg("canonical_witness") = false, py::arg("node_limit") = 100'000'000LL,
          py::arg("time_limit_s") = 600.0);
    m.def("exists_labeling",
          [](const Graph& g, int k, bool canonical, long long node_limit, double time_limit_s) {
              SolveOptions opts =
                  make_options(std::nullopt, std::nullopt, canonical, node_limit, time_limit_s);
              return exists_labeling(g, k, opts);
          },
          py::arg("g"), py::arg("k"), py::arg("canonical_witness") = false,
          py::arg("node_limit") = 100'000'000LL, py::arg("time_limit_s") = 600.0);
    m.def("enumerate_optimal",
          [](const Graph& g, int k, long long limit) {
              std::vector<Labeling> out;
              enumerate_optimal(g, k, [&](const Labeling& lab) {
                  out.push_back(lab);
                  return limit < 0 || (long long)out.size() < limit;
              });
              return out;
          },
          py::arg("g"), py::arg("k"), py::arg("limit") = -1);
    m.def("enumerate_optimal_deduped",
          [](const Graph& g, int k) {
              DedupedOptima d = enumerate_optimal_deduped(g, k);
              py::dict out;
              py::list pairs;
              for (const auto& p : d.pairs) pairs.append(py::make_tuple(p.first, p.second));
              out["pairs"] = pairs;
              out["labeling_count"] = d.labeling_count;
              out["below_bound_count"] = d.below_bound_count;
              return out;
          },
          py::arg("g"), py::arg("k"));
    m.def("brute_force_chi", &brute_force_chi, py::arg("g"), py::arg("k_cap"));

    m.def("theorem_checks",
          [](bool deep) {
              py::list rows;
              for (const auto& r : run_theorem_checks(deep)) {
                  py::dict d;
                  d["id"] = r.id;
                  d["claim"] = r.claim;
                  d["pass"] = r.pass;
                  d["detail"] = r.detail;
                  d["seconds"] = r.seconds;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("deep") = false);

    m.attr("__version__") = "0.1.0";
}
