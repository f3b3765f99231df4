#include "ogk/serialize.hpp"

#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "ogk/errors.hpp"

namespace ogk {

using nlohmann::json;

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edge_count", g.edge_count()}, {"edges", edges}};
}

json to_json(const Labeling& lab) { return json{{"k", lab.k}, {"labels", lab.labels}}; }

json to_json(const ProperColoring& coloring) {
    return json{{"num_colors", coloring.num_colors}, {"colors", coloring.colors}};
}

namespace {

json violation_json(const Violation& v) {
    struct Builder {
        json operator()(const LabelOutOfRange& x) const {
            return json{{"kind", "LabelOutOfRange"}, {"v", x.v}};
        }
        json operator()(const AdjacentEqualLabels& x) const {
            return json{{"kind", "AdjacentEqualLabels"}, {"u", x.u}, {"v", x.v}};
        }
        json operator()(const EvenEdgeLabel& x) const {
            return json{{"kind", "EvenEdgeLabel"}, {"u", x.u}, {"v", x.v}, {"value", x.value}};
        }
        json operator()(const EqualIncidentEdgeLabels& x) const {
            return json{
                {"kind", "EqualIncidentEdgeLabels"}, {"center", x.center}, {"a", x.a}, {"c", x.c}};
        }
    };
    return std::visit(Builder{}, v);
}

} // namespace

json to_json(const VerificationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back(violation_json(v));
    return json{{"valid", report.valid},
                {"vertex_proper", report.vertex_proper},
                {"edges_all_odd", report.edges_all_odd},
                {"edge_proper", report.edge_proper},
                {"violations", violations}};
}

json to_json(const BoundReport& report) {
    if (report.infinite) return json{{"chi_og", "infinite"}};
    auto entries = [](const std::vector<BoundEntry>& list) {
        json out = json::array();
        for (const auto& e : list)
            out.push_back(json{{"value", e.value}, {"source", to_string(e.source)}});
        return out;
    };
    return json{{"lower", entries(report.lower)},
                {"upper", entries(report.upper)},
                {"best_lower", report.best_lower},
                {"best_upper", report.best_upper}};
}

json to_json(const SolveResult& result) {
    json out;
    out["chi"] = result.infinite() ? json("infinite") : json(*result.chi);
    if (result.witness) out["witness"] = to_json(*result.witness);
    out["stats"] = json{{"nodes_explored", result.stats.nodes_explored},
                        {"parity_cases_tried", result.stats.parity_cases_tried},
                        {"wall_time_s", result.stats.wall_time_s}};
    return out;
}

json to_json(const DedupedOptima& optima, int k) {
    json pairs = json::array();
    for (const auto& p : optima.pairs) pairs.push_back(json::array({p.first, p.second}));
    return json{{"k", k},
                {"labeling_count", optima.labeling_count},
                {"below_bound_count", optima.below_bound_count},
                {"side_label_sets", pairs}};
}

Labeling labeling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("labels"))
        throw ParameterError("labeling JSON needs fields \"k\" and \"labels\"");
    Labeling lab;
    lab.k = j.at("k").get<int>();
    lab.labels = j.at("labels").get<std::vector<int>>();
    return lab;
}

Labeling read_labeling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open labeling file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParameterError("labeling file '" + path + "': " + e.what());
    }
    return labeling_from_json(j);
}

void write_dot(std::ostream& out, const Graph& g, const Labeling* lab) {
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (lab) out << " [label=\"" << v << " (" << lab->labels[size_t(v)] << ")\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (lab) out << " [label=\"" << std::abs(lab->labels[size_t(u)] - lab->labels[size_t(v)])
                     << "\"]";
        out << ";\n";
    }
    out << "}\n";
}

} // namespace ogk
