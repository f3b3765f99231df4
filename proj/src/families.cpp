#include "ogk/families.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "ogk/errors.hpp"

namespace ogk {

namespace {

Graph make_path(int n) {
    if (n < 1) throw ParameterError("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3) throw ParameterError("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw ParameterError("complete bipartite requires m, n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph::from_edges(m + n, edges);
}

Graph make_near_complete(int m, int n, int r) {
    if (m < 2 || n < 2) throw ParameterError("near-complete requires m, n >= 2");
    if (r < 1 || r > n) throw ParameterError("near-complete requires 1 <= r <= n");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (!(i == m - 1 && j < r)) edges.emplace_back(i, m + j);
    return Graph::from_edges(m + n, edges);
}

Graph make_circulant(int n, const std::vector<int>& offsets) {
    if (n < 2) throw ParameterError("circulant requires n >= 2");
    if (offsets.empty()) throw ParameterError("circulant requires at least one offset");
    std::set<int> reduced;
    for (int s : offsets) {
        if (s <= 0) throw ParameterError("circulant offsets must be positive");
        int t = s % n;
        if (t == 0) throw ParameterError("circulant offset divisible by n yields a self-loop");
        reduced.insert(std::min(t, n - t));
    }
    std::vector<std::pair<int, int>> edges;
    for (int s : reduced)
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + s) % n);
    // from_edges collapses the duplicate orientation of each pair.
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    return Graph::from_edges(n, edges);
}

Graph make_mobius(int order) {
    if (order < 6 || order % 2 != 0)
        throw ParameterError("mobius requires an even order >= 6");
    return make_circulant(order, {1, order / 2});
}

int parse_int(const std::string& tok, const char* what) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParameterError(std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParameterError(std::string("trailing characters after ") + what + " in '" + tok + "'");
    return value;
}

} // namespace

Graph generate(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return make_path(s.n);
            else if constexpr (std::is_same_v<T, CycleSpec>) return make_cycle(s.n);
            else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>)
                return make_complete_bipartite(s.m, s.n);
            else if constexpr (std::is_same_v<T, NearCompleteSpec>)
                return make_near_complete(s.m, s.n, s.r);
            else if constexpr (std::is_same_v<T, MobiusSpec>) return make_mobius(s.order);
            else if constexpr (std::is_same_v<T, CirculantSpec>)
                return make_circulant(s.n, s.offsets);
            else
                return read_edge_list_file(s.path);
        },
        spec);
}

FamilySpec parse_family(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) throw ParameterError("empty family description");

    const std::string& kind = tok[0];
    if (kind == "K") {
        if (tok.size() == 3)
            return CompleteBipartiteSpec{parse_int(tok[1], "m"), parse_int(tok[2], "n")};
        if (tok.size() == 6 && tok[3] == "-" && tok[4] == "K1")
            return NearCompleteSpec{parse_int(tok[1], "m"), parse_int(tok[2], "n"),
                                    parse_int(tok[5], "r")};
        throw ParameterError("complete bipartite forms: 'K m n' or 'K m n - K1 r'");
    }
    if (kind == "path" && tok.size() == 2) return PathSpec{parse_int(tok[1], "n")};
    if (kind == "cycle" && tok.size() == 2) return CycleSpec{parse_int(tok[1], "n")};
    if (kind == "mobius" && tok.size() == 2) return MobiusSpec{parse_int(tok[1], "order")};
    if (kind == "circulant" && tok.size() == 3) {
        CirculantSpec spec{parse_int(tok[1], "n"), {}};
        std::istringstream offs(tok[2]);
        for (std::string piece; std::getline(offs, piece, ',');)
            spec.offsets.push_back(parse_int(piece, "offset"));
        if (spec.offsets.empty()) throw ParameterError("circulant requires at least one offset");
        return spec;
    }
    throw ParameterError("unrecognized family '" + text + "'");
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return "path " + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, CycleSpec>) return "cycle " + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>)
                return "K " + std::to_string(s.m) + " " + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, NearCompleteSpec>)
                return "K " + std::to_string(s.m) + " " + std::to_string(s.n) + " - K1 " +
                       std::to_string(s.r);
            else if constexpr (std::is_same_v<T, MobiusSpec>)
                return "mobius " + std::to_string(s.order);
            else if constexpr (std::is_same_v<T, CirculantSpec>) {
                std::string out = "circulant " + std::to_string(s.n) + " ";
                for (size_t i = 0; i < s.offsets.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(s.offsets[i]);
                }
                return out;
            } else
                return "edges " + s.path;
        },
        spec);
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_id = -1;
    bool first_data_line = true;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string a, b;
        if (!(row >> a)) continue; // blank or comment-only line
        if (first_data_line && a == "n") {
            if (!(row >> b)) throw ParameterError("line " + std::to_string(line_no) +
                                                  ": header 'n' without a count");
            declared_n = parse_int(b, "vertex count");
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        if (!(row >> b))
            throw ParameterError("line " + std::to_string(line_no) + ": expected two endpoints");
        std::string extra;
        if (row >> extra)
            throw ParameterError("line " + std::to_string(line_no) + ": trailing content '" +
                                 extra + "'");
        int u = parse_int(a, "endpoint");
        int v = parse_int(b, "endpoint");
        if (u < 0 || v < 0)
            throw ParameterError("line " + std::to_string(line_no) + ": negative vertex id");
        max_id = std::max(max_id, std::max(u, v));
        edges.emplace_back(u, v);
    }
    int n = declared_n >= 0 ? declared_n : max_id + 1;
    if (n < 0) n = 0;
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open edge list file '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

} // namespace ogk
