#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "ogk/chromatic.hpp"
#include "ogk/corpus.hpp"
#include "ogk/errors.hpp"
#include "ogk/families.hpp"
#include "test_util.hpp"

using namespace ogk;

namespace {

std::vector<int> natural_order(int n) {
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

} // namespace

TEST_CASE("greedy coloring basics") {
    Graph empty_edges = Graph::from_edges(5, {});
    CHECK(greedy_coloring(empty_edges, natural_order(5)).num_colors == 1);

    Graph k5 = generate(CirculantSpec{5, {1, 2}});
    CHECK(greedy_coloring(k5, natural_order(5)).num_colors == 5);

    Graph c7 = generate(CycleSpec{7});
    ProperColoring c = greedy_coloring(c7, natural_order(7));
    CHECK(c.num_colors == 3);
    CHECK(c.num_colors == testutil::brute_chromatic_number(c7));
    CHECK(is_proper(c7, c));
}

TEST_CASE("greedy rejects non-permutations") {
    Graph p3 = generate(PathSpec{3});
    CHECK_THROWS_AS(greedy_coloring(p3, {0, 1}), ParameterError);
    CHECK_THROWS_AS(greedy_coloring(p3, {0, 1, 1}), ParameterError);
}

TEST_CASE("greedy stays within max degree plus one") {
    std::mt19937 rng(5);
    for (const auto& entry : small_connected_corpus()) {
        ProperColoring c = greedy_coloring(entry.graph);
        CHECK(is_proper(entry.graph, c));
        CHECK(c.num_colors <= max_degree(entry.graph) + 1);
    }
}

TEST_CASE("chi_exact on the {1,2} circulants") {
    CHECK(chi_exact(generate(CirculantSpec{9, {1, 2}})).num_colors == 3);
    CHECK(chi_exact(generate(CirculantSpec{5, {1, 2}})).num_colors == 5);
    Graph ci11 = generate(CirculantSpec{11, {1, 2}});
    // no proper 3-coloring exists, so 4 is optimal
    std::vector<int> scratch(11, 0);
    CHECK_FALSE(testutil::colorable_with(ci11, 3, scratch, 0));
    CHECK(chi_exact(ci11).num_colors == 4);
}

TEST_CASE("chi_exact equals brute force on the small pool") {
    for (const auto& entry : small_connected_corpus()) {
        ProperColoring c = chi_exact(entry.graph);
        CHECK(is_proper(entry.graph, c));
        CHECK(c.num_colors == testutil::brute_chromatic_number(entry.graph));
    }
}

TEST_CASE("chi_exact respects the Brooks dichotomy") {
    for (const auto& entry : small_connected_corpus()) {
        int chi = chi_exact(entry.graph).num_colors;
        int d = max_degree(entry.graph);
        CHECK(chi <= d + 1);
        if (chi == d + 1)
            CHECK((is_complete(entry.graph) || is_odd_cycle(entry.graph)));
    }
}

TEST_CASE("chi_exact size limit advises the greedy fallback") {
    Graph long_path = generate(PathSpec{41});
    CHECK_THROWS_AS(chi_exact(long_path), ResourceError);
    try {
        chi_exact(long_path);
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("greedy") != std::string::npos);
    }
}

TEST_CASE("circulant {1,2} colorings across the odd grid") {
    for (int n = 3; n <= 99; n += 2) {
        ProperColoring c = circulant_12_coloring(n);
        Graph g = generate(CirculantSpec{n, {1, 2}});
        CHECK(is_proper(g, c));
        int want = n == 5 ? 5 : (n % 3 == 0 ? 3 : 4);
        CHECK(c.num_colors == want);
    }
    CHECK_THROWS_AS(circulant_12_coloring(6), ParameterError);
    CHECK_THROWS_AS(circulant_12_coloring(1), ParameterError);
}
