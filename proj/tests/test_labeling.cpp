#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "ogk/bipartite.hpp"
#include "ogk/constructions.hpp"
#include "ogk/corpus.hpp"
#include "ogk/errors.hpp"
#include "ogk/families.hpp"
#include "ogk/labeling.hpp"
#include "ogk/solver.hpp"
#include "test_util.hpp"

using namespace ogk;

TEST_CASE("induced edge labels") {
    Graph p2 = generate(PathSpec{2});
    auto labels = induced_edge_labels(p2, Labeling{{1, 2}, 2});
    REQUIRE(labels.size() == 1);
    CHECK(labels[0].value == 1);

    // in the stored 4x4 labeling the vertices labeled 2 and 13 are adjacent
    Labeling k44 = label_complete_bipartite(4, 4);
    Graph g = generate(CompleteBipartiteSpec{4, 4});
    int v2 = -1, v13 = -1;
    for (int v = 0; v < 8; ++v) {
        if (k44.labels[size_t(v)] == 2) v2 = v;
        if (k44.labels[size_t(v)] == 13) v13 = v;
    }
    REQUIRE(g.adjacent(v2, v13));
    for (const auto& e : induced_edge_labels(g, k44))
        if ((e.u == v2 && e.v == v13) || (e.u == v13 && e.v == v2)) CHECK(e.value == 11);
}

TEST_CASE("verify flags the arithmetic collision on a path") {
    Graph p3 = generate(PathSpec{3});
    VerificationReport bad = verify(p3, Labeling{{1, 2, 3}, 3});
    CHECK_FALSE(bad.valid);
    CHECK_FALSE(bad.edge_proper);
    REQUIRE(bad.violations.size() >= 1);
    bool seen = false;
    for (const auto& v : bad.violations)
        if (const auto* eq = std::get_if<EqualIncidentEdgeLabels>(&v)) {
            CHECK(eq->center == 1);
            CHECK(eq->a == 0);
            CHECK(eq->c == 2);
            seen = true;
        }
    CHECK(seen);
    CHECK(1 + 3 == 2 * 2); // the algebraic form of the same failure

    VerificationReport good = verify(p3, Labeling{{1, 4, 3}, 4});
    CHECK(good.valid);
    auto labels = induced_edge_labels(p3, Labeling{{1, 4, 3}, 4});
    CHECK(labels[0].value == 3);
    CHECK(labels[1].value == 1);
}

TEST_CASE("verify accepts the optimal square labeling") {
    Graph k22 = generate(CompleteBipartiteSpec{2, 2});
    CHECK(verify(k22, Labeling{{1, 5, 2, 4}, 5}).valid);
}

TEST_CASE("report flags are independent of range violations") {
    Graph k22 = generate(CompleteBipartiteSpec{2, 2});
    // a zero label: structure fine, range not
    VerificationReport r = verify(k22, Labeling{{1, 3, 0, 4}, 4});
    CHECK(r.vertex_proper);
    CHECK(r.edges_all_odd);
    CHECK(r.edge_proper);
    CHECK_FALSE(r.valid);
    REQUIRE(r.violations.size() == 1);
    CHECK(std::holds_alternative<LabelOutOfRange>(r.violations[0]));
    // a declared bound below the maximum label
    VerificationReport r2 = verify(k22, Labeling{{1, 5, 2, 4}, 4});
    CHECK_FALSE(r2.valid);
    CHECK(std::holds_alternative<LabelOutOfRange>(r2.violations[0]));
}

TEST_CASE("violations are exhaustive and stably ordered") {
    Graph p4 = generate(PathSpec{4});
    VerificationReport r = verify(p4, Labeling{{2, 2, 4, 6}, 3});
    // in order: range offenders by vertex, edge offenders by edge, then
    // incident pairs by (center, a, c)
    REQUIRE(r.violations.size() == 7);
    CHECK(violation_text(r.violations[0]) == "LabelOutOfRange(v=2)");
    CHECK(violation_text(r.violations[1]) == "LabelOutOfRange(v=3)");
    CHECK(violation_text(r.violations[2]) == "AdjacentEqualLabels(u=0, v=1)");
    CHECK(violation_text(r.violations[3]) == "EvenEdgeLabel(u=0, v=1, value=0)");
    CHECK(violation_text(r.violations[4]) == "EvenEdgeLabel(u=1, v=2, value=2)");
    CHECK(violation_text(r.violations[5]) == "EvenEdgeLabel(u=2, v=3, value=2)");
    CHECK(violation_text(r.violations[6]) == "EqualIncidentEdgeLabels(center=2, a=1, c=3)");
}

TEST_CASE("two verification routes agree on random labelings") {
    std::mt19937 rng(11);
    for (const auto& entry : small_bipartite_corpus()) {
        int n = entry.graph.vertex_count();
        for (int trial = 0; trial < 40; ++trial) {
            Labeling lab = testutil::random_labeling(rng, n, 2 * n);
            VerificationReport r = verify(entry.graph, lab);
            CHECK(r.valid == is_valid_labeling(entry.graph, lab));
            // edge_proper through the algebraic route, over all 2-paths
            bool edge_proper = true;
            for (int b = 0; b < n; ++b) {
                auto nb = entry.graph.neighbor_list(b);
                for (size_t i = 0; i < nb.size(); ++i)
                    for (size_t j = i + 1; j < nb.size(); ++j) {
                        int la = lab.labels[size_t(nb[i])], lc = lab.labels[size_t(nb[j])];
                        if (la == lc || la + lc == 2 * lab.labels[size_t(b)])
                            edge_proper = false;
                    }
            }
            CHECK(r.edge_proper == edge_proper);
        }
    }
}

TEST_CASE("parity split on the four-cycle") {
    Graph c4 = generate(CycleSpec{4});
    ParitySplit ok = parity_split(c4, Labeling{{1, 2, 5, 4}, 5});
    CHECK(ok.consistent);
    CHECK(ok.u_side_odd);
    ParitySplit mixed = parity_split(c4, Labeling{{1, 2, 3, 6}, 6});
    CHECK(mixed.consistent); // 1,3 odd on one side, 2,6 even on the other
    ParitySplit bad = parity_split(c4, Labeling{{1, 2, 4, 6}, 6});
    CHECK_FALSE(bad.consistent);
    CHECK_THROWS_AS(parity_split(generate(CycleSpec{5}), Labeling{{1, 2, 3, 4, 5}, 5}),
                    NotBipartiteError);
}

TEST_CASE("valid labelings split by parity") {
    Graph k22 = generate(CompleteBipartiteSpec{2, 2});
    ParitySplit p = parity_split(k22, Labeling{{1, 5, 2, 4}, 5});
    CHECK(p.consistent);
    CHECK(p.u_side_odd); // vertex 0 carries 1
    for (const auto& entry : small_bipartite_corpus()) {
        SolveResult res = solve_chi_og(entry.graph);
        REQUIRE(res.witness.has_value());
        CHECK(parity_split(entry.graph, *res.witness).consistent);
    }
}

TEST_CASE("complement reflects labels and preserves validity") {
    Labeling lab{{1, 4, 3}, 4};
    Labeling flipped = complement(lab);
    CHECK(flipped.labels == std::vector<int>{4, 1, 2});
    CHECK(complement(flipped).labels == lab.labels);

    Graph k22 = generate(CompleteBipartiteSpec{2, 2});
    Labeling opt{{1, 5, 2, 4}, 5};
    CHECK(verify(k22, complement(opt)).valid);

    std::mt19937 rng(23);
    for (const auto& entry : small_bipartite_corpus()) {
        int n = entry.graph.vertex_count();
        for (int trial = 0; trial < 20; ++trial) {
            Labeling random = testutil::random_labeling(rng, n, 2 * n);
            CHECK(verify(entry.graph, random).valid ==
                  verify(entry.graph, complement(random)).valid);
        }
    }
}

TEST_CASE("distance-two vertices take distinct labels in valid labelings") {
    for (const auto& entry : small_bipartite_corpus()) {
        SolveResult res = solve_chi_og(entry.graph);
        REQUIRE(res.witness.has_value());
        auto dist = testutil::all_distances(entry.graph);
        int n = entry.graph.vertex_count();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (dist[size_t(u)][size_t(v)] == 2)
                    CHECK(res.witness->labels[size_t(u)] != res.witness->labels[size_t(v)]);
    }
}

TEST_CASE("labeling size must match the graph") {
    Graph p3 = generate(PathSpec{3});
    CHECK_THROWS_AS(verify(p3, Labeling{{1, 2}, 2}), ParameterError);
}
