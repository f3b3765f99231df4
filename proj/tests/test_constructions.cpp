#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "ogk/bipartite.hpp"
#include "ogk/bounds.hpp"
#include "ogk/constructions.hpp"
#include "ogk/errors.hpp"
#include "ogk/families.hpp"
#include "ogk/labeling.hpp"

using namespace ogk;

namespace {

std::set<int> side_labels(const Labeling& lab, int from, int count) {
    std::set<int> out;
    for (int v = from; v < from + count; ++v) out.insert(lab.labels[size_t(v)]);
    return out;
}

} // namespace

TEST_CASE("square colorings compose into a labeling") {
    Graph k22 = generate(CompleteBipartiteSpec{2, 2});
    auto parts = std::get<Bipartition>(bipartition(k22));
    ProperColoring two{{1, 2}, 2};
    Labeling lab = from_square_colorings(k22, parts, two, two);
    CHECK(lab.k == 6);
    CHECK(side_labels(lab, 0, 2) == std::set<int>{1, 3});
    CHECK(side_labels(lab, 2, 2) == std::set<int>{4, 6});
    CHECK(verify(k22, lab).valid);
}

TEST_CASE("improper or mismatched colorings are rejected") {
    Graph k22 = generate(CompleteBipartiteSpec{2, 2});
    auto parts = std::get<Bipartition>(bipartition(k22));
    ProperColoring clash{{1, 1}, 1};    // side square is an edge
    ProperColoring sparse{{1, 3}, 3};   // color 2 unused
    ProperColoring fine{{1, 2}, 2};
    CHECK_THROWS_AS(from_square_colorings(k22, parts, clash, fine), ParameterError);
    CHECK_THROWS_AS(from_square_colorings(k22, parts, fine, sparse), ParameterError);
}

TEST_CASE("non-minimal colorings still compose") {
    Graph p4 = generate(PathSpec{4});
    auto parts = std::get<Bipartition>(bipartition(p4));
    ProperColoring wasteful{{1, 2}, 2}; // each side square is a single edge
    Labeling lab = from_square_colorings(p4, parts, wasteful, wasteful);
    CHECK(lab.k == 6);
    CHECK(verify(p4, lab).valid);
}

TEST_CASE("complete bipartite labelings: the spot values") {
    Labeling l42 = label_complete_bipartite(4, 2);
    CHECK(l42.k == 9);
    CHECK(side_labels(l42, 0, 4) == std::set<int>{2, 4, 6, 8});
    CHECK(side_labels(l42, 4, 2) == std::set<int>{1, 9});

    Labeling l44 = label_complete_bipartite(4, 4);
    CHECK(l44.k == 13);
    CHECK(side_labels(l44, 0, 4) == std::set<int>{2, 10, 4, 12});
    CHECK(side_labels(l44, 4, 4) == std::set<int>{1, 5, 9, 13});

    CHECK(label_complete_bipartite(3, 2).k == 8);

    CHECK_THROWS_AS(label_complete_bipartite(2, 3), ParameterError);
    CHECK_THROWS_AS(label_complete_bipartite(3, 1), ParameterError);
}

TEST_CASE("complete bipartite labelings: full grid at the exact bound") {
    for (int m = 2; m <= 12; ++m)
        for (int n = 2; n <= m; ++n) {
            Labeling lab = label_complete_bipartite(m, n);
            Graph g = generate(CompleteBipartiteSpec{m, n});
            CHECK(verify(g, lab).valid);
            CHECK(lab.k == *known_exact(CompleteBipartiteSpec{m, n}));
        }
}

TEST_CASE("near-complete labeling: three against evens") {
    // m = 3, n = 4, r = 2: the third left vertex misses the evens 2 and 6
    Labeling lab = label_near_complete(3, 4, 2);
    Graph g = generate(NearCompleteSpec{3, 4, 2});
    CHECK(lab.k == 9);
    CHECK(verify(g, lab).valid);
    CHECK(side_labels(lab, 0, 3) == std::set<int>{1, 9, 3});
    CHECK(side_labels(lab, 3, 4) == std::set<int>{2, 4, 6, 8});
    std::set<int> missing;
    for (int w = 3; w < 7; ++w)
        if (!g.adjacent(2, w)) missing.insert(lab.labels[size_t(w)]);
    CHECK(missing == std::set<int>{2, 6});
}

TEST_CASE("near-complete labeling: extended balanced sides") {
    Labeling lab = label_near_complete(5, 4, 2);
    Graph g = generate(NearCompleteSpec{5, 4, 2});
    CHECK(lab.k == 13);
    CHECK(verify(g, lab).valid);
    CHECK(side_labels(lab, 0, 5) == std::set<int>{1, 5, 9, 13, 11});
    CHECK(lab.labels[4] == 11); // the vertex with removed partners
    CHECK(side_labels(lab, 5, 4) == std::set<int>{2, 10, 4, 12});
    std::set<int> partners;
    for (int w = 5; w < 9; ++w)
        if (g.adjacent(4, w)) partners.insert(lab.labels[size_t(w)]);
    CHECK(partners == std::set<int>{2, 4});
}

TEST_CASE("near-complete labeling: one-edge-removed pattern") {
    Labeling lab = label_near_complete(4, 3, 1);
    Graph g = generate(NearCompleteSpec{4, 3, 1});
    CHECK(lab.k == 10);
    CHECK(verify(g, lab).valid);
    CHECK(side_labels(lab, 0, 4) == std::set<int>{1, 3, 5, 7});
    CHECK(side_labels(lab, 4, 3) == std::set<int>{6, 8, 10});
}

TEST_CASE("near-complete labeling: stored seven-by-six instance") {
    Labeling lab = label_near_complete(7, 6, 3);
    Graph g = generate(NearCompleteSpec{7, 6, 3});
    CHECK(lab.k == 21);
    CHECK(verify(g, lab).valid);
}

TEST_CASE("near-complete grid: valid everywhere, tight where targeted") {
    for (int m = 2; m <= 12; ++m)
        for (int n = 2; m + n <= 14; ++n)
            for (int r = 1; r <= n; ++r) {
                Labeling lab = label_near_complete(m, n, r);
                Graph g = generate(NearCompleteSpec{m, n, r});
                CHECK(verify(g, lab).valid);
                auto exact = known_exact(NearCompleteSpec{m, n, r});
                if (!exact) continue;
                // The only loose family: detaching the whole partner set of
                // an odd-by-two graph leaves the even-by-two optimum one
                // below the one-edge-removed pattern used here.
                bool loose = n == 2 && r == 2 && m % 2 == 1 && m >= 5;
                CHECK(lab.k == *exact + (loose ? 1 : 0));
            }
    CHECK_THROWS_AS(label_near_complete(3, 2, 3), ParameterError);
    CHECK_THROWS_AS(label_near_complete(1, 2, 1), ParameterError);
}

TEST_CASE("extended balanced labelings beyond the dense grid") {
    // the index ranges around s/2 and 3s/2 only get interesting from s = 4 up
    for (auto [m, n, r] : {std::tuple{9, 8, 4}, {11, 10, 4}, {11, 10, 5}, {13, 12, 6},
                           {9, 8, 7}, {11, 10, 9}}) {
        Labeling lab = label_near_complete(m, n, r);
        Graph g = generate(NearCompleteSpec{m, n, r});
        CHECK(lab.k == 4 * n - 3);
        CHECK(verify(g, lab).valid);
    }
}

TEST_CASE("Moebius ladder labelings match the three-way split") {
    CHECK(label_mobius(18).k == 10);
    CHECK(label_mobius(14).k == 14);
    CHECK(label_mobius(10).k == 18);
    for (int n = 3; n <= 49; n += 2) {
        Labeling lab = label_mobius(2 * n);
        Graph g = generate(MobiusSpec{2 * n});
        CHECK(verify(g, lab).valid);
        CHECK(lab.k == (n == 5 ? 18 : n % 3 == 0 ? 10 : 14));
    }
    CHECK_THROWS_AS(label_mobius(16), NotBipartiteError); // even half: odd cycles
    CHECK_THROWS_AS(label_mobius(7), ParameterError);
}

TEST_CASE("square-composition output keeps odd labels on the u side") {
    for (int two_n : {6, 14, 18, 22}) {
        Graph g = generate(MobiusSpec{two_n});
        Labeling lab = label_mobius(two_n);
        auto parts = std::get<Bipartition>(bipartition(g));
        int max_label = 0;
        for (int v = parts.u_side.first(); v != -1; v = parts.u_side.next(v))
            CHECK(lab.labels[size_t(v)] % 2 == 1);
        for (int v = parts.w_side.first(); v != -1; v = parts.w_side.next(v))
            CHECK(lab.labels[size_t(v)] % 2 == 0);
        for (int x : lab.labels) max_label = std::max(max_label, x);
        CHECK(max_label == lab.k);
    }
}
