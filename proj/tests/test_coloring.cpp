#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altkg/coloring.hpp"
#include "altkg/constructions.hpp"
#include "altkg/errors.hpp"
#include "altkg/kneser.hpp"

#include "test_util.hpp"

using namespace altkg;

namespace {

// Independent chromatic-number reference: color vertices 0..n-1 in index
// order, first vertex pinned to color 0.  No clique seeding, no DSATUR.
bool naive_colorable(const Graph& g, int k, int v, std::vector<int>& color) {
    if (v == g.num_vertices()) return true;
    int limit = v == 0 ? 1 : k;
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.adjacent(u, v) && color[size_t(u)] == c) { ok = false; break; }
        if (!ok) continue;
        color[size_t(v)] = c;
        if (naive_colorable(g, k, v + 1, color)) return true;
    }
    return false;
}

int naive_chi(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> color(size_t(g.num_vertices()));
        if (naive_colorable(g, k, 0, color)) return k;
    }
}

} // namespace

TEST_CASE("chromatic numbers of standard graphs") {
    for (int n = 1; n <= 6; ++n) {
        auto r = chromatic_number(Graph::complete(n));
        CHECK(r.exact());
        CHECK(r.lower == n);
    }
    CHECK(chromatic_number(Graph::cycle(5)).lower == 3);
    CHECK(chromatic_number(Graph::cycle(6)).lower == 2);
    CHECK(chromatic_number(Graph::path(7)).lower == 2);
    CHECK(chromatic_number(Graph(4)).lower == 1);
    CHECK(chromatic_number(Graph(0)).lower == 0);
}

TEST_CASE("kneser graph chromatic numbers") {
    struct Case { int n, k, chi; };
    for (auto [n, k, chi] : {Case{5, 2, 3}, Case{6, 2, 4}, Case{7, 2, 5}, Case{7, 3, 3},
                             Case{8, 3, 4}}) {
        auto r = chromatic_number(kneser(n, k).graph);
        CHECK(r.exact());
        CHECK(r.lower == chi);
        REQUIRE(r.witness.has_value());
        CHECK(verify_coloring(kneser(n, k).graph, *r.witness));
    }
}

TEST_CASE("schrijver graph chromatic numbers") {
    struct Case { int n, k, chi; };
    for (auto [n, k, chi] : {Case{5, 2, 3}, Case{6, 2, 4}, Case{7, 3, 3}, Case{8, 2, 6},
                             Case{9, 2, 7}}) {
        auto r = chromatic_number(stable_kneser(n, k, 2).graph);
        CHECK(r.exact());
        CHECK(r.lower == chi);
    }
    // SG(10,4): 2-stable 4-subsets of [10], chi = n - 2k + 2 = 4.
    auto r = chromatic_number(stable_kneser(10, 4, 2).graph);
    CHECK(r.exact());
    CHECK(r.lower == 4);
}

TEST_CASE("clique numbers") {
    CHECK(clique_number(kneser(5, 2).graph) == 2);
    CHECK(clique_number(kneser(7, 2).graph) == 3);
    CHECK(clique_number(stable_kneser(6, 2, 2).graph) == 3);
    CHECK(clique_number(Graph::complete(6)) == 6);
    CHECK(clique_number(Graph::cycle(7)) == 2);
    CHECK(clique_number(Graph(3)) == 1);

    SplitMix64 rng(31);
    for (int t = 0; t < 30; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(1, 9), 0.5);
        auto mc = max_clique(g);
        CHECK(int(mc.size()) == clique_number(g));
        for (size_t i = 0; i < mc.size(); ++i)
            for (size_t j = i + 1; j < mc.size(); ++j) CHECK(g.adjacent(mc[i], mc[j]));
        CHECK(clique_number(g) <= chromatic_number(g).lower);
    }
}

TEST_CASE("grotzsch graph is 4-chromatic and triangle-free") {
    Graph grotzsch = mycielskian(Graph::cycle(5));
    CHECK(clique_number(grotzsch) == 2);
    CHECK(!is_k_colorable(grotzsch, 3).has_value());
    auto four = is_k_colorable(grotzsch, 4);
    REQUIRE(four.has_value());
    CHECK(verify_coloring(grotzsch, *four));
    auto r = chromatic_number(grotzsch);
    CHECK(r.exact());
    CHECK(r.lower == 4);
}

TEST_CASE("solver agrees with the naive reference on random graphs") {
    SplitMix64 rng(32);
    for (int t = 0; t < 60; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(1, 8), rng.uniform());
        auto r = chromatic_number(g);
        CHECK(r.exact());
        CHECK(r.lower == naive_chi(g));
    }
}

TEST_CASE("greedy coloring is proper and at least chi") {
    SplitMix64 rng(33);
    for (int t = 0; t < 30; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(1, 10), 0.4);
        Coloring c = greedy_coloring(g);
        CHECK(verify_coloring(g, c));
        CHECK(c.k >= chromatic_number(g).lower);
    }
}

TEST_CASE("budgets and caps") {
    Graph hard = kneser(8, 3).graph;  // 56 vertices
    SolveLimits tiny;
    tiny.node_budget = 5;
    auto r = chromatic_number(hard, tiny);
    CHECK(!r.exact());
    CHECK(r.lower >= 2);
    CHECK(r.upper >= r.lower);
    // The interval always brackets the true value.
    CHECK(r.lower <= 4);
    CHECK(r.upper >= 4);

    CHECK_THROWS_AS(is_k_colorable(hard, 3, tiny), BudgetExhausted);

    SolveLimits cap;
    cap.vertex_cap = 10;
    CHECK_THROWS_AS(chromatic_number(hard, cap), CapacityError);
}

TEST_CASE("coloring verifier rejects bad colorings") {
    Graph c5 = Graph::cycle(5);
    Coloring good{3, {0, 1, 0, 1, 2}};
    CHECK(verify_coloring(c5, good));
    Coloring improper{3, {0, 0, 1, 0, 1}};
    CHECK(!verify_coloring(c5, improper));
    Coloring out_of_range{2, {0, 1, 0, 1, 2}};
    CHECK(!verify_coloring(c5, out_of_range));
    Coloring short_vec{3, {0, 1}};
    CHECK(!verify_coloring(c5, short_vec));
}
