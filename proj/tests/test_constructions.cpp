#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altkg/constructions.hpp"
#include "altkg/errors.hpp"
#include "altkg/graph.hpp"
#include "altkg/isomorphism.hpp"
#include "altkg/kneser.hpp"

#include "test_util.hpp"

using namespace altkg;

TEST_CASE("kneser builders produce the classic graphs") {
    auto pet = kneser(5, 2);
    CHECK(pet.graph.num_vertices() == 10);
    CHECK(pet.graph.num_edges() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.graph.degree(v) == 3);
    CHECK_NOTHROW(validate_representation(pet));
    CHECK(kneser_graph(pet.hypergraph).graph == pet.graph);

    CHECK(kneser(6, 2).graph.num_vertices() == 15);
    CHECK(kneser(6, 2).graph.num_edges() == 45);
    CHECK(kneser(7, 3).graph.num_vertices() == 35);

    // KG(n,1) is complete; KG(2k,k) is a perfect matching.
    CHECK(kneser(4, 1).graph == Graph::complete(4));
    CHECK(kneser(6, 3).graph.num_edges() == 10);
    for (int v = 0; v < 20; ++v) CHECK(kneser(6, 3).graph.degree(v) == 1);
}

TEST_CASE("stable kneser builders") {
    auto sg62 = stable_kneser(6, 2, 2);
    CHECK(sg62.graph.num_vertices() == 9);
    CHECK(sg62.graph.num_edges() == 18);
    CHECK_NOTHROW(validate_representation(sg62));
    CHECK(schrijver(6, 2).graph == sg62.graph);

    // SG(5,2) is the 5-cycle.
    auto iso = graphs_isomorphic(stable_kneser(5, 2, 2).graph, Graph::cycle(5));
    CHECK(iso.has_value());

    // SG(2k+1,k) is an odd cycle as well.
    CHECK(graphs_isomorphic(stable_kneser(7, 3, 2).graph, Graph::cycle(7)).has_value());

    // s=1 stability is no constraint at all.
    CHECK(stable_kneser(6, 2, 1).graph == kneser(6, 2).graph);

    // Higher stability: the 3-stable 2-subsets of [6] are {1,4},{2,5},{3,6},
    // pairwise disjoint, so the graph is a triangle.
    CHECK(stable_kneser(6, 2, 3).graph == Graph::complete(3));
    CHECK_THROWS_AS(stable_kneser(10, 4, 4), InputError);
}

TEST_CASE("mycielskian structure") {
    Graph m1 = mycielskian(Graph::complete(1));
    CHECK(m1.num_vertices() == 3);
    CHECK(m1.num_edges() == 1);
    CHECK(m1.adjacent(1, 2));  // twin -- root; the original is isolated

    CHECK(graphs_isomorphic(mycielskian(Graph::complete(2)), Graph::cycle(5)).has_value());

    Graph grotzsch = mycielskian(Graph::cycle(5));
    CHECK(grotzsch.num_vertices() == 11);
    CHECK(grotzsch.num_edges() == 20);
    for (int v = 0; v < 5; ++v) CHECK(grotzsch.degree(v) == 4);
    CHECK(grotzsch.degree(10) == 5);

    // |V(M(G))| = 2n+1, |E(M(G))| = 3|E(G)| + n.
    SplitMix64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(1, 8), 0.4);
        Graph m = mycielskian(g);
        CHECK(m.num_vertices() == 2 * g.num_vertices() + 1);
        CHECK(m.num_edges() == 3 * g.num_edges() + g.num_vertices());
    }
}

TEST_CASE("blow ups") {
    Graph k2 = Graph::complete(2);
    Graph b = blow_up(k2, {2, 3}, {0, 1});
    CHECK(b.num_vertices() == 5);
    CHECK(b.num_edges() == 6);
    CHECK(b.bipartite());
    for (int u = 0; u < 2; ++u)
        for (int v = 2; v < 5; ++v) CHECK(b.adjacent(u, v));

    // All multiplicities 1: identity.
    Graph c5 = Graph::cycle(5);
    CHECK(blow_up(c5, {1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}) == c5);

    CHECK_THROWS_AS(blow_up(k2, {0, 1}, {0, 1}), InputError);
    CHECK_THROWS_AS(blow_up(k2, {1}, {0, 1}), InputError);
}

TEST_CASE("categorical products") {
    Graph c5 = Graph::cycle(5), k2 = Graph::complete(2);
    CHECK(graphs_isomorphic(categorical_product(c5, k2), Graph::cycle(10)).has_value());

    Graph kk = categorical_product(k2, k2);
    CHECK(kk.num_vertices() == 4);
    CHECK(kk.num_edges() == 2);
    CHECK(kk.bipartite());

    // |E(G x H)| = 2 |E(G)| |E(H)|; adjacency is coordinatewise.
    SplitMix64 rng(12);
    for (int t = 0; t < 20; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(1, 6), 0.5);
        Graph h = testutil::random_graph(rng, rng.int_in(1, 6), 0.5);
        Graph p = categorical_product(g, h);
        CHECK(p.num_vertices() == g.num_vertices() * h.num_vertices());
        CHECK(p.num_edges() == 2 * g.num_edges() * h.num_edges());
        int hv = h.num_vertices();
        for (int u = 0; u < g.num_vertices(); ++u)
            for (int v = 0; v < hv; ++v)
                for (int u2 = 0; u2 < g.num_vertices(); ++u2)
                    for (int v2 = 0; v2 < hv; ++v2)
                        CHECK(p.adjacent(u * hv + v, u2 * hv + v2) ==
                              (g.adjacent(u, u2) && h.adjacent(v, v2)));
    }
}

TEST_CASE("order concatenation") {
    LinearOrder a({1, 2}), b({3, 4});
    CHECK(concat_order(a, b).order == std::vector<int>{1, 2, 3, 4});
    CHECK(concat_order(LinearOrder{}, b).order == b.order);
}

TEST_CASE("graph isomorphism checker") {
    Graph c5 = Graph::cycle(5);
    Graph relabeled(5);
    // 5-cycle 0-2-4-1-3-0.
    relabeled.add_edge(0, 2); relabeled.add_edge(2, 4); relabeled.add_edge(4, 1);
    relabeled.add_edge(1, 3); relabeled.add_edge(3, 0);
    auto iso = graphs_isomorphic(c5, relabeled);
    REQUIRE(iso.has_value());
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            CHECK(c5.adjacent(u, v) == relabeled.adjacent((*iso)[u], (*iso)[v]));

    CHECK(!graphs_isomorphic(c5, Graph::path(5)).has_value());
    CHECK(!graphs_isomorphic(Graph::cycle(6), Graph::complete(3)).has_value());
    CHECK(graphs_isomorphic(kneser(5, 2).graph, kneser(5, 2).graph).has_value());
}
