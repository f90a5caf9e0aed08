#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altkg/coloring.hpp"
#include "altkg/errors.hpp"
#include "altkg/kneser.hpp"
#include "altkg/multicoloring.hpp"

#include "test_util.hpp"

using namespace altkg;

TEST_CASE("1-fold multicoloring is ordinary coloring") {
    SplitMix64 rng(51);
    for (int t = 0; t < 25; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(1, 7), 0.5);
        auto m1 = multichromatic_number(g, 1);
        CHECK(m1.exact());
        CHECK(m1.lower == chromatic_number(g).lower);
    }
}

TEST_CASE("complete graphs and odd cycles") {
    // chi_m(K_n) = m n.
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) CHECK(multichromatic_number(Graph::complete(n), m).lower == m * n);

    // Stahl: chi_m(C_{2k+1}) = 2m + ceil(m/k).
    for (int k = 2; k <= 3; ++k)
        for (int m = 1; m <= 3; ++m) {
            int want = 2 * m + (m + k - 1) / k;
            CHECK(multichromatic_number(Graph::cycle(2 * k + 1), m).lower == want);
        }
}

TEST_CASE("kneser and schrijver multichromatic values") {
    auto pet = kneser(5, 2).graph;
    CHECK(multichromatic_number(pet, 2).lower == 5);
    CHECK(multichromatic_number(pet, 3).lower == 8);
    auto sg62 = stable_kneser(6, 2, 2).graph;
    CHECK(multichromatic_number(sg62, 1).lower == 4);
    CHECK(multichromatic_number(sg62, 2).lower == 6);
}

TEST_CASE("multichromatic number is subadditive and monotone") {
    SplitMix64 rng(52);
    for (int t = 0; t < 15; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(1, 6), 0.5);
        int c1 = multichromatic_number(g, 1).lower;
        int c2 = multichromatic_number(g, 2).lower;
        int c3 = multichromatic_number(g, 3).lower;
        CHECK(c2 >= c1);
        CHECK(c3 >= c2);
        CHECK(c2 <= 2 * c1);
        CHECK(c3 <= c1 + c2);
        if (g.num_edges() > 0) {
            CHECK(c2 >= c1 + 1);  // any two colors of a vertex forbid reuse next door
            CHECK(c3 >= c2 + 1);
        }
    }
}

TEST_CASE("witnesses verify and palette feasibility is monotone") {
    Graph c5 = Graph::cycle(5);
    auto r = multichromatic_number(c5, 2);
    REQUIRE(r.witness.has_value());
    CHECK(verify_multicoloring(c5, *r.witness));
    CHECK(r.witness->n == r.upper);

    CHECK(!multicoloring_exists(c5, 2, 4).has_value());
    CHECK(multicoloring_exists(c5, 2, 5).has_value());
    CHECK(multicoloring_exists(c5, 2, 6).has_value());

    Multicoloring bad{2, 5, {0b11, 0b11, 0b1100, 0b11, 0b1100}};
    CHECK(!verify_multicoloring(c5, bad));
    Multicoloring wrong_size{2, 5, {0b111, 0b11000, 0b11, 0b1100, 0b10001}};
    CHECK(!verify_multicoloring(c5, wrong_size));
}

TEST_CASE("palette cap and budget") {
    CHECK_THROWS_AS(multicoloring_exists(Graph::complete(2), 40, 80), CapacityError);
    SolveLimits tiny;
    tiny.node_budget = 2;
    auto r = multichromatic_number(kneser(5, 2).graph, 3, tiny);
    CHECK(!r.exact());
    CHECK(r.lower <= 8);
    CHECK(r.upper >= 8);
}
