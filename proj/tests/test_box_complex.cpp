#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "altkg/box_complex.hpp"
#include "altkg/constructions.hpp"
#include "altkg/errors.hpp"
#include "altkg/graph.hpp"
#include "altkg/kneser.hpp"

#include "test_util.hpp"

using namespace altkg;

namespace {

bool has_facet(const Z2SimplicialComplex& c, Mask first, Mask second) {
    for (const auto& f : c.facets())
        if (f.first == first && f.second == second) return true;
    return false;
}

} // namespace

TEST_CASE("box complex of an edge") {
    Graph k2 = Graph::complete(2);
    auto b0 = box_complex(k2, BoxComplexVariant::B0);
    REQUIRE(b0.facets().size() == 4);
    CHECK(has_facet(b0, 0b00, 0b11));
    CHECK(has_facet(b0, 0b01, 0b10));
    CHECK(has_facet(b0, 0b10, 0b01));
    CHECK(has_facet(b0, 0b11, 0b00));

    auto b = box_complex(k2, BoxComplexVariant::B);
    CHECK(b.facets().size() == 2);
    CHECK(has_facet(b, 0b01, 0b10));
    CHECK(has_facet(b, 0b10, 0b01));
    CHECK(b.dimension() == 1);
}

TEST_CASE("box complexes of complete graphs") {
    for (int n = 2; n <= 5; ++n) {
        Graph kn = Graph::complete(n);
        auto b0 = box_complex(kn, BoxComplexVariant::B0);
        // Every (A, complement-subset) pair maxes out: 2^n facets, one per
        // subset A with B = [n] \ A; B0(K_n) is an n-1 sphere.
        CHECK(b0.facets().size() == size_t(1) << n);
        CHECK(b0.dimension() == n - 1);
        auto b = box_complex(kn, BoxComplexVariant::B);
        // B(K_n) drops the two all-on-one-side facets.
        CHECK(b.facets().size() == (size_t(1) << n) - 2);
        for (const auto& f : b.facets()) {
            CHECK(f.first != 0);
            CHECK(f.second != 0);
        }
    }
}

TEST_CASE("box complexes of the 5-cycle and the petersen graph") {
    Graph c5 = Graph::cycle(5);
    auto b = box_complex(c5, BoxComplexVariant::B);
    CHECK(b.facets().size() == 10);
    CHECK(b.dimension() == 2);
    auto b0 = box_complex(c5, BoxComplexVariant::B0);
    CHECK(b0.facets().size() == 12);
    CHECK(b0.dimension() == 4);

    auto pet = box_complex(kneser(5, 2).graph, BoxComplexVariant::B);
    CHECK(pet.facets().size() == 20);
    CHECK(pet.dimension() == 3);
}

TEST_CASE("simplex validity is hereditary") {
    SplitMix64 rng(71);
    for (int t = 0; t < 20; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(1, 7), 0.5);
        for (auto variant : {BoxComplexVariant::B, BoxComplexVariant::B0}) {
            auto c = box_complex(g, variant);
            for (const auto& f : c.facets()) {
                CHECK(box_simplex_valid(g, f, variant));
                // Random sub-simplices stay valid (the complex is simplicial).
                for (int s = 0; s < 8; ++s) {
                    BoxSimplex sub{f.first & rng.next(), f.second & rng.next()};
                    CHECK(box_simplex_valid(g, sub, variant));
                    CHECK(c.contains(sub));
                }
            }
        }
    }
}

TEST_CASE("the copy-swap involution is free and simplicial") {
    SplitMix64 rng(72);
    for (int t = 0; t < 15; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(2, 7), 0.6);
        for (auto variant : {BoxComplexVariant::B, BoxComplexVariant::B0}) {
            auto c = box_complex(g, variant);
            CHECK(c.involution_is_simplicial());
            CHECK(c.involution_is_free());
            for (const auto& f : c.facets()) {
                auto sw = Z2SimplicialComplex::swapped(f);
                CHECK(sw.first == f.second);
                CHECK(sw.second == f.first);
            }
        }
    }
}

TEST_CASE("graph homomorphisms induce equivariant simplicial maps") {
    Graph k2 = Graph::complete(2), k3 = Graph::complete(3);
    auto bk2 = box_complex(k2, BoxComplexVariant::B0);
    auto bk3 = box_complex(k3, BoxComplexVariant::B0);
    // Inclusion K2 -> K3 is a homomorphism.
    CHECK(is_simplicial_z2_map(bk2, bk3, {0, 1}));
    // Collapsing both endpoints onto one vertex is not.
    CHECK(!is_simplicial_z2_map(bk2, bk3, {0, 0}));

    // C5 -> K3 via a proper 3-coloring is a homomorphism; check both variants.
    Graph c5 = Graph::cycle(5);
    std::vector<int> coloring{0, 1, 0, 1, 2};
    CHECK(is_simplicial_z2_map(box_complex(c5, BoxComplexVariant::B0), bk3, coloring));
    CHECK(is_simplicial_z2_map(box_complex(c5, BoxComplexVariant::B),
                               box_complex(k3, BoxComplexVariant::B), coloring));
    // An improper coloring is rejected.
    CHECK(!is_simplicial_z2_map(box_complex(c5, BoxComplexVariant::B0), bk3, {0, 1, 0, 1, 0}));
}

TEST_CASE("complex constructor validates its input") {
    CHECK_THROWS_AS(Z2SimplicialComplex(2, {BoxSimplex{0b01, 0b01}}), InputError);
    CHECK_THROWS_AS(Z2SimplicialComplex(1, {BoxSimplex{0b10, 0b00}}), InputError);
    Z2SimplicialComplex ok(2, {BoxSimplex{0b01, 0b10}});
    CHECK(ok.ground_size() == 2);
    CHECK(ok.dimension() == 1);
}

TEST_CASE("vertex capacity") {
    CHECK_THROWS_AS(box_complex(Graph(13), BoxComplexVariant::B0), CapacityError);
    // 12 vertices is inside the cap.
    auto c = box_complex(Graph::cycle(12), BoxComplexVariant::B);
    CHECK(!c.facets().empty());
}
