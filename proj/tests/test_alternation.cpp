#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altkg/alternation.hpp"
#include "altkg/errors.hpp"
#include "altkg/hypergraph.hpp"
#include "altkg/sign.hpp"
#include "altkg/signed_property.hpp"
#include "altkg/subsets.hpp"

#include "test_util.hpp"

using namespace altkg;
using testutil::oracle_alt;
using testutil::oracle_alt_sigma;

namespace {

Hypergraph two_stable_pairs(int n) {
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    std::vector<std::vector<int>> edges;
    for (auto& s : stable_k_subsets(n, 2, 2)) edges.push_back(s);
    return Hypergraph(vs, edges);
}

Hypergraph stable_sets(int n, int k, int s) {
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    return Hypergraph(vs, stable_k_subsets(n, k, s));
}

} // namespace

TEST_CASE("alt of explicit sign vectors") {
    CHECK(alt(SignVector{1, -1, 1}) == 3);
    CHECK(alt(SignVector{0, 0, 0, 0}) == 0);
    CHECK(alt(SignVector{}) == 0);
    CHECK(alt(SignVector{1, 1, 1}) == 1);
    {
        // Long vector, sparse support: only the nonzero pattern matters.
        std::vector<std::int8_t> x(20, 0);
        x[0] = 1; x[1] = -1; x[19] = 1;
        CHECK(alt(SignVector(x)) == 3);
    }
    CHECK(alt(SignVector{1, 1, -1, 0, -1, 1}) == oracle_alt(SignVector{1, 1, -1, 0, -1, 1}));
    CHECK(alt(SignVector{1, 1, -1, 0, -1, 1}) == 3);
}

TEST_CASE("alt agrees with the subsequence oracle on random vectors") {
    SplitMix64 rng(2024);
    for (int t = 0; t < 500; ++t) {
        int n = rng.int_in(0, 12);
        std::vector<std::int8_t> x(static_cast<size_t>(n));
        for (auto& s : x) s = std::int8_t(rng.int_in(-1, 1));
        SignVector v(x);
        CHECK(alt(v) == oracle_alt(v));
        CHECK(alt(v) == alt(v.negated()));
    }
}

TEST_CASE("alt is subadditive over concatenation") {
    SplitMix64 rng(77);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::int8_t> a(size_t(rng.int_in(0, 8))), b(size_t(rng.int_in(0, 8)));
        for (auto& s : a) s = std::int8_t(rng.int_in(-1, 1));
        for (auto& s : b) s = std::int8_t(rng.int_in(-1, 1));
        std::vector<std::int8_t> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        CHECK(alt(SignVector(ab)) <= alt(SignVector(a)) + alt(SignVector(b)));
    }
}

TEST_CASE("signed_split picks sides along the order") {
    Hypergraph h({1, 2, 3, 4}, {{1, 2}});
    LinearOrder sigma({3, 1, 4, 2});
    SignedPair p = signed_split(SignVector{1, -1, 0, 1}, sigma);
    CHECK(p.plus == std::vector<int>{2, 3});
    CHECK(p.minus == std::vector<int>{1});
    CHECK_THROWS_AS(signed_split(SignVector{1, -1}, sigma), InputError);
}

TEST_CASE("contains_edge") {
    Hypergraph h({1, 2, 3, 4}, {{1, 2}, {3}});
    CHECK(contains_edge(h, {1, 2, 4}));
    CHECK(contains_edge(h, {3}));
    CHECK_FALSE(contains_edge(h, {2, 4}));
    CHECK_FALSE(contains_edge(h, {}));
}

TEST_CASE("hypergraph validation") {
    CHECK_THROWS_AS(Hypergraph({1, 1}, {}), InputError);
    CHECK_THROWS_AS(Hypergraph({1, 2}, {{}}), InputError);
    CHECK_THROWS_AS(Hypergraph({1, 2}, {{3}}), InputError);
    CHECK_THROWS_AS(Hypergraph({1, 2}, {{1, 2}, {2, 1}}), InputError);
    CHECK_THROWS_AS(LinearOrder({1, 1}).validate_for(Hypergraph({1, 2}, {})), InputError);
    CHECK_THROWS_AS(LinearOrder({1}).validate_for(Hypergraph({1, 2}, {})), InputError);
}

TEST_CASE("alt_sigma on the 2-stable pairs of [5], natural order") {
    Hypergraph h = two_stable_pairs(5);
    LinearOrder I = LinearOrder::natural(h);
    auto ref = oracle_alt_sigma(h, I, false);
    AltResult bb = alt_sigma(h, I);
    AltOptions ex;
    ex.mode = SearchMode::EXHAUSTIVE;
    AltResult full = alt_sigma(h, I, ex);

    CHECK(ref.value == 3);
    CHECK(bb.value == 3);
    CHECK(full.value == 3);
    // Canonical witness: lexicographically smallest maximizer under -1 < 0 < +1.
    CHECK(bb.witness.x == ref.witness.x);
    CHECK(full.witness.x == ref.witness.x);
    // The witness must be feasible and attain the value.
    SignedPair sp = signed_split(bb.witness, I);
    CHECK_FALSE(contains_edge(h, sp.plus));
    CHECK_FALSE(contains_edge(h, sp.minus));
    CHECK(alt(bb.witness) == 3);
}

TEST_CASE("every singleton an edge forces value 0") {
    Hypergraph h({1, 2, 3}, {{1}, {2}, {3}});
    AltResult r = alt_sigma(h, LinearOrder::natural(h));
    CHECK(r.value == 0);
    CHECK(r.witness.x == std::vector<std::int8_t>{0, 0, 0});
}

TEST_CASE("salt with no edges is n") {
    Hypergraph h({1, 2, 3}, {});
    CHECK(salt_sigma(h, LinearOrder::natural(h)).value == 3);
    CHECK(alt_sigma(h, LinearOrder::natural(h)).value == 3);
}

TEST_CASE("salt under the identity order on s-stable k-subsets is 2k-1") {
    // (n, k) pairs with the 2-stable k-subsets as hyperedges.
    struct Case { int n, k, expected; };
    for (Case c : {Case{5, 2, 3}, Case{6, 2, 3}, Case{7, 2, 3}, Case{7, 3, 5}, Case{9, 3, 5}}) {
        Hypergraph h = stable_sets(c.n, c.k, 2);
        AltResult r = salt_sigma(h, LinearOrder::natural(h));
        CHECK_MESSAGE(r.value == c.expected, "n=", c.n, " k=", c.k);
    }
    // Independent exhaustive confirmation for one larger pair.
    Hypergraph h = stable_sets(9, 3, 2);
    AltOptions ex;
    ex.mode = SearchMode::EXHAUSTIVE;
    CHECK(salt_sigma(h, LinearOrder::natural(h), ex).value == 5);
}

TEST_CASE("branch-and-bound matches the exhaustive mode and the oracle") {
    SplitMix64 rng(424242);
    for (int t = 0; t < 120; ++t) {
        int n = rng.int_in(1, 9);
        Hypergraph h = testutil::random_hypergraph(rng, n, rng.int_in(0, 7));
        std::vector<int> ord = h.vertices();
        rng.shuffle(ord);
        LinearOrder sigma(ord);
        for (bool salt : {false, true}) {
            auto ref = oracle_alt_sigma(h, sigma, salt);
            AltOptions ex;
            ex.mode = SearchMode::EXHAUSTIVE;
            AltResult a = alt_scan(h, sigma, salt ? AltKind::SALT : AltKind::ALT, {});
            AltResult b = alt_scan(h, sigma, salt ? AltKind::SALT : AltKind::ALT, ex);
            CHECK(a.value == ref.value);
            CHECK(b.value == ref.value);
            CHECK(a.witness.x == ref.witness.x);
            CHECK(b.witness.x == ref.witness.x);
            CHECK(a.value <= n);
        }
        // alt <= salt always.
        CHECK(alt_sigma(h, sigma).value <= salt_sigma(h, sigma).value);
    }
}

TEST_CASE("modes agree on larger instances") {
    SplitMix64 rng(7);
    for (int n : {12, 13, 14}) {
        Hypergraph h = testutil::random_hypergraph(rng, n, 10);
        LinearOrder I = LinearOrder::natural(h);
        AltOptions ex;
        ex.mode = SearchMode::EXHAUSTIVE;
        for (AltKind k : {AltKind::ALT, AltKind::SALT}) {
            AltResult a = alt_scan(h, I, k, {});
            AltResult b = alt_scan(h, I, k, ex);
            CHECK(a.value == b.value);
            CHECK(a.witness.x == b.witness.x);
        }
    }
}

TEST_CASE("value is invariant under order reversal") {
    SplitMix64 rng(99);
    for (int t = 0; t < 60; ++t) {
        Hypergraph h = testutil::random_hypergraph(rng, rng.int_in(2, 8), rng.int_in(1, 6));
        std::vector<int> fwd = h.vertices();
        std::vector<int> rev(fwd.rbegin(), fwd.rend());
        CHECK(alt_sigma(h, LinearOrder(fwd)).value == alt_sigma(h, LinearOrder(rev)).value);
        CHECK(salt_sigma(h, LinearOrder(fwd)).value == salt_sigma(h, LinearOrder(rev)).value);
    }
}

TEST_CASE("alt_min exact on a single pair edge") {
    // Both orders admit (+1, -1), whose sides are singletons: value 2.
    Hypergraph h({1, 2}, {{1, 2}});
    AltMinResult r = alt_min(h);
    CHECK(r.value == 2);
    CHECK(r.orders_tried == 2);
    int by_hand = std::min(oracle_alt_sigma(h, LinearOrder({1, 2}), false).value,
                           oracle_alt_sigma(h, LinearOrder({2, 1}), false).value);
    CHECK(r.value == by_hand);
}

TEST_CASE("alt_min exact equals the brute-force minimum over orderings") {
    SplitMix64 rng(5150);
    for (int t = 0; t < 25; ++t) {
        int n = rng.int_in(2, 5);
        Hypergraph h = testutil::random_hypergraph(rng, n, rng.int_in(1, 5), 3);
        AltMinResult r = alt_min(h);
        // Reference: scan every permutation with the slow oracle.
        std::vector<int> perm = h.vertices();
        std::sort(perm.begin(), perm.end());
        int best = INT_MAX;
        do {
            best = std::min(best, oracle_alt_sigma(h, LinearOrder(perm), false).value);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(r.value == best);
        // Reported order must reproduce the reported value.
        CHECK(alt_sigma(h, r.order).value == r.value);
    }
}

TEST_CASE("alt_min respects the factorial cap") {
    std::vector<int> vs;
    for (int v = 1; v <= 10; ++v) vs.push_back(v);
    Hypergraph h(vs, {{1, 2}});
    CHECK_THROWS_AS(alt_min(h), CapacityError);
    AltMinOptions opts;
    opts.factorial_cap = 10; // explicit opt-in raises the cap
    CHECK_NOTHROW(alt_min(h, opts));
}

TEST_CASE("local search never beats the exact minimum and is deterministic") {
    SplitMix64 rng(31337);
    for (int t = 0; t < 10; ++t) {
        Hypergraph h = testutil::random_hypergraph(rng, rng.int_in(3, 6), rng.int_in(1, 6), 3);
        AltMinResult exact = alt_min(h);
        AltMinOptions ls;
        ls.strategy = AltMinStrategy::LOCAL_SEARCH;
        ls.seed = 9000 + std::uint64_t(t);
        ls.restarts = 6;
        AltMinResult heur = alt_min(h, ls);
        AltMinResult heur2 = alt_min(h, ls);
        CHECK(heur.value >= exact.value);
        CHECK(heur.value == heur2.value);
        CHECK(heur.order.order == heur2.order.order);
        CHECK(alt_sigma(h, heur.order).value == heur.value);
    }
}

TEST_CASE("property route reproduces alt and salt") {
    SplitMix64 rng(606);
    for (int t = 0; t < 30; ++t) {
        int n = rng.int_in(1, 8);
        Hypergraph h = testutil::random_hypergraph(rng, n, rng.int_in(1, 6), 3);
        std::vector<int> ord = h.vertices();
        rng.shuffle(ord);
        LinearOrder sigma(ord);
        auto p1 = either_side_edge_property(h);
        auto p2 = both_sides_edge_property(h);
        CHECK(alt_property(*p1, sigma).value == alt_sigma(h, sigma).value);
        CHECK(alt_property(*p2, sigma).value == salt_sigma(h, sigma).value);
    }
    // One larger spot check.
    Hypergraph h = two_stable_pairs(10);
    LinearOrder I = LinearOrder::natural(h);
    CHECK(alt_property(*either_side_edge_property(h), I).value == alt_sigma(h, I).value);
}

TEST_CASE("stable-disjoint property value is s*k - 1 under the identity order") {
    struct Case { int n, k, s; };
    for (Case c : {Case{5, 2, 2}, Case{6, 2, 2}, Case{7, 2, 2}, Case{6, 3, 2}}) {
        auto p = stable_disjoint_property(c.n, c.k, c.s);
        std::vector<int> ord;
        for (int v = 1; v <= c.n; ++v) ord.push_back(v);
        AltResult r = alt_property(*p, LinearOrder(ord));
        CHECK_MESSAGE(r.value == c.s * c.k - 1, "n=", c.n, " k=", c.k, " s=", c.s);
    }
}

TEST_CASE("superset-closure spot check rejects a non-monotone family") {
    // "plus side has exactly one element" is not superset-closed.
    class Bad final : public SignedProperty {
    public:
        Bad() { for (int v = 1; v <= 6; ++v) g_.push_back(v); }
        std::string name() const override { return "exactly-one-plus"; }
        const std::vector<Vertex>& ground() const override { return g_; }
        bool contains(Mask plus, Mask) const override { return popcount(plus) == 1; }
    private:
        std::vector<Vertex> g_;
    };
    Bad bad;
    CHECK_THROWS_AS(check_superset_closed(bad), InputError);
}

TEST_CASE("certificates: build, check, bound formulas, tamper detection") {
    Hypergraph h = two_stable_pairs(5);
    LinearOrder I = LinearOrder::natural(h);

    AltCertificate alt_cert = make_certificate(h, I, AltKind::ALT);
    CHECK(alt_cert.value == 3);
    CHECK(alt_cert.bound() == 2); // 5 - 3
    CHECK(check_certificate_witness(alt_cert));
    CHECK(revalidate_certificate(alt_cert));

    AltCertificate salt_cert = make_certificate(h, I, AltKind::SALT);
    CHECK(salt_cert.value == 3);
    CHECK(salt_cert.bound() == 3); // 5 + 1 - 3
    CHECK(check_certificate_witness(salt_cert));

    CHECK(certificate_bound(AltKind::ALT, 10, 4) == 6);
    CHECK(certificate_bound(AltKind::SALT, 10, 4) == 7);

    std::string why;
    AltCertificate bad = alt_cert;
    bad.value += 1;
    CHECK_FALSE(check_certificate_witness(bad, &why));
    CHECK(!why.empty());

    AltCertificate bad2 = alt_cert;
    bad2.witness.x[0] = std::int8_t(-bad2.witness.x[0]);
    CHECK_FALSE(check_certificate_witness(bad2, &why));
}

TEST_CASE("abort threshold stops the search early") {
    Hypergraph h({1, 2, 3, 4, 5, 6}, {});
    AltOptions opts;
    opts.abort_at = 3;
    AltResult r = alt_sigma(h, LinearOrder::natural(h), opts);
    CHECK(r.aborted);
    CHECK(r.value >= 3);
}
