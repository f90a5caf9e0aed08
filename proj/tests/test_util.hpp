#pragma once

// Shared helpers for the test binaries: seeded random instances and the
// slow reference oracles the fast paths are checked against.

#include <algorithm>
#include <set>
#include <vector>

#include "altkg/graph.hpp"
#include "altkg/hypergraph.hpp"
#include "altkg/rng.hpp"
#include "altkg/sign.hpp"

namespace testutil {

/// Random hypergraph on n vertices (ids 1..n) with up to m random edges of
/// size 1..max_edge (duplicates dropped, so the count can come out lower).
inline altkg::Hypergraph random_hypergraph(altkg::SplitMix64& rng, int n, int m, int max_edge = 4) {
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    std::set<std::vector<int>> edges;
    for (int i = 0; i < m; ++i) {
        int sz = rng.int_in(1, std::min(max_edge, n));
        std::set<int> e;
        while (int(e.size()) < sz) e.insert(rng.int_in(1, n));
        edges.insert(std::vector<int>(e.begin(), e.end()));
    }
    return altkg::Hypergraph(vs, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

inline altkg::Graph random_graph(altkg::SplitMix64& rng, int n, double p) {
    altkg::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) g.add_edge(u, v);
    return g;
}

/// Reference for alt(): enumerate every subsequence of the nonzero entries
/// and take the longest strictly alternating one.  Exponential on purpose.
inline int oracle_alt(const altkg::SignVector& v) {
    std::vector<int> nz;
    for (auto s : v.x)
        if (s != 0) nz.push_back(s);
    int L = int(nz.size());
    if (L > 24) throw std::runtime_error("oracle_alt input too long");
    int best = 0;
    for (unsigned sub = 0; sub < (1u << L); ++sub) {
        int last = 0, len = 0;
        bool alternating = true;
        for (int i = 0; i < L && alternating; ++i) {
            if (!(sub >> i & 1)) continue;
            if (last != 0 && nz[size_t(i)] == last) alternating = false;
            last = nz[size_t(i)];
            ++len;
        }
        if (alternating) best = std::max(best, len);
    }
    return best;
}

/// Reference for alt_sigma / salt_sigma: walk all 3^n sign vectors in
/// lexicographic order (-1 < 0 < +1) with plain set arithmetic.  Returns
/// the maximum and the first (= lexicographically smallest) maximizer.
struct OracleAltResult {
    int value = 0;
    altkg::SignVector witness;
};

inline OracleAltResult oracle_alt_sigma(const altkg::Hypergraph& h, const altkg::LinearOrder& sigma,
                                        bool salt) {
    const int n = h.num_vertices();
    if (n > 13) throw std::runtime_error("oracle_alt_sigma input too large");
    std::vector<std::int8_t> digits(size_t(n), -1);
    OracleAltResult best;
    best.value = -1;
    auto side_contains = [&](const std::set<int>& side) {
        for (const auto& e : h.edges()) {
            bool all = true;
            for (int v : e)
                if (!side.count(v)) { all = false; break; }
            if (all) return true;
        }
        return false;
    };
    while (true) {
        std::set<int> plus, minus;
        for (int j = 0; j < n; ++j) {
            if (digits[size_t(j)] > 0) plus.insert(sigma.at(j));
            if (digits[size_t(j)] < 0) minus.insert(sigma.at(j));
        }
        bool ph = side_contains(plus), mh = side_contains(minus);
        bool feasible = salt ? !(ph && mh) : !(ph || mh);
        if (feasible) {
            int a = oracle_alt(altkg::SignVector(digits));
            if (a > best.value) {
                best.value = a;
                best.witness = altkg::SignVector(digits);
            }
        }
        int j = n - 1;
        while (j >= 0 && digits[size_t(j)] == 1) digits[size_t(j--)] = -1;
        if (j < 0) break;
        ++digits[size_t(j)];
    }
    if (best.value < 0) best.value = 0;
    return best;
}

} // namespace testutil
