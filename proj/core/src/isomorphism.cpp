#include "altkg/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "altkg/errors.hpp"

namespace altkg {

namespace {

/// Iterated degree refinement (1-WL).  Returns a stable color per vertex;
/// colors are comparable across the two graphs because both are refined by
/// the same dictionary.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& a, const Graph& b) {
    const int na = a.num_vertices(), nb = b.num_vertices();
    std::vector<int> ca(static_cast<size_t>(na)), cb(static_cast<size_t>(nb));
    for (int u = 0; u < na; ++u) ca[size_t(u)] = a.degree(u);
    for (int u = 0; u < nb; ++u) cb[size_t(u)] = b.degree(u);
    for (int round = 0; round < na + 1; ++round) {
        std::map<std::vector<int>, int> dict;
        auto signature = [](const Graph& g, const std::vector<int>& c, int u) {
            std::vector<int> sig;
            sig.push_back(c[size_t(u)]);
            for (int v = g.neighbors(u).first(); v != -1; v = g.neighbors(u).next_after(v))
                sig.push_back(c[size_t(v)]);
            std::sort(sig.begin() + 1, sig.end());
            return sig;
        };
        std::vector<int> na2(static_cast<size_t>(na)), nb2(static_cast<size_t>(nb));
        for (int u = 0; u < na; ++u) {
            auto sig = signature(a, ca, u);
            auto it = dict.try_emplace(sig, int(dict.size())).first;
            na2[size_t(u)] = it->second;
        }
        for (int u = 0; u < nb; ++u) {
            auto sig = signature(b, cb, u);
            auto it = dict.try_emplace(sig, int(dict.size())).first;
            nb2[size_t(u)] = it->second;
        }
        if (na2 == ca && nb2 == cb) break;
        ca.swap(na2);
        cb.swap(nb2);
    }
    return {ca, cb};
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> order;      // vertices of a in assignment order
    std::vector<int> map_ab;     // a -> b or -1
    std::vector<bool> used_b;
    std::uint64_t nodes = 0;

    bool extend(size_t depth) {
        if (++nodes > 50'000'000ULL)
            throw BudgetExhausted("isomorphism search exceeded its node budget");
        if (depth == order.size()) return true;
        int u = order[depth];
        for (int v = 0; v < b.num_vertices(); ++v) {
            if (used_b[size_t(v)] || cb[size_t(v)] != ca[size_t(u)]) continue;
            bool ok = true;
            for (size_t d = 0; d < depth && ok; ++d) {
                int u2 = order[d];
                ok = a.adjacent(u, u2) == b.adjacent(v, map_ab[size_t(u2)]);
            }
            if (!ok) continue;
            map_ab[size_t(u)] = v;
            used_b[size_t(v)] = true;
            if (extend(depth + 1)) return true;
            used_b[size_t(v)] = false;
            map_ab[size_t(u)] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b, int cap) {
    if (a.num_vertices() > cap || b.num_vertices() > cap)
        throw CapacityError("isomorphism test capped at " + std::to_string(cap) + " vertices");
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
    const int n = a.num_vertices();
    if (n == 0) return std::vector<int>{};

    auto [ca, cb] = refine_colors(a, b);
    // Color histograms must agree.
    {
        std::map<int, int> ha, hb;
        for (int c : ca) ++ha[c];
        for (int c : cb) ++hb[c];
        if (ha != hb) return std::nullopt;
    }

    // Assign rare classes first, then higher degree.
    std::map<int, int> freq;
    for (int c : ca) ++freq[c];
    std::vector<int> order(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) order[size_t(u)] = u;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        int fu = freq[ca[size_t(u)]], fv = freq[ca[size_t(v)]];
        if (fu != fv) return fu < fv;
        if (a.degree(u) != a.degree(v)) return a.degree(u) > a.degree(v);
        return u < v;
    });

    IsoSearch search{a, b, ca, cb, std::move(order), std::vector<int>(size_t(n), -1),
                     std::vector<bool>(size_t(n), false)};
    if (search.extend(0)) return search.map_ab;
    return std::nullopt;
}

} // namespace altkg
