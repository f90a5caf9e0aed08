#include "altkg/homomorphism.hpp"

#include <string>

#include "altkg/bits.hpp"
#include "altkg/errors.hpp"

namespace altkg {

bool verify_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& f) {
    if (int(f.size()) != g.num_vertices()) return false;
    for (int v : f)
        if (v < 0 || v >= h.num_vertices()) return false;
    for (auto [u, v] : g.edge_list())
        if (!h.adjacent(f[size_t(u)], f[size_t(v)])) return false;
    return true;
}

namespace {

struct HomSearch {
    const Graph& g;
    const Graph& h;
    std::uint64_t budget, nodes = 0;
    std::vector<DynBits> domain; // domain[u] over V(h)
    std::vector<int> fixed;      // -1 while open
    int open;

    HomSearch(const Graph& g_, const Graph& h_, std::uint64_t budget_)
        : g(g_), h(h_), budget(budget_),
          domain(static_cast<size_t>(g_.num_vertices()), DynBits(h_.num_vertices())),
          fixed(static_cast<size_t>(g_.num_vertices()), -1), open(g_.num_vertices()) {
        for (auto& d : domain)
            for (int b = 0; b < h.num_vertices(); ++b) d.set(b);
    }

    /// Drop values of domain[u] lacking a neighbour in domain[v]; true when
    /// something changed.
    bool revise(int u, int v) {
        bool changed = false;
        for (int a = domain[size_t(u)].first(); a != -1; a = domain[size_t(u)].next_after(a)) {
            if (!h.neighbors(a).intersects(domain[size_t(v)])) {
                domain[size_t(u)].reset(a);
                changed = true;
            }
        }
        return changed;
    }

    /// AC-3 over the arcs of g.  False when some domain empties.
    bool propagate() {
        std::vector<std::pair<int, int>> queue;
        for (auto [u, v] : g.edge_list()) {
            queue.emplace_back(u, v);
            queue.emplace_back(v, u);
        }
        while (!queue.empty()) {
            auto [u, v] = queue.back();
            queue.pop_back();
            if (!revise(u, v)) continue;
            if (domain[size_t(u)].none()) return false;
            for (int w = g.neighbors(u).first(); w != -1; w = g.neighbors(u).next_after(w))
                if (w != v) queue.emplace_back(w, u);
        }
        return true;
    }

    bool solve() {
        if (++nodes > budget) throw BudgetExhausted("homomorphism search exceeded its node budget");
        if (open == 0) return true;
        int u = -1, usz = 0;
        for (int w = 0; w < g.num_vertices(); ++w) {
            if (fixed[size_t(w)] != -1) continue;
            int sz = domain[size_t(w)].count();
            if (u == -1 || sz < usz) { u = w; usz = sz; }
        }
        std::vector<DynBits> saved = domain;
        for (int a = saved[size_t(u)].first(); a != -1; a = saved[size_t(u)].next_after(a)) {
            domain[size_t(u)] = DynBits(h.num_vertices());
            domain[size_t(u)].set(a);
            fixed[size_t(u)] = a;
            --open;
            if (propagate() && solve()) return true;
            ++open;
            fixed[size_t(u)] = -1;
            domain = saved;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> has_homomorphism(const Graph& g, const Graph& h,
                                                 const SolveLimits& limits) {
    const long long product = 1LL * g.num_vertices() * h.num_vertices();
    if (product > 20000)
        throw CapacityError("homomorphism search capped at |V(g)|*|V(h)| <= 20000 (" +
                            std::to_string(product) + " given)");
    if (g.num_vertices() == 0) return std::vector<int>{};
    if (h.num_vertices() == 0) return std::nullopt;

    HomSearch search(g, h, limits.node_budget);
    if (!search.propagate()) return std::nullopt;
    if (!search.solve()) return std::nullopt;
    if (!verify_homomorphism(g, h, search.fixed))
        throw std::logic_error("internal error: search produced a non-homomorphism");
    return search.fixed;
}

bool homomorphically_equivalent(const Graph& g, const Graph& h, const SolveLimits& limits) {
    return has_homomorphism(g, h, limits).has_value() && has_homomorphism(h, g, limits).has_value();
}

} // namespace altkg
