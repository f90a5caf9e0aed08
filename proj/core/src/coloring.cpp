#include "altkg/coloring.hpp"

#include <algorithm>

#include "altkg/bits.hpp"
#include "altkg/errors.hpp"

namespace altkg {

bool verify_coloring(const Graph& g, const Coloring& c) {
    if (int(c.color.size()) != g.num_vertices()) return false;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (c.color[size_t(v)] < 0 || c.color[size_t(v)] >= c.k) return false;
    for (auto [u, v] : g.edge_list())
        if (c.color[size_t(u)] == c.color[size_t(v)]) return false;
    return true;
}

namespace {

/// Smallest-degree-last ordering; also the base of the greedy clique seed.
std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<bool> gone(static_cast<size_t>(n), false);
    for (int v = 0; v < n; ++v) deg[size_t(v)] = g.degree(v);
    std::vector<int> order(static_cast<size_t>(n));
    for (int round = n - 1; round >= 0; --round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[size_t(v)] && (best == -1 || deg[size_t(v)] < deg[size_t(best)])) best = v;
        order[size_t(round)] = best;
        gone[size_t(best)] = true;
        for (int u = g.neighbors(best).first(); u != -1; u = g.neighbors(best).next_after(u))
            if (!gone[size_t(u)]) --deg[size_t(u)];
    }
    return order;
}

struct CliqueSearch {
    const Graph& g;
    std::vector<int> best;
    std::vector<int> cur;
    std::vector<int> rank; // static order position, branch high ranks first

    void expand(DynBits p) {
        int pc = p.count();
        if (int(cur.size()) + pc <= int(best.size())) return;
        if (pc == 0) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        // Partition candidates into independent classes; clique can take at
        // most one vertex per class.
        {
            std::vector<DynBits> classes;
            for (int v = p.first(); v != -1; v = p.next_after(v)) {
                bool placed = false;
                for (auto& cl : classes) {
                    if (!cl.intersects(g.neighbors(v))) {
                        cl.set(v);
                        placed = true;
                        break;
                    }
                }
                if (!placed) {
                    DynBits cl(g.num_vertices());
                    cl.set(v);
                    classes.push_back(cl);
                }
            }
            if (int(cur.size()) + int(classes.size()) <= int(best.size())) return;
        }
        // Branch on candidates, highest static rank first.
        std::vector<int> cands;
        for (int v = p.first(); v != -1; v = p.next_after(v)) cands.push_back(v);
        std::sort(cands.begin(), cands.end(), [&](int a, int b) { return rank[size_t(a)] > rank[size_t(b)]; });
        for (int v : cands) {
            if (int(cur.size()) + p.count() <= int(best.size())) return;
            p.reset(v);
            cur.push_back(v);
            DynBits next = p;
            next &= g.neighbors(v);
            expand(next);
            cur.pop_back();
        }
    }
};

} // namespace

std::vector<int> max_clique(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return {};
    CliqueSearch search{g, {}, {}, std::vector<int>(static_cast<size_t>(n))};
    auto order = degeneracy_order(g);
    for (int i = 0; i < n; ++i) search.rank[size_t(order[size_t(i)])] = i;
    // Greedy seed along the degeneracy order.
    {
        std::vector<int> seed;
        DynBits common(n);
        for (int v = 0; v < n; ++v) common.set(v);
        for (int i = n - 1; i >= 0; --i) {
            int v = order[size_t(i)];
            if (common.test(v)) {
                seed.push_back(v);
                common &= g.neighbors(v);
            }
        }
        search.best = seed;
    }
    DynBits all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    search.expand(all);
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

int clique_number(const Graph& g) { return int(max_clique(g).size()); }

Coloring greedy_coloring(const Graph& g) {
    const int n = g.num_vertices();
    Coloring c;
    c.color.assign(static_cast<size_t>(n), -1);
    if (n == 0) return c;
    std::vector<std::vector<bool>> seen(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    std::vector<int> sat(static_cast<size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (c.color[size_t(u)] != -1) continue;
            if (v == -1 || sat[size_t(u)] > sat[size_t(v)] ||
                (sat[size_t(u)] == sat[size_t(v)] && g.degree(u) > g.degree(v)))
                v = u;
        }
        int col = 0;
        while (seen[size_t(v)][size_t(col)]) ++col;
        c.color[size_t(v)] = col;
        c.k = std::max(c.k, col + 1);
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next_after(u)) {
            if (!seen[size_t(u)][size_t(col)]) {
                seen[size_t(u)][size_t(col)] = true;
                ++sat[size_t(u)];
            }
        }
    }
    return c;
}

namespace {

/// DSATUR-ordered complete search with forward checking and unit
/// propagation.  Domains are color bitmasks; all mutations are trailed so
/// backtracking restores exact state.
struct ExactColorer {
    const Graph& g;
    int n, k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    std::vector<Mask> domain;
    std::vector<int> color;
    std::vector<int> live_deg; // degree among uncolored vertices
    int colored = 0;
    Mask used_colors = 0;

    std::vector<std::pair<int, Mask>> removal_trail;
    std::vector<int> assign_trail;

    ExactColorer(const Graph& g_, int k_, std::uint64_t budget_)
        : g(g_), n(g_.num_vertices()), k(k_), budget(budget_),
          domain(static_cast<size_t>(n), k_ >= 64 ? ~Mask{0} : (bit(k_) - 1)),
          color(static_cast<size_t>(n), -1), live_deg(static_cast<size_t>(n)) {
        for (int v = 0; v < n; ++v) live_deg[size_t(v)] = g.degree(v);
    }

    /// Assign v <- c and propagate.  Returns false on a domain wipeout or a
    /// contradictory forced assignment; the caller unwinds via the trails.
    bool assign(int v, int c) {
        std::vector<std::pair<int, int>> queue{{v, c}};
        while (!queue.empty()) {
            auto [u, cu] = queue.back();
            queue.pop_back();
            if (color[size_t(u)] != -1) {
                if (color[size_t(u)] == cu) continue;
                return false;
            }
            color[size_t(u)] = cu;
            used_colors |= bit(cu);
            assign_trail.push_back(u);
            ++colored;
            for (int w = g.neighbors(u).first(); w != -1; w = g.neighbors(u).next_after(w)) {
                --live_deg[size_t(w)];
                if (color[size_t(w)] != -1) continue;
                if (domain[size_t(w)] & bit(cu)) {
                    domain[size_t(w)] &= ~bit(cu);
                    removal_trail.emplace_back(w, bit(cu));
                    Mask d = domain[size_t(w)];
                    if (d == 0) return false;
                    if ((d & (d - 1)) == 0) queue.push_back({w, lowest_bit(d)});
                }
            }
        }
        return true;
    }

    void undo(size_t removal_mark, size_t assign_mark) {
        while (removal_trail.size() > removal_mark) {
            auto [w, bits] = removal_trail.back();
            removal_trail.pop_back();
            domain[size_t(w)] |= bits;
        }
        while (assign_trail.size() > assign_mark) {
            int u = assign_trail.back();
            assign_trail.pop_back();
            color[size_t(u)] = -1;
            --colored;
            for (int w = g.neighbors(u).first(); w != -1; w = g.neighbors(u).next_after(w))
                ++live_deg[size_t(w)];
        }
    }

    bool solve() {
        if (++nodes > budget) throw BudgetExhausted("coloring search exceeded its node budget");
        if (colored == n) return true;
        // Most saturated vertex = smallest remaining domain; break ties by
        // live degree, then index (determinism).
        int v = -1, vdom = 0;
        for (int u = 0; u < n; ++u) {
            if (color[size_t(u)] != -1) continue;
            int d = popcount(domain[size_t(u)]);
            if (v == -1 || d < vdom ||
                (d == vdom && (live_deg[size_t(u)] > live_deg[size_t(v)] ||
                               (live_deg[size_t(u)] == live_deg[size_t(v)] && u < v))))
                { v = u; vdom = d; }
        }
        // Unused colors are interchangeable: consider used ones plus the
        // single lowest unused.
        Mask fresh = ~used_colors & (k >= 64 ? ~Mask{0} : (bit(k) - 1));
        Mask allowed = domain[size_t(v)] & (used_colors | (fresh & (Mask(0) - fresh)));
        Mask saved_used = used_colors;
        for (Mask m = allowed; m; m &= m - 1) {
            int c = lowest_bit(m);
            size_t rm = removal_trail.size(), am = assign_trail.size();
            if (assign(v, c) && solve()) return true;
            undo(rm, am);
            used_colors = saved_used;
        }
        return false;
    }
};

Coloring trivial_distinct(const Graph& g, int k) {
    Coloring c;
    c.k = k;
    c.color.resize(static_cast<size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) c.color[size_t(v)] = v;
    return c;
}

std::optional<Coloring> two_color(const Graph& g) {
    const int n = g.num_vertices();
    Coloring c;
    c.k = 2;
    c.color.assign(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (c.color[size_t(s)] != -1) continue;
        c.color[size_t(s)] = 0;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = g.neighbors(u).first(); v != -1; v = g.neighbors(u).next_after(v)) {
                if (c.color[size_t(v)] == -1) {
                    c.color[size_t(v)] = 1 - c.color[size_t(u)];
                    stack.push_back(v);
                } else if (c.color[size_t(v)] == c.color[size_t(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return c;
}

} // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k, const SolveLimits& limits) {
    const int n = g.num_vertices();
    if (n > limits.vertex_cap)
        throw CapacityError("coloring solver capped at " + std::to_string(limits.vertex_cap) +
                            " vertices (" + std::to_string(n) + " given; raise the cap explicitly)");
    if (k < 0) throw InputError("negative color count");
    if (n == 0) return Coloring{k, {}};
    if (k == 0) return std::nullopt;
    if (k >= n) return trivial_distinct(g, k);
    if (k == 1) {
        if (g.num_edges() > 0) return std::nullopt;
        return Coloring{1, std::vector<int>(static_cast<size_t>(n), 0)};
    }
    if (k == 2) return two_color(g);
    if (k > 64) {
        // Color bitmasks stop at one word; at that many colors the greedy
        // heuristic nearly always settles it, otherwise give up honestly.
        Coloring greedy = greedy_coloring(g);
        if (greedy.k <= k) {
            greedy.k = k;
            return greedy;
        }
        throw CapacityError("exact search supports at most 64 colors");
    }

    std::vector<int> clique = max_clique(g);
    if (int(clique.size()) > k) return std::nullopt;

    ExactColorer solver(g, k, limits.node_budget);
    // Pin a maximum clique to distinct colors (pure symmetry breaking).
    for (size_t i = 0; i < clique.size(); ++i)
        if (!solver.assign(clique[i], int(i))) return std::nullopt;
    if (!solver.solve()) return std::nullopt;

    Coloring c;
    c.k = k;
    c.color = solver.color;
    if (!verify_coloring(g, c))
        throw std::logic_error("internal error: solver produced an improper coloring");
    return c;
}

ChiResult chromatic_number(const Graph& g, const SolveLimits& limits) {
    const int n = g.num_vertices();
    ChiResult r;
    if (n == 0) return r;
    if (n > limits.vertex_cap)
        throw CapacityError("chromatic solver capped at " + std::to_string(limits.vertex_cap) + " vertices");

    Coloring greedy = greedy_coloring(g);
    int ub = greedy.k;
    int lb = std::max(1, clique_number(g));
    if (lb == 2 && !g.bipartite()) lb = 3;

    r.lower = lb;
    r.upper = ub;
    r.witness = greedy;
    for (int k = lb; k < ub; ++k) {
        std::optional<Coloring> col;
        try {
            col = is_k_colorable(g, k, limits);
        } catch (const BudgetExhausted&) {
            r.lower = k; // everything below k is refuted, k itself unknown
            return r;
        }
        if (col) {
            r.upper = k;
            r.witness = col;
            break;
        }
        r.lower = k + 1;
    }
    r.lower = std::min(r.lower, r.upper);
    return r;
}

} // namespace altkg
