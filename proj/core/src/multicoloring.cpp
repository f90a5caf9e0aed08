#include "altkg/multicoloring.hpp"

#include <algorithm>

#include "altkg/errors.hpp"

namespace altkg {

bool verify_multicoloring(const Graph& g, const Multicoloring& mc) {
    if (int(mc.sets.size()) != g.num_vertices()) return false;
    if (mc.m < 0 || mc.n < 0 || mc.n > 64) return false;
    Mask palette = mc.n >= 64 ? ~Mask{0} : (bit(mc.n) - 1);
    for (Mask s : mc.sets)
        if (popcount(s) != mc.m || (s & ~palette)) return false;
    for (auto [u, v] : g.edge_list())
        if (mc.sets[size_t(u)] & mc.sets[size_t(v)]) return false;
    return true;
}

namespace {

Mask lowest_bits_of(Mask pool, int count) {
    Mask out = 0;
    while (count-- > 0 && pool) {
        Mask b = pool & (Mask(0) - pool);
        out |= b;
        pool ^= b;
    }
    return out;
}

struct MultiSolver {
    const Graph& g;
    int n_vertices, m, n_colors;
    std::uint64_t budget, nodes = 0;
    Mask palette;

    std::vector<Mask> avail;   // colors not yet claimed by a neighbor
    std::vector<Mask> assigned; // 0 = unassigned
    int placed = 0;
    Mask used_colors = 0;

    std::vector<std::pair<int, Mask>> trail; // (vertex, bits removed from avail)
    std::vector<int> assign_trail;

    MultiSolver(const Graph& g_, int m_, int n_, std::uint64_t budget_)
        : g(g_), n_vertices(g_.num_vertices()), m(m_), n_colors(n_), budget(budget_),
          palette(n_ >= 64 ? ~Mask{0} : (bit(n_) - 1)),
          avail(static_cast<size_t>(n_vertices), palette),
          assigned(static_cast<size_t>(n_vertices), 0) {}

    /// Claim set s for v and propagate; forced vertices (availability down to
    /// exactly m colors) cascade.  False on wipeout.
    bool assign(int v, Mask s) {
        std::vector<std::pair<int, Mask>> queue{{v, s}};
        while (!queue.empty()) {
            auto [u, su] = queue.back();
            queue.pop_back();
            if (assigned[size_t(u)]) {
                if (assigned[size_t(u)] == su) continue;
                return false;
            }
            assigned[size_t(u)] = su;
            used_colors |= su;
            assign_trail.push_back(u);
            ++placed;
            for (int w = g.neighbors(u).first(); w != -1; w = g.neighbors(u).next_after(w)) {
                if (assigned[size_t(w)]) {
                    if (assigned[size_t(w)] & su) return false;
                    continue;
                }
                Mask cut = avail[size_t(w)] & su;
                if (!cut) continue;
                avail[size_t(w)] &= ~cut;
                trail.emplace_back(w, cut);
                int left = popcount(avail[size_t(w)]);
                if (left < m) return false;
                if (left == m) queue.push_back({w, avail[size_t(w)]});
            }
        }
        return true;
    }

    void undo(size_t trail_mark, size_t assign_mark, Mask used_before) {
        while (trail.size() > trail_mark) {
            auto [w, cut] = trail.back();
            trail.pop_back();
            avail[size_t(w)] |= cut;
        }
        while (assign_trail.size() > assign_mark) {
            int u = assign_trail.back();
            assign_trail.pop_back();
            assigned[size_t(u)] = 0;
            --placed;
        }
        used_colors = used_before;
    }

    /// All m-subsets of pool, least-constraining first: ascending total
    /// overlap with uncolored neighbours' availability, ties by numeric mask.
    std::vector<Mask> candidates(int v) const {
        Mask pool = avail[size_t(v)];
        int p = popcount(pool);
        std::vector<int> cols;
        for (Mask t = pool; t; t &= t - 1) cols.push_back(lowest_bit(t));
        std::vector<Mask> subs;
        for (Mask pick = first_k_subset(m); pick && popcount(pick) == m;
             pick = next_k_subset(pick, p)) {
            Mask s = 0;
            for (Mask t = pick; t; t &= t - 1) s |= bit(cols[size_t(lowest_bit(t))]);
            // Unused colors are interchangeable: fresh colors must be the
            // lowest unused ones or the set is a symmetric duplicate.
            Mask fresh = s & ~used_colors;
            if (fresh != lowest_bits_of(palette & ~used_colors, popcount(fresh))) continue;
            subs.push_back(s);
        }
        std::stable_sort(subs.begin(), subs.end(), [&](Mask a, Mask b) {
            int ca = 0, cb = 0;
            for (int w = g.neighbors(v).first(); w != -1; w = g.neighbors(v).next_after(w)) {
                if (assigned[size_t(w)]) continue;
                ca += popcount(a & avail[size_t(w)]);
                cb += popcount(b & avail[size_t(w)]);
            }
            if (ca != cb) return ca < cb;
            return a < b;
        });
        return subs;
    }

    bool solve() {
        if (++nodes > budget) throw BudgetExhausted("multicoloring search exceeded its node budget");
        if (placed == n_vertices) return true;
        // Fewest available colors first; ties by degree then index.
        int v = -1;
        for (int u = 0; u < n_vertices; ++u) {
            if (assigned[size_t(u)]) continue;
            if (v == -1 || popcount(avail[size_t(u)]) < popcount(avail[size_t(v)]) ||
                (popcount(avail[size_t(u)]) == popcount(avail[size_t(v)]) &&
                 (g.degree(u) > g.degree(v) || (g.degree(u) == g.degree(v) && u < v))))
                v = u;
        }
        for (Mask s : candidates(v)) {
            size_t tm = trail.size(), am = assign_trail.size();
            Mask ub = used_colors;
            if (assign(v, s) && solve()) return true;
            undo(tm, am, ub);
        }
        return false;
    }
};

} // namespace

std::optional<Multicoloring> multicoloring_exists(const Graph& g, int m, int n,
                                                  const SolveLimits& limits) {
    if (m < 1 || n < m) throw InputError("need n >= m >= 1 for an m-fold n-coloring");
    if (n > 64) throw CapacityError("multicoloring palette capped at 64 colors");
    const int nv = g.num_vertices();
    if (nv > limits.vertex_cap)
        throw CapacityError("multicoloring solver capped at " + std::to_string(limits.vertex_cap) + " vertices");

    Multicoloring mc;
    mc.m = m;
    mc.n = n;
    if (nv == 0) return mc;

    if (m == 1) {
        // Plain coloring in disguise; reuse the stronger dedicated solver.
        auto col = is_k_colorable(g, std::min(n, nv), limits);
        if (!col) return std::nullopt;
        mc.sets.resize(static_cast<size_t>(nv));
        for (int v = 0; v < nv; ++v) mc.sets[size_t(v)] = bit(col->color[size_t(v)]);
        return mc;
    }

    if (g.num_edges() == 0) {
        mc.sets.assign(static_cast<size_t>(nv), bit(m) - 1);
        return mc;
    }
    if (n < 2 * m) return std::nullopt; // two adjacent vertices alone need 2m colors

    MultiSolver solver(g, m, n, limits.node_budget);
    if (!solver.solve()) return std::nullopt;
    mc.sets = solver.assigned;
    if (!verify_multicoloring(g, mc))
        throw std::logic_error("internal error: solver produced an invalid multicoloring");
    return mc;
}

MultiChiResult multichromatic_number(const Graph& g, int m, const SolveLimits& limits) {
    if (m < 1) throw InputError("fold count must be positive");
    MultiChiResult r;
    const int nv = g.num_vertices();
    if (nv == 0) return r;
    if (g.num_edges() == 0) {
        r.lower = r.upper = m;
        r.witness = multicoloring_exists(g, m, m, limits);
        return r;
    }

    int lb = std::max(2 * m, clique_number(g) * m);
    // m disjoint copies of any proper coloring give an upper bound.
    Coloring greedy = greedy_coloring(g);
    int ub = greedy.k * m;

    r.lower = lb;
    r.upper = ub;
    for (int n = lb; n <= ub; ++n) {
        if (n > 64) throw CapacityError("multichromatic search ran past the 64-color palette cap");
        std::optional<Multicoloring> mc;
        try {
            mc = multicoloring_exists(g, m, n, limits);
        } catch (const BudgetExhausted&) {
            r.lower = n;
            r.upper = ub;
            if (!r.witness) {
                Multicoloring blocks;
                blocks.m = m;
                blocks.n = ub;
                blocks.sets.resize(static_cast<size_t>(nv));
                for (int v = 0; v < nv; ++v) {
                    Mask s = 0;
                    for (int j = 0; j < m; ++j) s |= bit(greedy.color[size_t(v)] * m + j);
                    blocks.sets[size_t(v)] = s;
                }
                r.witness = blocks;
            }
            return r;
        }
        if (mc) {
            r.lower = r.upper = n;
            r.witness = mc;
            return r;
        }
        r.lower = n + 1;
    }
    return r;
}

} // namespace altkg
