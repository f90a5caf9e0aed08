#include "altkg/constructions.hpp"

#include <set>
#include <string>

#include "altkg/errors.hpp"

namespace altkg {

Graph mycielskian(const Graph& g) {
    const int n = g.num_vertices();
    Graph m(2 * n + 1);
    for (int u = 0; u < n; ++u) {
        m.set_label(u, g.label(u));
        m.set_label(n + u, g.label(u) + "'");
    }
    m.set_label(2 * n, "root");
    for (auto [u, v] : g.edge_list()) {
        m.add_edge(u, v);
        m.add_edge(u, n + v); // twin of v sees original neighbors of v
        m.add_edge(v, n + u);
    }
    for (int u = 0; u < n; ++u) m.add_edge(2 * n, n + u);
    return m;
}

Graph blow_up(const Graph& g, const std::vector<int>& r, const std::vector<int>& mu) {
    const int n = g.num_vertices();
    if (int(r.size()) != n || int(mu.size()) != n)
        throw InputError("blow_up: r and mu must list every vertex exactly once");
    {
        std::set<int> seen(mu.begin(), mu.end());
        if (int(seen.size()) != n || *seen.begin() < 0 || *seen.rbegin() >= n)
            throw InputError("blow_up: mu is not a permutation of the vertex set");
    }
    int total = 0;
    for (int c : r) {
        if (c < 1) throw InputError("blow_up: every multiplicity must be >= 1");
        total += c;
    }
    // first_copy[v]: index of the first copy of original vertex v.
    std::vector<int> first_copy(size_t(n), 0), copies(size_t(n), 0);
    int at = 0;
    for (int i = 0; i < n; ++i) {
        int v = mu[size_t(i)];
        first_copy[size_t(v)] = at;
        copies[size_t(v)] = r[size_t(i)];
        at += r[size_t(i)];
    }
    Graph b(total);
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < copies[size_t(v)]; ++c)
            b.set_label(first_copy[size_t(v)] + c, g.label(v) + "#" + std::to_string(c + 1));
    for (auto [u, v] : g.edge_list())
        for (int cu = 0; cu < copies[size_t(u)]; ++cu)
            for (int cv = 0; cv < copies[size_t(v)]; ++cv)
                b.add_edge(first_copy[size_t(u)] + cu, first_copy[size_t(v)] + cv);
    return b;
}

Graph categorical_product(const Graph& g, const Graph& h) {
    const int ng = g.num_vertices(), nh = h.num_vertices();
    Graph p(ng * nh);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v)
            p.set_label(u * nh + v, "(" + g.label(u) + "," + h.label(v) + ")");
    for (auto [u, u2] : g.edge_list())
        for (auto [v, v2] : h.edge_list()) {
            p.add_edge(u * nh + v, u2 * nh + v2);
            p.add_edge(u * nh + v2, u2 * nh + v);
        }
    return p;
}

LinearOrder concat_order(const LinearOrder& sigma, const LinearOrder& tau) {
    std::set<Vertex> support(sigma.order.begin(), sigma.order.end());
    if (support.size() != sigma.order.size()) throw InputError("concat_order: first order repeats a vertex");
    for (Vertex v : tau.order)
        if (!support.insert(v).second)
            throw InputError("concat_order: orders share vertex id " + std::to_string(v));
    std::vector<Vertex> out = sigma.order;
    out.insert(out.end(), tau.order.begin(), tau.order.end());
    return LinearOrder(std::move(out));
}

} // namespace altkg
