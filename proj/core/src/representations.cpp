#include "altkg/representations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "altkg/constructions.hpp"
#include "altkg/errors.hpp"
#include "altkg/subsets.hpp"

namespace altkg {

namespace {

void require_vertex_range(const Hypergraph& h, const char* who) {
    std::vector<Vertex> sorted = h.vertices();
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < int(sorted.size()); ++i)
        if (sorted[size_t(i)] != i + 1)
            throw InputError(std::string(who) + " requires the vertex set {1..n}");
}

} // namespace

OrderedRepresentation schrijver_interleaved_representation(int param, SchrijverOrderVariant variant) {
    int n_real = 0;          // real vertices 1..n_real
    std::vector<int> s;      // real vertex at interleave slot j (1-based list)
    int k_edges = 2;         // edge size
    switch (variant) {
        case SchrijverOrderVariant::TWO_SUBSETS_EVEN: {
            if (param < 4 || param % 2 != 0)
                throw InputError("even two-subset variant needs even n >= 4");
            int t = param / 2;
            n_real = 2 * t;
            for (int i = 1; i <= t; ++i) {
                s.push_back(i);
                s.push_back(t + i);
            }
            break;
        }
        case SchrijverOrderVariant::TWO_SUBSETS_ODD: {
            if (param < 5 || param % 2 != 1)
                throw InputError("odd two-subset variant needs odd n >= 5");
            int t = (param - 1) / 2;
            n_real = 2 * t + 1;
            for (int i = 1; i <= t; ++i) {
                s.push_back(t + i);
                s.push_back(i);
            }
            s.push_back(2 * t + 1);
            break;
        }
        case SchrijverOrderVariant::HALF_KNESER: {
            if (param < 1) throw InputError("half-Kneser variant needs k >= 1");
            int k = param;
            n_real = 2 * k + 1;
            k_edges = k;
            for (int j = 1; j <= k + 1; ++j) s.push_back(2 * j - 1);
            for (int i = 1; i <= k; ++i) s.push_back(2 * i);
            break;
        }
    }

    std::vector<Vertex> vertices(static_cast<size_t>(2 * n_real));
    std::iota(vertices.begin(), vertices.end(), 1);
    std::vector<std::vector<Vertex>> edges = stable_k_subsets(n_real, k_edges, 2);

    std::vector<Vertex> order;
    order.reserve(size_t(2 * n_real));
    for (int j = 0; j < n_real; ++j) {
        order.push_back(s[size_t(j)]);
        order.push_back(n_real + j + 1); // a_{j+1}
    }

    OrderedRepresentation rep;
    rep.hypergraph = Hypergraph(std::move(vertices), std::move(edges));
    rep.order = LinearOrder(std::move(order));
    rep.order.validate_for(rep.hypergraph);
    return rep;
}

MycielskiLift mycielski_representation(const Hypergraph& f, const LinearOrder& sigma, int t) {
    if (t < 1) throw InputError("Mycielski lift needs t >= 1");
    sigma.validate_for(f);
    require_vertex_range(f, "Mycielski lift");
    if (f.num_edges() == 0) throw InputError("Mycielski lift needs at least one hyperedge");

    const int n = f.num_vertices();
    const int m = f.num_edges();
    const int w = 2 * t + 1;
    auto a_id = [&](int i, int j) { return n + (i - 1) * w + j; };         // 1<=i<=m, 1<=j<=w
    auto b_id = [&](int j) { return n + m * w + j; };                      // 1<=j<=w
    auto c_id = [&](int l) { return n + m * w + w + l; };                  // 1<=l<=w*(m-1)

    const int total = n + 2 * m * w;
    std::vector<Vertex> vertices(static_cast<size_t>(total));
    std::iota(vertices.begin(), vertices.end(), 1);

    std::vector<std::vector<Vertex>> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= w; ++j) {
            auto e = f.edges()[size_t(i - 1)];
            e.push_back(a_id(i, j));
            edges.push_back(std::move(e));
        }
    auto b_subsets = k_subsets(w, t + 1); // lexicographic; fixes the twin copy order
    for (int i = 1; i <= m; ++i)
        for (const auto& sub : b_subsets) {
            auto e = f.edges()[size_t(i - 1)];
            for (int j : sub) e.push_back(b_id(j));
            edges.push_back(std::move(e));
        }
    {
        std::vector<Vertex> all_a;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= w; ++j) all_a.push_back(a_id(i, j));
        edges.push_back(std::move(all_a));
    }

    MycielskiLift lift;
    lift.hypergraph = Hypergraph(std::move(vertices), std::move(edges));

    std::vector<Vertex> tau;
    for (int j = 1; j <= w; ++j) {
        for (int i = 1; i < m; ++i) {
            tau.push_back(a_id(i, j));
            tau.push_back(c_id((j - 1) * (m - 1) + i));
        }
        tau.push_back(a_id(m, j));
        tau.push_back(b_id(j));
    }
    lift.tau = LinearOrder(tau);
    lift.order = concat_order(lift.tau, sigma);
    lift.order.validate_for(lift.hypergraph);

    const int l = int(b_subsets.size());
    lift.multiplicities.assign(static_cast<size_t>(m), w);
    lift.multiplicities.insert(lift.multiplicities.end(), static_cast<size_t>(m), l);
    lift.multiplicities.push_back(1);

    Graph base = mycielskian(kneser_graph(f).graph);
    std::vector<int> mu(static_cast<size_t>(base.num_vertices()));
    std::iota(mu.begin(), mu.end(), 0);
    lift.blown_mycielskian = blow_up(base, lift.multiplicities, mu);

    // The hyperedge blocks were laid out to mirror the blow-up's copy
    // groups, so the two graphs must agree vertex for vertex.
    if (!(kneser_graph(lift.hypergraph).graph == lift.blown_mycielskian))
        throw std::logic_error("internal error: Mycielski lift does not match its blow-up");
    return lift;
}

ProductRepresentation product_representation(const Hypergraph& hg, const Hypergraph& hh) {
    ProductRepresentation pr;
    pr.left_size = hg.num_vertices();
    pr.right_size = hh.num_vertices();
    int next = 1;
    for (Vertex v : hg.vertices()) pr.left_map[v] = next++;
    for (Vertex v : hh.vertices()) pr.right_map[v] = next++;

    std::vector<Vertex> vertices(static_cast<size_t>(pr.left_size + pr.right_size));
    std::iota(vertices.begin(), vertices.end(), 1);

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(size_t(hg.num_edges()) * size_t(hh.num_edges()));
    for (const auto& a : hg.edges())
        for (const auto& b : hh.edges()) {
            std::vector<Vertex> e;
            e.reserve(a.size() + b.size());
            for (Vertex v : a) e.push_back(pr.left_map.at(v));
            for (Vertex v : b) e.push_back(pr.right_map.at(v));
            edges.push_back(std::move(e));
        }
    pr.hypergraph = Hypergraph(std::move(vertices), std::move(edges));
    return pr;
}

LinearOrder relabel_order(const LinearOrder& order, const std::map<int, int>& map) {
    std::vector<Vertex> out;
    out.reserve(size_t(order.size()));
    for (Vertex v : order.order) {
        auto it = map.find(v);
        if (it == map.end())
            throw InputError("relabeling map is missing vertex id " + std::to_string(v));
        out.push_back(it->second);
    }
    return LinearOrder(std::move(out));
}

OrderedRepresentation extend_representation_isolated(const Hypergraph& h, const LinearOrder& sigma) {
    sigma.validate_for(h);
    require_vertex_range(h, "isolated-vertex extension");
    const int n = h.num_vertices();

    std::vector<Vertex> vertices(static_cast<size_t>(n + 1));
    std::iota(vertices.begin(), vertices.end(), 1);
    auto edges = h.edges();
    std::vector<Vertex> full(static_cast<size_t>(n + 1));
    std::iota(full.begin(), full.end(), 1);
    edges.push_back(std::move(full));

    OrderedRepresentation out;
    out.hypergraph = Hypergraph(std::move(vertices), std::move(edges));
    auto ord = sigma.order;
    ord.push_back(n + 1);
    out.order = LinearOrder(std::move(ord));
    return out;
}

OrderedRepresentation extend_representation_edge(const Hypergraph& h, const LinearOrder& sigma,
                                                 int a, int b) {
    sigma.validate_for(h);
    if (a < 0 || a >= h.num_edges() || b < 0 || b >= h.num_edges() || a == b)
        throw InputError("edge extension needs two distinct hyperedge indices");
    std::vector<Vertex> shared;
    std::set_intersection(h.edges()[size_t(a)].begin(), h.edges()[size_t(a)].end(),
                          h.edges()[size_t(b)].begin(), h.edges()[size_t(b)].end(),
                          std::back_inserter(shared));
    if (shared.empty())
        throw InputError("hyperedges are already disjoint; their Kneser vertices are adjacent");

    Vertex max_id = *std::max_element(h.vertices().begin(), h.vertices().end());
    std::vector<Vertex> vertices = h.vertices();
    auto edges = h.edges();
    std::vector<Vertex> order = sigma.order;

    for (size_t i = 0; i < shared.size(); ++i) {
        Vertex y = shared[i];
        Vertex y_new = max_id + 2 * int(i) + 1; // replaces y inside edge a
        Vertex z = max_id + 2 * int(i) + 2;     // isolated order padding
        vertices.push_back(y_new);
        vertices.push_back(z);
        for (size_t e = 0; e < edges.size(); ++e) {
            bool has_y = std::binary_search(edges[e].begin(), edges[e].end(), y);
            if (!has_y) continue;
            if (int(e) == a) {
                edges[e].erase(std::find(edges[e].begin(), edges[e].end(), y));
                edges[e].push_back(y_new);
                std::sort(edges[e].begin(), edges[e].end());
            } else if (int(e) != b) {
                edges[e].push_back(y_new);
                std::sort(edges[e].begin(), edges[e].end());
            }
        }
        auto pos = std::find(order.begin(), order.end(), y);
        pos = order.insert(pos + 1, z);
        order.insert(pos + 1, y_new);
    }

    OrderedRepresentation out;
    out.hypergraph = Hypergraph(std::move(vertices), std::move(edges));
    out.order = LinearOrder(std::move(order));
    out.order.validate_for(out.hypergraph);
    return out;
}

} // namespace altkg
