#include "altkg/kneser.hpp"

#include <algorithm>
#include <string>

#include "altkg/errors.hpp"
#include "altkg/subsets.hpp"

namespace altkg {

namespace {

std::string edge_label(const std::vector<Vertex>& e) {
    std::string s = "{";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s + "}";
}

bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    // Both sorted ascending.
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

} // namespace

void validate_representation(const KneserRepresentation& rep) {
    const int m = rep.hypergraph.num_edges();
    if (rep.graph.num_vertices() != m)
        throw InputError("representation: graph order differs from hyperedge count");
    if (int(rep.vertex_map.size()) != m)
        throw InputError("representation: vertex_map length differs from hyperedge count");
    std::vector<bool> hit(size_t(m), false);
    for (int g : rep.vertex_map) {
        if (g < 0 || g >= m || hit[size_t(g)])
            throw InputError("representation: vertex_map is not a bijection");
        hit[size_t(g)] = true;
    }
    const auto& edges = rep.hypergraph.edges();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool dis = disjoint(edges[size_t(i)], edges[size_t(j)]);
            bool adj = rep.graph.adjacent(rep.vertex_map[size_t(i)], rep.vertex_map[size_t(j)]);
            if (dis != adj)
                throw InputError("representation: adjacency and disjointness disagree for hyperedges " +
                                 edge_label(edges[size_t(i)]) + " and " + edge_label(edges[size_t(j)]));
        }
    if (rep.order) rep.order->validate_for(rep.hypergraph);
}

KneserRepresentation kneser_graph(const Hypergraph& h) {
    const int m = h.num_edges();
    KneserRepresentation rep;
    rep.hypergraph = h;
    rep.graph = Graph(m);
    rep.vertex_map.resize(size_t(m));
    const auto& edges = h.edges();
    for (int i = 0; i < m; ++i) {
        rep.vertex_map[size_t(i)] = i;
        rep.graph.set_label(i, edge_label(edges[size_t(i)]));
        for (int j = i + 1; j < m; ++j)
            if (disjoint(edges[size_t(i)], edges[size_t(j)])) rep.graph.add_edge(i, j);
    }
    return rep;
}

KneserRepresentation kneser(int n, int k) {
    if (k < 1 || n < 2 * k) throw InputError("kneser(n, k) requires k >= 1 and n >= 2k");
    std::vector<Vertex> vs;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    std::vector<std::vector<Vertex>> edges;
    for (auto& s : k_subsets(n, k)) edges.push_back(s);
    return kneser_graph(Hypergraph(std::move(vs), std::move(edges)));
}

KneserRepresentation stable_kneser(int n, int k, int s) {
    if (k < 1 || s < 1 || n < s * k)
        throw InputError("stable_kneser(n, k, s) requires k, s >= 1 and n >= s*k");
    std::vector<Vertex> vs;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    std::vector<std::vector<Vertex>> edges;
    for (auto& sub : stable_k_subsets(n, k, s)) edges.push_back(sub);
    return kneser_graph(Hypergraph(std::move(vs), std::move(edges)));
}

KneserRepresentation schrijver(int n, int k) { return stable_kneser(n, k, 2); }

} // namespace altkg
