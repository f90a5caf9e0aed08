#pragma once

#include <optional>
#include <vector>

#include "altkg/graph.hpp"
#include "altkg/hypergraph.hpp"

namespace altkg {

/// A hypergraph together with the graph it represents: graph vertices
/// correspond to hyperedges (via vertex_map: edge index -> graph vertex)
/// and adjacency is hyperedge disjointness.  `order`, when present, is the
/// vertex order a certificate search should use.
struct KneserRepresentation {
    Hypergraph hypergraph;
    Graph graph;
    std::vector<int> vertex_map;
    std::optional<LinearOrder> order;
};

/// Check the defining property: vertex_map is a bijection from hyperedges to
/// graph vertices under which adjacency means disjointness.  Throws InputError.
void validate_representation(const KneserRepresentation& rep);

/// The general Kneser graph of h: one graph vertex per hyperedge, adjacent
/// when the hyperedges are disjoint.  Labels record the hyperedge contents.
KneserRepresentation kneser_graph(const Hypergraph& h);

/// KG(n, k): hypergraph ([n], all k-subsets in lexicographic order) plus its
/// Kneser graph.  Requires n >= 2k, k >= 1.
KneserRepresentation kneser(int n, int k);

/// KG(n, k)_s: only the s-stable k-subsets (cyclically: every pairwise
/// distance d satisfies s <= d <= n - s).  Requires n >= s * k.
KneserRepresentation stable_kneser(int n, int k, int s);

/// SG(n, k) = KG(n, k)_2, the Schrijver graph.
KneserRepresentation schrijver(int n, int k);

} // namespace altkg
