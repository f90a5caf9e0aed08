#pragma once

#include <vector>

#include "altkg/graph.hpp"
#include "altkg/hypergraph.hpp"

namespace altkg {

/// Mycielskian M(G).  Vertex layout: originals 0..n-1, twin of vertex i at
/// n+i, root at 2n.  Twin i is adjacent to the original neighbors of i; the
/// root is adjacent to every twin.  Labels: original names kept, twins get
/// a ' suffix, the root is "root".
Graph mycielskian(const Graph& g);

/// Blow-up G(r, mu): vertex mu(i) is replaced by r[i] mutually nonadjacent
/// copies; copies inherit all original adjacencies (complete bipartite
/// between copy groups of adjacent vertices).  Output vertices are grouped
/// by mu order, copies consecutive.  Every r[i] must be >= 1.
Graph blow_up(const Graph& g, const std::vector<int>& r, const std::vector<int>& mu);

/// Categorical (tensor) product: (u, v) adjacent to (u', v') when u~u' in g
/// and v~v' in h.  Vertex (u, v) sits at index u * h.num_vertices() + v.
Graph categorical_product(const Graph& g, const Graph& h);

/// Concatenate two orders over disjoint vertex sets: sigma first, then tau.
LinearOrder concat_order(const LinearOrder& sigma, const LinearOrder& tau);

} // namespace altkg
