#pragma once

#include <map>
#include <utility>
#include <vector>

#include "altkg/graph.hpp"
#include "altkg/hypergraph.hpp"
#include "altkg/kneser.hpp"

namespace altkg {

/// A hypergraph together with a distinguished ordering of its vertices --
/// the raw material of an alternation certificate.
struct OrderedRepresentation {
    Hypergraph hypergraph;
    LinearOrder order;
};

/// Which interleaved Schrijver representation to build.
///   TWO_SUBSETS_EVEN: SG(n,2), n = 2t even;   ALT bound n-2 on 4t vertices.
///   TWO_SUBSETS_ODD : SG(n,2), n = 2t+1 odd;  ALT bound n-2 on 4t+2 vertices.
///   HALF_KNESER     : SG(2k+1,k);             ALT bound 3 on 4k+2 vertices.
enum class SchrijverOrderVariant { TWO_SUBSETS_EVEN, TWO_SUBSETS_ODD, HALF_KNESER };

/// Representation of a Schrijver graph padded with one isolated vertex per
/// real vertex, interleaved into the ordering so that the plain alternation
/// bound |V| - alt becomes tight.  `param` is n for the two-subset variants
/// and k for HALF_KNESER.  Vertices 1..n are real, n+j is the j-th isolated
/// pad (written a_j below).
///
/// TWO_SUBSETS_EVEN (n = 2t):  sigma = s_1 a_1 s_2 a_2 ... s_{2t} a_{2t}
///   with s_{2i-1} = i, s_{2i} = t+i.
/// TWO_SUBSETS_ODD (n = 2t+1): s_{2i-1} = t+i, s_{2i} = i for i <= t, and
///   s_{2t+1} = 2t+1.
/// HALF_KNESER (n = 2k+1):     s_j = 2j-1 for j <= k+1, s_{k+1+i} = 2i.
OrderedRepresentation schrijver_interleaved_representation(int param, SchrijverOrderVariant variant);

/// Everything produced by the Mycielski lift of a representation.
struct MycielskiLift {
    Hypergraph hypergraph;   // padded representation of the blown-up Mycielskian
    LinearOrder order;       // pi = tau || sigma
    LinearOrder tau;         // interleaved prefix covering the new vertices
    std::vector<int> multiplicities; // blow-up vector r
    Graph blown_mycielskian; // blow_up(mycielskian(KG(f)), r, natural order)
};

/// Lift a representation f (vertex set [n], edges A_1..A_m, ordering sigma)
/// to one of the (r,mu)-blow-up of M(KG(f)):
///   - per edge A_i and 1 <= j <= 2t+1, hyperedge A_{i,j} = A_i + fresh a_{i,j};
///   - per edge A_i and each (t+1)-subset S of fresh {b_1..b_{2t+1}},
///     hyperedge A_i + S (the twins);
///   - the single hyperedge of all a's (the root);
///   - (2t+1)(m-1) fresh isolated c's, interleaved with the a's in tau.
/// r gives each original multiplicity 2t+1, each twin C(2t+1,t+1), root 1.
/// Construction guarantees KG(hypergraph) equals blown_mycielskian vertex
/// for vertex (checked; logic_error if violated).
MycielskiLift mycielski_representation(const Hypergraph& f, const LinearOrder& sigma, int t);

/// Representation of KG(hg) x KG(hh): relabel the two vertex sets onto
/// [1..n] and [n+1..n+m], then take one hyperedge A ∪ B per edge pair.
struct ProductRepresentation {
    Hypergraph hypergraph;       // on [n+m]
    std::map<int, int> left_map; // original hg vertex -> new id
    std::map<int, int> right_map;
    int left_size = 0;
    int right_size = 0;
};

ProductRepresentation product_representation(const Hypergraph& hg, const Hypergraph& hh);

/// Rewrite an ordering through a relabeling map.
LinearOrder relabel_order(const LinearOrder& order, const std::map<int, int>& map);

/// Add one isolated Kneser vertex: new hypergraph vertex n+1, one new
/// hyperedge {1..n+1} (meets every old edge), n+1 appended to sigma.
/// Requires the vertex set to be exactly [n].  alt can grow by at most 1.
OrderedRepresentation extend_representation_isolated(const Hypergraph& h, const LinearOrder& sigma);

/// Make the Kneser vertices of two intersecting hyperedges adjacent:
/// for each shared element y, a fresh y' replaces y in edge `a`, joins every
/// other edge containing y, and the ordering grows y -> y < z < y' with z a
/// fresh isolated vertex.  Result represents KG(h) plus the edge {a,b};
/// alt can grow by at most 2|A ∩ B|.  `a`, `b` are edge indices.
OrderedRepresentation extend_representation_edge(const Hypergraph& h, const LinearOrder& sigma,
                                                 int a, int b);

} // namespace altkg
