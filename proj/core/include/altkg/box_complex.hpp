#pragma once

#include <vector>

#include "altkg/bits.hpp"
#include "altkg/graph.hpp"

namespace altkg {

/// A simplex of a two-copy complex: `first` holds the graph vertices placed
/// in copy 1, `second` those in copy 2 (bitmasks over 0..n-1).  The two
/// sides are disjoint as graph-vertex sets.
struct BoxSimplex {
    Mask first = 0;
    Mask second = 0;

    bool operator==(const BoxSimplex& o) const { return first == o.first && second == o.second; }
    bool subset_of(const BoxSimplex& o) const {
        return (first & ~o.first) == 0 && (second & ~o.second) == 0;
    }
};

/// Free Z2-simplicial complex on two copies of a graph's vertex set.  The
/// simplicial family is the downward closure of an explicit facet list; the
/// involution is the copy swap (v,1) <-> (v,2), which fixes no vertex.
class Z2SimplicialComplex {
public:
    Z2SimplicialComplex(int ground_size, std::vector<BoxSimplex> facets);

    int ground_size() const { return n_; }
    const std::vector<BoxSimplex>& facets() const { return facets_; }

    /// Membership in the hereditary closure: is s below some facet?
    bool contains(const BoxSimplex& s) const;

    /// Involution image of a simplex (swap the two copies).
    static BoxSimplex swapped(const BoxSimplex& s) { return BoxSimplex{s.second, s.first}; }

    /// The copy swap maps every simplex to a simplex.
    bool involution_is_simplicial() const;

    /// The copy swap moves every vertex of the complex ((v,1) vs (v,2)).
    bool involution_is_free() const;

    /// Largest facet size minus one, or -1 for the void complex.
    int dimension() const;

private:
    int n_;
    std::vector<BoxSimplex> facets_;
};

enum class BoxComplexVariant {
    B,   ///< sides complete to each other and both common neighborhoods nonempty
    B0,  ///< sides complete to each other
};

/// Does A (+) B satisfy the simplex condition of the chosen variant?
/// B0: A and B disjoint and every a in A adjacent to every b in B.
/// B : additionally CN(A) and CN(B) are both nonempty, where CN(S) is the
///     set of vertices adjacent to all of S (CN(empty) = V).
bool box_simplex_valid(const Graph& g, const BoxSimplex& s, BoxComplexVariant variant);

/// Box complex of a graph: all valid (A, B) pairs, listed by their facets.
/// Enumerates complete-bipartite pairs with common neighborhoods memoized
/// over subsets; a pair is a facet when no single-vertex extension on either
/// side stays valid.  Exponential in |V(G)|: capped at 12 vertices.
Z2SimplicialComplex box_complex(const Graph& g, BoxComplexVariant variant);

/// Does the ground-set map vertex_map (so (v,i) -> (vertex_map[v], i), which
/// commutes with the copy swaps by construction) send every simplex of src
/// into dst?  A map image with overlapping sides is not a simplex.
bool is_simplicial_z2_map(const Z2SimplicialComplex& src, const Z2SimplicialComplex& dst,
                          const std::vector<int>& vertex_map);

} // namespace altkg
