#include "altkg/box_complex.hpp"

#include <algorithm>
#include <string>

#include "altkg/errors.hpp"

namespace altkg {

namespace {

constexpr int kBoxVertexCap = 12;

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<Mask> neighbor_masks(const Graph& g) {
    int n = g.num_vertices();
    std::vector<Mask> nbr(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbors(u).first(); v != -1; v = g.neighbors(u).next_after(v))
            nbr[static_cast<size_t>(u)] |= Mask{1} << v;
    return nbr;
}

/// cn[S] = vertices adjacent to everything in S; cn[0] = V.
std::vector<Mask> common_neighborhoods(const Graph& g, const std::vector<Mask>& nbr) {
    int n = g.num_vertices();
    std::vector<Mask> cn(size_t{1} << n);
    cn[0] = full_mask(n);
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        int low = lowest_bit(s);
        cn[s] = cn[s & (s - 1)] & nbr[static_cast<size_t>(low)];
    }
    return cn;
}

} // namespace

Z2SimplicialComplex::Z2SimplicialComplex(int ground_size, std::vector<BoxSimplex> facets)
    : n_(ground_size), facets_(std::move(facets)) {
    if (ground_size < 0 || ground_size > 63)
        throw InputError("complex ground size must be between 0 and 63");
    Mask full = full_mask(ground_size);
    for (const auto& f : facets_) {
        if ((f.first & ~full) || (f.second & ~full))
            throw InputError("facet mentions a vertex outside the ground set");
        if (f.first & f.second)
            throw InputError("facet places a vertex in both copies");
    }
    std::sort(facets_.begin(), facets_.end(), [](const BoxSimplex& a, const BoxSimplex& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
}

bool Z2SimplicialComplex::contains(const BoxSimplex& s) const {
    for (const auto& f : facets_)
        if (s.subset_of(f)) return true;
    return false;
}

bool Z2SimplicialComplex::involution_is_simplicial() const {
    for (const auto& f : facets_)
        if (!contains(swapped(f))) return false;
    return true;
}

bool Z2SimplicialComplex::involution_is_free() const {
    // (v,1) and (v,2) are distinct vertices of V x {1,2} for every v, so the
    // copy swap can only fix a vertex if the two copies were identified.
    // They never are; verify the structural reason on the facet list anyway:
    // a fixed vertex would need some v listed on both sides of one simplex.
    for (const auto& f : facets_)
        if (f.first & f.second) return false;
    return true;
}

int Z2SimplicialComplex::dimension() const {
    int dim = -1;
    for (const auto& f : facets_)
        dim = std::max(dim, popcount(f.first) + popcount(f.second) - 1);
    return dim;
}

bool box_simplex_valid(const Graph& g, const BoxSimplex& s, BoxComplexVariant variant) {
    int n = g.num_vertices();
    Mask full = full_mask(n);
    if ((s.first & ~full) || (s.second & ~full) || (s.first & s.second)) return false;
    auto nbr = neighbor_masks(g);
    auto cn_of = [&](Mask set) {
        Mask cn = full;
        for (Mask rest = set; rest; rest &= rest - 1)
            cn &= nbr[static_cast<size_t>(lowest_bit(rest))];
        return cn;
    };
    Mask cn_first = cn_of(s.first);
    if ((s.second & ~cn_first) != 0) return false;  // some pair across the sides not adjacent
    if (variant == BoxComplexVariant::B && (cn_first == 0 || cn_of(s.second) == 0)) return false;
    return true;
}

Z2SimplicialComplex box_complex(const Graph& g, BoxComplexVariant variant) {
    int n = g.num_vertices();
    if (n > kBoxVertexCap)
        throw CapacityError("box complex facet enumeration is exponential; graphs are capped at " +
                            std::to_string(kBoxVertexCap) + " vertices (got " + std::to_string(n) + ")");
    auto nbr = neighbor_masks(g);
    auto cn = common_neighborhoods(g, nbr);
    bool need_cn = variant == BoxComplexVariant::B;

    std::vector<BoxSimplex> facets;
    for (Mask a = 0; a < (Mask{1} << n); ++a) {
        Mask cna = cn[a];
        if (need_cn && cna == 0) continue;
        // Valid partners for side one: exactly the subsets of CN(A), which
        // also guarantees disjointness from a nonempty A.
        Mask b = cna;
        while (true) {
            if (!(need_cn && cn[b] == 0) && (a & b) == 0) {
                bool extendable = false;
                // Grow side one: v completes to all of B and (for B) keeps CN(A+v) nonempty.
                for (Mask cand = cn[b] & ~a; cand && !extendable; cand &= cand - 1) {
                    int v = lowest_bit(cand);
                    if (!need_cn || (cna & nbr[static_cast<size_t>(v)]) != 0) extendable = true;
                }
                // Grow side two symmetrically.
                for (Mask cand = cna & ~b; cand && !extendable; cand &= cand - 1) {
                    int v = lowest_bit(cand);
                    if (!need_cn || (cn[b] & nbr[static_cast<size_t>(v)]) != 0) extendable = true;
                }
                if (!extendable) facets.push_back(BoxSimplex{a, b});
            }
            if (b == 0) break;
            b = (b - 1) & cna;
        }
    }
    return Z2SimplicialComplex(n, std::move(facets));
}

bool is_simplicial_z2_map(const Z2SimplicialComplex& src, const Z2SimplicialComplex& dst,
                          const std::vector<int>& vertex_map) {
    if (static_cast<int>(vertex_map.size()) != src.ground_size())
        throw InputError("vertex map size does not match the source ground set");
    for (int image : vertex_map)
        if (image < 0 || image >= dst.ground_size())
            throw InputError("vertex map image " + std::to_string(image) + " outside the target ground set");
    for (const auto& f : src.facets()) {
        BoxSimplex image;
        for (Mask rest = f.first; rest; rest &= rest - 1)
            image.first |= Mask{1} << vertex_map[static_cast<size_t>(lowest_bit(rest))];
        for (Mask rest = f.second; rest; rest &= rest - 1)
            image.second |= Mask{1} << vertex_map[static_cast<size_t>(lowest_bit(rest))];
        if (image.first & image.second) return false;  // sides collide: not a simplex
        if (!dst.contains(image)) return false;
    }
    return true;
}

} // namespace altkg
