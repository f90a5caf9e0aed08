#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "altkg/bits.hpp"
#include "altkg/errors.hpp"
#include "altkg/sign.hpp"

namespace altkg {

using Vertex = int;

/// A finite hypergraph with no isolated-vertex restriction and no multiple
/// edges.  Vertex ids are arbitrary ints; the listed order of `vertices` is
/// the hypergraph's natural order.  Each edge is stored sorted ascending;
/// the listed order of `edges` is significant (it fixes the vertex order of
/// the general Kneser graph built on top).
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::vector<Vertex> vertices, std::vector<std::vector<Vertex>> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        for (auto& e : edges_) std::sort(e.begin(), e.end());
        validate();
        build_index();
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
    int num_vertices() const { return int(vertices_.size()); }
    int num_edges() const { return int(edges_.size()); }

    bool has_vertex(Vertex v) const { return index_.count(v) != 0; }

    /// Dense position of v in the natural order (0-based).
    int index_of(Vertex v) const {
        auto it = index_.find(v);
        if (it == index_.end())
            throw InputError("unknown vertex id " + std::to_string(v));
        return it->second;
    }

    /// Edge masks over natural-order positions.  Requires <= 64 vertices.
    std::vector<Mask> edge_masks() const {
        if (num_vertices() > 64)
            throw CapacityError("bitmask operations support at most 64 vertices");
        std::vector<Mask> masks;
        masks.reserve(edges_.size());
        for (const auto& e : edges_) {
            Mask m = 0;
            for (Vertex v : e) m |= bit(index_of(v));
            masks.push_back(m);
        }
        return masks;
    }

    bool operator==(const Hypergraph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    void validate() const {
        std::set<Vertex> seen(vertices_.begin(), vertices_.end());
        if (seen.size() != vertices_.size())
            throw InputError("duplicate vertex id in hypergraph");
        std::set<std::vector<Vertex>> edge_sets;
        for (const auto& e : edges_) {
            if (e.empty()) throw InputError("empty hyperedge");
            for (size_t i = 0; i + 1 < e.size(); ++i)
                if (e[i] == e[i + 1]) throw InputError("repeated vertex inside a hyperedge");
            for (Vertex v : e)
                if (!seen.count(v))
                    throw InputError("hyperedge uses unknown vertex id " + std::to_string(v));
            if (!edge_sets.insert(e).second)
                throw InputError("duplicate hyperedge");
        }
    }

    void build_index() {
        index_.reserve(vertices_.size());
        for (size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = int(i);
    }

    std::vector<Vertex> vertices_;
    std::vector<std::vector<Vertex>> edges_;
    std::unordered_map<Vertex, int> index_;
};

/// A linear order on the vertex set of some hypergraph: order[0] is smallest.
struct LinearOrder {
    std::vector<Vertex> order;

    LinearOrder() = default;
    explicit LinearOrder(std::vector<Vertex> o) : order(std::move(o)) {}

    int size() const { return int(order.size()); }
    Vertex at(int pos) const { return order.at(size_t(pos)); }

    /// Check that this is a permutation of h's vertex set.
    void validate_for(const Hypergraph& h) const {
        if (int(order.size()) != h.num_vertices())
            throw InputError("order length does not match vertex count");
        std::set<Vertex> seen;
        for (Vertex v : order) {
            if (!h.has_vertex(v)) throw InputError("order mentions unknown vertex id " + std::to_string(v));
            if (!seen.insert(v).second) throw InputError("order repeats vertex id " + std::to_string(v));
        }
    }

    static LinearOrder natural(const Hypergraph& h) { return LinearOrder(h.vertices()); }
};

/// The two sides of a signed split: subsets of a vertex set, kept sorted.
struct SignedPair {
    std::vector<Vertex> plus;
    std::vector<Vertex> minus;
};

/// Split a sign vector along an order: plus collects positions signed +1,
/// minus the positions signed -1.
inline SignedPair signed_split(const SignVector& x, const LinearOrder& sigma) {
    if (x.size() != sigma.size())
        throw InputError("sign vector length does not match order length");
    SignedPair p;
    for (int j = 0; j < x.size(); ++j) {
        if (x.x[size_t(j)] > 0) p.plus.push_back(sigma.at(j));
        else if (x.x[size_t(j)] < 0) p.minus.push_back(sigma.at(j));
    }
    std::sort(p.plus.begin(), p.plus.end());
    std::sort(p.minus.begin(), p.minus.end());
    return p;
}

/// Does the vertex set `s` contain some hyperedge of h?
inline bool contains_edge(const Hypergraph& h, const std::vector<Vertex>& s) {
    std::set<Vertex> in(s.begin(), s.end());
    for (const auto& e : h.edges()) {
        bool all = true;
        for (Vertex v : e)
            if (!in.count(v)) { all = false; break; }
        if (all) return true;
    }
    return false;
}

} // namespace altkg
