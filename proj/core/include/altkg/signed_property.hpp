#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "altkg/bits.hpp"
#include "altkg/hypergraph.hpp"

namespace altkg {

/// A superset-closed family of signed pairs (A, B) over a fixed ground
/// vertex list: if (A, B) is in the family then so is every (A', B') with
/// A' >= A and B' >= B.  Sides are passed as bitmasks over ground positions.
class SignedProperty {
public:
    virtual ~SignedProperty() = default;

    virtual std::string name() const = 0;
    virtual const std::vector<Vertex>& ground() const = 0;
    virtual bool contains(Mask plus, Mask minus) const = 0;

    int ground_size() const { return int(ground().size()); }

    /// Evaluate on explicit vertex sets (ids must belong to the ground list).
    bool contains_pair(const SignedPair& p) const;

    Mask mask_of(const std::vector<Vertex>& side) const;
};

/// (A, B) such that A or B contains some hyperedge of h.  The sign vectors
/// avoiding this family are exactly the ones feasible for the ALT number.
std::shared_ptr<SignedProperty> either_side_edge_property(Hypergraph h);

/// (A, B) such that both A and B contain some hyperedge of h.  Avoiding this
/// family is the SALT feasibility condition.
std::shared_ptr<SignedProperty> both_sides_edge_property(Hypergraph h);

/// (A, B) such that A contains some hyperedge of h (B unconstrained).
std::shared_ptr<SignedProperty> plus_side_edge_property(Hypergraph h);

/// (A, B) such that each side contains at least ceil(s/2) pairwise disjoint
/// s-stable k-subsets of [n].  Ground list is 1..n.
std::shared_ptr<SignedProperty> stable_disjoint_property(int n, int k, int s);

/// Spot-check superset closure with seeded random pairs; throws InputError
/// with the offending pair when a violation is found.
void check_superset_closed(const SignedProperty& p, std::uint64_t seed = 0xA17, int samples = 256);

} // namespace altkg
