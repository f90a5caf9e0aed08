#pragma once

#include <optional>
#include <vector>

#include "altkg/coloring.hpp"
#include "altkg/graph.hpp"

namespace altkg {

/// Does f map every edge of g to an edge of h?
bool verify_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& f);

/// Complete search for an edge-preserving map V(g) -> V(h): arc-consistency
/// filtering plus smallest-domain-first backtracking.  Capped at
/// |V(g)|*|V(h)| <= 20000.  Throws BudgetExhausted when the node budget
/// runs out.
std::optional<std::vector<int>> has_homomorphism(const Graph& g, const Graph& h,
                                                 const SolveLimits& limits = {});

/// Homomorphisms both ways; the relation behind "blow-ups do not change the
/// chromatic number".
bool homomorphically_equivalent(const Graph& g, const Graph& h, const SolveLimits& limits = {});

} // namespace altkg
