#pragma once

#include <optional>
#include <vector>

#include "altkg/graph.hpp"

namespace altkg {

/// Search for an isomorphism a -> b.  Returns the vertex mapping when one
/// exists.  Backtracking over refinement classes (degree + iterated
/// neighborhood profile); fine at the few dozen vertices used here, hence
/// the cap.
std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b, int cap = 64);

} // namespace altkg
