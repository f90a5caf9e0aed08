#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "altkg/graph.hpp"

namespace altkg {

struct Coloring {
    int k = 0;                // number of colors made available
    std::vector<int> color;   // color[v] in [0, k)
};

/// Is the assignment proper and within range?
bool verify_coloring(const Graph& g, const Coloring& c);

struct SolveLimits {
    /// Backtracking node budget; exceeded => BudgetExhausted.  The default is
    /// high enough that every instance in the test suites completes; budgets
    /// are node counts (not wall time) so results never depend on machine
    /// speed or thread scheduling.
    std::uint64_t node_budget = 2'000'000'000ULL;
    /// Vertex cap; larger graphs throw CapacityError.  Instance-dependent:
    /// callers that know their graphs raise it explicitly.
    int vertex_cap = 120;
};

/// Complete search: a proper k-coloring, or nullopt when none exists.
/// Exact k=2 is a bipartiteness check; otherwise DSATUR-ordered backtracking
/// with forward checking and unit propagation, seeded with a maximum clique.
/// Throws BudgetExhausted when the node budget runs out.
std::optional<Coloring> is_k_colorable(const Graph& g, int k, const SolveLimits& limits = {});

/// Chromatic number as an interval; lower == upper unless the budget ran out.
struct ChiResult {
    int lower = 0;
    int upper = 0;
    bool exact() const { return lower == upper; }
    std::optional<Coloring> witness; // proper coloring with `upper` colors
};

ChiResult chromatic_number(const Graph& g, const SolveLimits& limits = {});

/// Exact clique number (branch and bound with a greedy coloring bound).
int clique_number(const Graph& g);
std::vector<int> max_clique(const Graph& g);

/// DSATUR heuristic coloring (upper bound; no backtracking).
Coloring greedy_coloring(const Graph& g);

} // namespace altkg
