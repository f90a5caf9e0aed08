#pragma once

#include <optional>
#include <vector>

#include "altkg/bits.hpp"
#include "altkg/coloring.hpp"
#include "altkg/graph.hpp"

namespace altkg {

/// m-fold coloring from a palette of n colors: every vertex owns an m-subset
/// of {0..n-1}, adjacent vertices own disjoint subsets.
struct Multicoloring {
    int m = 0;
    int n = 0;
    std::vector<Mask> sets; // sets[v]: m bits out of the low n
};

bool verify_multicoloring(const Graph& g, const Multicoloring& mc);

/// Complete search for an m-fold n-coloring.  Palette capped at 64 colors.
/// Throws BudgetExhausted when the node budget runs out.
std::optional<Multicoloring> multicoloring_exists(const Graph& g, int m, int n,
                                                  const SolveLimits& limits = {});

struct MultiChiResult {
    int lower = 0;
    int upper = 0;
    bool exact() const { return lower == upper; }
    std::optional<Multicoloring> witness; // m-fold coloring with `upper` colors
};

/// Least palette size admitting an m-fold coloring, as an interval
/// (degenerate unless a budget ran out).
MultiChiResult multichromatic_number(const Graph& g, int m, const SolveLimits& limits = {});

} // namespace altkg
