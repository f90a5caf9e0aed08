#pragma once

#include <cstdlib>
#include <vector>

#include "altkg/bits.hpp"
#include "altkg/errors.hpp"

namespace altkg {

/// All k-subsets of {1..n} in lexicographic order of the sorted tuples.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    if (k < 0 || k > n) return {};
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[size_t(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[size_t(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[size_t(i)];
        for (int j = i + 1; j < k; ++j) cur[size_t(j)] = cur[size_t(j - 1)] + 1;
    }
    return out;
}

/// Is the subset s-stable in the cyclic sense: every distinct pair i, j
/// satisfies s <= |i - j| <= n - s?
inline bool is_s_stable(const std::vector<int>& subset, int n, int s) {
    for (size_t a = 0; a < subset.size(); ++a)
        for (size_t b = a + 1; b < subset.size(); ++b) {
            int d = std::abs(subset[a] - subset[b]);
            if (d < s || d > n - s) return false;
        }
    return true;
}

inline std::vector<std::vector<int>> stable_k_subsets(int n, int k, int s) {
    std::vector<std::vector<int>> out;
    for (auto& sub : k_subsets(n, k))
        if (is_s_stable(sub, n, s)) out.push_back(sub);
    return out;
}

inline Mask subset_mask(const std::vector<int>& subset) {
    Mask m = 0;
    for (int v : subset) {
        if (v < 1 || v > 64) throw CapacityError("subset element outside 1..64");
        m |= bit(v - 1);
    }
    return m;
}

inline std::vector<Mask> stable_k_subset_masks(int n, int k, int s) {
    std::vector<Mask> out;
    for (auto& sub : stable_k_subsets(n, k, s)) out.push_back(subset_mask(sub));
    return out;
}

} // namespace altkg
