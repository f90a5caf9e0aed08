#pragma once

#include <cstdint>
#include <vector>

#include "altkg/hypergraph.hpp"
#include "altkg/signed_property.hpp"

namespace altkg {

/// n unit vectors on S^m built from the moment curve gamma(t) = (1, t, ...,
/// t^m): point i (1-based) is (-1)^i gamma(i)/|gamma(i)|, identified with the
/// i-th vertex of `ident`.  For m >= 1 the points are pairwise distinct; for
/// m = 0 they form the multiset {-1, +1, -1, ...}.
struct GaleConfiguration {
    int m = 0;
    std::vector<std::vector<double>> points;  // each of size m+1, unit norm within 1e-12
    LinearOrder ident;

    int size() const { return static_cast<int>(points.size()); }
};

/// Build the configuration of n = |sigma| points on S^m.  Requires
/// 0 <= m <= n-1; capacity caps n <= 20, m <= 12 (moment-curve coordinates
/// lose precision beyond that).
GaleConfiguration gale_points(int n, int m, const LinearOrder& sigma);

enum class SplitStatus { OK, DEGENERATE };

/// Open-hemisphere split of the configuration by a unit direction x: plus
/// holds the vertices whose point lies in H(x) (dot product > eps), minus
/// those in H(-x) (dot product < -eps).  Any dot product within eps of zero
/// makes the split DEGENERATE and the sides meaningless.
struct HemisphereSplit {
    SplitStatus status = SplitStatus::DEGENERATE;
    SignedPair pair;
};

HemisphereSplit hemisphere_split(const GaleConfiguration& z, const std::vector<double>& x,
                                 double eps = 1e-9);

/// Sign changes along i of sign(<z_i, x>) with the (-1)^i flip undone, i.e.
/// of the moment-curve side pattern sign(<c, gamma(i)>).  Returns -1 when
/// the direction is degenerate at eps.  Never exceeds m for valid
/// configurations: a degree-m polynomial changes sign at most m times.
int unflipped_sign_changes(const GaleConfiguration& z, const std::vector<double>& x,
                           double eps = 1e-9);

struct GaleSampleReport {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t resamples = 0;      // degenerate directions redrawn
    std::uint64_t failures = 0;       // splits where the property did not hold
    std::int64_t first_failure = -1;  // trial index of the first failure, -1 if none
    std::vector<std::vector<double>> failing_directions;  // first few failing x
};

/// Sample `trials` uniform directions on S^m and check that every hemisphere
/// split lands in the signed property.  Trial t draws from the substream
/// derive_stream(seed, t), so the outcome is independent of how trials are
/// scheduled over workers.  Degenerate directions are redrawn (counted); a
/// trial that stays degenerate for 10000 redraws is counted as a failure.
GaleSampleReport verify_gale(const GaleConfiguration& z, const SignedProperty& property,
                             std::uint64_t trials, std::uint64_t seed);

/// Exact arithmetic check behind the configuration: a central hyperplane
/// with integer normal c meets the moment curve points w_i = gamma(i),
/// i = 1..n, with at most m sign changes in the sequence sign(<c, w_i>)
/// (zeros skipped), because <c, gamma(t)> is a polynomial of degree <= m.
/// Evaluated in 128-bit integers; caps n <= 20, m <= 12, |c_j| <= 10^6.
int moment_curve_sign_changes(int n, int m, const std::vector<long long>& normal);

/// Draw `count` nonzero integer normals with entries in [-10^6, 10^6] and
/// count how many violate the <= m sign-change bound (failures); resamples
/// counts redrawn all-zero vectors.  Failing normals are recorded in
/// failing_directions (coordinates are exact in double).
GaleSampleReport verify_moment_hyperplanes(int n, int m, std::uint64_t count, std::uint64_t seed);

} // namespace altkg
