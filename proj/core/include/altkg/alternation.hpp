#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <string>

#include "altkg/hypergraph.hpp"
#include "altkg/sign.hpp"
#include "altkg/signed_property.hpp"

namespace altkg {

/// Which feasibility predicate a search uses.
///   ALT : neither side of the split may contain a hyperedge.
///   SALT: at most one side of the split may contain a hyperedge.
enum class AltKind { ALT, SALT };

enum class SearchMode {
    /// Visit all 3^n sign vectors and evaluate each from scratch.  Slow and
    /// simple; exists as an independent cross-check for the pruned search.
    EXHAUSTIVE,
    /// Position-by-position extension with incremental containment state,
    /// feasibility pruning and an incumbent bound.
    BRANCH_AND_BOUND,
};

struct AltResult {
    int value = 0;
    /// Lexicographically smallest maximizing sign vector under -1 < 0 < +1,
    /// indexed by order position.  Only meaningful when !aborted.
    SignVector witness;
    bool aborted = false;
    std::uint64_t nodes = 0;
};

struct AltOptions {
    SearchMode mode = SearchMode::BRANCH_AND_BOUND;
    /// Stop as soon as a feasible vector with alt() >= abort_at is known.
    /// Used for decision queries ("can this order reach value v?").
    int abort_at = INT_MAX;
};

/// Largest alt(X) over sign vectors X whose split along sigma leaves every
/// hyperedge uncovered on both sides.
AltResult alt_sigma(const Hypergraph& h, const LinearOrder& sigma, const AltOptions& opts = {});

/// Same with the relaxed predicate: at most one side may contain a hyperedge.
AltResult salt_sigma(const Hypergraph& h, const LinearOrder& sigma, const AltOptions& opts = {});

AltResult alt_scan(const Hypergraph& h, const LinearOrder& sigma, AltKind kind, const AltOptions& opts = {});

/// Decision query: does some feasible X along sigma reach alt(X) >= target?
/// Prunes directly against target, so a refutation costs far less than
/// computing the exact maximum.
bool alt_reaches(const Hypergraph& h, const LinearOrder& sigma, AltKind kind, int target);

/// Largest alt(X) over X whose split along sigma stays outside the family p.
/// Exhaustive (3^n); spot-checks that p is superset-closed before running.
AltResult alt_property(const SignedProperty& p, const LinearOrder& sigma);

// ---------------------------------------------------------------------------
// Minimum over orderings.

enum class AltMinStrategy {
    /// Enumerate every ordering of the vertex set (n! of them, capped).
    EXACT_ALL_ORDERS,
    /// Steepest-descent over adjacent transpositions with random restarts.
    /// Returns an upper bound on the minimum; any ordering yields a valid
    /// chromatic bound, so the result is still certifiable.
    LOCAL_SEARCH,
};

struct AltMinOptions {
    AltMinStrategy strategy = AltMinStrategy::EXACT_ALL_ORDERS;
    AltKind kind = AltKind::ALT;
    /// EXACT_ALL_ORDERS refuses vertex sets larger than this.
    int factorial_cap = 9;
    /// LOCAL_SEARCH: number of restarts and the seed of the whole run.
    int restarts = 24;
    std::uint64_t seed = 1;
};

struct AltMinResult {
    int value = 0;
    LinearOrder order;    // first ordering (in enumeration order) attaining value
    SignVector witness;   // canonical witness for that ordering
    AltMinStrategy strategy = AltMinStrategy::EXACT_ALL_ORDERS;
    std::uint64_t orders_tried = 0;
};

AltMinResult alt_min(const Hypergraph& h, const AltMinOptions& opts = {});

// ---------------------------------------------------------------------------
// Certificates.

enum class CertMethod { EXHAUSTIVE, BRANCH_AND_BOUND, HEURISTIC_ORDER_SEARCH };

/// Chromatic lower bound certified by a completed search: a hypergraph, an
/// ordering of its vertices, the computed alternation value and a witness.
/// ALT certifies |V| - value, SALT certifies |V| + 1 - value, both lower
/// bounds on the chromatic number of the general Kneser graph of h.
struct AltCertificate {
    Hypergraph hypergraph;
    LinearOrder order;
    AltKind kind = AltKind::ALT;
    int value = 0;
    SignVector witness;
    CertMethod method = CertMethod::BRANCH_AND_BOUND;
    std::optional<std::uint64_t> seed;

    int bound() const {
        int n = hypergraph.num_vertices();
        return kind == AltKind::ALT ? n - value : n + 1 - value;
    }
};

int certificate_bound(AltKind kind, int num_vertices, int value);

AltCertificate make_certificate(const Hypergraph& h, const LinearOrder& sigma, AltKind kind,
                                SearchMode mode = SearchMode::BRANCH_AND_BOUND);

AltCertificate make_certificate(const Hypergraph& h, const AltMinResult& r);

/// Cheap structural check: witness length, witness feasibility under the
/// certificate's predicate, alt(witness) == value, bound formula.
bool check_certificate_witness(const AltCertificate& c, std::string* why = nullptr);

/// Full check: re-run the search for the certificate's order and compare.
bool revalidate_certificate(const AltCertificate& c, std::string* why = nullptr);

} // namespace altkg
