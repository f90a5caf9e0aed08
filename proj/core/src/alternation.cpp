#include "altkg/alternation.hpp"

#include <algorithm>
#include <numeric>

#include "altkg/errors.hpp"
#include "altkg/rng.hpp"

namespace altkg {

namespace {

/// Hyperedges remapped into order-position space: bit j of a mask is set
/// when the edge contains the vertex at position j of sigma.
struct PositionedEdges {
    int n = 0;
    std::vector<Mask> masks;
    std::vector<std::vector<int>> at; // at[j]: indices of edges containing position j

    PositionedEdges(const Hypergraph& h, const LinearOrder& sigma) {
        sigma.validate_for(h);
        n = h.num_vertices();
        if (n > 64) throw CapacityError("alternation search supports at most 64 vertices");
        std::vector<int> pos_of(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) pos_of[size_t(h.index_of(sigma.at(j)))] = j;
        at.resize(size_t(n));
        for (const auto& e : h.edges()) {
            Mask m = 0;
            for (Vertex v : e) m |= bit(pos_of[size_t(h.index_of(v))]);
            int idx = int(masks.size());
            masks.push_back(m);
            for (Mask t = m; t; t &= t - 1) at[size_t(lowest_bit(t))].push_back(idx);
        }
    }
};

/// Depth-first search over sign vectors in lexicographic order (-1 < 0 < +1).
/// State that changes along a branch travels by value, so backtracking is
/// free.  Feasibility pruning is exact: once a side contains an edge it
/// contains it in every extension.
class BranchAndBound {
public:
    /// `floor` pre-loads the incumbent: only values above it are recorded.
    /// Decision queries set floor = target-1 so pruning works against the
    /// target from the first node.
    BranchAndBound(const PositionedEdges& pe, AltKind kind, int abort_at, int floor = -1)
        : pe_(pe), salt_(kind == AltKind::SALT), abort_at_(abort_at), cur_(size_t(pe.n), 0), best_(floor) {}

    int best() const { return best_; }

    AltResult run() {
        dfs(0, 0, 0, 0, 0, false, false);
        AltResult r;
        r.value = best_ < 0 ? 0 : best_;
        r.witness = SignVector(best_vec_.empty() ? std::vector<std::int8_t>(size_t(pe_.n), 0) : best_vec_);
        r.aborted = aborted_;
        r.nodes = nodes_;
        return r;
    }

private:
    // Does `side` (after adding position j) now contain an edge through j?
    bool side_gains_edge(Mask side, int j) const {
        for (int idx : pe_.at[size_t(j)])
            if (subset_of(pe_.masks[size_t(idx)], side)) return true;
        return false;
    }

    void dfs(int pos, Mask plus, Mask minus, int last, int val, bool plus_has, bool minus_has) {
        if (aborted_) return;
        ++nodes_;
        if (best_ >= abort_at_) { aborted_ = true; return; }
        if (pos == pe_.n) {
            if (val > best_) {
                best_ = val;
                best_vec_ = cur_;
            }
            return;
        }
        // Even a perfect alternation on the rest cannot beat the incumbent.
        if (val + (pe_.n - pos) <= best_) return;

        int gain = 0; // alt gain of a nonzero entry at this position
        // -1 first, then 0, then +1: keeps the first maximizer lexicographically
        // smallest under the witness component order.
        {
            Mask m2 = minus | bit(pos);
            bool mh = minus_has || (!minus_has && side_gains_edge(m2, pos));
            bool dead = salt_ ? (plus_has && mh) : (plus_has || mh);
            if (!dead) {
                gain = (last == 0 || last != -1) ? 1 : 0;
                cur_[size_t(pos)] = -1;
                dfs(pos + 1, plus, m2, -1, val + gain, plus_has, mh);
            }
        }
        if (aborted_) return;
        cur_[size_t(pos)] = 0;
        dfs(pos + 1, plus, minus, last, val, plus_has, minus_has);
        if (aborted_) return;
        {
            Mask p2 = plus | bit(pos);
            bool ph = plus_has || (!plus_has && side_gains_edge(p2, pos));
            bool dead = salt_ ? (ph && minus_has) : (ph || minus_has);
            if (!dead) {
                gain = (last == 0 || last != 1) ? 1 : 0;
                cur_[size_t(pos)] = 1;
                dfs(pos + 1, p2, minus, 1, val + gain, ph, minus_has);
            }
        }
        cur_[size_t(pos)] = 0;
    }

    const PositionedEdges& pe_;
    bool salt_;
    int abort_at_;
    std::vector<std::int8_t> cur_, best_vec_;
    int best_;
    bool aborted_ = false;
    std::uint64_t nodes_ = 0;
};

/// Plain odometer over all 3^n sign vectors, evaluating every vector from
/// scratch.  Deliberately shares no incremental state with the pruned
/// search: this is the cross-check route.
AltResult exhaustive_scan(const PositionedEdges& pe, AltKind kind, int abort_at) {
    const int n = pe.n;
    if (n > 20) throw CapacityError("exhaustive sign-vector scan capped at 20 positions");
    const bool salt = kind == AltKind::SALT;
    std::vector<std::int8_t> digits(size_t(n), -1);
    AltResult r;
    r.value = -1;
    while (true) {
        ++r.nodes;
        Mask plus = 0, minus = 0;
        int val = 0, last = 0;
        for (int j = 0; j < n; ++j) {
            int s = digits[size_t(j)];
            if (s == 0) continue;
            if (s > 0) plus |= bit(j); else minus |= bit(j);
            if (last == 0 || s != last) ++val;
            last = s;
        }
        bool ph = false, mh = false;
        for (Mask e : pe.masks) {
            ph = ph || subset_of(e, plus);
            mh = mh || subset_of(e, minus);
        }
        bool feasible = salt ? !(ph && mh) : !(ph || mh);
        if (feasible && val > r.value) {
            r.value = val;
            r.witness = SignVector(digits);
            if (r.value >= abort_at) { r.aborted = true; break; }
        }
        // Increment the base-3 odometer; rightmost digit moves fastest, so
        // vectors appear in lexicographic order (-1 < 0 < +1).
        int j = n - 1;
        while (j >= 0 && digits[size_t(j)] == 1) digits[size_t(j--)] = -1;
        if (j < 0) break;
        ++digits[size_t(j)];
    }
    if (r.value < 0) r.value = 0;
    if (r.witness.size() == 0) r.witness = SignVector(std::vector<std::int8_t>(size_t(n), 0));
    return r;
}

} // namespace

AltResult alt_scan(const Hypergraph& h, const LinearOrder& sigma, AltKind kind, const AltOptions& opts) {
    PositionedEdges pe(h, sigma);
    if (opts.mode == SearchMode::EXHAUSTIVE) return exhaustive_scan(pe, kind, opts.abort_at);
    return BranchAndBound(pe, kind, opts.abort_at).run();
}

bool alt_reaches(const Hypergraph& h, const LinearOrder& sigma, AltKind kind, int target) {
    if (target <= 0) return true; // the zero vector is always feasible
    PositionedEdges pe(h, sigma);
    if (target > pe.n) return false;
    BranchAndBound search(pe, kind, target, target - 1);
    search.run();
    return search.best() >= target;
}

AltResult alt_sigma(const Hypergraph& h, const LinearOrder& sigma, const AltOptions& opts) {
    return alt_scan(h, sigma, AltKind::ALT, opts);
}

AltResult salt_sigma(const Hypergraph& h, const LinearOrder& sigma, const AltOptions& opts) {
    return alt_scan(h, sigma, AltKind::SALT, opts);
}

AltResult alt_property(const SignedProperty& p, const LinearOrder& sigma) {
    const auto& g = p.ground();
    const int n = int(g.size());
    if (n > 14) throw CapacityError("property-based alternation scan capped at 14 vertices");
    if (sigma.size() != n) throw InputError("order length does not match property ground set");
    check_superset_closed(p);

    std::vector<int> ground_pos(static_cast<size_t>(n));
    {
        std::vector<bool> seen(size_t(n), false);
        for (int j = 0; j < n; ++j) {
            auto it = std::find(g.begin(), g.end(), sigma.at(j));
            if (it == g.end()) throw InputError("order mentions vertex outside property ground set");
            int gi = int(it - g.begin());
            if (seen[size_t(gi)]) throw InputError("order repeats a vertex");
            seen[size_t(gi)] = true;
            ground_pos[size_t(j)] = gi;
        }
    }

    std::vector<std::int8_t> digits(size_t(n), -1);
    AltResult r;
    r.value = -1;
    while (true) {
        ++r.nodes;
        Mask plus = 0, minus = 0;
        int val = 0, last = 0;
        for (int j = 0; j < n; ++j) {
            int s = digits[size_t(j)];
            if (s == 0) continue;
            if (s > 0) plus |= bit(ground_pos[size_t(j)]);
            else minus |= bit(ground_pos[size_t(j)]);
            if (last == 0 || s != last) ++val;
            last = s;
        }
        if (val > r.value && !p.contains(plus, minus)) {
            r.value = val;
            r.witness = SignVector(digits);
        }
        int j = n - 1;
        while (j >= 0 && digits[size_t(j)] == 1) digits[size_t(j--)] = -1;
        if (j < 0) break;
        ++digits[size_t(j)];
    }
    if (r.value < 0) r.value = 0; // family contains even the empty pair: no feasible vector
    if (r.witness.size() == 0) r.witness = SignVector(std::vector<std::int8_t>(size_t(n), 0));
    return r;
}

// ---------------------------------------------------------------------------

AltMinResult alt_min(const Hypergraph& h, const AltMinOptions& opts) {
    const int n = h.num_vertices();
    AltMinResult out;
    out.strategy = opts.strategy;

    if (opts.strategy == AltMinStrategy::EXACT_ALL_ORDERS) {
        if (n > opts.factorial_cap)
            throw CapacityError("exact order enumeration capped at " + std::to_string(opts.factorial_cap) +
                                " vertices (" + std::to_string(n) + " given)");
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        int best = INT_MAX;
        std::vector<int> best_perm = perm;
        do {
            ++out.orders_tried;
            std::vector<Vertex> ord(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) ord[size_t(j)] = h.vertices()[size_t(perm[size_t(j)])];
            AltOptions ao;
            ao.abort_at = best; // once this order matches the incumbent it cannot improve
            AltResult r = alt_scan(h, LinearOrder(ord), opts.kind, ao);
            if (!r.aborted && r.value < best) {
                best = r.value;
                best_perm = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::vector<Vertex> ord(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) ord[size_t(j)] = h.vertices()[size_t(best_perm[size_t(j)])];
        out.order = LinearOrder(ord);
        AltResult fin = alt_scan(h, out.order, opts.kind, {});
        out.value = fin.value;
        out.witness = fin.witness;
        return out;
    }

    // LOCAL_SEARCH: steepest descent over adjacent transpositions.
    SplitMix64 rng(opts.seed);
    int best = INT_MAX;
    std::vector<Vertex> best_ord;
    for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
        std::vector<Vertex> ord = h.vertices();
        if (restart > 0) rng.shuffle(ord);
        AltResult cur = alt_scan(h, LinearOrder(ord), opts.kind, {});
        ++out.orders_tried;
        while (true) {
            int best_gain_val = cur.value;
            int best_swap = -1;
            for (int j = 0; j + 1 < n; ++j) {
                std::swap(ord[size_t(j)], ord[size_t(j + 1)]);
                AltOptions ao;
                ao.abort_at = best_gain_val; // neighbors at/above current are useless
                AltResult r = alt_scan(h, LinearOrder(ord), opts.kind, ao);
                ++out.orders_tried;
                if (!r.aborted && r.value < best_gain_val) {
                    best_gain_val = r.value;
                    best_swap = j;
                }
                std::swap(ord[size_t(j)], ord[size_t(j + 1)]);
            }
            if (best_swap < 0) break;
            std::swap(ord[size_t(best_swap)], ord[size_t(best_swap + 1)]);
            cur = alt_scan(h, LinearOrder(ord), opts.kind, {});
        }
        if (cur.value < best) {
            best = cur.value;
            best_ord = ord;
        }
    }
    out.order = LinearOrder(best_ord);
    AltResult fin = alt_scan(h, out.order, opts.kind, {});
    out.value = fin.value;
    out.witness = fin.witness;
    return out;
}

// ---------------------------------------------------------------------------

int certificate_bound(AltKind kind, int num_vertices, int value) {
    return kind == AltKind::ALT ? num_vertices - value : num_vertices + 1 - value;
}

AltCertificate make_certificate(const Hypergraph& h, const LinearOrder& sigma, AltKind kind, SearchMode mode) {
    AltOptions opts;
    opts.mode = mode;
    AltResult r = alt_scan(h, sigma, kind, opts);
    AltCertificate c;
    c.hypergraph = h;
    c.order = sigma;
    c.kind = kind;
    c.value = r.value;
    c.witness = r.witness;
    c.method = mode == SearchMode::EXHAUSTIVE ? CertMethod::EXHAUSTIVE : CertMethod::BRANCH_AND_BOUND;
    return c;
}

AltCertificate make_certificate(const Hypergraph& h, const AltMinResult& r) {
    AltCertificate c;
    c.hypergraph = h;
    c.order = r.order;
    c.kind = AltKind::ALT;
    c.value = r.value;
    c.witness = r.witness;
    c.method = r.strategy == AltMinStrategy::LOCAL_SEARCH ? CertMethod::HEURISTIC_ORDER_SEARCH
                                                          : CertMethod::BRANCH_AND_BOUND;
    return c;
}

bool check_certificate_witness(const AltCertificate& c, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    try {
        c.order.validate_for(c.hypergraph);
    } catch (const InputError& e) {
        return fail(e.what());
    }
    if (c.witness.size() != c.hypergraph.num_vertices())
        return fail("witness length does not match vertex count");
    if (alt(c.witness) != c.value)
        return fail("alt(witness) = " + std::to_string(alt(c.witness)) + " but value = " + std::to_string(c.value));
    SignedPair sp = signed_split(c.witness, c.order);
    bool ph = contains_edge(c.hypergraph, sp.plus);
    bool mh = contains_edge(c.hypergraph, sp.minus);
    if (c.kind == AltKind::ALT && (ph || mh))
        return fail("witness infeasible: a side contains a hyperedge");
    if (c.kind == AltKind::SALT && (ph && mh))
        return fail("witness infeasible: both sides contain hyperedges");
    if (c.bound() != certificate_bound(c.kind, c.hypergraph.num_vertices(), c.value))
        return fail("bound formula mismatch");
    return true;
}

bool revalidate_certificate(const AltCertificate& c, std::string* why) {
    if (!check_certificate_witness(c, why)) return false;
    AltResult r = alt_scan(c.hypergraph, c.order, c.kind, {});
    if (r.value != c.value) {
        if (why)
            *why = "recomputed value " + std::to_string(r.value) + " differs from stored " + std::to_string(c.value);
        return false;
    }
    return true;
}

} // namespace altkg
