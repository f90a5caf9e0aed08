#include "altkg/signed_property.hpp"

#include <algorithm>
#include <functional>

#include "altkg/errors.hpp"
#include "altkg/rng.hpp"
#include "altkg/subsets.hpp"

namespace altkg {

bool SignedProperty::contains_pair(const SignedPair& p) const {
    return contains(mask_of(p.plus), mask_of(p.minus));
}

Mask SignedProperty::mask_of(const std::vector<Vertex>& side) const {
    const auto& g = ground();
    if (g.size() > 64) throw CapacityError("property ground set larger than 64");
    Mask m = 0;
    for (Vertex v : side) {
        auto it = std::find(g.begin(), g.end(), v);
        if (it == g.end()) throw InputError("vertex id " + std::to_string(v) + " outside property ground set");
        m |= bit(int(it - g.begin()));
    }
    return m;
}

namespace {

class EdgeSideProperty final : public SignedProperty {
public:
    enum class Which { EITHER, BOTH, PLUS };

    EdgeSideProperty(Hypergraph h, Which which) : h_(std::move(h)), which_(which) {
        masks_ = h_.edge_masks();
    }

    std::string name() const override {
        switch (which_) {
            case Which::EITHER: return "either-side-contains-edge";
            case Which::BOTH: return "both-sides-contain-edge";
            default: return "plus-side-contains-edge";
        }
    }
    const std::vector<Vertex>& ground() const override { return h_.vertices(); }

    bool contains(Mask plus, Mask minus) const override {
        bool p = side_has_edge(plus);
        switch (which_) {
            case Which::EITHER: return p || side_has_edge(minus);
            case Which::BOTH: return p && side_has_edge(minus);
            default: return p;
        }
    }

private:
    bool side_has_edge(Mask side) const {
        for (Mask e : masks_)
            if (subset_of(e, side)) return true;
        return false;
    }

    Hypergraph h_;
    Which which_;
    std::vector<Mask> masks_;
};

/// Each side must hold at least ceil(s/2) pairwise disjoint s-stable
/// k-subsets of [n].  Membership needs a small packing search, memoized
/// per side mask since property scans revisit the same sides constantly.
class StableDisjointProperty final : public SignedProperty {
public:
    StableDisjointProperty(int n, int k, int s) : n_(n), k_(k), s_(s), need_((s + 1) / 2) {
        if (n < 1 || k < 1 || s < 1) throw InputError("stable-disjoint property needs n, k, s >= 1");
        if (n > 62) throw CapacityError("stable-disjoint property supports n <= 62");
        for (int v = 1; v <= n; ++v) ground_.push_back(v);
        subsets_ = stable_k_subset_masks(n, k, s);
        if (subsets_.empty()) throw InputError("no s-stable k-subsets exist for these parameters");
    }

    std::string name() const override {
        return "each-side-" + std::to_string(need_) + "-disjoint-" + std::to_string(s_) +
               "-stable-" + std::to_string(k_) + "-subsets";
    }
    const std::vector<Vertex>& ground() const override { return ground_; }

    bool contains(Mask plus, Mask minus) const override {
        return side_ok(plus) && side_ok(minus);
    }

private:
    bool side_ok(Mask side) const {
        auto it = memo_.find(side);
        if (it != memo_.end()) return it->second;
        bool ok = pack(side, 0, 0, 0);
        memo_.emplace(side, ok);
        return ok;
    }

    // Can we pick `need_` pairwise disjoint stored subsets inside `side`,
    // having already placed `got` of them covering `used`?
    bool pack(Mask side, size_t from, int got, Mask used) const {
        if (got == need_) return true;
        for (size_t i = from; i < subsets_.size(); ++i) {
            Mask m = subsets_[i];
            if (subset_of(m, side) && (m & used) == 0)
                if (pack(side, i + 1, got + 1, used | m)) return true;
        }
        return false;
    }

    int n_, k_, s_, need_;
    std::vector<Vertex> ground_;
    std::vector<Mask> subsets_;
    mutable std::unordered_map<Mask, bool> memo_;
};

} // namespace

std::shared_ptr<SignedProperty> either_side_edge_property(Hypergraph h) {
    return std::make_shared<EdgeSideProperty>(std::move(h), EdgeSideProperty::Which::EITHER);
}
std::shared_ptr<SignedProperty> both_sides_edge_property(Hypergraph h) {
    return std::make_shared<EdgeSideProperty>(std::move(h), EdgeSideProperty::Which::BOTH);
}
std::shared_ptr<SignedProperty> plus_side_edge_property(Hypergraph h) {
    return std::make_shared<EdgeSideProperty>(std::move(h), EdgeSideProperty::Which::PLUS);
}
std::shared_ptr<SignedProperty> stable_disjoint_property(int n, int k, int s) {
    return std::make_shared<StableDisjointProperty>(n, k, s);
}

void check_superset_closed(const SignedProperty& p, std::uint64_t seed, int samples) {
    int n = p.ground_size();
    if (n > 62) throw CapacityError("superset-closure check supports at most 62 ground vertices");
    SplitMix64 rng(seed);
    Mask all = (n >= 64) ? ~Mask{0} : (bit(n) - 1);
    for (int t = 0; t < samples; ++t) {
        Mask plus = rng.next() & all;
        Mask minus = rng.next() & all & ~plus;
        if (!p.contains(plus, minus)) continue;
        // Grow both sides with a few fresh vertices; membership must survive.
        Mask free = all & ~(plus | minus);
        Mask extraPlus = rng.next() & free;
        Mask extraMinus = rng.next() & free & ~extraPlus;
        if (!p.contains(plus | extraPlus, minus | extraMinus))
            throw InputError("property '" + p.name() + "' is not superset-closed (violation found by sampling)");
    }
}

} // namespace altkg
