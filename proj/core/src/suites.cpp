#include "altkg/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "altkg/alternation.hpp"
#include "altkg/coloring.hpp"
#include "altkg/constructions.hpp"
#include "altkg/errors.hpp"
#include "altkg/gale.hpp"
#include "altkg/io.hpp"
#include "altkg/kneser.hpp"
#include "altkg/multicoloring.hpp"
#include "altkg/representations.hpp"
#include "altkg/rng.hpp"
#include "altkg/signed_property.hpp"
#include "altkg/version.hpp"

namespace altkg {

namespace {

using nlohmann::json;

struct Pending {
    std::string id;
    std::string description;
    std::function<void(InstanceResult&)> run;
};

std::string fmt_int(long long v) { return std::to_string(v); }

void set_outcome(InstanceResult& r, bool ok, std::string expected, std::string computed) {
    r.expected = std::move(expected);
    r.computed = std::move(computed);
    r.status = ok ? SuiteStatus::PASS : SuiteStatus::FAIL;
}

Hypergraph stable_pairs_hypergraph(int n, int k) { return stable_kneser(n, k, 2).hypergraph; }

// ---------------------------------------------------------------------------
// Alternation-kernel instances: salt_I of 2-stable k-subsets equals 2k-1.

const std::vector<std::pair<int, int>>& salt_kernel_list(const std::string& scale) {
    static const std::vector<std::pair<int, int>> desk{{5, 2}, {6, 2}, {7, 2}, {8, 3}, {9, 3}};
    static const std::vector<std::pair<int, int>> tiny{{5, 2}, {6, 2}};
    return scale == "tiny" ? tiny : desk;
}

void add_salt_kernel(std::vector<Pending>& out, const std::string& scale) {
    for (auto [n, k] : salt_kernel_list(scale)) {
        std::string id = "alt-kernel/salt-stable-n" + fmt_int(n) + "k" + fmt_int(k);
        out.push_back({id,
                       "salt under the natural order of the 2-stable " + fmt_int(k) +
                           "-subsets of [" + fmt_int(n) + "], exhaustive scan",
                       [n = n, k = k](InstanceResult& r) {
                           Hypergraph h = stable_pairs_hypergraph(n, k);
                           AltOptions opts;
                           opts.mode = SearchMode::EXHAUSTIVE;
                           int value = salt_sigma(h, LinearOrder::natural(h), opts).value;
                           set_outcome(r, value == 2 * k - 1, fmt_int(2 * k - 1), fmt_int(value));
                       }});
    }
}

// ---------------------------------------------------------------------------
// Kneser bound instances: ALT certificate on all k-subsets, natural order,
// reaches n-2k+2 and matches the exact chromatic number.

const std::vector<std::pair<int, int>>& kneser_usual_list(const std::string& scale) {
    static const std::vector<std::pair<int, int>> desk{{5, 2}, {6, 2}, {7, 2}, {7, 3}, {8, 3}};
    static const std::vector<std::pair<int, int>> tiny{{5, 2}, {6, 2}};
    return scale == "tiny" ? tiny : desk;
}

void add_kneser_usual(std::vector<Pending>& out, const std::string& scale) {
    for (auto [n, k] : kneser_usual_list(scale)) {
        std::string id = "kneser-usual/n" + fmt_int(n) + "k" + fmt_int(k);
        out.push_back({id,
                       "ALT bound of the all-" + fmt_int(k) + "-subsets representation of [" +
                           fmt_int(n) + "] vs exact chromatic number",
                       [n = n, k = k](InstanceResult& r) {
                           auto rep = kneser(n, k);
                           auto cert = make_certificate(rep.hypergraph,
                                                        LinearOrder::natural(rep.hypergraph),
                                                        AltKind::ALT);
                           auto chi = chromatic_number(rep.graph);
                           int want = n - 2 * k + 2;
                           bool ok = cert.bound() == want && chi.exact() && chi.lower == want;
                           set_outcome(r, ok, "bound=" + fmt_int(want) + " chi=" + fmt_int(want),
                                       "bound=" + fmt_int(cert.bound()) + " chi=[" +
                                           fmt_int(chi.lower) + "," + fmt_int(chi.upper) + "]");
                       }});
    }
}

// ---------------------------------------------------------------------------
// Interleaved Schrijver representations.

struct SchrijverCase {
    std::string id;
    std::string description;
    int param;
    SchrijverOrderVariant variant;
    SearchMode mode;
    int alt_value;   // expected alternation value
    int bound;       // expected certificate bound
    int chi_n, chi_k;  // Schrijver graph whose chromatic number must match
};

std::vector<SchrijverCase> schrijver_cases(const std::string& scale) {
    std::vector<SchrijverCase> all{
        {"schrijver/even-n6-exhaustive", "interleaved SG(6,2) representation, exhaustive 3^12", 6,
         SchrijverOrderVariant::TWO_SUBSETS_EVEN, SearchMode::EXHAUSTIVE, 8, 4, 6, 2},
        {"schrijver/even-n8", "interleaved SG(8,2) representation, branch and bound", 8,
         SchrijverOrderVariant::TWO_SUBSETS_EVEN, SearchMode::BRANCH_AND_BOUND, 10, 6, 8, 2},
        {"schrijver/half-k2", "interleaved SG(5,2) half-Kneser representation", 2,
         SchrijverOrderVariant::HALF_KNESER, SearchMode::BRANCH_AND_BOUND, 7, 3, 5, 2},
        {"schrijver/odd-n5", "interleaved SG(5,2) representation, odd case", 5,
         SchrijverOrderVariant::TWO_SUBSETS_ODD, SearchMode::BRANCH_AND_BOUND, 7, 3, 5, 2},
        {"schrijver/odd-n7", "interleaved SG(7,2) representation, odd case", 7,
         SchrijverOrderVariant::TWO_SUBSETS_ODD, SearchMode::BRANCH_AND_BOUND, 9, 5, 7, 2},
    };
    if (scale == "tiny") {
        std::vector<SchrijverCase> small;
        for (auto& c : all)
            if (c.id == "schrijver/even-n6-exhaustive" || c.id == "schrijver/odd-n5" ||
                c.id == "schrijver/half-k2")
                small.push_back(c);
        return small;
    }
    return all;
}

void add_schrijver(std::vector<Pending>& out, const std::string& scale) {
    for (const auto& c : schrijver_cases(scale)) {
        out.push_back({c.id, c.description, [c](InstanceResult& r) {
                           auto rep = schrijver_interleaved_representation(c.param, c.variant);
                           AltOptions opts;
                           opts.mode = c.mode;
                           auto res = alt_sigma(rep.hypergraph, rep.order, opts);
                           int bound = certificate_bound(AltKind::ALT,
                                                         rep.hypergraph.num_vertices(), res.value);
                           auto chi = chromatic_number(stable_kneser(c.chi_n, c.chi_k, 2).graph);
                           bool ok = res.value == c.alt_value && bound == c.bound &&
                                     chi.exact() && chi.lower == c.bound;
                           set_outcome(r, ok,
                                       "alt=" + fmt_int(c.alt_value) + " bound=" + fmt_int(c.bound) +
                                           " chi=" + fmt_int(c.bound),
                                       "alt=" + fmt_int(res.value) + " bound=" + fmt_int(bound) +
                                           " chi=[" + fmt_int(chi.lower) + "," +
                                           fmt_int(chi.upper) + "]");
                       }});
    }
}

// ---------------------------------------------------------------------------
// Mycielski instances.

void add_mycielski(std::vector<Pending>& out, const std::string& scale) {
    struct ChiCase {
        std::string id;
        std::string name;
        Graph g;
    };
    std::vector<ChiCase> chis;
    chis.push_back({"mycielski/chi-k2", "K2", Graph::complete(2)});
    chis.push_back({"mycielski/chi-c5", "C5", Graph::cycle(5)});
    if (scale != "tiny") {
        chis.push_back({"mycielski/chi-petersen", "Petersen", kneser(5, 2).graph});
        chis.push_back({"mycielski/chi-grotzsch", "Grotzsch", mycielskian(Graph::cycle(5))});
    }
    for (auto& c : chis) {
        out.push_back({c.id, "chi(M(" + c.name + ")) = chi(" + c.name + ") + 1",
                       [g = c.g](InstanceResult& r) {
                           auto base = chromatic_number(g);
                           auto lifted = chromatic_number(mycielskian(g));
                           bool ok = base.exact() && lifted.exact() &&
                                     lifted.lower == base.lower + 1;
                           set_outcome(r, ok, "chi+1", "chi=" + fmt_int(base.lower) +
                                                           " chi(M)=" + fmt_int(lifted.lower));
                       }});
    }

    struct LiftCase {
        std::string id;
        Hypergraph f;
        int t;
    };
    std::vector<LiftCase> lifts;
    lifts.push_back({"mycielski/lift-one-singleton-t1", Hypergraph({1}, {{1}}), 1});
    if (scale != "tiny")
        lifts.push_back({"mycielski/lift-two-singletons-t2", Hypergraph({1, 2}, {{1}, {2}}), 2});
    for (auto& c : lifts) {
        out.push_back({c.id,
                       "Mycielski lift: blow-up identity plus the alternation increment bound",
                       [f = c.f, t = c.t](InstanceResult& r) {
                           auto sigma = LinearOrder::natural(f);
                           auto lift = mycielski_representation(f, sigma, t);  // checks the blow-up identity
                           bool match = kneser_graph(lift.hypergraph).graph == lift.blown_mycielskian;
                           int alt_base = alt_sigma(f, sigma).value;
                           int w = 2 * t + 1;
                           int target = alt_base + 2 * f.num_edges() * w;
                           bool bounded = !alt_reaches(lift.hypergraph, lift.order, AltKind::ALT, target);
                           set_outcome(r, match && bounded,
                                       "KG(lift) = blown Mycielskian, alt_pi < " + fmt_int(target),
                                       std::string("match=") + (match ? "yes" : "no") +
                                           " alt_pi<" + fmt_int(target) + "=" +
                                           (bounded ? "yes" : "no"));
                       }});
    }
}

// ---------------------------------------------------------------------------
// Hedetniemi instances: fixed tight-family products plus random product
// inequality pairs.

struct RandomPairData {
    Hypergraph left, right;
    LinearOrder sigma, tau;        // over the original labels
    ProductRepresentation product;
    LinearOrder pi;                // relabeled sigma || tau
};

Hypergraph random_hypergraph(SplitMix64& rng, int first_label) {
    int n = 1 + static_cast<int>(rng.below(6));
    Mask full = (Mask{1} << n) - 1;
    int want = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(full, 8)));
    std::set<Mask> masks;
    while (static_cast<int>(masks.size()) < want)
        masks.insert(1 + rng.below(full));
    std::vector<Vertex> vertices;
    for (int i = 0; i < n; ++i) vertices.push_back(first_label + i);
    std::vector<std::vector<Vertex>> edges;
    for (Mask m : masks) {
        std::vector<Vertex> e;
        for (Mask rest = m; rest; rest &= rest - 1) e.push_back(first_label + lowest_bit(rest));
        edges.push_back(std::move(e));
    }
    return Hypergraph(vertices, edges);
}

LinearOrder random_order(SplitMix64& rng, const Hypergraph& h) {
    std::vector<Vertex> v = h.vertices();
    rng.shuffle(v);
    return LinearOrder(v);
}

RandomPairData make_random_pair(std::uint64_t seed, int index) {
    // Stream 1000+index is reserved for the product-pair family so the
    // soundness sweep regenerates the identical instances.
    SplitMix64 rng(derive_stream(seed, 1000 + static_cast<std::uint64_t>(index)));
    RandomPairData d;
    d.left = random_hypergraph(rng, 1);
    d.right = random_hypergraph(rng, 101);
    d.sigma = random_order(rng, d.left);
    d.tau = random_order(rng, d.right);
    d.product = product_representation(d.left, d.right);
    d.pi = concat_order(relabel_order(d.sigma, d.product.left_map),
                        relabel_order(d.tau, d.product.right_map));
    return d;
}

int pair_count(const std::string& scale) { return scale == "tiny" ? 40 : 200; }

void add_hedetniemi(std::vector<Pending>& out, const std::string& scale, std::uint64_t seed) {
    struct Fixed {
        std::string id;
        std::string name;
        Graph g, h;
        int chi;
    };
    std::vector<Fixed> fixed;
    fixed.push_back({"hedetniemi/sg52-x-sg62", "SG(5,2) x SG(6,2)", stable_kneser(5, 2, 2).graph,
                     stable_kneser(6, 2, 2).graph, 3});
    if (scale != "tiny") {
        fixed.push_back({"hedetniemi/sg62-x-sg73", "SG(6,2) x SG(7,3)", stable_kneser(6, 2, 2).graph,
                         stable_kneser(7, 3, 2).graph, 3});
        fixed.push_back({"hedetniemi/sg62-x-m-sg73", "SG(6,2) x M(SG(7,3))",
                         stable_kneser(6, 2, 2).graph,
                         mycielskian(stable_kneser(7, 3, 2).graph), 4});
    }
    for (auto& c : fixed) {
        out.push_back({c.id, "chi(" + c.name + ") equals the factor minimum",
                       [g = c.g, h = c.h, want = c.chi](InstanceResult& r) {
                           SolveLimits limits;
                           limits.vertex_cap = 200;  // the largest product here has 135 vertices
                           auto cg = chromatic_number(g, limits);
                           auto ch = chromatic_number(h, limits);
                           auto cp = chromatic_number(categorical_product(g, h), limits);
                           bool ok = cg.exact() && ch.exact() && cp.exact() &&
                                     cp.lower == want &&
                                     cp.lower == std::min(cg.lower, ch.lower);
                           set_outcome(r, ok,
                                       "chi=" + fmt_int(want) + " = min of factors",
                                       "chi=[" + fmt_int(cp.lower) + "," + fmt_int(cp.upper) +
                                           "] factors " + fmt_int(cg.lower) + "," +
                                           fmt_int(ch.lower));
                       }});
    }

    for (int t = 0; t < pair_count(scale); ++t) {
        char tag[8];
        std::snprintf(tag, sizeof tag, "%03d", t);
        out.push_back({"hedetniemi/product-pair-" + std::string(tag),
                       "product alternation inequalities on a random hypergraph pair",
                       [seed, t](InstanceResult& r) {
                           auto d = make_random_pair(seed, t);
                           int n = d.left.num_vertices(), np = d.right.num_vertices();
                           int alt_s = alt_sigma(d.left, d.sigma).value;
                           int salt_s = salt_sigma(d.left, d.sigma).value;
                           int alt_t = alt_sigma(d.right, d.tau).value;
                           int salt_t = salt_sigma(d.right, d.tau).value;
                           int alt_p = alt_sigma(d.product.hypergraph, d.pi).value;
                           int salt_p = salt_sigma(d.product.hypergraph, d.pi).value;
                           int bound_a = std::max(np + salt_s, n + salt_t);
                           int bound_b = std::max(n + salt_t, np + alt_s);
                           int bound_c = std::max(n + alt_t, np + alt_s);
                           bool ok_a = salt_p <= bound_a;
                           bool ok_b = alt_p <= bound_b;
                           bool ok_c = bound_c < salt_s + salt_t || alt_p <= bound_c;
                           set_outcome(r, ok_a && ok_b && ok_c,
                                       "salt_pi<=" + fmt_int(bound_a) + " alt_pi<=" +
                                           fmt_int(bound_b) + " cond<=" + fmt_int(bound_c),
                                       "salt_pi=" + fmt_int(salt_p) + " alt_pi=" + fmt_int(alt_p) +
                                           (ok_c ? "" : " conditional violated"));
                       }});
    }
}

// ---------------------------------------------------------------------------
// Multichromatic values (Stahl / Chen).

void add_stahl_chen(std::vector<Pending>& out, const std::string& scale) {
    struct Case {
        std::string id;
        std::string name;
        Graph g;
        int m;
        int chi;
    };
    std::vector<Case> cases;
    cases.push_back({"stahl-chen/chi2-kg52", "chi_2(KG(5,2))", kneser(5, 2).graph, 2, 5});
    cases.push_back({"stahl-chen/chi1-sg62", "chi_1(SG(6,2))", stable_kneser(6, 2, 2).graph, 1, 4});
    if (scale != "tiny") {
        cases.push_back({"stahl-chen/chi3-kg52", "chi_3(KG(5,2))", kneser(5, 2).graph, 3, 8});
        cases.push_back({"stahl-chen/chi2-sg62", "chi_2(SG(6,2))", stable_kneser(6, 2, 2).graph, 2, 6});
    }
    for (auto& c : cases) {
        out.push_back({c.id, c.name, [g = c.g, m = c.m, want = c.chi](InstanceResult& r) {
                           auto res = multichromatic_number(g, m);
                           bool ok = res.exact() && res.lower == want;
                           set_outcome(r, ok, fmt_int(want),
                                       "[" + fmt_int(res.lower) + "," + fmt_int(res.upper) + "]");
                       }});
    }
}

// ---------------------------------------------------------------------------
// Gale sampling and the exact moment-curve hyperplane check.

const std::vector<std::pair<int, int>>& gale_list() {
    static const std::vector<std::pair<int, int>> cases{{5, 2}, {6, 2}, {7, 3}};
    return cases;
}

void add_gale(std::vector<Pending>& out, const std::string& scale, std::uint64_t seed,
              std::int64_t trials_override) {
    std::uint64_t trials = scale == "tiny" ? 10000 : 100000;
    if (trials_override > 0) trials = static_cast<std::uint64_t>(trials_override);
    std::uint64_t planes = scale == "tiny" ? 200 : 1000;
    int stream = 0;
    for (auto [n, k] : gale_list()) {
        ++stream;
        std::string suffix = "n" + fmt_int(n) + "k" + fmt_int(k);
        // Streams 100+i / 200+i are reserved for the gale family.
        std::uint64_t sample_seed = derive_stream(seed, 100 + static_cast<std::uint64_t>(stream));
        std::uint64_t plane_seed = derive_stream(seed, 200 + static_cast<std::uint64_t>(stream));
        out.push_back({"gale/sample-" + suffix,
                       "hemisphere sampling: the open hemisphere contains a 2-stable " +
                           fmt_int(k) + "-subset of [" + fmt_int(n) + "]",
                       [n = n, k = k, trials, sample_seed](InstanceResult& r) {
                           Hypergraph h = stable_pairs_hypergraph(n, k);
                           auto cfg = gale_points(n, n - 2 * k, LinearOrder::natural(h));
                           auto prop = plus_side_edge_property(h);
                           auto rep = verify_gale(cfg, *prop, trials, sample_seed);
                           bool ok = rep.failures == 0 && rep.resamples < 10;
                           set_outcome(r, ok, "0 failures, <10 resamples",
                                       fmt_int(static_cast<long long>(rep.failures)) + " failures, " +
                                           fmt_int(static_cast<long long>(rep.resamples)) +
                                           " resamples");
                       }});
        out.push_back({"gale/exact-" + suffix,
                       "integer hyperplanes meet the moment curve with at most m sign changes",
                       [n = n, k = k, planes, plane_seed](InstanceResult& r) {
                           auto rep = verify_moment_hyperplanes(n, n - 2 * k, planes, plane_seed);
                           set_outcome(r, rep.failures == 0, "0 violations",
                                       fmt_int(static_cast<long long>(rep.failures)) + " violations");
                       }});
    }
}

// ---------------------------------------------------------------------------
// Soundness sweep: every representation/ordering pair the suites construct
// must certify a bound that the exact chromatic number meets.

struct RegistryEntry {
    std::string source;
    Hypergraph h;
    LinearOrder o;
    bool alt = false;
    bool salt = false;
};

void register_pair(std::map<std::string, RegistryEntry>& reg, const std::string& source,
                   Hypergraph h, LinearOrder o, AltKind kind) {
    std::string key = instance_key(h, o, AltKind::ALT);  // kind-independent dedup key
    auto it = reg.find(key);
    if (it == reg.end())
        it = reg.emplace(key, RegistryEntry{source, std::move(h), std::move(o)}).first;
    if (kind == AltKind::ALT) it->second.alt = true;
    else it->second.salt = true;
}

std::map<std::string, RegistryEntry> build_registry(const std::string& scale, std::uint64_t seed) {
    std::map<std::string, RegistryEntry> reg;
    for (auto [n, k] : salt_kernel_list(scale)) {
        Hypergraph h = stable_pairs_hypergraph(n, k);
        auto o = LinearOrder::natural(h);
        register_pair(reg, "salt-stable-n" + fmt_int(n) + "k" + fmt_int(k), std::move(h),
                      std::move(o), AltKind::SALT);
    }
    for (auto [n, k] : kneser_usual_list(scale)) {
        auto rep = kneser(n, k);
        auto o = LinearOrder::natural(rep.hypergraph);
        register_pair(reg, "kneser-n" + fmt_int(n) + "k" + fmt_int(k), std::move(rep.hypergraph),
                      std::move(o), AltKind::ALT);
    }
    for (const auto& c : schrijver_cases(scale)) {
        auto rep = schrijver_interleaved_representation(c.param, c.variant);
        register_pair(reg, c.id.substr(c.id.find('/') + 1), std::move(rep.hypergraph),
                      std::move(rep.order), AltKind::ALT);
    }
    {
        Hypergraph f1({1}, {{1}});
        auto lift1 = mycielski_representation(f1, LinearOrder::natural(f1), 1);
        register_pair(reg, "mycielski-lift-t1", std::move(lift1.hypergraph), std::move(lift1.order),
                      AltKind::ALT);
        if (scale != "tiny") {
            Hypergraph f2({1, 2}, {{1}, {2}});
            auto lift2 = mycielski_representation(f2, LinearOrder::natural(f2), 2);
            register_pair(reg, "mycielski-lift-t2", std::move(lift2.hypergraph),
                          std::move(lift2.order), AltKind::ALT);
        }
    }
    {
        auto add_product = [&reg](const std::string& name, const Hypergraph& a, const Hypergraph& b) {
            auto rep = product_representation(a, b);
            auto pi = concat_order(relabel_order(LinearOrder::natural(a), rep.left_map),
                                   relabel_order(LinearOrder::natural(b), rep.right_map));
            register_pair(reg, name, rep.hypergraph, pi, AltKind::ALT);
            register_pair(reg, name, rep.hypergraph, pi, AltKind::SALT);
        };
        add_product("product-sg52-sg62", stable_pairs_hypergraph(5, 2), stable_pairs_hypergraph(6, 2));
        if (scale != "tiny")
            add_product("product-sg62-sg73", stable_pairs_hypergraph(6, 2),
                        stable_pairs_hypergraph(7, 3));
    }
    for (int t = 0; t < pair_count(scale); ++t) {
        auto d = make_random_pair(seed, t);
        char tag[8];
        std::snprintf(tag, sizeof tag, "%03d", t);
        register_pair(reg, "product-pair-" + std::string(tag), d.product.hypergraph, d.pi,
                      AltKind::ALT);
        register_pair(reg, "product-pair-" + std::string(tag), d.product.hypergraph, d.pi,
                      AltKind::SALT);
    }
    return reg;
}

void add_soundness_sweep(std::vector<Pending>& out, const std::string& scale, std::uint64_t seed) {
    auto reg = build_registry(scale, seed);
    for (auto& [key, entry] : reg) {
        out.push_back({"sweep/" + key, "certificate bounds vs exact chi (" + entry.source + ")",
                       [e = entry](InstanceResult& r) {
                           auto chi = chromatic_number(kneser_graph(e.h).graph);
                           int n = e.h.num_vertices();
                           std::string got = "chi=" + fmt_int(chi.lower);
                           bool ok = chi.exact();
                           if (e.alt) {
                               int b = certificate_bound(AltKind::ALT, n,
                                                         alt_sigma(e.h, e.o).value);
                               ok = ok && b <= chi.lower;
                               got += " alt-bound=" + fmt_int(b);
                           }
                           if (e.salt) {
                               int b = certificate_bound(AltKind::SALT, n,
                                                         salt_sigma(e.h, e.o).value);
                               ok = ok && b <= chi.lower;
                               got += " salt-bound=" + fmt_int(b);
                           }
                           set_outcome(r, ok, "every bound <= chi", got);
                       }});
    }
}

void add_soundness(std::vector<Pending>& out, const std::string& scale, std::uint64_t seed) {
    add_salt_kernel(out, scale);
    add_kneser_usual(out, scale);
    add_soundness_sweep(out, scale, seed);
}

// ---------------------------------------------------------------------------
// Runner.

std::vector<Pending> build_suite(const std::string& suite, const SuiteOptions& opts) {
    std::vector<Pending> out;
    bool all = suite == "all";
    if (all || suite == "soundness") add_soundness(out, opts.scale, opts.seed);
    if (all || suite == "schrijver") add_schrijver(out, opts.scale);
    if (all || suite == "mycielski") add_mycielski(out, opts.scale);
    if (all || suite == "hedetniemi") add_hedetniemi(out, opts.scale, opts.seed);
    if (all || suite == "stahl-chen") add_stahl_chen(out, opts.scale);
    if (all || suite == "gale") add_gale(out, opts.scale, opts.seed, opts.gale_trials);
    return out;
}

} // namespace

const char* suite_status_name(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::PASS: return "PASS";
        case SuiteStatus::FAIL: return "FAIL";
        case SuiteStatus::SKIPPED_CAPACITY: return "SKIPPED-capacity";
    }
    return "FAIL";
}

int SuiteReport::passed() const {
    int c = 0;
    for (const auto& i : instances) c += i.status == SuiteStatus::PASS;
    return c;
}

int SuiteReport::failed() const {
    int c = 0;
    for (const auto& i : instances) c += i.status == SuiteStatus::FAIL;
    return c;
}

int SuiteReport::skipped() const {
    int c = 0;
    for (const auto& i : instances) c += i.status == SuiteStatus::SKIPPED_CAPACITY;
    return c;
}

std::vector<std::string> suite_names() {
    return {"soundness", "schrijver", "mycielski", "hedetniemi", "stahl-chen", "gale", "all"};
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& opts) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw InputError("unknown suite \"" + suite + "\"");
    if (opts.scale != "tiny" && opts.scale != "desk")
        throw InputError("unknown scale \"" + opts.scale + "\" (expected tiny or desk)");

    auto pending = build_suite(suite, opts);
    std::sort(pending.begin(), pending.end(),
              [](const Pending& a, const Pending& b) { return a.id < b.id; });

    SuiteReport report;
    report.suite = suite;
    report.scale = opts.scale;
    report.seed = opts.seed;
    report.threads = std::max(1, opts.threads);
    report.instances.resize(pending.size());

    auto start = std::chrono::steady_clock::now();
    auto deadline = start + std::chrono::milliseconds(opts.timeout_ms < 0 ? 0 : opts.timeout_ms);
    bool has_deadline = opts.timeout_ms >= 0;
    std::atomic<size_t> next{0};
    std::atomic<bool> timed_out{false};

    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= pending.size()) return;
            InstanceResult& r = report.instances[i];
            r.id = pending[i].id;
            r.description = pending[i].description;
            if (has_deadline && std::chrono::steady_clock::now() >= deadline) {
                timed_out.store(true);
                r.status = SuiteStatus::SKIPPED_CAPACITY;
                r.computed = "not run: suite deadline";
                continue;
            }
            auto t0 = std::chrono::steady_clock::now();
            try {
                pending[i].run(r);
            } catch (const CapacityError& e) {
                r.status = SuiteStatus::SKIPPED_CAPACITY;
                r.computed = e.what();
            } catch (const std::exception& e) {
                r.status = SuiteStatus::FAIL;
                r.computed = std::string("error: ") + e.what();
            }
            auto t1 = std::chrono::steady_clock::now();
            r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        }
    };

    int nthreads = std::min<size_t>(report.threads, std::max<size_t>(pending.size(), 1));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    report.timed_out = timed_out.load();
    report.total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return report;
}

std::string suite_report_json(const SuiteReport& r) {
    json doc;
    doc["schema"] = 1;
    doc["tool_version"] = kVersion;
    doc["suite"] = r.suite;
    doc["scale"] = r.scale;
    doc["seed"] = r.seed;
    json instances = json::array();
    for (const auto& i : r.instances) {
        json e;
        e["id"] = i.id;
        e["description"] = i.description;
        e["expected"] = i.expected;
        e["computed"] = i.computed;
        e["status"] = suite_status_name(i.status);
        instances.push_back(std::move(e));
    }
    doc["instances"] = std::move(instances);
    doc["summary"] = {{"pass", r.passed()}, {"fail", r.failed()}, {"skipped", r.skipped()}};

    json timing;
    timing["threads"] = r.threads;
    timing["total_ms"] = r.total_ms;
    timing["timed_out"] = r.timed_out;
    json per;
    for (const auto& i : r.instances) per[i.id] = i.runtime_ms;
    timing["per_instance_ms"] = std::move(per);
    char stamp[32];
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
    timing["timestamp"] = stamp;
    doc["timing"] = std::move(timing);
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string md_field(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

} // namespace

std::string suite_report_csv(const SuiteReport& r) {
    std::ostringstream out;
    out << "id,status,expected,computed,description\n";
    for (const auto& i : r.instances)
        out << csv_field(i.id) << ',' << suite_status_name(i.status) << ',' << csv_field(i.expected)
            << ',' << csv_field(i.computed) << ',' << csv_field(i.description) << "\n";
    return out.str();
}

std::string suite_report_markdown(const SuiteReport& r) {
    std::ostringstream out;
    out << "# Suite " << r.suite << " (" << r.scale << ", seed " << r.seed << ")\n\n";
    out << "| instance | status | expected | computed |\n|---|---|---|---|\n";
    for (const auto& i : r.instances)
        out << "| " << md_field(i.id) << " | " << suite_status_name(i.status) << " | "
            << md_field(i.expected) << " | " << md_field(i.computed) << " |\n";
    out << "\n" << r.passed() << " passed, " << r.failed() << " failed, " << r.skipped()
        << " skipped.\n";
    return out.str();
}

} // namespace altkg
