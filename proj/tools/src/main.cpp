#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "altkg/alternation.hpp"
#include "altkg/coloring.hpp"
#include "altkg/constructions.hpp"
#include "altkg/errors.hpp"
#include "altkg/gale.hpp"
#include "altkg/homomorphism.hpp"
#include "altkg/io.hpp"
#include "altkg/kneser.hpp"
#include "altkg/multicoloring.hpp"
#include "altkg/representations.hpp"
#include "altkg/signed_property.hpp"
#include "altkg/suites.hpp"
#include "altkg/version.hpp"

using namespace altkg;
using nlohmann::json;

namespace {

// Exit codes: 0 done, 1 verification failed, 2 input error, 3 over capacity,
// 10 object found / satisfiable, 20 no object / unsatisfiable, 30 budget or
// deadline hit (result is an interval, not an answer).
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kCapacity = 3;
constexpr int kFound = 10;
constexpr int kNone = 20;
constexpr int kTimeout = 30;

struct GlobalOpts {
    std::uint64_t seed = 42;
    int threads = 1;
    std::int64_t timeout_ms = -1;
    std::string out;          // default: $ALTKG_OUT
    std::string format = "json";
};

Hypergraph load_hypergraph(const std::string& path) {
    return hypergraph_from_json(read_text_file(path));
}

LinearOrder load_order(const std::string& path) { return order_from_json(read_text_file(path)); }

Graph load_graph(const std::string& path) {
    std::string text = read_text_file(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return graph_from_json(text);
    return graph_from_text(text);
}

LinearOrder order_or_natural(const std::string& path, const Hypergraph& h) {
    if (path.empty()) return LinearOrder::natural(h);
    LinearOrder o = load_order(path);
    o.validate_for(h);
    return o;
}

void maybe_write(const GlobalOpts& g, const std::string& filename, const std::string& content) {
    if (g.out.empty()) return;
    std::filesystem::create_directories(g.out);
    std::string path = g.out + "/" + filename;
    write_text_file(path, content);
    std::cerr << "wrote " << path << "\n";
}

void maybe_store(const GlobalOpts& g, const AltCertificate& c) {
    if (g.out.empty()) return;
    std::cerr << "stored " << store_certificate(g.out, c) << "\n";
}

int parse_int(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string("expected an integer for ") + what + ", got \"" + s + "\"");
    }
}

SearchMode parse_mode(const std::string& s) {
    if (s == "exhaustive") return SearchMode::EXHAUSTIVE;
    if (s == "bb") return SearchMode::BRANCH_AND_BOUND;
    throw InputError("unknown search mode \"" + s + "\" (expected exhaustive or bb)");
}

// ---------------------------------------------------------------------------
// alt / salt

struct AltArgs {
    std::string hypergraph, order;
    std::string mode = "bb";
};

int cmd_alt(const GlobalOpts& g, const AltArgs& a, AltKind kind) {
    Hypergraph h = load_hypergraph(a.hypergraph);
    LinearOrder sigma = order_or_natural(a.order, h);
    AltCertificate cert = make_certificate(h, sigma, kind, parse_mode(a.mode));
    std::cout << certificate_to_json(cert) << "\n";
    maybe_store(g, cert);
    return kOk;
}

// ---------------------------------------------------------------------------
// alt-min / zeta-cert

struct MinArgs {
    std::string hypergraph;
    std::string kind = "alt";
    std::string strategy = "auto";
    int restarts = 24;
    int factorial_cap = 9;
};

AltMinResult run_min(const GlobalOpts& g, const MinArgs& a, const Hypergraph& h, AltKind kind) {
    AltMinOptions opts;
    opts.kind = kind;
    opts.restarts = a.restarts;
    opts.factorial_cap = a.factorial_cap;
    opts.seed = g.seed;
    if (a.strategy == "exact") opts.strategy = AltMinStrategy::EXACT_ALL_ORDERS;
    else if (a.strategy == "local") opts.strategy = AltMinStrategy::LOCAL_SEARCH;
    else if (a.strategy == "auto")
        opts.strategy = h.num_vertices() <= a.factorial_cap ? AltMinStrategy::EXACT_ALL_ORDERS
                                                            : AltMinStrategy::LOCAL_SEARCH;
    else
        throw InputError("unknown strategy \"" + a.strategy + "\" (expected exact, local or auto)");
    return alt_min(h, opts);
}

json min_json(const Hypergraph& h, const AltMinResult& r) {
    AltCertificate cert = make_certificate(h, r);
    json doc;
    doc["value"] = r.value;
    doc["bound"] = cert.bound();
    doc["orders_tried"] = r.orders_tried;
    doc["strategy"] = r.strategy == AltMinStrategy::EXACT_ALL_ORDERS ? "exact" : "local";
    doc["certificate"] = json::parse(certificate_to_json(cert));
    return doc;
}

int cmd_alt_min(const GlobalOpts& g, const MinArgs& a) {
    Hypergraph h = load_hypergraph(a.hypergraph);
    AltKind kind;
    if (a.kind == "alt") kind = AltKind::ALT;
    else if (a.kind == "salt") kind = AltKind::SALT;
    else throw InputError("unknown kind \"" + a.kind + "\" (expected alt or salt)");
    AltMinResult r = run_min(g, a, h, kind);
    std::cout << min_json(h, r).dump(2) << "\n";
    maybe_store(g, make_certificate(h, r));
    return kOk;
}

int cmd_zeta_cert(const GlobalOpts& g, const MinArgs& a) {
    Hypergraph h = load_hypergraph(a.hypergraph);
    AltMinResult ra = run_min(g, a, h, AltKind::ALT);
    AltMinResult rs = run_min(g, a, h, AltKind::SALT);
    json doc;
    doc["zeta"] = certificate_bound(AltKind::ALT, h.num_vertices(), ra.value);
    doc["zeta_strong"] = certificate_bound(AltKind::SALT, h.num_vertices(), rs.value);
    doc["alt"] = min_json(h, ra);
    doc["salt"] = min_json(h, rs);
    std::cout << doc.dump(2) << "\n";
    maybe_store(g, make_certificate(h, ra));
    maybe_store(g, make_certificate(h, rs));
    return kOk;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
    std::string family;
    std::vector<std::string> params;
    std::string order;
    int t = 1;
    int edge_a = 0, edge_b = 1;
};

void need_params(const ConstructArgs& a, size_t count, const char* usage) {
    if (a.params.size() != count)
        throw InputError(std::string("usage: construct ") + usage);
}

json rep_json(const OrderedRepresentation& rep) {
    json doc;
    doc["hypergraph"] = json::parse(hypergraph_to_json(rep.hypergraph));
    doc["order"] = json::parse(order_to_json(rep.order));
    return doc;
}

int cmd_construct(const GlobalOpts& g, const ConstructArgs& a) {
    std::string out_text;
    std::string tag = a.family;
    if (a.family == "kneser" || a.family == "schrijver") {
        need_params(a, 2, a.family == "kneser" ? "kneser <n> <k>" : "schrijver <n> <k>");
        int n = parse_int(a.params[0], "n"), k = parse_int(a.params[1], "k");
        Graph gr = a.family == "kneser" ? kneser(n, k).graph : stable_kneser(n, k, 2).graph;
        out_text = graph_to_json(gr);
    } else if (a.family == "stable-kneser") {
        need_params(a, 3, "stable-kneser <n> <k> <s>");
        out_text = graph_to_json(stable_kneser(parse_int(a.params[0], "n"),
                                               parse_int(a.params[1], "k"),
                                               parse_int(a.params[2], "s"))
                                     .graph);
    } else if (a.family == "mycielski") {
        need_params(a, 1, "mycielski <graph-file>");
        out_text = graph_to_json(mycielskian(load_graph(a.params[0])));
    } else if (a.family == "blowup") {
        if (a.params.size() < 2)
            throw InputError("usage: construct blowup <graph-file> <r1> ... <rn>");
        Graph gr = load_graph(a.params[0]);
        std::vector<int> r, mu;
        for (size_t i = 1; i < a.params.size(); ++i)
            r.push_back(parse_int(a.params[i], "multiplicity"));
        for (int v = 0; v < gr.num_vertices(); ++v) mu.push_back(v);
        out_text = graph_to_json(blow_up(gr, r, mu));
    } else if (a.family == "product") {
        need_params(a, 2, "product <graph-file> <graph-file>");
        out_text = graph_to_json(
            categorical_product(load_graph(a.params[0]), load_graph(a.params[1])));
    } else if (a.family == "rep") {
        if (a.params.empty())
            throw InputError(
                "usage: construct rep <sg2|sg-odd|half|mycielski|product|extend-isolated|"
                "extend-edge> ...");
        std::string sub = a.params[0];
        tag += "-" + sub;
        ConstructArgs rest = a;
        rest.params.erase(rest.params.begin());
        if (sub == "sg2" || sub == "sg-odd" || sub == "half") {
            need_params(rest, 1, ("rep " + sub + " <param>").c_str());
            SchrijverOrderVariant v = sub == "sg2"      ? SchrijverOrderVariant::TWO_SUBSETS_EVEN
                                      : sub == "sg-odd" ? SchrijverOrderVariant::TWO_SUBSETS_ODD
                                                        : SchrijverOrderVariant::HALF_KNESER;
            out_text = rep_json(schrijver_interleaved_representation(
                                    parse_int(rest.params[0], "param"), v))
                           .dump(2);
        } else if (sub == "mycielski") {
            need_params(rest, 1, "rep mycielski <hypergraph-file> [--order F] [--t T]");
            Hypergraph f = load_hypergraph(rest.params[0]);
            auto lift = mycielski_representation(f, order_or_natural(a.order, f), a.t);
            json doc;
            doc["hypergraph"] = json::parse(hypergraph_to_json(lift.hypergraph));
            doc["order"] = json::parse(order_to_json(lift.order));
            doc["tau"] = json::parse(order_to_json(lift.tau));
            doc["multiplicities"] = lift.multiplicities;
            doc["blown_mycielskian"] = json::parse(graph_to_json(lift.blown_mycielskian));
            out_text = doc.dump(2);
        } else if (sub == "product") {
            need_params(rest, 2, "rep product <hypergraph-file> <hypergraph-file>");
            auto rep = product_representation(load_hypergraph(rest.params[0]),
                                              load_hypergraph(rest.params[1]));
            json doc;
            doc["hypergraph"] = json::parse(hypergraph_to_json(rep.hypergraph));
            doc["left_size"] = rep.left_size;
            doc["right_size"] = rep.right_size;
            json lm, rm;
            for (auto [from, to] : rep.left_map) lm[std::to_string(from)] = to;
            for (auto [from, to] : rep.right_map) rm[std::to_string(from)] = to;
            doc["left_map"] = std::move(lm);
            doc["right_map"] = std::move(rm);
            out_text = doc.dump(2);
        } else if (sub == "extend-isolated") {
            need_params(rest, 1, "rep extend-isolated <hypergraph-file> [--order F]");
            Hypergraph h = load_hypergraph(rest.params[0]);
            out_text = rep_json(extend_representation_isolated(h, order_or_natural(a.order, h)))
                           .dump(2);
        } else if (sub == "extend-edge") {
            need_params(rest, 1, "rep extend-edge <hypergraph-file> [--order F] [--a I] [--b J]");
            Hypergraph h = load_hypergraph(rest.params[0]);
            out_text = rep_json(extend_representation_edge(h, order_or_natural(a.order, h),
                                                           a.edge_a, a.edge_b))
                           .dump(2);
        } else {
            throw InputError("unknown rep family \"" + sub + "\"");
        }
    } else {
        throw InputError("unknown construct family \"" + a.family + "\"");
    }
    std::cout << out_text << (out_text.empty() || out_text.back() == '\n' ? "" : "\n");
    maybe_write(g, "construct-" + tag + ".json", out_text);
    return kOk;
}

// ---------------------------------------------------------------------------
// chi / multichi / hom

struct ChiArgs {
    std::string graph;
    int k = -1;
    std::uint64_t node_budget = SolveLimits{}.node_budget;
    int vertex_cap = SolveLimits{}.vertex_cap;
};

json coloring_json(const Coloring& c) {
    json doc;
    doc["k"] = c.k;
    doc["color"] = c.color;
    return doc;
}

int cmd_chi(const GlobalOpts& g, const ChiArgs& a) {
    Graph gr = load_graph(a.graph);
    SolveLimits limits{a.node_budget, a.vertex_cap};
    json doc;
    int code;
    if (a.k >= 0) {
        auto col = is_k_colorable(gr, a.k, limits);
        doc["k"] = a.k;
        doc["colorable"] = col.has_value();
        if (col) doc["coloring"] = coloring_json(*col);
        code = col ? kFound : kNone;
    } else {
        auto chi = chromatic_number(gr, limits);
        doc["lower"] = chi.lower;
        doc["upper"] = chi.upper;
        doc["exact"] = chi.exact();
        if (chi.witness) doc["coloring"] = coloring_json(*chi.witness);
        code = chi.exact() ? kOk : kTimeout;
    }
    std::cout << doc.dump(2) << "\n";
    maybe_write(g, "chi.json", doc.dump(2) + "\n");
    return code;
}

struct MultiChiArgs {
    std::string graph;
    int m = 1;
    int palette = -1;
    std::uint64_t node_budget = SolveLimits{}.node_budget;
};

json multicoloring_json(const Multicoloring& mc) {
    json doc;
    doc["m"] = mc.m;
    doc["n"] = mc.n;
    json sets = json::array();
    for (Mask s : mc.sets) {
        json one = json::array();
        for (Mask rest = s; rest; rest &= rest - 1) one.push_back(lowest_bit(rest));
        sets.push_back(std::move(one));
    }
    doc["sets"] = std::move(sets);
    return doc;
}

int cmd_multichi(const GlobalOpts& g, const MultiChiArgs& a) {
    Graph gr = load_graph(a.graph);
    SolveLimits limits;
    limits.node_budget = a.node_budget;
    json doc;
    int code;
    if (a.palette >= 0) {
        auto mc = multicoloring_exists(gr, a.m, a.palette, limits);
        doc["m"] = a.m;
        doc["n"] = a.palette;
        doc["colorable"] = mc.has_value();
        if (mc) doc["multicoloring"] = multicoloring_json(*mc);
        code = mc ? kFound : kNone;
    } else {
        auto res = multichromatic_number(gr, a.m, limits);
        doc["m"] = a.m;
        doc["lower"] = res.lower;
        doc["upper"] = res.upper;
        doc["exact"] = res.exact();
        if (res.witness) doc["multicoloring"] = multicoloring_json(*res.witness);
        code = res.exact() ? kOk : kTimeout;
    }
    std::cout << doc.dump(2) << "\n";
    maybe_write(g, "multichi.json", doc.dump(2) + "\n");
    return code;
}

struct HomArgs {
    std::string from, to;
    std::uint64_t node_budget = SolveLimits{}.node_budget;
};

int cmd_hom(const GlobalOpts& g, const HomArgs& a) {
    Graph from = load_graph(a.from), to = load_graph(a.to);
    SolveLimits limits;
    limits.node_budget = a.node_budget;
    auto f = has_homomorphism(from, to, limits);
    json doc;
    doc["exists"] = f.has_value();
    if (f) doc["map"] = *f;
    std::cout << doc.dump(2) << "\n";
    maybe_write(g, "hom.json", doc.dump(2) + "\n");
    return f ? kFound : kNone;
}

// ---------------------------------------------------------------------------
// gale

struct GaleArgs {
    std::string hypergraph, order;
    int m = -1;               // default: derived from the property below
    std::string property = "plus";
    std::uint64_t trials = 10000;
};

int cmd_gale(const GlobalOpts& g, const GaleArgs& a) {
    Hypergraph h = load_hypergraph(a.hypergraph);
    LinearOrder sigma = order_or_natural(a.order, h);
    int n = h.num_vertices();

    std::shared_ptr<SignedProperty> prop;
    int value;
    if (a.property == "plus") {
        prop = plus_side_edge_property(h);
        value = salt_sigma(h, sigma).value;
    } else if (a.property == "either") {
        prop = either_side_edge_property(h);
        value = alt_sigma(h, sigma).value;
    } else {
        throw InputError("unknown property \"" + a.property + "\" (expected plus or either)");
    }
    int m = a.m >= 0 ? a.m : n - value - 1;
    if (m < 0)
        throw InputError("derived sphere dimension is negative (value=" + std::to_string(value) +
                         "); pass --m explicitly");

    auto cfg = gale_points(n, m, sigma);
    auto rep = verify_gale(cfg, *prop, a.trials, g.seed);

    json doc;
    doc["n"] = n;
    doc["m"] = m;
    doc["property"] = a.property;
    doc["seed"] = rep.seed;
    doc["trials"] = rep.trials;
    doc["resamples"] = rep.resamples;
    doc["failures"] = rep.failures;
    doc["first_failure"] = rep.first_failure;
    doc["failing_directions"] = rep.failing_directions;
    std::cout << doc.dump(2) << "\n";
    maybe_write(g, "gale.json", doc.dump(2) + "\n");
    return rep.failures == 0 ? kOk : kFail;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string suite;
    std::string scale = "desk";
    std::int64_t trials = -1;
};

int cmd_verify(const GlobalOpts& g, const VerifyArgs& a) {
    SuiteOptions opts;
    opts.scale = a.scale;
    opts.seed = g.seed;
    opts.threads = g.threads;
    opts.timeout_ms = g.timeout_ms;
    opts.gale_trials = a.trials;
    SuiteReport report = run_suite(a.suite, opts);

    std::string ext = g.format, text;
    if (g.format == "json") text = suite_report_json(report);
    else if (g.format == "csv") text = suite_report_csv(report);
    else if (g.format == "md") text = suite_report_markdown(report);
    else throw InputError("unknown format \"" + g.format + "\" (expected json, csv or md)");
    std::cout << text;
    maybe_write(g, "report-" + a.suite + "-" + a.scale + "." + ext, text);

    if (report.failed() > 0) return kFail;
    if (report.timed_out) return kTimeout;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    if (const char* env = std::getenv("ALTKG_OUT")) g.out = env;

    CLI::App app{"alternation certificates and verification for general Kneser graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    app.add_option("--seed", g.seed, "random seed for every seeded computation");
    app.add_option("--threads", g.threads, "worker threads for suite runs");
    app.add_option("--timeout-ms", g.timeout_ms, "suite deadline in milliseconds (-1: none)");
    app.add_option("--out", g.out, "directory for reports and stored certificates ($ALTKG_OUT)");
    app.add_option("--format", g.format, "report format: json, csv or md");

    AltArgs alt_args, salt_args;
    auto add_alt = [&](const char* name, const char* help, AltArgs& a) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("hypergraph", a.hypergraph, "hypergraph JSON file")->required();
        sub->add_option("order", a.order, "ordering JSON file (default: natural order)");
        sub->add_option("--mode", a.mode, "search mode: exhaustive or bb");
        return sub;
    };
    CLI::App* alt_cmd = add_alt("alt", "alternation number of an ordered hypergraph", alt_args);
    CLI::App* salt_cmd =
        add_alt("salt", "strong alternation number of an ordered hypergraph", salt_args);

    MinArgs min_args, zeta_args;
    auto add_min = [&](const char* name, const char* help, MinArgs& a, bool with_kind) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("hypergraph", a.hypergraph, "hypergraph JSON file")->required();
        if (with_kind) sub->add_option("--kind", a.kind, "alt or salt");
        sub->add_option("--strategy", a.strategy, "exact, local or auto");
        sub->add_option("--restarts", a.restarts, "local search restarts");
        sub->add_option("--factorial-cap", a.factorial_cap,
                        "largest vertex count for exact enumeration");
        return sub;
    };
    CLI::App* min_cmd =
        add_min("alt-min", "minimize the alternation number over orderings", min_args, true);
    CLI::App* zeta_cmd = add_min(
        "zeta-cert", "best certified bounds over orderings, both kinds", zeta_args, false);

    ConstructArgs con_args;
    CLI::App* con_cmd = app.add_subcommand(
        "construct", "build graphs, hypergraphs and ordered representations");
    con_cmd->fallthrough();
    con_cmd->add_option("family", con_args.family,
                        "kneser, schrijver, stable-kneser, mycielski, blowup, product or rep")
        ->required();
    con_cmd->add_option("params", con_args.params, "family parameters");
    con_cmd->add_option("--order", con_args.order, "ordering JSON file (default: natural)");
    con_cmd->add_option("--t", con_args.t, "Mycielski parameter t (cycle length 2t+1)");
    con_cmd->add_option("--a", con_args.edge_a, "first hyperedge index for extend-edge");
    con_cmd->add_option("--b", con_args.edge_b, "second hyperedge index for extend-edge");

    ChiArgs chi_args;
    CLI::App* chi_cmd = app.add_subcommand("chi", "chromatic number or k-colorability");
    chi_cmd->fallthrough();
    chi_cmd->add_option("graph", chi_args.graph, "graph file (JSON or edge list)")->required();
    chi_cmd->add_option("-k,--k", chi_args.k, "test k-colorability instead of computing chi");
    chi_cmd->add_option("--node-budget", chi_args.node_budget, "backtracking node budget");
    chi_cmd->add_option("--vertex-cap", chi_args.vertex_cap, "largest admissible vertex count");

    MultiChiArgs mchi_args;
    CLI::App* mchi_cmd = app.add_subcommand("multichi", "m-fold chromatic number");
    mchi_cmd->fallthrough();
    mchi_cmd->add_option("graph", mchi_args.graph, "graph file (JSON or edge list)")->required();
    mchi_cmd->add_option("m", mchi_args.m, "fold count m")->required();
    mchi_cmd->add_option("--palette", mchi_args.palette,
                         "test an m-fold coloring with this palette size instead");
    mchi_cmd->add_option("--node-budget", mchi_args.node_budget, "backtracking node budget");

    HomArgs hom_args;
    CLI::App* hom_cmd = app.add_subcommand("hom", "graph homomorphism existence");
    hom_cmd->fallthrough();
    hom_cmd->add_option("from", hom_args.from, "source graph file")->required();
    hom_cmd->add_option("to", hom_args.to, "target graph file")->required();
    hom_cmd->add_option("--node-budget", hom_args.node_budget, "backtracking node budget");

    GaleArgs gale_args;
    CLI::App* gale_cmd =
        app.add_subcommand("gale", "sample hemispheres of the signed moment-curve configuration");
    gale_cmd->fallthrough();
    gale_cmd->add_option("hypergraph", gale_args.hypergraph, "hypergraph JSON file")->required();
    gale_cmd->add_option("--order", gale_args.order, "ordering JSON file (default: natural)");
    gale_cmd->add_option("--m", gale_args.m, "sphere dimension (default: derived)");
    gale_cmd->add_option("--property", gale_args.property,
                         "hemisphere property: plus or either");
    gale_cmd->add_option("--trials", gale_args.trials, "sample count");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->fallthrough();
    verify_cmd->add_option("suite", verify_args.suite,
                           "soundness, schrijver, mycielski, hedetniemi, stahl-chen, gale or all")
        ->required();
    verify_cmd->add_option("--scale", verify_args.scale, "instance scale: tiny or desk");
    verify_cmd->add_option("--trials", verify_args.trials,
                           "override hemisphere sampling trials in the gale suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (alt_cmd->parsed()) return cmd_alt(g, alt_args, AltKind::ALT);
        if (salt_cmd->parsed()) return cmd_alt(g, salt_args, AltKind::SALT);
        if (min_cmd->parsed()) return cmd_alt_min(g, min_args);
        if (zeta_cmd->parsed()) return cmd_zeta_cert(g, zeta_args);
        if (con_cmd->parsed()) return cmd_construct(g, con_args);
        if (chi_cmd->parsed()) return cmd_chi(g, chi_args);
        if (mchi_cmd->parsed()) return cmd_multichi(g, mchi_args);
        if (hom_cmd->parsed()) return cmd_hom(g, hom_args);
        if (gale_cmd->parsed()) return cmd_gale(g, gale_args);
        if (verify_cmd->parsed()) return cmd_verify(g, verify_args);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kTimeout;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kInput;
}
