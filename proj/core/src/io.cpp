#include "altkg/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "altkg/errors.hpp"
#include "altkg/version.hpp"

namespace altkg {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

std::vector<Vertex> vertex_array(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be a JSON array of integers");
    std::vector<Vertex> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw InputError(std::string(what) + " must contain only integers");
        out.push_back(v.get<Vertex>());
    }
    return out;
}

json hypergraph_json(const Hypergraph& h) {
    json j;
    j["vertices"] = h.vertices();
    json edges = json::array();
    for (const auto& e : h.edges()) edges.push_back(e);
    j["edges"] = std::move(edges);
    return j;
}

Hypergraph hypergraph_from(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("hypergraph JSON must be an object with \"vertices\" and \"edges\"");
    auto vertices = vertex_array(j["vertices"], "\"vertices\"");
    if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array of vertex arrays");
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(j["edges"].size());
    for (const auto& e : j["edges"]) edges.push_back(vertex_array(e, "each edge"));
    return Hypergraph(vertices, edges);
}

const char* kind_name(AltKind k) { return k == AltKind::ALT ? "ALT" : "SALT"; }

AltKind kind_from(const std::string& s) {
    if (s == "ALT") return AltKind::ALT;
    if (s == "SALT") return AltKind::SALT;
    throw InputError("unknown kind \"" + s + "\" (expected ALT or SALT)");
}

const char* method_name(CertMethod m) {
    switch (m) {
        case CertMethod::EXHAUSTIVE: return "EXHAUSTIVE";
        case CertMethod::BRANCH_AND_BOUND: return "BRANCH_AND_BOUND";
        case CertMethod::HEURISTIC_ORDER_SEARCH: return "HEURISTIC_ORDER_SEARCH";
    }
    return "BRANCH_AND_BOUND";
}

CertMethod method_from(const std::string& s) {
    if (s == "EXHAUSTIVE") return CertMethod::EXHAUSTIVE;
    if (s == "BRANCH_AND_BOUND") return CertMethod::BRANCH_AND_BOUND;
    if (s == "HEURISTIC_ORDER_SEARCH") return CertMethod::HEURISTIC_ORDER_SEARCH;
    throw InputError("unknown certificate method \"" + s + "\"");
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw InputError("error while reading file: " + path);
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open file for writing: " + path);
    out << content;
    if (!out) throw InputError("error while writing file: " + path);
}

std::string hypergraph_to_json(const Hypergraph& h) { return hypergraph_json(h).dump(2) + "\n"; }

Hypergraph hypergraph_from_json(const std::string& text) {
    return hypergraph_from(parse(text, "hypergraph"));
}

std::string order_to_json(const LinearOrder& o) { return json(o.order).dump() + "\n"; }

LinearOrder order_from_json(const std::string& text) {
    return LinearOrder(vertex_array(parse(text, "order"), "order"));
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.num_vertices();
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    bool labeled = false;
    for (int v = 0; v < g.num_vertices() && !labeled; ++v)
        if (!g.label(v).empty()) labeled = true;
    if (labeled) {
        json labels = json::array();
        for (int v = 0; v < g.num_vertices(); ++v) labels.push_back(g.label(v));
        j["labels"] = std::move(labels);
    }
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    json j = parse(text, "graph");
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph JSON must be an object with \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_integer() || j["vertices"].get<int>() < 0)
        throw InputError("\"vertices\" must be a nonnegative vertex count");
    int n = j["vertices"].get<int>();
    Graph g(n);
    if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array of [u,v] pairs");
    for (const auto& e : j["edges"]) {
        auto pair = vertex_array(e, "each edge");
        if (pair.size() != 2) throw InputError("graph edges must have exactly two endpoints");
        if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n)
            throw InputError("edge endpoint out of range");
        g.add_edge(pair[0], pair[1]);
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
            throw InputError("\"labels\" must list one string per vertex");
        for (int v = 0; v < n; ++v) {
            if (!j["labels"][static_cast<size_t>(v)].is_string())
                throw InputError("\"labels\" must list one string per vertex");
            g.set_label(v, j["labels"][static_cast<size_t>(v)].get<std::string>());
        }
    }
    return g;
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.num_vertices() << "\n";
    for (auto [u, v] : g.edge_list()) out << u << " " << v << "\n";
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        if (!g) {
            std::string tag;
            int n = -1;
            if (!(fields >> tag >> n) || tag != "p" || n < 0)
                throw InputError("graph text line " + std::to_string(lineno) +
                                 ": expected header \"p <vertex count>\"");
            g.emplace(n);
            continue;
        }
        int u, v;
        if (!(fields >> u >> v))
            throw InputError("graph text line " + std::to_string(lineno) +
                             ": expected an edge \"u v\"");
        if (u < 0 || u >= g->num_vertices() || v < 0 || v >= g->num_vertices())
            throw InputError("graph text line " + std::to_string(lineno) +
                             ": endpoint out of range");
        g->add_edge(u, v);
    }
    if (!g) throw InputError("graph text is empty (missing \"p <vertex count>\" header)");
    return *g;
}

std::string certificate_to_json(const AltCertificate& c) {
    json j;
    j["format"] = "alt-certificate";
    j["tool_version"] = kVersion;
    j["kind"] = kind_name(c.kind);
    j["value"] = c.value;
    j["bound"] = c.bound();
    j["method"] = method_name(c.method);
    if (c.seed) j["seed"] = *c.seed;
    else j["seed"] = nullptr;
    j["hypergraph"] = hypergraph_json(c.hypergraph);
    j["order"] = c.order.order;
    json witness = json::array();
    for (auto s : c.witness.x) witness.push_back(int(s));
    j["witness"] = std::move(witness);
    return j.dump(2) + "\n";
}

AltCertificate certificate_from_json(const std::string& text) {
    json j = parse(text, "certificate");
    for (const char* key : {"kind", "value", "hypergraph", "order", "witness", "method"})
        if (!j.is_object() || !j.contains(key))
            throw InputError(std::string("certificate JSON is missing \"") + key + "\"");
    AltCertificate c;
    c.hypergraph = hypergraph_from(j["hypergraph"]);
    c.order = LinearOrder(vertex_array(j["order"], "\"order\""));
    c.order.validate_for(c.hypergraph);
    c.kind = kind_from(j["kind"].get<std::string>());
    if (!j["value"].is_number_integer()) throw InputError("certificate \"value\" must be an integer");
    c.value = j["value"].get<int>();
    c.method = method_from(j["method"].get<std::string>());
    if (j.contains("seed") && j["seed"].is_number_unsigned())
        c.seed = j["seed"].get<std::uint64_t>();
    std::vector<std::int8_t> signs;
    for (const auto& s : j["witness"]) {
        if (!s.is_number_integer() || s.get<int>() < -1 || s.get<int>() > 1)
            throw InputError("certificate witness entries must be -1, 0 or +1");
        signs.push_back(static_cast<std::int8_t>(s.get<int>()));
    }
    c.witness = SignVector(std::move(signs));
    return c;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string instance_key(const Hypergraph& h, const LinearOrder& o, AltKind kind) {
    // Canonical: hypergraph stores vertices and edges sorted, so dump() is
    // deterministic across runs and platforms.
    std::string canon = hypergraph_json(h).dump() + "|" + json(o.order).dump() + "|" + kind_name(kind);
    std::uint64_t hash = fnv1a64(canon);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

std::string store_certificate(const std::string& dir, const AltCertificate& c) {
    std::filesystem::path base(dir);
    std::error_code ec;
    std::filesystem::create_directories(base, ec);
    if (ec) throw InputError("cannot create certificate directory " + dir + ": " + ec.message());
    std::filesystem::path file = base / (instance_key(c.hypergraph, c.order, c.kind) + ".json");
    write_text_file(file.string(), certificate_to_json(c));
    return file.string();
}

} // namespace altkg
