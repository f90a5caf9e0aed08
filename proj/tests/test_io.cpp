#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "altkg/alternation.hpp"
#include "altkg/errors.hpp"
#include "altkg/io.hpp"
#include "altkg/kneser.hpp"

#include "test_util.hpp"

using namespace altkg;

namespace {

std::filesystem::path scratch_dir() {
    auto p = std::filesystem::temp_directory_path() / "altkg-io-test";
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("hypergraph json round trip") {
    SplitMix64 rng(91);
    for (int t = 0; t < 30; ++t) {
        Hypergraph h = testutil::random_hypergraph(rng, rng.int_in(1, 8), rng.int_in(0, 6));
        Hypergraph back = hypergraph_from_json(hypergraph_to_json(h));
        CHECK(back == h);
    }
    CHECK_THROWS_AS(hypergraph_from_json("{\"vertices\": [1,"), InputError);
    CHECK_THROWS_AS(hypergraph_from_json("{\"edges\": []}"), InputError);
    CHECK_THROWS_AS(hypergraph_from_json("{\"vertices\": [1], \"edges\": [[2]]}"), InputError);
    // Parse diagnostics point at the offending position.
    try {
        hypergraph_from_json("{\n  \"vertices\": [1,\n}");
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("order json round trip") {
    LinearOrder o({3, 1, 2});
    CHECK(order_from_json(order_to_json(o)).order == o.order);
    CHECK(order_to_json(o) == "[3,1,2]\n");
    CHECK_THROWS_AS(order_from_json("{\"not\": \"array\"}"), InputError);
}

TEST_CASE("graph json and text round trips") {
    SplitMix64 rng(92);
    for (int t = 0; t < 30; ++t) {
        Graph g = testutil::random_graph(rng, rng.int_in(0, 9), 0.4);
        CHECK(graph_from_json(graph_to_json(g)) == g);
        CHECK(graph_from_text(graph_to_text(g)) == g);
    }
    // Labels survive the JSON form.
    Graph g(2);
    g.add_edge(0, 1);
    g.set_label(0, "{1,2}");
    g.set_label(1, "{3,4}");
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.label(0) == "{1,2}");
    CHECK(back.label(1) == "{3,4}");

    CHECK_THROWS_AS(graph_from_text("p x\n"), InputError);
    CHECK_THROWS_AS(graph_from_text("p 2\n0 5\n"), InputError);
    CHECK_THROWS_AS(graph_from_text("0 1\n"), InputError);
    Graph commented = graph_from_text("# banner\np 3\n\n0 1\n# mid\n1 2\n");
    CHECK(commented.num_edges() == 2);
}

TEST_CASE("certificate json round trip") {
    auto rep = kneser(5, 2);
    auto cert = make_certificate(rep.hypergraph, LinearOrder::natural(rep.hypergraph),
                                 AltKind::ALT);
    AltCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.hypergraph == cert.hypergraph);
    CHECK(back.order.order == cert.order.order);
    CHECK(back.kind == cert.kind);
    CHECK(back.value == cert.value);
    CHECK(back.bound() == cert.bound());
    CHECK(back.witness.x == cert.witness.x);
    CHECK(back.method == cert.method);
    std::string why;
    CHECK(check_certificate_witness(back, &why));

    CHECK_THROWS_AS(certificate_from_json("{}"), InputError);
    // A tampered witness value is rejected by the checker.
    AltCertificate bad = back;
    bad.value += 1;
    CHECK(!check_certificate_witness(bad));
}

TEST_CASE("instance keys are stable and kind-sensitive") {
    auto rep = kneser(5, 2);
    LinearOrder o = LinearOrder::natural(rep.hypergraph);
    std::string k1 = instance_key(rep.hypergraph, o, AltKind::ALT);
    std::string k2 = instance_key(rep.hypergraph, o, AltKind::ALT);
    CHECK(k1 == k2);
    CHECK(k1.size() == 16);
    CHECK(instance_key(rep.hypergraph, o, AltKind::SALT) != k1);
    LinearOrder shuffled({2, 1, 3, 4, 5});
    CHECK(instance_key(rep.hypergraph, shuffled, AltKind::ALT) != k1);

    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") != fnv1a64("b"));
}

TEST_CASE("certificate store is content addressed") {
    auto dir = scratch_dir();
    auto rep = kneser(5, 2);
    auto cert = make_certificate(rep.hypergraph, LinearOrder::natural(rep.hypergraph),
                                 AltKind::ALT);
    std::string path1 = store_certificate(dir.string(), cert);
    std::string path2 = store_certificate(dir.string(), cert);
    CHECK(path1 == path2);  // reruns overwrite, not accumulate
    CHECK(std::filesystem::exists(path1));
    AltCertificate loaded = certificate_from_json(read_text_file(path1));
    CHECK(loaded.value == cert.value);

    int files = 0;
    for (auto& entry : std::filesystem::directory_iterator(dir)) {
        (void)entry;
        ++files;
    }
    CHECK(files == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("file helpers report the path") {
    try {
        read_text_file("/nonexistent/altkg-missing.json");
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("altkg-missing.json") != std::string::npos);
    }
    auto dir = scratch_dir();
    auto p = (dir / "echo.txt").string();
    write_text_file(p, "hello\n");
    CHECK(read_text_file(p) == "hello\n");
    std::filesystem::remove_all(dir);
}
