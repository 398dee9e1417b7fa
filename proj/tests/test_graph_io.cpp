#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "trgraph/io.hpp"

using namespace trg;
using namespace trg::io;

TEST_CASE("edge list basics") {
    auto p3 = parse_edge_list("0 1\n1 2\n");
    CHECK(p3.graph == make_path(3));
    CHECK(p3.labels.empty());
    CHECK(p3.warnings.empty());

    auto headed = parse_edge_list("n 4\n0 1\n");
    CHECK(headed.graph.vertex_count() == 4);
    CHECK(headed.graph.edge_count() == 1);

    auto named = parse_edge_list("alice bob\nbob carol\n");
    CHECK(named.graph == make_path(3));
    CHECK(named.labels == std::vector<std::string>{"alice", "bob", "carol"});
    CHECK(named.vertex_of("carol") == 2);
    CHECK_FALSE(named.vertex_of("dave").has_value());
}

TEST_CASE("edge list errors and warnings") {
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\na b\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n -3\n"), ParseError);

    try {
        parse_edge_list("0 1\n\n# fine\nbroken\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }

    auto dup = parse_edge_list("0 1\n1 0\n");
    CHECK(dup.graph.edge_count() == 1);
    REQUIRE(dup.warnings.size() == 1);
    CHECK(dup.warnings[0].line == 2);
}

TEST_CASE("graph6 known strings") {
    CHECK(parse_graph6("A_").graph == make_complete(2));
    CHECK(parse_graph6("@").graph == make_edgeless(1));
    CHECK(parse_graph6("Bw").graph == make_complete(3));
    CHECK(parse_graph6("Ch").graph == make_path(4));
    CHECK(parse_graph6(">>graph6<<A_").graph == make_complete(2));

    CHECK(emit_graph6(make_edgeless(1)) == "@");
    CHECK(emit_graph6(make_complete(2)) == "A_");
    CHECK(emit_graph6(make_complete(3)) == "Bw");
    CHECK(emit_graph6(make_path(4)) == "Ch");
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);     // payload too short for n=3
    CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);   // payload too long
    CHECK_THROWS_AS(parse_graph6("A\x1f"), ParseError);  // character out of range
    CHECK_THROWS_AS(parse_graph6("AO"), ParseError);    // nonzero padding bits
}

TEST_CASE("graph6 round trip") {
    testutil::Lcg rng;
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = testutil::random_graph(rng, 1 + rng.below(10), 45);
        CHECK(parse_graph6(emit_graph6(g)).graph == g);
    }
    // a larger one to cross the multi-byte length encoding
    Graph big = testutil::random_graph(rng, 70, 5);
    CHECK(parse_graph6(emit_graph6(big)).graph == big);
}

TEST_CASE("malformed input yields structured errors, never crashes") {
    testutil::Lcg rng;
    for (int trial = 0; trial < 500; ++trial) {
        std::string garbage;
        int len = rng.below(24);
        for (int i = 0; i < len; ++i)
            garbage.push_back(static_cast<char>(32 + rng.below(95)));
        try {
            (void)parse_graph6(garbage);
        } catch (const ParseError&) {
        }
        try {
            (void)parse_edge_list(garbage);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("graph6 line files") {
    auto docs = parse_graph6_lines("A_\n\nBw\n");
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].graph == make_complete(2));
    CHECK(docs[1].graph == make_complete(3));
}

TEST_CASE("reports are byte-stable with sorted keys") {
    Json j{{"zeta", 1}, {"alpha", 2}};
    CHECK(emit_report(j) == "{\n  \"alpha\": 2,\n  \"zeta\": 1\n}\n");
    CHECK(emit_report(j) == emit_report(j));

    TrResult result;
    result.value = 3;
    result.method = Method::Oracle;
    result.certificate = TransitivePartition{{{0, 1}, {2}, {3}}};
    Json report = tr_report(result, true);
    CHECK(report["transitivity"] == 3);
    CHECK(report["verified"] == true);
    CHECK(report["classes"].size() == 3);

    TrResult bare{3, Method::Oracle, std::nullopt};
    CHECK_FALSE(tr_report(bare, false).contains("classes"));
}

TEST_CASE("labels flow into reports") {
    auto doc = parse_edge_list("a b\nb c\n");
    TrResult result;
    result.value = 2;
    result.method = Method::Oracle;
    result.certificate = TransitivePartition{{{0, 2}, {1}}};
    Json report = tr_report(result, true, doc.labels);
    CHECK(report["classes"][0][0] == "a");
    CHECK(report["classes"][1][0] == "b");
}

TEST_CASE("partition files") {
    auto doc = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
    auto part = parse_partition("0 1\n2\n3\n", doc);
    REQUIRE(part.order() == 3);
    CHECK(part.classes[0] == std::vector<int>{0, 1});
    CHECK_THROWS_AS(parse_partition("0 9\n", doc), ParseError);

    auto named = parse_edge_list("a b\n");
    auto named_part = parse_partition("a\nb\n", named);
    CHECK(named_part.classes[0] == std::vector<int>{0});
}
