#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "trgraph/catalog.hpp"
#include "trgraph/oracle.hpp"
#include "trgraph/recognition.hpp"
#include "trgraph/transitivity.hpp"

using namespace trg;

namespace {

int oracle_value(const Graph& g) {
    auto r = oracle::transitivity_bruteforce(g);
    REQUIRE(r.has_value());
    return r->value;
}

void check_result(const Graph& g, const TrResult& r) {
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->order() == r.value);
    CHECK(verify_transitive_partition(g, *r.certificate));
}

}  // namespace

TEST_CASE("transitivity of split graphs") {
    // clique {0,1,2}, independent {3,4}, every clique vertex covered
    Graph covered = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {4, 1}, {4, 2}});
    auto rec = split_partition(covered);
    REQUIRE(rec.is_split());
    auto r = transitivity_split(covered, *rec.partition);
    CHECK(r.value == 4);
    CHECK(r.value == oracle_value(covered));
    CHECK(r.method == Method::Split);
    check_result(covered, r);

    Graph pendant = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    auto rec2 = split_partition(pendant);
    REQUIRE(rec2.is_split());
    auto r2 = transitivity_split(pendant, *rec2.partition);
    CHECK(r2.value == 4);
    CHECK(r2.value == oracle_value(pendant));
    check_result(pendant, r2);

    Graph k5 = make_complete(5);
    auto r3 = transitivity_split(k5, *split_partition(k5).partition);
    CHECK(r3.value == 5);
    check_result(k5, r3);

    Graph lone = make_edgeless(3);
    auto r4 = transitivity_split(lone, *split_partition(lone).partition);
    CHECK(r4.value == 1);
    check_result(lone, r4);

    SUBCASE("invalid certificates are rejected") {
        SplitPartition not_max;  // {0,1,2} is a clique of K4 but not a maximum one
        not_max.clique = {0, 1, 2};
        not_max.independent_set = {3};
        CHECK_THROWS_AS(transitivity_split(make_complete(4), not_max), std::invalid_argument);

        SplitPartition not_cover;  // vertex 4 missing
        not_cover.clique = {0, 1, 2};
        not_cover.independent_set = {3};
        CHECK_THROWS_AS(transitivity_split(covered, not_cover), std::invalid_argument);

        SplitPartition dependent;  // 1-2 is an edge inside the claimed independent set
        dependent.clique = {0, 3};
        dependent.independent_set = {1, 2, 4};
        CHECK_THROWS_AS(transitivity_split(covered, dependent), std::invalid_argument);
    }
}

TEST_CASE("split solver agrees with the oracle and the sandwich bound") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : catalog::all_graphs(n)) {
            auto rec = split_partition(g);
            if (!rec.is_split()) continue;
            auto r = transitivity_split(g, *rec.partition);
            int omega = testutil::max_clique_bruteforce(g);
            CHECK(r.value >= omega);
            CHECK(r.value <= omega + 1);
            CHECK(r.value == oracle_value(g));
            check_result(g, r);
        }
    }
}

TEST_CASE("transitivity of bipartite chain graphs") {
    Graph k33 = make_complete_bipartite(3, 3);
    auto rec = chain_ordering(k33);
    REQUIRE(rec.is_chain());
    CHECK(rec.ordering->j == 3);
    auto r = transitivity_chain(k33, *rec.ordering);
    CHECK(r.value == 4);
    check_result(k33, r);

    Graph p4 = make_path(4);
    auto r2 = transitivity_chain(p4, *chain_ordering(p4).ordering);
    CHECK(r2.value == 3);
    check_result(p4, r2);

    Graph star = make_complete_bipartite(1, 3);
    auto r3 = transitivity_chain(star, *chain_ordering(star).ordering);
    CHECK(r3.value == 2);
    check_result(star, r3);

    Graph edgeless = make_edgeless(4);
    auto r4 = transitivity_chain(edgeless, *chain_ordering(edgeless).ordering);
    CHECK(r4.value == 1);
    check_result(edgeless, r4);

    SUBCASE("invalid certificate") {
        ChainOrdering bogus = *chain_ordering(p4).ordering;
        std::swap(bogus.xs[0], bogus.xs[1]);
        CHECK_THROWS_AS(transitivity_chain(p4, bogus), std::invalid_argument);
    }
}

TEST_CASE("chain solver agrees with the oracle on all small chain graphs") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : catalog::all_graphs(n)) {
            auto rec = chain_ordering(g);
            if (!rec.is_chain()) continue;
            auto r = transitivity_chain(g, *rec.ordering);
            CHECK(r.value == oracle_value(g));
            check_result(g, r);
        }
    }
}

TEST_CASE("minimum edge dominating set of a chain graph") {
    Graph k22 = make_complete_bipartite(2, 2);
    auto ord = *chain_ordering(k22).ordering;
    auto eds = min_eds_chain(ord);
    CHECK(eds.size() == 2);
    CHECK(static_cast<int>(eds.size()) == oracle::eds_bruteforce(k22)->size());

    Graph p4 = make_path(4);
    auto p4eds = min_eds_chain(*chain_ordering(p4).ordering);
    CHECK(p4eds.size() == 1);
    CHECK(static_cast<int>(p4eds.size()) == oracle::eds_bruteforce(p4)->size());

    Graph k2 = make_complete(2);
    CHECK(min_eds_chain(*chain_ordering(k2).ordering).size() == 1);

    SUBCASE("matches the exact minimum and dominates on all small chain graphs") {
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : catalog::all_graphs(n)) {
                auto rec = chain_ordering(g);
                if (!rec.is_chain()) continue;
                auto eds_set = min_eds_chain(*rec.ordering);
                auto exact = oracle::eds_bruteforce(g);
                REQUIRE(exact.has_value());
                CHECK(static_cast<int>(eds_set.size()) == exact->size());
                std::vector<char> touched(static_cast<std::size_t>(n), 0);
                for (auto [u, v] : eds_set) {
                    touched[static_cast<std::size_t>(u)] = 1;
                    touched[static_cast<std::size_t>(v)] = 1;
                }
                for (auto [u, v] : g.edges())
                    CHECK((touched[static_cast<std::size_t>(u)] ||
                           touched[static_cast<std::size_t>(v)]));
            }
        }
    }
}

TEST_CASE("transitivity of co-chain graphs") {
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto rec = cochain_ordering(two_k2);
    REQUIRE(rec.is_cochain());
    auto r = transitivity_cochain(two_k2, *rec.ordering);
    CHECK(r.value == 2);
    CHECK(r.value == oracle_value(two_k2));
    check_result(two_k2, r);

    Graph p4 = make_path(4);
    auto r2 = transitivity_cochain(p4, *cochain_ordering(p4).ordering);
    CHECK(r2.value == 3);
    check_result(p4, r2);

    Graph k3_k1 = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
    auto r3 = transitivity_cochain(k3_k1, *cochain_ordering(k3_k1).ordering);
    CHECK(r3.value == 3);
    check_result(k3_k1, r3);

    // the two-clique case with no cross edges in the complement
    Graph two_k3 = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    auto r4 = transitivity_cochain(two_k3, *cochain_ordering(two_k3).ordering);
    CHECK(r4.value == 3);
    CHECK(r4.value == oracle_value(two_k3));
    check_result(two_k3, r4);

    Graph kn = make_complete(5);
    auto r5 = transitivity_cochain(kn, *cochain_ordering(kn).ordering);
    CHECK(r5.value == 5);
    check_result(kn, r5);
}

TEST_CASE("co-chain solver agrees with the oracle and the Grundy number") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : catalog::all_graphs(n)) {
            auto rec = cochain_ordering(g);
            if (!rec.is_cochain()) continue;
            auto r = transitivity_cochain(g, *rec.ordering);
            CHECK(r.value == oracle_value(g));
            auto grundy = oracle::grundy_bruteforce(g);
            REQUIRE(grundy.has_value());
            CHECK(r.value == grundy->value);
            check_result(g, r);
        }
    }
}

TEST_CASE("automatic dispatch") {
    Graph pendant = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    auto split = transitivity_auto(pendant);
    REQUIRE(split.has_value());
    CHECK(split->method == Method::Split);
    CHECK(split->value == 4);

    auto oracle_fallback = transitivity_auto(make_cycle(5));
    REQUIRE(oracle_fallback.has_value());
    CHECK(oracle_fallback->method == Method::Oracle);
    CHECK(oracle_fallback->value == 3);

    Graph c6 = make_cycle(6);  // bipartite but not chain; complement is not chain either
    auto c6r = transitivity_auto(c6);
    REQUIRE(c6r.has_value());
    CHECK(c6r->method == Method::Oracle);

    SUBCASE("too large and unrecognized") {
        std::vector<Edge> edges;
        for (int base : {0, 5})
            for (int i = 0; i < 5; ++i) edges.emplace_back(base + i, base + (i + 1) % 5);
        Graph two_c5 = Graph::from_edges(10, edges);
        AutoOptions options;
        options.budget.max_vertices = 5;
        CHECK_FALSE(transitivity_auto(two_c5, options).has_value());
    }

    SUBCASE("no certificate on request") {
        auto r = transitivity_auto(make_cycle(4), {{}, /*with_certificate=*/false});
        REQUIRE(r.has_value());
        CHECK(r->value == 3);
        CHECK_FALSE(r->certificate.has_value());
    }
}
