#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "trgraph/catalog.hpp"
#include "trgraph/recognition.hpp"

using namespace trg;

namespace {

// Independent check that a claimed obstruction really is the forbidden
// induced subgraph it says it is.
void check_obstruction(const Graph& g, const Obstruction& w) {
    std::set<int> distinct(w.vertices.begin(), w.vertices.end());
    CHECK(distinct.size() == w.vertices.size());
    switch (w.kind) {
        case ObstructionKind::TwoK2: {
            REQUIRE(w.vertices.size() == 4);
            int a = w.vertices[0], b = w.vertices[1], c = w.vertices[2], d = w.vertices[3];
            CHECK(g.has_edge(a, b));
            CHECK(g.has_edge(c, d));
            CHECK_FALSE(g.has_edge(a, c));
            CHECK_FALSE(g.has_edge(a, d));
            CHECK_FALSE(g.has_edge(b, c));
            CHECK_FALSE(g.has_edge(b, d));
            break;
        }
        case ObstructionKind::C4:
        case ObstructionKind::C5: {
            std::size_t len = w.kind == ObstructionKind::C4 ? 4 : 5;
            REQUIRE(w.vertices.size() == len);
            for (std::size_t i = 0; i < len; ++i)
                for (std::size_t k = i + 1; k < len; ++k) {
                    bool consecutive = (k == i + 1) || (i == 0 && k == len - 1);
                    CHECK(g.has_edge(w.vertices[i], w.vertices[k]) == consecutive);
                }
            break;
        }
        case ObstructionKind::OddCycle: {
            REQUIRE(w.vertices.size() >= 3);
            CHECK(w.vertices.size() % 2 == 1);
            for (std::size_t i = 0; i < w.vertices.size(); ++i)
                CHECK(g.has_edge(w.vertices[i], w.vertices[(i + 1) % w.vertices.size()]));
            break;
        }
    }
}

Graph k4_pendant() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

}  // namespace

TEST_CASE("split recognition on examples") {
    auto rec = split_partition(k4_pendant());
    REQUIRE(rec.is_split());
    CHECK(rec.partition->clique == std::vector<int>{0, 1, 2, 3});
    CHECK(rec.partition->independent_set == std::vector<int>{4});

    auto c4 = split_partition(make_cycle(4));
    REQUIRE_FALSE(c4.is_split());
    REQUIRE(c4.obstruction.has_value());
    CHECK(c4.obstruction->kind == ObstructionKind::C4);
    check_obstruction(make_cycle(4), *c4.obstruction);

    auto kn = split_partition(make_complete(5));
    REQUIRE(kn.is_split());
    CHECK(kn.partition->clique.size() == 5);
    CHECK(kn.partition->independent_set.empty());

    auto c5 = split_partition(make_cycle(5));
    REQUIRE_FALSE(c5.is_split());
    REQUIRE(c5.obstruction.has_value());
    CHECK(c5.obstruction->kind == ObstructionKind::C5);
    check_obstruction(make_cycle(5), *c5.obstruction);

    auto two_k2 = split_partition(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    REQUIRE_FALSE(two_k2.is_split());
    CHECK(two_k2.obstruction->kind == ObstructionKind::TwoK2);
    check_obstruction(Graph::from_edges(4, {{0, 1}, {2, 3}}), *two_k2.obstruction);
}

TEST_CASE("split clique is maximum on all small graphs") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : catalog::all_graphs(n)) {
            auto rec = split_partition(g);
            if (!rec.is_split()) {
                REQUIRE(rec.obstruction.has_value());
                check_obstruction(g, *rec.obstruction);
                continue;
            }
            const auto& part = *rec.partition;
            CHECK(part.clique.size() + part.independent_set.size() ==
                  static_cast<std::size_t>(n));
            for (int u : part.clique)
                for (int v : part.clique)
                    if (u < v) CHECK(g.has_edge(u, v));
            for (int u : part.independent_set)
                for (int v : part.independent_set)
                    if (u < v) CHECK_FALSE(g.has_edge(u, v));
            CHECK(static_cast<int>(part.clique.size()) == testutil::max_clique_bruteforce(g));
        }
    }
}

TEST_CASE("chain recognition on examples") {
    // P4 with sides {x1, x2} and {y1, y2}: edges x1y1, x1y2, x2y1.
    Graph p4 = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}});
    auto rec = chain_ordering(p4);
    REQUIRE(rec.is_chain());
    CHECK(rec.ordering->j == 1);
    CHECK(rec.ordering->p == 1);
    CHECK(is_valid_chain_ordering(p4, *rec.ordering));

    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto bad = chain_ordering(two_k2);
    REQUIRE_FALSE(bad.is_chain());
    REQUIRE(bad.obstruction.has_value());
    CHECK(bad.obstruction->kind == ObstructionKind::TwoK2);
    check_obstruction(two_k2, *bad.obstruction);

    auto edgeless = chain_ordering(make_edgeless(3));
    REQUIRE(edgeless.is_chain());
    CHECK(edgeless.ordering->j == 0);
    CHECK(edgeless.ordering->xs.size() == 3);

    auto odd = chain_ordering(make_cycle(5));
    REQUIRE_FALSE(odd.is_chain());
    REQUIRE(odd.obstruction.has_value());
    CHECK(odd.obstruction->kind == ObstructionKind::OddCycle);
    check_obstruction(make_cycle(5), *odd.obstruction);

    // 2K2 hidden inside a connected bipartite graph.
    Graph c6 = make_cycle(6);
    auto c6rec = chain_ordering(c6);
    REQUIRE_FALSE(c6rec.is_chain());
    CHECK(c6rec.obstruction->kind == ObstructionKind::TwoK2);
    check_obstruction(c6, *c6rec.obstruction);
}

TEST_CASE("chain certificates on all small graphs") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : catalog::all_graphs(n)) {
            auto rec = chain_ordering(g);
            if (!rec.is_chain()) {
                REQUIRE(rec.obstruction.has_value());
                check_obstruction(g, *rec.obstruction);
                continue;
            }
            const auto& ord = *rec.ordering;
            CHECK(is_valid_chain_ordering(g, ord));
            // The first j indices of both sides induce a complete bipartite graph.
            for (int i = 0; i < ord.j; ++i)
                for (int k = 0; k < ord.j; ++k)
                    CHECK(g.has_edge(ord.xs[static_cast<std::size_t>(i)],
                                     ord.ys[static_cast<std::size_t>(k)]));
        }
    }
}

TEST_CASE("cochain recognition") {
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto rec = cochain_ordering(two_k2);
    REQUIRE(rec.is_cochain());
    CHECK(rec.ordering->j == 2);

    Graph p4 = make_path(4);
    auto p4rec = cochain_ordering(p4);
    REQUIRE(p4rec.is_cochain());
    CHECK(p4rec.ordering->j == 1);

    auto c5 = cochain_ordering(make_cycle(5));
    REQUIRE_FALSE(c5.is_cochain());
    REQUIRE(c5.obstruction.has_value());
    CHECK(c5.obstruction->kind == ObstructionKind::OddCycle);
    check_obstruction(make_cycle(5).complement(), *c5.obstruction);

    SUBCASE("sides induce cliques in the original graph") {
        for (int n = 1; n <= 6; ++n) {
            for (const Graph& g : catalog::all_graphs(n)) {
                auto r = cochain_ordering(g);
                if (!r.is_cochain()) continue;
                for (const auto* side : {&r.ordering->xs, &r.ordering->ys})
                    for (std::size_t i = 0; i < side->size(); ++i)
                        for (std::size_t k = i + 1; k < side->size(); ++k)
                            CHECK(g.has_edge((*side)[i], (*side)[k]));
            }
        }
    }
}

TEST_CASE("recognizers are deterministic") {
    testutil::Lcg rng;
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testutil::random_graph(rng, 2 + rng.below(8), 50);
        auto a = split_partition(g);
        auto b = split_partition(g);
        CHECK(a.is_split() == b.is_split());
        if (a.is_split()) {
            CHECK(a.partition->clique == b.partition->clique);
            CHECK(a.partition->independent_set == b.partition->independent_set);
        } else {
            CHECK(a.obstruction->vertices == b.obstruction->vertices);
        }
        auto c = chain_ordering(g);
        auto d = chain_ordering(g);
        CHECK(c.is_chain() == d.is_chain());
        if (c.is_chain()) {
            CHECK(c.ordering->xs == d.ordering->xs);
            CHECK(c.ordering->ys == d.ordering->ys);
        }
    }
}

TEST_CASE("witnesses can be suppressed") {
    auto rec = split_partition(make_cycle(4), /*want_witness=*/false);
    CHECK_FALSE(rec.is_split());
    CHECK_FALSE(rec.obstruction.has_value());
    auto chain = chain_ordering(make_cycle(5), /*want_witness=*/false);
    CHECK_FALSE(chain.is_chain());
    CHECK_FALSE(chain.obstruction.has_value());
}
