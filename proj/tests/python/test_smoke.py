"""Smoke tests for the Python bindings: exercise each exposed operation once."""

import trgraph as tg


def path(n):
    return tg.Graph(n, [(i, i + 1) for i in range(n - 1)])


def test_graph_basics():
    g = path(4)
    assert g.n == 4
    assert g.m == 3
    assert g.degree(1) == 2
    assert g.has_edge(0, 1)
    assert not g.has_edge(0, 2)
    assert g.neighbors(1) == [0, 2]
    assert g.complement().complement() == g
    sub, vertices = g.induced_subgraph([0, 1, 2])
    assert sub.m == 2 and vertices == [0, 1, 2]
    assert g.without_vertex(3).n == 3
    assert g.without_edge(0, 1).m == 2


def test_domination_and_verifier():
    c4 = tg.cycle_graph(4)
    assert tg.dominates(c4, [0, 1], [2])
    assert not tg.dominates(c4, [0], [2])
    assert tg.verify_transitive_partition(c4, [[0, 1], [2], [3]])
    assert not tg.verify_transitive_partition(c4, [[1, 3], [0], [2]])


def test_graph6_round_trip():
    g = tg.complete_bipartite(2, 3)
    assert tg.parse_graph6(tg.to_graph6(g)) == g
    assert tg.to_graph6(tg.complete_graph(2)) == "A_"
    parsed, labels = tg.parse_edge_list("a b\nb c\n")
    assert parsed.m == 2
    assert labels == ["a", "b", "c"]


def test_transitivity():
    r = tg.transitivity(path(4))
    assert r["value"] == 3
    assert tg.verify_transitive_partition(path(4), r["classes"])

    exact = tg.transitivity_bruteforce(tg.cycle_graph(5))
    assert exact["value"] == 3
    cross = tg.transitivity_bruteforce(tg.cycle_graph(5), strategy="iterated_removal")
    assert cross["value"] == 3

    assert tg.transitivity(tg.complete_bipartite(3, 3))["value"] == 4
    assert tg.transitivity(tg.complete_bipartite(3, 3))["method"] == "chain"


def test_recognizers():
    k4_pendant = tg.Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    split = tg.split_partition(k4_pendant)
    assert split["recognized"]
    assert split["clique"] == [0, 1, 2, 3]

    chain = tg.chain_ordering(tg.complete_bipartite(2, 2))
    assert chain["recognized"]
    assert chain["ordering"]["j"] == 2

    cochain = tg.cochain_ordering(tg.Graph(4, [(0, 1), (2, 3)]))
    assert cochain["recognized"]

    bad = tg.split_partition(tg.cycle_graph(4))
    assert not bad["recognized"]
    assert bad["witness"]["kind"] == "C4"

    assert tg.min_eds_chain(tg.complete_bipartite(2, 2)) == [(0, 2), (1, 3)]


def test_oracle_helpers():
    assert tg.grundy_bruteforce(tg.cycle_graph(4))["value"] == 2
    assert len(tg.eds_bruteforce(tg.cycle_graph(5))) == 2
    assert tg.is_ve_critical(path(4))
    assert not tg.is_edge_critical(tg.complete_bipartite(1, 2))
    hit = tg.contains_atom(tg.cycle_graph(4), 3)
    assert hit["contains"]


def test_atoms():
    a3 = tg.generate_atoms(3)
    assert len(a3) == 2
    certs = {tg.canonical_graph6(g) for g in a3}
    assert certs == {tg.canonical_graph6(tg.complete_graph(3)), tg.canonical_graph6(path(4))}

    records = tg.classify_atoms(3)
    assert all(r["in_a_prime"] for r in records)

    members = tg.edge_critical_members(3, 4)
    assert len(members) == 2

    assert tg.are_isomorphic(path(4), tg.Graph(4, [(2, 0), (0, 3), (3, 1)]))


def test_nordhaus_gaddum():
    report = tg.ng_sum(tg.complete_graph(4))
    assert (report["trG"], report["trGbar"], report["sum"]) == (4, 1, 5)

    chain = tg.verify_ng_chain(path(4))
    assert chain["case"] == "n+2"
    assert chain["matches_theorem"]

    found = tg.find_counterexamples(4)
    assert any(tg.are_isomorphic(ce["graph"], tg.complete_bipartite(2, 2)) for ce in found)


def test_catalog():
    assert len(tg.all_graphs(5)) == 34
