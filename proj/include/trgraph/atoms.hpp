#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trgraph/graph.hpp"
#include "trgraph/oracle.hpp"

namespace trg::atoms {

/// Canonical labeling of a small graph (n <= 16). Isomorphic graphs receive
/// identical certificate strings; the certificate is the graph6 encoding of
/// the relabeled graph. labeling[i] is the original vertex that canonical
/// label i refers to.
struct CanonicalForm {
    std::vector<int> labeling;
    std::string certificate;
};

CanonicalForm canonical_form(const Graph& g);

/// Shorthand for canonical_form(g).certificate.
std::string canonical_certificate(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// All t-atoms up to isomorphism, built by the recursive construction:
/// for each (t-1)-atom H, each r in 1..|V(H)|, each r-subset W of V(H),
/// attach a new independent set I_r by a perfect matching W <-> I_r and
/// join every vertex of V(H)\W to exactly one vertex of I_r. Only one
/// matching per (H, W) is generated; the I_r vertices are interchangeable,
/// so the others are isomorphic images. Output is sorted by (order,
/// certificate). Empty result when t exceeds the practical bound (t > 5).
std::optional<std::vector<Graph>> generate_atoms(int t);

/// A t-atom together with its exact transitivity and criticality flags.
/// in_a_prime marks membership in A'_t (transitivity t and ve-critical);
/// the discarded atoms form B_t.
struct AtomRecord {
    Graph graph;
    std::string certificate;
    int level = 0;
    int transitivity = 0;
    bool vertex_critical = false;
    bool edge_critical = false;
    bool ve_critical = false;
    bool in_a_prime = false;
};

/// generate_atoms(t) with every atom classified through the oracle. Empty
/// when an atom exceeds the oracle budget.
std::optional<std::vector<AtomRecord>> classify_atoms(int t,
                                                      const oracle::SearchBudget& budget = {});

/// All transitively edge-critical graphs with transitivity k on exactly n
/// vertices: each H in A'_k padded with n - |V(H)| isolated vertices.
std::optional<std::vector<Graph>> edge_critical_members(int k, int n,
                                                        const oracle::SearchBudget& budget = {});

}  // namespace trg::atoms
