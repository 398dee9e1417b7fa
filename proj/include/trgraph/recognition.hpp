#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trgraph/graph.hpp"

namespace trg {

/// Vertex partition of a split graph into an independent set and a clique.
/// The clique is always of maximum size (|clique| = omega).
struct SplitPartition {
    std::vector<int> independent_set;
    std::vector<int> clique;
};

enum class ObstructionKind { TwoK2, C4, C5, OddCycle };

std::string_view obstruction_name(ObstructionKind kind);

/// A forbidden induced subgraph certifying that a recognizer failed: the
/// vertex quadruple of a 2K2 (listed as u1,v1,u2,v2 with u1v1 and u2v2 the
/// two edges), the vertices of an induced C4 or C5 in cycle order, or an
/// odd closed walk proving non-bipartiteness.
struct Obstruction {
    ObstructionKind kind;
    std::vector<int> vertices;
};

struct SplitRecognition {
    std::optional<SplitPartition> partition;
    std::optional<Obstruction> obstruction;

    bool is_split() const { return partition.has_value(); }
};

/// Split recognition via the degree-sequence splittance test, followed by
/// normalization so the clique side is a maximum clique. On failure an
/// induced 2K2, C4 or C5 is produced unless want_witness is false.
SplitRecognition split_partition(const Graph& g, bool want_witness = true);

/// Nested-neighborhood orderings of the two sides of a bipartite chain
/// graph: N(xs[0]) >= N(xs[1]) >= ... and likewise for ys. j is the largest
/// 1-based index with xs[j-1] adjacent to ys[j-1] (0 when the graph has no
/// edges); p, the minimum edge dominating set size, equals j.
struct ChainOrdering {
    std::vector<int> xs;
    std::vector<int> ys;
    int j = 0;
    int p = 0;
};

struct ChainRecognition {
    std::optional<ChainOrdering> ordering;
    std::optional<Obstruction> obstruction;

    bool is_chain() const { return ordering.has_value(); }
};

ChainRecognition chain_ordering(const Graph& g, bool want_witness = true);

/// Re-checks the nested-neighborhood property of a claimed ordering in
/// O(n + m); also validates that xs/ys partition V with no intra-side edges
/// and that j is the correct maximal index.
bool is_valid_chain_ordering(const Graph& g, const ChainOrdering& ord);

struct CochainRecognition {
    /// Chain ordering of the complement; its xs/ys sides induce cliques in g.
    std::optional<ChainOrdering> ordering;
    /// Obstruction in the complement. Absent when the complement was too
    /// large to materialize (see max_complement_edges), in which case
    /// `reason` explains the failure.
    std::optional<Obstruction> obstruction;
    std::string reason;

    bool is_cochain() const { return ordering.has_value(); }
};

/// Runs chain recognition on the complement, materializing it explicitly.
/// Graphs whose complement would exceed max_complement_edges are rejected
/// after a counting argument shows they cannot be co-chain at that size.
CochainRecognition cochain_ordering(const Graph& g, bool want_witness = true,
                                    std::size_t max_complement_edges = 10'000'000);

}  // namespace trg
