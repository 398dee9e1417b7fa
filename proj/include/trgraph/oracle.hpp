#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trgraph/graph.hpp"
#include "trgraph/search_budget.hpp"
#include "trgraph/transitivity.hpp"

namespace trg::oracle {

/// Exhaustive search strategy for transitivity_bruteforce.
///
/// ClassAssignment fills classes from the top down, seeding with the two
/// singleton top classes and applying the |V_{k-i}| <= 2^{i-1} size bound.
/// IteratedRemoval computes the maximum depth of repeatedly deleting a
/// minimal dominating set of the remaining graph. The two are independent
/// implementations and must agree.
enum class Strategy { ClassAssignment, IteratedRemoval };

/// Exact transitivity with a witness partition. Empty when the budget is
/// exceeded; never a wrong value.
std::optional<TrResult> transitivity_bruteforce(const Graph& g, const SearchBudget& budget = {},
                                                Strategy strategy = Strategy::ClassAssignment);

struct GrundyResult {
    int value = 0;
    TransitivePartition partition;  // classes are additionally independent sets
};

/// Exact Grundy number via iterated removal of maximal independent sets.
std::optional<GrundyResult> grundy_bruteforce(const Graph& g, const SearchBudget& budget = {});

struct EdsResult {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
};

/// Minimum edge dominating set by iterative-deepening branch search.
std::optional<EdsResult> eds_bruteforce(const Graph& g, const SearchBudget& budget = {});

struct AtomEmbedding {
    std::size_t atom_index = 0;     // index into the supplied atom list
    std::vector<int> mapping;       // mapping[atom vertex] = host vertex
};

struct ContainsAtom {
    bool contains = false;
    std::optional<AtomEmbedding> embedding;
};

/// Does some atom from `atom_list` embed into g as a (not necessarily
/// induced) subgraph? Backtracking embedder; witness is the vertex mapping.
std::optional<ContainsAtom> contains_atom(const Graph& g, std::span<const Graph> atom_list,
                                          const SearchBudget& budget = {});

/// Criticality predicates: recompute the exact transitivity of every
/// single-deletion variant and require a strict drop each time.
std::optional<bool> is_vertex_critical(const Graph& g, const SearchBudget& budget = {});
std::optional<bool> is_edge_critical(const Graph& g, const SearchBudget& budget = {});
std::optional<bool> is_ve_critical(const Graph& g, const SearchBudget& budget = {});

}  // namespace trg::oracle
