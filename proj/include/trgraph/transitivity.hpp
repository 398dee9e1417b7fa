#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "trgraph/graph.hpp"
#include "trgraph/recognition.hpp"
#include "trgraph/search_budget.hpp"

namespace trg {

enum class Method { Split, Chain, Cochain, Oracle };

std::string_view method_name(Method m);

/// A computed transitivity value together with a verified witness partition
/// of exactly `value` classes (unless certificate emission was suppressed).
struct TrResult {
    int value = 0;
    Method method = Method::Oracle;
    std::optional<TransitivePartition> certificate;
};

/// Transitivity of a split graph from its maximum-clique split partition:
/// |K|+1 when every clique vertex has a neighbor in S, else |K|. O(n + m).
/// Throws std::invalid_argument on an invalid certificate.
TrResult transitivity_split(const Graph& g, const SplitPartition& cert,
                            bool with_certificate = true);

/// Transitivity of a bipartite chain graph from its chain ordering:
/// j+2 when the two cross pairs x_{j+1}y_j and x_jy_{j+1} are edges, else
/// j+1 (1 for the edgeless graph). O(n + m).
TrResult transitivity_chain(const Graph& g, const ChainOrdering& cert,
                            bool with_certificate = true);

/// The minimum edge dominating set {x_i y_i : 1 <= i <= j} of the chain
/// graph described by `cert`; its size is p = j.
std::vector<Edge> min_eds_chain(const ChainOrdering& cert);

/// Transitivity of the complement of a bipartite chain graph: n - p, where
/// p is the minimum edge dominating set size of the complement. `cert` is a
/// chain ordering of complement(g).
TrResult transitivity_cochain(const Graph& g, const ChainOrdering& cert,
                              bool with_certificate = true);

struct AutoOptions {
    oracle::SearchBudget budget;
    bool with_certificate = true;
};

/// Tries the recognizers in order split -> chain -> cochain and dispatches
/// to the matching solver; falls back to the exact search for graphs within
/// the budget. Empty result: class not recognized and the instance is too
/// large for exact search.
std::optional<TrResult> transitivity_auto(const Graph& g, const AutoOptions& options = {});

}  // namespace trg
