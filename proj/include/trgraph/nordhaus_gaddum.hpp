#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "trgraph/graph.hpp"
#include "trgraph/search_budget.hpp"

namespace trg::ng {

enum class PredictedCase { NPlus1, NPlus2, NotApplicable };

std::string_view predicted_case_name(PredictedCase c);

/// Tr(G) + Tr(complement(G)) together with the case predicted by the split
/// or chain theorem when one applies. matches_theorem is vacuously true
/// when no prediction applies.
struct NGReport {
    int n = 0;
    int tr_g = 0;
    int tr_gbar = 0;
    int sum = 0;
    PredictedCase predicted = PredictedCase::NotApplicable;
    bool matches_theorem = true;
};

/// Both transitivities via the fast solvers where a class is recognized,
/// the exact search otherwise. Empty when either side is unsolvable within
/// the budget.
std::optional<NGReport> ng_sum(const Graph& g, const oracle::SearchBudget& budget = {});

/// For a split graph: predicts n+2 iff every maximum-clique vertex has a
/// neighbor in S, and checks the prediction against the observed sum (the
/// complement side is solved as a split graph as well). Throws
/// std::invalid_argument if g is not split.
NGReport verify_ng_split(const Graph& g);

/// For a bipartite chain graph: predicts n+2 iff the cross pairs
/// x_{j+1}y_j and x_jy_{j+1} are both edges, else n+1; the complement side
/// is solved as a co-chain graph. Throws std::invalid_argument if g is not
/// a bipartite chain graph.
NGReport verify_ng_chain(const Graph& g);

struct Counterexample {
    Graph graph;
    NGReport report;
};

/// All graphs with at most n_max vertices (up to isomorphism) other than
/// complete and edgeless graphs whose sum Tr(G) + Tr(complement(G)) equals
/// n + 1. Nonempty for n_max >= 4. Empty optional when n_max exceeds the
/// oracle budget.
std::optional<std::vector<Counterexample>> find_counterexamples(
    int n_max, const oracle::SearchBudget& budget = {});

}  // namespace trg::ng
