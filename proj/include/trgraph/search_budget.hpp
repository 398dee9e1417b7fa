#pragma once

#include <chrono>
#include <optional>

namespace trg::oracle {

/// Limits for the exhaustive searches. A search that would exceed its budget
/// reports "budget exceeded" (an empty optional at the call site) rather than
/// returning a possibly wrong answer.
struct SearchBudget {
    int max_vertices = 12;
    int max_edges = 64;
    /// Cap on the partition order explored by the transitivity search. If the
    /// search is still feasible at the cap, the exact maximum is unknown and
    /// the budget counts as exceeded.
    std::optional<int> max_labels;
    std::optional<std::chrono::milliseconds> time_limit;
};

}  // namespace trg::oracle
