#pragma once

#include <vector>

#include "trgraph/graph.hpp"

namespace trg::catalog {

/// All graphs on exactly n vertices up to isomorphism, in canonical form,
/// ordered by canonical certificate. Built by canonical augmentation
/// (extend every (n-1)-vertex graph by one vertex in all ways, dedupe).
/// Practical up to n = 8 (12346 graphs); the counts for n = 1..8 are
/// 1, 2, 4, 11, 34, 156, 1044, 12346.
std::vector<Graph> all_graphs(int n);

/// Concatenation of all_graphs(1..n).
std::vector<Graph> all_graphs_up_to(int n);

}  // namespace trg::catalog
