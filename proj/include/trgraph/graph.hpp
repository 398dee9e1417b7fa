#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace trg {

using Edge = std::pair<int, int>;

struct InducedSubgraph;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted, so adjacency queries are O(log deg).
/// For graphs with at most 64 vertices a per-vertex neighbor bitmask is
/// also available (neighbor_mask), which the exact-search code relies on.
/// All mutating operations return a new graph.
class Graph {
public:
    Graph() = default;

    /// Builds a graph with `n` vertices from an edge list. Self-loops are
    /// rejected; duplicate edges are merged.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Neighbor set of v as a bitmask. Only valid when vertex_count() <= 64.
    std::uint64_t neighbor_mask(int v) const;

    Graph complement() const;
    Graph without_edge(int u, int v) const;
    Graph without_vertex(int v) const;

    InducedSubgraph induced_subgraph(std::span<const int> s) const;

    /// Connected components as vertex lists (each sorted, ordered by minimum).
    std::vector<std::vector<int>> components() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> masks_;  // populated only when n_ <= 64

    void rebuild_masks();
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // vertices[i] = label in the host graph
};

/// True iff every vertex of `b` has at least one neighbor in `a`.
/// Vacuously true for empty `b`. Throws std::invalid_argument if the sets
/// overlap or contain out-of-range vertices.
bool dominates(const Graph& g, std::span<const int> a, std::span<const int> b);

/// Ordered vertex partition V1..Vk; the transitive-partition property is
/// checked by verify_transitive_partition, not by construction.
struct TransitivePartition {
    std::vector<std::vector<int>> classes;

    int order() const { return static_cast<int>(classes.size()); }
};

/// True iff Vi dominates Vj for every i < j. Throws std::invalid_argument
/// if the classes are empty, overlap, or fail to cover the vertex set.
/// Runs in O(n + m + k^2).
bool verify_transitive_partition(const Graph& g, const TransitivePartition& p);

// Small construction helpers shared by tests and tools.
Graph make_complete(int n);
Graph make_edgeless(int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete_bipartite(int a, int b);

}  // namespace trg
