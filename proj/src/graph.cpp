#include "trgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace trg {

namespace {

void check_vertex(int n, int v, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("from_edges: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        check_vertex(n, u, "from_edges");
        check_vertex(n, v, "from_edges");
        if (u == v)
            throw std::invalid_argument("from_edges: self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.m_ += nbrs.size();
    }
    g.m_ /= 2;
    g.rebuild_masks();
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::rebuild_masks() {
    masks_.clear();
    if (n_ > 64) return;
    masks_.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v)
        for (int u : adj_[static_cast<std::size_t>(v)])
            masks_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(n_, v, "neighbors");
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(n_, v, "degree");
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(n_, u, "has_edge");
    check_vertex(n_, v, "has_edge");
    if (u == v) return false;
    if (!masks_.empty()) return (masks_[static_cast<std::size_t>(u)] >> v) & 1;
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(n_, v, "neighbor_mask");
    if (masks_.empty()) throw std::logic_error("neighbor_mask: graph has more than 64 vertices");
    return masks_[static_cast<std::size_t>(v)];
}

Graph Graph::complement() const {
    std::vector<Edge> comp;
    for (int u = 0; u < n_; ++u) {
        const auto& nbrs = adj_[static_cast<std::size_t>(u)];
        std::size_t k = 0;
        for (int v = u + 1; v < n_; ++v) {
            while (k < nbrs.size() && nbrs[k] < v) ++k;
            if (k < nbrs.size() && nbrs[k] == v) continue;
            comp.emplace_back(u, v);
        }
    }
    return from_edges(n_, comp);
}

Graph Graph::without_edge(int u, int v) const {
    if (!has_edge(u, v))
        throw std::invalid_argument("without_edge: edge (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") not present");
    Graph g(*this);
    auto erase_from = [](std::vector<int>& nbrs, int w) {
        nbrs.erase(std::lower_bound(nbrs.begin(), nbrs.end(), w));
    };
    erase_from(g.adj_[static_cast<std::size_t>(u)], v);
    erase_from(g.adj_[static_cast<std::size_t>(v)], u);
    g.m_ -= 1;
    g.rebuild_masks();
    return g;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(n_, v, "without_vertex");
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(n_) - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(keep).graph;
}

InducedSubgraph Graph::induced_subgraph(std::span<const int> s) const {
    std::vector<int> map(static_cast<std::size_t>(n_), -1);
    std::vector<int> verts(s.begin(), s.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        check_vertex(n_, verts[i], "induced_subgraph");
        if (map[static_cast<std::size_t>(verts[i])] != -1)
            throw std::invalid_argument("induced_subgraph: repeated vertex " +
                                        std::to_string(verts[i]));
        map[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int u : adj_[static_cast<std::size_t>(verts[i])]) {
            int j = map[static_cast<std::size_t>(u)];
            if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
        }
    return InducedSubgraph{from_edges(static_cast<int>(verts.size()), es), std::move(verts)};
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int start = 0; start < n_; ++start) {
        if (comp[static_cast<std::size_t>(start)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<std::size_t>(start)] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int u : adj_[static_cast<std::size_t>(v)])
                if (comp[static_cast<std::size_t>(u)] == -1) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

bool dominates(const Graph& g, std::span<const int> a, std::span<const int> b) {
    std::vector<char> in_a(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : a) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("dominates: vertex out of range");
        in_a[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : b) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("dominates: vertex out of range");
        if (in_a[static_cast<std::size_t>(v)])
            throw std::invalid_argument("dominates: sets overlap at vertex " + std::to_string(v));
    }
    for (int v : b) {
        bool hit = false;
        for (int u : g.neighbors(v))
            if (in_a[static_cast<std::size_t>(u)]) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool verify_transitive_partition(const Graph& g, const TransitivePartition& p) {
    const int n = g.vertex_count();
    const int k = p.order();
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    std::size_t covered = 0;
    for (int c = 0; c < k; ++c) {
        const auto& cls = p.classes[static_cast<std::size_t>(c)];
        if (cls.empty()) throw std::invalid_argument("verify_transitive_partition: empty class");
        for (int v : cls) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("verify_transitive_partition: vertex out of range");
            if (class_of[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("verify_transitive_partition: vertex " +
                                            std::to_string(v) + " appears twice");
            class_of[static_cast<std::size_t>(v)] = c;
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(n))
        throw std::invalid_argument("verify_transitive_partition: classes do not cover V");

    // For each class j, count per earlier class c how many members of Vj have
    // a neighbor in Vc; Vc dominates Vj iff that count reaches |Vj|.
    std::vector<int> hit_count(static_cast<std::size_t>(k), 0);
    std::vector<int> seen_stamp(static_cast<std::size_t>(k), -1);
    std::vector<int> touched;
    int stamp = 0;
    for (int j = 1; j < k; ++j) {
        const auto& cls = p.classes[static_cast<std::size_t>(j)];
        touched.clear();
        for (int v : cls) {
            ++stamp;
            for (int u : g.neighbors(v)) {
                int c = class_of[static_cast<std::size_t>(u)];
                if (c >= j) continue;
                if (seen_stamp[static_cast<std::size_t>(c)] == stamp) continue;
                seen_stamp[static_cast<std::size_t>(c)] = stamp;
                if (hit_count[static_cast<std::size_t>(c)] == 0) touched.push_back(c);
                ++hit_count[static_cast<std::size_t>(c)];
            }
        }
        int full = 0;
        for (int c : touched)
            if (hit_count[static_cast<std::size_t>(c)] == static_cast<int>(cls.size())) ++full;
        for (int c : touched) hit_count[static_cast<std::size_t>(c)] = 0;
        if (full != j) return false;
    }
    return true;
}

Graph make_complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph make_edgeless(int n) { return Graph::from_edges(n, {}); }

Graph make_path(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need at least 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(n - 1, 0);
    return Graph::from_edges(n, es);
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph::from_edges(a + b, es);
}

}  // namespace trg
