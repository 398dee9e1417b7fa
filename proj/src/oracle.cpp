#include "trgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <stdexcept>

namespace trg::oracle {

namespace {

struct BudgetExpired {};

class Deadline {
public:
    explicit Deadline(const SearchBudget& budget) {
        if (budget.time_limit) deadline_ = Clock::now() + *budget.time_limit;
    }

    void tick() {
        if (!deadline_) return;
        if ((++count_ & 1023u) != 0) return;
        if (Clock::now() > *deadline_) throw BudgetExpired{};
    }

private:
    using Clock = std::chrono::steady_clock;
    std::optional<Clock::time_point> deadline_;
    unsigned count_ = 0;
};

struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> nbr;

    explicit MaskGraph(const Graph& g) : n(g.vertex_count()), nbr(static_cast<std::size_t>(n)) {
        for (int v = 0; v < n; ++v) nbr[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
    }

    std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
};

int popcount(std::uint64_t m) { return std::popcount(m); }

// Depth-first search for a transitive k-partition, k >= 3, of a connected
// graph. Classes are chosen from the top down; the top two classes are the
// singletons the structure theorem guarantees, class c (0-based, 1 <= c <=
// k-3) is capped at 2^(k-c-2) vertices, and V1 takes everything left.
struct ClassSearch {
    const MaskGraph& g;
    Deadline& deadline;
    int k;
    std::vector<std::uint64_t> classes;
    std::vector<int> caps;
    std::uint64_t remaining = 0;
    std::uint64_t assigned = 0;

    ClassSearch(const MaskGraph& graph, Deadline& dl, int order)
        : g(graph), deadline(dl), k(order), classes(static_cast<std::size_t>(order), 0),
          caps(static_cast<std::size_t>(order), 1) {
        for (int c = 1; c <= k - 3; ++c) {
            int e = k - c - 2;
            caps[static_cast<std::size_t>(c)] = e >= 30 ? g.n : (1 << e);
        }
    }

    bool dominates_assigned(std::uint64_t m) const {
        for (std::uint64_t rest = assigned; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (!(g.nbr[static_cast<std::size_t>(v)] & m)) return false;
        }
        return true;
    }

    bool place(int c) {
        deadline.tick();
        if (c == 0) {
            if (!remaining) return false;
            if (!dominates_assigned(remaining)) return false;
            classes[0] = remaining;
            return true;
        }
        if (popcount(remaining) < c + 1) return false;
        const std::uint64_t rem = remaining;
        for (std::uint64_t sub = rem; sub; sub = (sub - 1) & rem) {
            if (popcount(sub) > caps[static_cast<std::size_t>(c)]) continue;
            if (!dominates_assigned(sub)) continue;
            classes[static_cast<std::size_t>(c)] = sub;
            assigned |= sub;
            remaining = rem & ~sub;
            if (place(c - 1)) return true;
            assigned &= ~sub;
            remaining = rem;
        }
        return false;
    }

    bool run() {
        for (int u = 0; u < g.n; ++u) {
            for (std::uint64_t ws = g.nbr[static_cast<std::size_t>(u)]; ws;) {
                int w = std::countr_zero(ws);
                ws &= ws - 1;
                classes[static_cast<std::size_t>(k - 1)] = std::uint64_t{1} << u;
                classes[static_cast<std::size_t>(k - 2)] = std::uint64_t{1} << w;
                assigned = (std::uint64_t{1} << u) | (std::uint64_t{1} << w);
                remaining = g.all() & ~assigned;
                if (place(k - 3)) return true;
            }
        }
        return false;
    }
};

std::vector<int> mask_to_vertices(std::uint64_t m, const std::vector<int>& map) {
    std::vector<int> out;
    for (; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        out.push_back(map[static_cast<std::size_t>(v)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<TrResult> strategy_class_assignment(const Graph& g, const SearchBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.max_vertices || n > 64) return std::nullopt;
    if (n == 0) return TrResult{0, Method::Oracle, TransitivePartition{}};

    Deadline deadline(budget);
    const int label_cap = budget.max_labels.value_or(INT_MAX);
    int natural = 0;

    int best = 0;
    TransitivePartition witness;
    for (const auto& comp : g.components()) {
        auto ind = g.induced_subgraph(comp);
        const MaskGraph mg(ind.graph);
        const int cn = static_cast<int>(comp.size());
        natural = std::max(natural, std::min(ind.graph.max_degree() + 1, cn));

        int local = ind.graph.edge_count() == 0 ? 1 : 2;
        std::vector<std::uint64_t> local_masks;
        const int kmax = std::min({ind.graph.max_degree() + 1, cn, label_cap});
        for (int k = 3; k <= kmax; ++k) {
            ClassSearch search(mg, deadline, k);
            if (!search.run()) break;
            local = k;
            local_masks = search.classes;
        }
        if (local <= best) continue;

        best = local;
        witness.classes.clear();
        if (local == 1) {
            witness.classes.push_back(comp);
        } else if (local == 2) {
            std::vector<int> rest(comp.begin() + 1, comp.end());
            witness.classes.push_back(std::move(rest));
            witness.classes.push_back({comp.front()});
        } else {
            for (std::uint64_t m : local_masks)
                witness.classes.push_back(mask_to_vertices(m, ind.vertices));
        }
    }
    if (best >= label_cap && label_cap < natural) return std::nullopt;

    // Vertices outside the winning component ride along in V1.
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto& cls : witness.classes)
        for (int v : cls) used[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)]) witness.classes[0].push_back(v);
    std::sort(witness.classes[0].begin(), witness.classes[0].end());

    if (!verify_transitive_partition(g, witness))
        throw std::logic_error("oracle: class-assignment witness failed verification");
    return TrResult{best, Method::Oracle, std::move(witness)};
}

// Iterated-removal form: the maximum depth of repeatedly deleting a minimal
// dominating set of the remaining induced subgraph.
struct RemovalSearch {
    const MaskGraph& g;
    Deadline& deadline;
    std::vector<signed char> depth;
    std::vector<std::uint64_t> best_set;

    RemovalSearch(const MaskGraph& graph, Deadline& dl)
        : g(graph), deadline(dl), depth(std::size_t{1} << graph.n, -1),
          best_set(std::size_t{1} << graph.n, 0) {}

    int solve(std::uint64_t mask) {
        if (mask == 0) return 0;
        auto& memo = depth[mask];
        if (memo >= 0) return memo;
        int best = 0;
        std::uint64_t best_d = 0;
        for (std::uint64_t sub = mask; sub; sub = (sub - 1) & mask) {
            deadline.tick();
            if (!is_minimal_dominating(sub, mask)) continue;
            int d = 1 + solve(mask & ~sub);
            if (d > best) {
                best = d;
                best_d = sub;
            }
        }
        memo = static_cast<signed char>(best);
        best_set[mask] = best_d;
        return best;
    }

    bool is_minimal_dominating(std::uint64_t d, std::uint64_t mask) const {
        std::uint64_t privately_needed = 0;  // members serving as sole dominator
        for (std::uint64_t rest = mask & ~d; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t hits = g.nbr[static_cast<std::size_t>(v)] & d;
            if (!hits) return false;
            if ((hits & (hits - 1)) == 0) privately_needed |= hits;
        }
        for (std::uint64_t rest = d; rest;) {
            int v = std::countr_zero(rest);
            std::uint64_t bit = rest & ~(rest - 1);
            rest &= rest - 1;
            if (privately_needed & bit) continue;
            if ((g.nbr[static_cast<std::size_t>(v)] & d & ~bit) == 0) continue;  // self-private
            return false;  // d \ {v} still dominates
        }
        return true;
    }
};

std::optional<TrResult> strategy_iterated_removal(const Graph& g, const SearchBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.max_vertices || n > 20) return std::nullopt;
    if (n == 0) return TrResult{0, Method::Oracle, TransitivePartition{}};

    Deadline deadline(budget);
    const MaskGraph mg(g);
    RemovalSearch search(mg, deadline);
    const int value = search.solve(mg.all());
    if (budget.max_labels && value > *budget.max_labels) return std::nullopt;

    std::vector<int> identity(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) identity[static_cast<std::size_t>(v)] = v;
    TransitivePartition part;
    for (std::uint64_t mask = mg.all(); mask;) {
        std::uint64_t d = search.best_set[mask];
        part.classes.push_back(mask_to_vertices(d, identity));
        mask &= ~d;
    }
    if (!verify_transitive_partition(g, part))
        throw std::logic_error("oracle: iterated-removal witness failed verification");
    return TrResult{value, Method::Oracle, std::move(part)};
}

}  // namespace

std::optional<TrResult> transitivity_bruteforce(const Graph& g, const SearchBudget& budget,
                                                Strategy strategy) {
    try {
        return strategy == Strategy::ClassAssignment ? strategy_class_assignment(g, budget)
                                                     : strategy_iterated_removal(g, budget);
    } catch (const BudgetExpired&) {
        return std::nullopt;
    }
}

std::optional<GrundyResult> grundy_bruteforce(const Graph& g, const SearchBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.max_vertices || n > 20) return std::nullopt;
    if (n == 0) return GrundyResult{0, {}};

    try {
        Deadline deadline(budget);
        const MaskGraph mg(g);
        std::vector<signed char> depth(std::size_t{1} << n, -1);
        std::vector<std::uint64_t> best_set(std::size_t{1} << n, 0);

        // Grundy classes are exactly maximal independent sets of what is left.
        auto solve = [&](auto&& self, std::uint64_t mask) -> int {
            if (mask == 0) return 0;
            if (depth[mask] >= 0) return depth[mask];
            int best = 0;
            std::uint64_t best_m = 0;
            for (std::uint64_t sub = mask; sub; sub = (sub - 1) & mask) {
                deadline.tick();
                bool ok = true;
                for (std::uint64_t rest = sub; rest && ok;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (mg.nbr[static_cast<std::size_t>(v)] & sub) ok = false;
                }
                for (std::uint64_t rest = mask & ~sub; rest && ok;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (!(mg.nbr[static_cast<std::size_t>(v)] & sub)) ok = false;
                }
                if (!ok) continue;
                int d = 1 + self(self, mask & ~sub);
                if (d > best) {
                    best = d;
                    best_m = sub;
                }
            }
            depth[mask] = static_cast<signed char>(best);
            best_set[mask] = best_m;
            return best;
        };

        GrundyResult out;
        out.value = solve(solve, mg.all());
        std::vector<int> identity(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) identity[static_cast<std::size_t>(v)] = v;
        for (std::uint64_t mask = mg.all(); mask;) {
            std::uint64_t m = best_set[mask];
            out.partition.classes.push_back(mask_to_vertices(m, identity));
            mask &= ~m;
        }
        if (!verify_transitive_partition(g, out.partition))
            throw std::logic_error("oracle: Grundy witness failed verification");
        return out;
    } catch (const BudgetExpired&) {
        return std::nullopt;
    }
}

namespace {

struct EdsSearch {
    const std::vector<Edge>& edges;
    std::vector<std::vector<int>> incident;  // vertex -> indices into edges
    std::vector<int> cover_count;            // chosen edges touching each vertex
    std::vector<int> chosen;
    Deadline& deadline;

    EdsSearch(const Graph& g, const std::vector<Edge>& es, Deadline& dl)
        : edges(es), incident(static_cast<std::size_t>(g.vertex_count())),
          cover_count(static_cast<std::size_t>(g.vertex_count()), 0), deadline(dl) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            incident[static_cast<std::size_t>(edges[i].first)].push_back(static_cast<int>(i));
            incident[static_cast<std::size_t>(edges[i].second)].push_back(static_cast<int>(i));
        }
    }

    int first_undominated() const {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (cover_count[static_cast<std::size_t>(edges[i].first)] == 0 &&
                cover_count[static_cast<std::size_t>(edges[i].second)] == 0)
                return static_cast<int>(i);
        return -1;
    }

    bool search(int slots) {
        deadline.tick();
        int e = first_undominated();
        if (e < 0) return true;
        if (slots == 0) return false;
        auto [u, v] = edges[static_cast<std::size_t>(e)];
        auto try_edge = [&](int idx) {
            const auto& [a, b] = edges[static_cast<std::size_t>(idx)];
            ++cover_count[static_cast<std::size_t>(a)];
            ++cover_count[static_cast<std::size_t>(b)];
            chosen.push_back(idx);
            if (search(slots - 1)) return true;
            chosen.pop_back();
            --cover_count[static_cast<std::size_t>(a)];
            --cover_count[static_cast<std::size_t>(b)];
            return false;
        };
        for (int idx : incident[static_cast<std::size_t>(u)])
            if (try_edge(idx)) return true;
        for (int idx : incident[static_cast<std::size_t>(v)]) {
            if (edges[static_cast<std::size_t>(idx)].first == u ||
                edges[static_cast<std::size_t>(idx)].second == u)
                continue;  // already tried from u's list
            if (try_edge(idx)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<EdsResult> eds_bruteforce(const Graph& g, const SearchBudget& budget) {
    const auto edges = g.edges();
    if (static_cast<int>(edges.size()) > budget.max_edges) return std::nullopt;
    try {
        Deadline deadline(budget);
        EdsSearch search(g, edges, deadline);
        for (int s = 0; s <= static_cast<int>(edges.size()); ++s) {
            search.chosen.clear();
            if (search.search(s)) {
                EdsResult out;
                for (int idx : search.chosen) out.edges.push_back(edges[static_cast<std::size_t>(idx)]);
                std::sort(out.edges.begin(), out.edges.end());
                return out;
            }
        }
        return EdsResult{};  // edgeless graph: empty set
    } catch (const BudgetExpired&) {
        return std::nullopt;
    }
}

namespace {

struct Embedder {
    const Graph& host;
    const Graph& pattern;
    Deadline& deadline;
    std::vector<int> order;     // pattern vertices, connectivity-first
    std::vector<int> mapping;   // pattern vertex -> host vertex
    std::vector<char> used;

    Embedder(const Graph& h, const Graph& p, Deadline& dl)
        : host(h), pattern(p), deadline(dl),
          mapping(static_cast<std::size_t>(p.vertex_count()), -1),
          used(static_cast<std::size_t>(h.vertex_count()), 0) {
        // Place high-degree vertices early, then greedily prefer vertices
        // with many already-placed neighbors.
        const int pn = pattern.vertex_count();
        std::vector<char> placed(static_cast<std::size_t>(pn), 0);
        for (int step = 0; step < pn; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < pn; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int links = 0;
                for (int u : pattern.neighbors(v))
                    if (placed[static_cast<std::size_t>(u)]) ++links;
                int deg = pattern.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            placed[static_cast<std::size_t>(best)] = 1;
            order.push_back(best);
        }
    }

    bool extend(std::size_t pos) {
        deadline.tick();
        if (pos == order.size()) return true;
        int pv = order[pos];
        for (int hv = 0; hv < host.vertex_count(); ++hv) {
            if (used[static_cast<std::size_t>(hv)]) continue;
            if (host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (int pu : pattern.neighbors(pv)) {
                int hu = mapping[static_cast<std::size_t>(pu)];
                if (hu != -1 && !host.has_edge(hv, hu)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[static_cast<std::size_t>(pv)] = hv;
            used[static_cast<std::size_t>(hv)] = 1;
            if (extend(pos + 1)) return true;
            mapping[static_cast<std::size_t>(pv)] = -1;
            used[static_cast<std::size_t>(hv)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<ContainsAtom> contains_atom(const Graph& g, std::span<const Graph> atom_list,
                                          const SearchBudget& budget) {
    if (g.vertex_count() > budget.max_vertices) return std::nullopt;
    try {
        Deadline deadline(budget);
        for (std::size_t i = 0; i < atom_list.size(); ++i) {
            const Graph& atom = atom_list[i];
            if (atom.vertex_count() > g.vertex_count() || atom.edge_count() > g.edge_count())
                continue;
            Embedder embedder(g, atom, deadline);
            if (embedder.extend(0)) return ContainsAtom{true, AtomEmbedding{i, embedder.mapping}};
        }
        return ContainsAtom{false, std::nullopt};
    } catch (const BudgetExpired&) {
        return std::nullopt;
    }
}

namespace {

std::optional<int> exact_value(const Graph& g, const SearchBudget& budget) {
    auto r = transitivity_bruteforce(g, budget);
    if (!r) return std::nullopt;
    return r->value;
}

}  // namespace

std::optional<bool> is_vertex_critical(const Graph& g, const SearchBudget& budget) {
    if (g.vertex_count() == 0) return false;
    auto base = exact_value(g, budget);
    if (!base) return std::nullopt;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto reduced = exact_value(g.without_vertex(v), budget);
        if (!reduced) return std::nullopt;
        if (*reduced >= *base) return false;
    }
    return true;
}

std::optional<bool> is_edge_critical(const Graph& g, const SearchBudget& budget) {
    auto base = exact_value(g, budget);
    if (!base) return std::nullopt;
    for (const auto& [u, v] : g.edges()) {
        auto reduced = exact_value(g.without_edge(u, v), budget);
        if (!reduced) return std::nullopt;
        if (*reduced >= *base) return false;
    }
    return true;
}

std::optional<bool> is_ve_critical(const Graph& g, const SearchBudget& budget) {
    auto vertex = is_vertex_critical(g, budget);
    if (!vertex) return std::nullopt;
    if (!*vertex) return false;
    return is_edge_critical(g, budget);
}

}  // namespace trg::oracle
