#include "trgraph/atoms.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "trgraph/io.hpp"

namespace trg::atoms {

namespace {

constexpr int kMaxCanonicalVertices = 16;

// Iterated neighborhood refinement. Colors are dense ids whose order is an
// isomorphism invariant (sorted signatures), so refined colorings of
// isomorphic graphs correspond.
std::vector<int> refine(const std::vector<std::uint64_t>& nbr, std::vector<int> color) {
    const int n = static_cast<int>(nbr.size());
    for (;;) {
        int ncolors = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.assign(static_cast<std::size_t>(ncolors) + 1, 0);
            s[0] = color[static_cast<std::size_t>(v)];
            for (std::uint64_t rest = nbr[static_cast<std::size_t>(v)]; rest;) {
                int u = std::countr_zero(rest);
                rest &= rest - 1;
                ++s[static_cast<std::size_t>(color[static_cast<std::size_t>(u)]) + 1];
            }
        }
        std::map<std::vector<int>, int> order;
        for (int v = 0; v < n; ++v) order.emplace(sig[static_cast<std::size_t>(v)], 0);
        int next = 0;
        for (auto& [key, id] : order) id = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = order[sig[static_cast<std::size_t>(v)]];
            if (c != color[static_cast<std::size_t>(v)]) changed = true;
            color[static_cast<std::size_t>(v)] = c;
        }
        if (!changed) return color;
    }
}

// Upper-triangle adjacency bits of the relabeled graph, packed MSB-first so
// lexicographic word comparison equals bitstring comparison.
using CertBits = std::array<std::uint64_t, 2>;

CertBits cert_bits(const std::vector<std::uint64_t>& nbr, const std::vector<int>& perm) {
    CertBits bits{0, 0};
    int b = 0;
    const int n = static_cast<int>(perm.size());
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((nbr[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >>
                 perm[static_cast<std::size_t>(j)]) &
                1)
                bits[static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (63 - b % 64);
    return bits;
}

struct CanonicalSearch {
    const std::vector<std::uint64_t>& nbr;
    int n;
    bool have_best = false;
    CertBits best_bits{};
    std::vector<int> best_perm;

    void leaf(const std::vector<int>& color) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
        CertBits bits = cert_bits(nbr, perm);
        if (!have_best || bits < best_bits) {
            have_best = true;
            best_bits = bits;
            best_perm = std::move(perm);
        }
    }

    void descend(const std::vector<int>& color) {
        // First cell with more than one vertex, in color order.
        int target = -1;
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
        for (int c = 0; c < n; ++c)
            if (count[static_cast<std::size_t>(c)] > 1) {
                target = c;
                break;
            }
        if (target == -1) {
            leaf(color);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != target) continue;
            std::vector<int> next(color);
            // Individualize v: pull it in front of the rest of its cell.
            for (int u = 0; u < n; ++u)
                if (next[static_cast<std::size_t>(u)] > target ||
                    (next[static_cast<std::size_t>(u)] == target && u != v))
                    ++next[static_cast<std::size_t>(u)];
            descend(refine(nbr, std::move(next)));
        }
    }
};

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        es.emplace_back(inverse[static_cast<std::size_t>(u)], inverse[static_cast<std::size_t>(v)]);
    return Graph::from_edges(n, es);
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxCanonicalVertices)
        throw std::invalid_argument("canonical_form: more than 16 vertices");

    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (g.edge_count() == 0 || g.edge_count() == pairs)
        return CanonicalForm{identity, io::emit_graph6(g)};

    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nbr[static_cast<std::size_t>(v)] = g.neighbor_mask(v);

    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = 0;
    CanonicalSearch search{nbr, n, false, CertBits{}, {}};
    search.descend(refine(nbr, std::move(color)));

    Graph canon = relabel(g, search.best_perm);
    return CanonicalForm{std::move(search.best_perm), io::emit_graph6(canon)};
}

std::string canonical_certificate(const Graph& g) { return canonical_form(g).certificate; }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_certificate(a) == canonical_certificate(b);
}

namespace {

// Induced-subgraph test: does `pattern` appear in `host` on some vertex
// subset with exactly the same adjacency?
bool contains_induced(const Graph& host, const Graph& pattern) {
    const int hn = host.vertex_count();
    const int pn = pattern.vertex_count();
    if (pn > hn) return false;
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(pn), 0);
    for (int step = 0; step < pn; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < pn; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            for (int u : pattern.neighbors(v))
                if (placed[static_cast<std::size_t>(u)]) ++links;
            if (links > best_links ||
                (links == best_links && pattern.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = pattern.degree(v);
            }
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
    }
    std::vector<int> mapping(static_cast<std::size_t>(pn), -1);
    std::vector<char> used(static_cast<std::size_t>(hn), 0);
    auto extend = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        int pv = order[pos];
        for (int hv = 0; hv < hn; ++hv) {
            if (used[static_cast<std::size_t>(hv)]) continue;
            if (host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                int pu = order[q];
                int hu = mapping[static_cast<std::size_t>(pu)];
                if (pattern.has_edge(pv, pu) != host.has_edge(hv, hu)) ok = false;
            }
            if (!ok) continue;
            mapping[static_cast<std::size_t>(pv)] = hv;
            used[static_cast<std::size_t>(hv)] = 1;
            if (self(self, pos + 1)) return true;
            mapping[static_cast<std::size_t>(pv)] = -1;
            used[static_cast<std::size_t>(hv)] = 0;
        }
        return false;
    };
    return extend(extend, 0);
}

// One expansion step of the recursive construction: attach I_r to H along
// the matching on W and the attachment map f : V(H) \ W -> I_r.
Graph expand(const Graph& h, const std::vector<int>& w_subset, const std::vector<int>& f_digits,
             const std::vector<int>& outside) {
    const int nh = h.vertex_count();
    const int r = static_cast<int>(w_subset.size());
    std::vector<Edge> es = h.edges();
    for (int i = 0; i < r; ++i) es.emplace_back(w_subset[static_cast<std::size_t>(i)], nh + i);
    for (std::size_t i = 0; i < outside.size(); ++i)
        es.emplace_back(outside[i], nh + f_digits[i]);
    return Graph::from_edges(nh + r, es);
}

}  // namespace

std::optional<std::vector<Graph>> generate_atoms(int t) {
    if (t < 1) throw std::invalid_argument("generate_atoms: level must be positive");
    if (t > 5) return std::nullopt;  // atom order reaches 2^(t-1); beyond this the
                                     // family is far past desk scale

    std::vector<Graph> level{make_complete(1)};
    for (int lvl = 2; lvl <= t; ++lvl) {
        std::map<std::string, Graph> next;
        for (const Graph& h : level) {
            const int nh = h.vertex_count();
            for (int r = 1; r <= nh; ++r) {
                // All r-subsets W of V(H), as sorted index vectors.
                std::vector<int> w(static_cast<std::size_t>(r));
                std::iota(w.begin(), w.end(), 0);
                for (;;) {
                    std::vector<char> in_w(static_cast<std::size_t>(nh), 0);
                    for (int v : w) in_w[static_cast<std::size_t>(v)] = 1;
                    std::vector<int> outside;
                    for (int v = 0; v < nh; ++v)
                        if (!in_w[static_cast<std::size_t>(v)]) outside.push_back(v);

                    std::vector<int> digits(outside.size(), 0);
                    for (;;) {
                        Graph g = expand(h, w, digits, outside);
                        auto canon = canonical_form(g);
                        next.emplace(canon.certificate, relabel(g, canon.labeling));

                        // Next attachment map, odometer-style.
                        std::size_t pos = 0;
                        while (pos < digits.size() && ++digits[pos] == r) digits[pos++] = 0;
                        if (pos == digits.size()) break;
                    }

                    // Next r-subset in lexicographic order.
                    int i = r - 1;
                    while (i >= 0 && w[static_cast<std::size_t>(i)] == nh - r + i) --i;
                    if (i < 0) break;
                    ++w[static_cast<std::size_t>(i)];
                    for (int q = i + 1; q < r; ++q)
                        w[static_cast<std::size_t>(q)] = w[static_cast<std::size_t>(q - 1)] + 1;
                }
            }
        }
        level.clear();
        for (auto& [cert, graph] : next) level.push_back(std::move(graph));
        std::stable_sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
            return a.vertex_count() < b.vertex_count();
        });

        // An expansion that contains another atom of the same level as a
        // proper induced subgraph is redundant: any host containing it
        // contains the smaller atom, and it can never be ve-critical. These
        // are dropped, which keeps the family minimal.
        std::vector<Graph> kept;
        for (const Graph& g : level) {
            bool redundant = false;
            for (const Graph& smaller : level) {
                if (smaller.vertex_count() >= g.vertex_count()) break;
                if (contains_induced(g, smaller)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(g);
        }
        level = std::move(kept);
    }
    return level;
}

std::optional<std::vector<AtomRecord>> classify_atoms(int t, const oracle::SearchBudget& budget) {
    auto atoms = generate_atoms(t);
    if (!atoms) return std::nullopt;
    std::vector<AtomRecord> out;
    out.reserve(atoms->size());
    for (const Graph& g : *atoms) {
        auto tr = oracle::transitivity_bruteforce(g, budget);
        auto vc = oracle::is_vertex_critical(g, budget);
        auto ec = oracle::is_edge_critical(g, budget);
        if (!tr || !vc || !ec) return std::nullopt;
        AtomRecord rec;
        rec.graph = g;
        rec.certificate = canonical_certificate(g);
        rec.level = t;
        rec.transitivity = tr->value;
        rec.vertex_critical = *vc;
        rec.edge_critical = *ec;
        rec.ve_critical = *vc && *ec;
        rec.in_a_prime = rec.ve_critical && rec.transitivity == t;
        out.push_back(std::move(rec));
    }
    return out;
}

std::optional<std::vector<Graph>> edge_critical_members(int k, int n,
                                                        const oracle::SearchBudget& budget) {
    if (k < 1 || n < 1) throw std::invalid_argument("edge_critical_members: k and n must be positive");
    auto records = classify_atoms(k, budget);
    if (!records) return std::nullopt;
    std::vector<Graph> out;
    for (const auto& rec : *records) {
        if (!rec.in_a_prime) continue;
        if (rec.graph.vertex_count() > n) continue;
        out.push_back(Graph::from_edges(n, rec.graph.edges()));
    }
    return out;
}

}  // namespace trg::atoms
