#include "trgraph/transitivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "trgraph/oracle.hpp"

namespace trg {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Split: return "split";
        case Method::Chain: return "chain";
        case Method::Cochain: return "cochain";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

TransitivePartition checked(const Graph& g, TransitivePartition part) {
    if (!verify_transitive_partition(g, part))
        throw std::logic_error("constructed certificate failed verification");
    return part;
}

void validate_split_certificate(const Graph& g, const SplitPartition& cert) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int v : cert.clique) {
        require(v >= 0 && v < n && side[static_cast<std::size_t>(v)] == -1,
                "split certificate: clique is not a vertex set");
        side[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : cert.independent_set) {
        require(v >= 0 && v < n && side[static_cast<std::size_t>(v)] == -1,
                "split certificate: sides overlap or leave the vertex set");
        side[static_cast<std::size_t>(v)] = 0;
    }
    for (int v = 0; v < n; ++v)
        require(side[static_cast<std::size_t>(v)] != -1, "split certificate: sides do not cover V");
    for (int u : cert.clique)
        for (int v : cert.clique)
            require(u >= v || g.has_edge(u, v), "split certificate: K is not a clique");
    for (int u : cert.independent_set)
        for (int v : g.neighbors(u))
            require(v <= u || side[static_cast<std::size_t>(v)] == 1,
                    "split certificate: S is not independent");
    // |K| = omega: no independent-side vertex may see the whole clique.
    for (int u : cert.independent_set) {
        std::size_t in_k = 0;
        for (int v : g.neighbors(u))
            if (side[static_cast<std::size_t>(v)] == 1) ++in_k;
        require(in_k < cert.clique.size(), "split certificate: clique is not maximum");
    }
}

}  // namespace

TrResult transitivity_split(const Graph& g, const SplitPartition& cert, bool with_certificate) {
    validate_split_certificate(g, cert);
    const int n = g.vertex_count();
    if (n == 0) return TrResult{0, Method::Split, TransitivePartition{}};

    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    for (int v : cert.independent_set) in_s[static_cast<std::size_t>(v)] = 1;
    bool covered = true;
    for (int v : cert.clique) {
        bool hit = false;
        for (int u : g.neighbors(v))
            if (in_s[static_cast<std::size_t>(u)]) {
                hit = true;
                break;
            }
        if (!hit) {
            covered = false;
            break;
        }
    }

    TrResult out;
    out.method = Method::Split;
    out.value = static_cast<int>(cert.clique.size()) + (covered ? 1 : 0);
    if (!with_certificate) return out;

    TransitivePartition part;
    if (covered) {
        // V1 = S, then one clique vertex per class.
        part.classes.push_back(cert.independent_set);
        for (int v : cert.clique) part.classes.push_back({v});
    } else {
        // V1 = S plus one clique vertex, the rest of the clique singleton.
        std::vector<int> first(cert.independent_set);
        first.push_back(cert.clique.front());
        std::sort(first.begin(), first.end());
        part.classes.push_back(std::move(first));
        for (std::size_t i = 1; i < cert.clique.size(); ++i)
            part.classes.push_back({cert.clique[i]});
    }
    out.certificate = checked(g, std::move(part));
    return out;
}

std::vector<Edge> min_eds_chain(const ChainOrdering& cert) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(cert.j));
    for (int i = 0; i < cert.j; ++i)
        out.emplace_back(cert.xs[static_cast<std::size_t>(i)], cert.ys[static_cast<std::size_t>(i)]);
    return out;
}

TrResult transitivity_chain(const Graph& g, const ChainOrdering& cert, bool with_certificate) {
    require(is_valid_chain_ordering(g, cert), "chain certificate: invalid ordering");
    const int n = g.vertex_count();
    if (n == 0) return TrResult{0, Method::Chain, TransitivePartition{}};

    TrResult out;
    out.method = Method::Chain;
    const int j = cert.j;
    if (j == 0) {
        out.value = 1;
        if (with_certificate) {
            std::vector<int> all(cert.xs);
            all.insert(all.end(), cert.ys.begin(), cert.ys.end());
            std::sort(all.begin(), all.end());
            out.certificate = checked(g, TransitivePartition{{all}});
        }
        return out;
    }

    const auto& xs = cert.xs;
    const auto& ys = cert.ys;
    const bool cross = static_cast<std::size_t>(j) < xs.size() &&
                       static_cast<std::size_t>(j) < ys.size() &&
                       g.has_edge(xs[static_cast<std::size_t>(j)], ys[static_cast<std::size_t>(j - 1)]) &&
                       g.has_edge(xs[static_cast<std::size_t>(j - 1)], ys[static_cast<std::size_t>(j)]);
    out.value = j + 1 + (cross ? 1 : 0);
    if (!with_certificate) return out;

    // The first j indices span a complete bipartite core; pair classes
    // {x_i, y_i} dominate everything behind them, the two top classes are
    // the singletons {x_j} and {y_j}, and in the cross case {x_{j+1},
    // y_{j+1}} slots in just before them. All unused vertices ride in V1.
    TransitivePartition part;
    auto tail_into = [&](std::vector<int>& cls, int from) {
        for (std::size_t i = static_cast<std::size_t>(from); i < xs.size(); ++i) cls.push_back(xs[i]);
        for (std::size_t i = static_cast<std::size_t>(from); i < ys.size(); ++i) cls.push_back(ys[i]);
    };
    if (!cross) {
        if (j == 1) {
            std::vector<int> first;
            for (int v : xs) first.push_back(v);
            for (std::size_t i = 1; i < ys.size(); ++i) first.push_back(ys[i]);
            std::sort(first.begin(), first.end());
            part.classes.push_back(std::move(first));
            part.classes.push_back({ys[0]});
        } else {
            std::vector<int> first{xs[0], ys[0]};
            tail_into(first, j);
            std::sort(first.begin(), first.end());
            part.classes.push_back(std::move(first));
            for (int i = 2; i <= j - 1; ++i)
                part.classes.push_back({xs[static_cast<std::size_t>(i - 1)],
                                        ys[static_cast<std::size_t>(i - 1)]});
            part.classes.push_back({xs[static_cast<std::size_t>(j - 1)]});
            part.classes.push_back({ys[static_cast<std::size_t>(j - 1)]});
        }
    } else {
        if (j == 1) {
            std::vector<int> first{xs[1], ys[1]};
            tail_into(first, 2);
            std::sort(first.begin(), first.end());
            part.classes.push_back(std::move(first));
            part.classes.push_back({xs[0]});
            part.classes.push_back({ys[0]});
        } else {
            std::vector<int> first{xs[0], ys[0]};
            tail_into(first, j + 1);
            std::sort(first.begin(), first.end());
            part.classes.push_back(std::move(first));
            for (int i = 2; i <= j - 1; ++i)
                part.classes.push_back({xs[static_cast<std::size_t>(i - 1)],
                                        ys[static_cast<std::size_t>(i - 1)]});
            part.classes.push_back({xs[static_cast<std::size_t>(j)],
                                    ys[static_cast<std::size_t>(j)]});
            part.classes.push_back({xs[static_cast<std::size_t>(j - 1)]});
            part.classes.push_back({ys[static_cast<std::size_t>(j - 1)]});
        }
    }
    for (auto& cls : part.classes) std::sort(cls.begin(), cls.end());
    out.certificate = checked(g, std::move(part));
    return out;
}

TrResult transitivity_cochain(const Graph& g, const ChainOrdering& cert, bool with_certificate) {
    const Graph comp = g.complement();
    require(is_valid_chain_ordering(comp, cert), "cochain certificate: invalid ordering");
    const int n = g.vertex_count();
    if (n == 0) return TrResult{0, Method::Cochain, TransitivePartition{}};

    const int p = cert.p;
    TrResult out;
    out.method = Method::Cochain;
    out.value = n - p;
    if (!with_certificate) return out;

    // Each dominating edge x_i y_i of the complement pairs two vertices that
    // are adjacent to everything later within their own (clique) sides of g;
    // leftover vertices become singleton classes, X side first.
    TransitivePartition part;
    for (int i = 0; i < p; ++i) {
        std::vector<int> pair{cert.xs[static_cast<std::size_t>(i)],
                              cert.ys[static_cast<std::size_t>(i)]};
        std::sort(pair.begin(), pair.end());
        part.classes.push_back(std::move(pair));
    }
    for (std::size_t i = static_cast<std::size_t>(p); i < cert.xs.size(); ++i)
        part.classes.push_back({cert.xs[i]});
    for (std::size_t i = static_cast<std::size_t>(p); i < cert.ys.size(); ++i)
        part.classes.push_back({cert.ys[i]});
    out.certificate = checked(g, std::move(part));
    return out;
}

std::optional<TrResult> transitivity_auto(const Graph& g, const AutoOptions& options) {
    if (auto split = split_partition(g, /*want_witness=*/false); split.is_split())
        return transitivity_split(g, *split.partition, options.with_certificate);
    if (auto chain = chain_ordering(g, /*want_witness=*/false); chain.is_chain())
        return transitivity_chain(g, *chain.ordering, options.with_certificate);
    if (auto cochain = cochain_ordering(g, /*want_witness=*/false); cochain.is_cochain())
        return transitivity_cochain(g, *cochain.ordering, options.with_certificate);
    auto exact = oracle::transitivity_bruteforce(g, options.budget);
    if (exact && !options.with_certificate) exact->certificate.reset();
    return exact;
}

}  // namespace trg
