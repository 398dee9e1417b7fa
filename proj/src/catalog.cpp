#include "trgraph/catalog.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "trgraph/atoms.hpp"

namespace trg::catalog {

std::vector<Graph> all_graphs(int n) {
    if (n < 1) throw std::invalid_argument("all_graphs: need at least one vertex");
    if (n > 10) throw std::invalid_argument("all_graphs: catalog generation capped at 10 vertices");

    std::vector<Graph> level{make_complete(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& h : level) {
            // Attach vertex size-1 to every subset of the existing vertices.
            const std::uint32_t limit = std::uint32_t{1} << (size - 1);
            std::vector<Edge> base = h.edges();
            for (std::uint32_t mask = 0; mask < limit; ++mask) {
                std::vector<Edge> es(base);
                for (int v = 0; v < size - 1; ++v)
                    if ((mask >> v) & 1) es.emplace_back(v, size - 1);
                Graph g = Graph::from_edges(size, es);
                auto canon = atoms::canonical_form(g);
                if (next.contains(canon.certificate)) continue;
                std::vector<Edge> canon_edges;
                canon_edges.reserve(es.size());
                std::vector<int> inverse(static_cast<std::size_t>(size));
                for (int i = 0; i < size; ++i)
                    inverse[static_cast<std::size_t>(canon.labeling[static_cast<std::size_t>(i)])] = i;
                for (auto [u, v] : es)
                    canon_edges.emplace_back(inverse[static_cast<std::size_t>(u)],
                                             inverse[static_cast<std::size_t>(v)]);
                next.emplace(canon.certificate, Graph::from_edges(size, canon_edges));
            }
        }
        level.clear();
        for (auto& [cert, graph] : next) level.push_back(std::move(graph));
    }
    return level;
}

std::vector<Graph> all_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (int size = 1; size <= n; ++size) {
        auto level = all_graphs(size);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace trg::catalog
