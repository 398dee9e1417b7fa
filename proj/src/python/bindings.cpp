#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trgraph/atoms.hpp"
#include "trgraph/catalog.hpp"
#include "trgraph/graph.hpp"
#include "trgraph/io.hpp"
#include "trgraph/nordhaus_gaddum.hpp"
#include "trgraph/oracle.hpp"
#include "trgraph/recognition.hpp"
#include "trgraph/transitivity.hpp"

namespace py = pybind11;
using namespace trg;

namespace {

oracle::SearchBudget make_budget(int max_vertices) {
    oracle::SearchBudget budget;
    budget.max_vertices = max_vertices;
    return budget;
}

py::object classes_to_py(const std::optional<TransitivePartition>& part) {
    if (!part) return py::none();
    py::list classes;
    for (const auto& cls : part->classes) classes.append(py::cast(cls));
    return classes;
}

py::dict tr_to_dict(const TrResult& result) {
    py::dict d;
    d["value"] = result.value;
    d["method"] = std::string(method_name(result.method));
    d["classes"] = classes_to_py(result.certificate);
    return d;
}

py::object witness_to_py(const std::optional<Obstruction>& obstruction) {
    if (!obstruction) return py::none();
    py::dict d;
    d["kind"] = std::string(obstruction_name(obstruction->kind));
    d["vertices"] = py::cast(obstruction->vertices);
    return d;
}

py::dict ordering_to_dict(const ChainOrdering& ord) {
    py::dict d;
    d["sigma_x"] = py::cast(ord.xs);
    d["sigma_y"] = py::cast(ord.ys);
    d["j"] = ord.j;
    d["p"] = ord.p;
    return d;
}

py::dict ng_to_dict(const ng::NGReport& report) {
    py::dict d;
    d["n"] = report.n;
    d["trG"] = report.tr_g;
    d["trGbar"] = report.tr_gbar;
    d["sum"] = report.sum;
    d["case"] = std::string(ng::predicted_case_name(report.predicted));
    d["matches_theorem"] = report.matches_theorem;
    return d;
}

TransitivePartition partition_from(const std::vector<std::vector<int>>& classes) {
    return TransitivePartition{classes};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Transitive vertex partitions: exact and linear-time transitivity solvers, "
              "class recognizers with certificates, t-atom tooling and Nordhaus-Gaddum checks.";
    m.attr("__version__") = "0.1.0";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) {
                 return Graph::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("max_degree", &Graph::max_degree)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("neighbors",
             [](const Graph& g, int v) {
                 auto s = g.neighbors(v);
                 return std::vector<int>(s.begin(), s.end());
             },
             py::arg("v"))
        .def("edges", &Graph::edges)
        .def("complement", &Graph::complement)
        .def("without_vertex", &Graph::without_vertex, py::arg("v"))
        .def("without_edge", &Graph::without_edge, py::arg("u"), py::arg("v"))
        .def("induced_subgraph",
             [](const Graph& g, const std::vector<int>& s) {
                 auto r = g.induced_subgraph(s);
                 return py::make_tuple(r.graph, r.vertices);
             },
             py::arg("vertices"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("complete_graph", &make_complete, py::arg("n"));
    m.def("edgeless_graph", &make_edgeless, py::arg("n"));
    m.def("path_graph", &make_path, py::arg("n"));
    m.def("cycle_graph", &make_cycle, py::arg("n"));
    m.def("complete_bipartite", &make_complete_bipartite, py::arg("a"), py::arg("b"));

    m.def("dominates",
          [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
              return dominates(g, a, b);
          },
          py::arg("g"), py::arg("a"), py::arg("b"));
    m.def("verify_transitive_partition",
          [](const Graph& g, const std::vector<std::vector<int>>& classes) {
              return verify_transitive_partition(g, partition_from(classes));
          },
          py::arg("g"), py::arg("classes"));

    m.def("parse_graph6", [](const std::string& text) { return io::parse_graph6(text).graph; },
          py::arg("text"));
    m.def("to_graph6", &io::emit_graph6, py::arg("g"));
    m.def("parse_edge_list",
          [](const std::string& text) {
              auto doc = io::parse_edge_list(text);
              return py::make_tuple(doc.graph, doc.labels);
          },
          py::arg("text"));

    m.def("split_partition",
          [](const Graph& g) {
              auto rec = split_partition(g);
              py::dict d;
              d["recognized"] = rec.is_split();
              if (rec.partition) {
                  d["independent_set"] = py::cast(rec.partition->independent_set);
                  d["clique"] = py::cast(rec.partition->clique);
              }
              d["witness"] = witness_to_py(rec.obstruction);
              return d;
          },
          py::arg("g"));
    m.def("chain_ordering",
          [](const Graph& g) {
              auto rec = chain_ordering(g);
              py::dict d;
              d["recognized"] = rec.is_chain();
              if (rec.ordering) d["ordering"] = ordering_to_dict(*rec.ordering);
              d["witness"] = witness_to_py(rec.obstruction);
              return d;
          },
          py::arg("g"));
    m.def("cochain_ordering",
          [](const Graph& g) {
              auto rec = cochain_ordering(g);
              py::dict d;
              d["recognized"] = rec.is_cochain();
              if (rec.ordering) d["ordering"] = ordering_to_dict(*rec.ordering);
              d["witness"] = witness_to_py(rec.obstruction);
              if (!rec.reason.empty()) d["reason"] = rec.reason;
              return d;
          },
          py::arg("g"));

    m.def("transitivity",
          [](const Graph& g, int budget, bool certificate) -> py::object {
              auto result = transitivity_auto(g, {make_budget(budget), certificate});
              if (!result) return py::none();
              return tr_to_dict(*result);
          },
          py::arg("g"), py::arg("budget") = 12, py::arg("certificate") = true,
          "Transitivity via recognizer dispatch with exact-search fallback; None when "
          "the class is not recognized and the graph exceeds the budget.");
    m.def("min_eds_chain",
          [](const Graph& g) {
              auto rec = chain_ordering(g);
              if (!rec.is_chain())
                  throw std::invalid_argument("min_eds_chain: not a bipartite chain graph");
              return min_eds_chain(*rec.ordering);
          },
          py::arg("g"));

    m.def("transitivity_bruteforce",
          [](const Graph& g, int budget, const std::string& strategy) -> py::object {
              auto s = strategy == "iterated_removal" ? oracle::Strategy::IteratedRemoval
                                                      : oracle::Strategy::ClassAssignment;
              auto result = oracle::transitivity_bruteforce(g, make_budget(budget), s);
              if (!result) return py::none();
              return tr_to_dict(*result);
          },
          py::arg("g"), py::arg("budget") = 12, py::arg("strategy") = "class_assignment");
    m.def("grundy_bruteforce",
          [](const Graph& g, int budget) -> py::object {
              auto result = oracle::grundy_bruteforce(g, make_budget(budget));
              if (!result) return py::none();
              py::dict d;
              d["value"] = result->value;
              d["classes"] = classes_to_py(result->partition);
              return d;
          },
          py::arg("g"), py::arg("budget") = 12);
    m.def("eds_bruteforce",
          [](const Graph& g, int max_edges) -> py::object {
              oracle::SearchBudget budget;
              budget.max_edges = max_edges;
              auto result = oracle::eds_bruteforce(g, budget);
              if (!result) return py::none();
              return py::cast(result->edges);
          },
          py::arg("g"), py::arg("max_edges") = 64);
    m.def("contains_atom",
          [](const Graph& g, int t, int budget) -> py::object {
              auto atom_list = atoms::generate_atoms(t);
              if (!atom_list) return py::none();
              auto result = oracle::contains_atom(g, *atom_list, make_budget(budget));
              if (!result) return py::none();
              py::dict d;
              d["contains"] = result->contains;
              if (result->embedding) {
                  d["atom"] = io::emit_graph6((*atom_list)[result->embedding->atom_index]);
                  d["mapping"] = py::cast(result->embedding->mapping);
              }
              return d;
          },
          py::arg("g"), py::arg("t"), py::arg("budget") = 12);

    auto boolean_or_none = [](std::optional<bool> v) -> py::object {
        if (!v) return py::none();
        return py::bool_(*v);
    };
    m.def("is_vertex_critical",
          [boolean_or_none](const Graph& g, int budget) {
              return boolean_or_none(oracle::is_vertex_critical(g, make_budget(budget)));
          },
          py::arg("g"), py::arg("budget") = 12);
    m.def("is_edge_critical",
          [boolean_or_none](const Graph& g, int budget) {
              return boolean_or_none(oracle::is_edge_critical(g, make_budget(budget)));
          },
          py::arg("g"), py::arg("budget") = 12);
    m.def("is_ve_critical",
          [boolean_or_none](const Graph& g, int budget) {
              return boolean_or_none(oracle::is_ve_critical(g, make_budget(budget)));
          },
          py::arg("g"), py::arg("budget") = 12);

    m.def("generate_atoms",
          [](int t) -> py::object {
              auto result = atoms::generate_atoms(t);
              if (!result) return py::none();
              return py::cast(*result);
          },
          py::arg("t"));
    m.def("classify_atoms",
          [](int t, int budget) -> py::object {
              auto result = atoms::classify_atoms(t, make_budget(budget));
              if (!result) return py::none();
              py::list out;
              for (const auto& rec : *result) {
                  py::dict d;
                  d["graph"] = rec.graph;
                  d["graph6"] = rec.certificate;
                  d["level"] = rec.level;
                  d["transitivity"] = rec.transitivity;
                  d["vertex_critical"] = rec.vertex_critical;
                  d["edge_critical"] = rec.edge_critical;
                  d["ve_critical"] = rec.ve_critical;
                  d["in_a_prime"] = rec.in_a_prime;
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("t"), py::arg("budget") = 12);
    m.def("edge_critical_members",
          [](int k, int n, int budget) -> py::object {
              auto result = atoms::edge_critical_members(k, n, make_budget(budget));
              if (!result) return py::none();
              return py::cast(*result);
          },
          py::arg("k"), py::arg("n"), py::arg("budget") = 12);
    m.def("canonical_graph6", &atoms::canonical_certificate, py::arg("g"));
    m.def("are_isomorphic", &atoms::are_isomorphic, py::arg("a"), py::arg("b"));

    m.def("ng_sum",
          [](const Graph& g, int budget) -> py::object {
              auto report = ng::ng_sum(g, make_budget(budget));
              if (!report) return py::none();
              return ng_to_dict(*report);
          },
          py::arg("g"), py::arg("budget") = 12);
    m.def("verify_ng_split", [](const Graph& g) { return ng_to_dict(ng::verify_ng_split(g)); },
          py::arg("g"));
    m.def("verify_ng_chain", [](const Graph& g) { return ng_to_dict(ng::verify_ng_chain(g)); },
          py::arg("g"));
    m.def("find_counterexamples",
          [](int n_max, int budget) -> py::object {
              auto result = ng::find_counterexamples(n_max, make_budget(budget));
              if (!result) return py::none();
              py::list out;
              for (const auto& ce : *result) {
                  py::dict d = ng_to_dict(ce.report);
                  d["graph"] = ce.graph;
                  d["graph6"] = io::emit_graph6(ce.graph);
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("n_max"), py::arg("budget") = 12);

    m.def("all_graphs", &catalog::all_graphs, py::arg("n"),
          "All graphs on n vertices up to isomorphism (canonical forms).");
}
