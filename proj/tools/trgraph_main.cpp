#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "trgraph/atoms.hpp"
#include "trgraph/io.hpp"
#include "trgraph/nordhaus_gaddum.hpp"
#include "trgraph/oracle.hpp"
#include "trgraph/recognition.hpp"
#include "trgraph/transitivity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

int env_budget() {
    if (const char* env = std::getenv("TRGRAPH_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 64) return static_cast<int>(v);
    }
    return 12;
}

struct Failure {
    std::string message;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{"cannot write '" + path + "'"};
    out << text;
}

void print_warnings(const trg::io::GraphDocument& doc) {
    for (const auto& warning : doc.warnings)
        std::cerr << "warning: line " << warning.line << ": " << warning.message << "\n";
}

struct CommonArgs {
    std::string input;
    std::string format;
    std::string output;
    int budget = env_budget();
};

trg::io::GraphDocument load(const CommonArgs& args) {
    auto doc = trg::io::load_graph_file(args.input, args.format);
    print_warnings(doc);
    return doc;
}

void add_format_option(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "Input format (inferred from extension by default)")
        ->check(CLI::IsMember({"graph6", "g6", "edges"}));
}

void add_output_option(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-o,--output", args.output, "Write the report to a file instead of stdout");
}

void add_budget_option(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--budget", args.budget,
                    "Exact-search vertex budget (default: TRGRAPH_BUDGET or 12)")
        ->check(CLI::Range(1, 64));
}

int run_tr(const CommonArgs& args, const std::string& method, bool no_cert) {
    auto doc = load(args);
    const trg::Graph& g = doc.graph;
    trg::oracle::SearchBudget budget;
    budget.max_vertices = args.budget;
    const bool with_cert = !no_cert;

    std::optional<trg::TrResult> result;
    if (method == "auto") {
        result = trg::transitivity_auto(g, {budget, with_cert});
        if (!result) throw Failure{"class not recognized, instance too large for exact search"};
    } else if (method == "split") {
        auto rec = trg::split_partition(g, /*want_witness=*/false);
        if (!rec.is_split()) throw Failure{"not a split graph"};
        result = trg::transitivity_split(g, *rec.partition, with_cert);
    } else if (method == "chain") {
        auto rec = trg::chain_ordering(g, /*want_witness=*/false);
        if (!rec.is_chain()) throw Failure{"not a bipartite chain graph"};
        result = trg::transitivity_chain(g, *rec.ordering, with_cert);
    } else if (method == "cochain") {
        auto rec = trg::cochain_ordering(g, /*want_witness=*/false);
        if (!rec.is_cochain())
            throw Failure{rec.reason.empty() ? "not a co-chain graph" : rec.reason};
        result = trg::transitivity_cochain(g, *rec.ordering, with_cert);
    } else {
        result = trg::oracle::transitivity_bruteforce(g, budget);
        if (!result)
            throw Failure{"exact search budget exceeded (n = " +
                          std::to_string(g.vertex_count()) + ", budget = " +
                          std::to_string(args.budget) + ")"};
    }
    if (!with_cert) result->certificate.reset();

    bool verified = result->certificate &&
                    trg::verify_transitive_partition(g, *result->certificate);
    write_output(trg::io::emit_report(trg::io::tr_report(*result, verified, doc.labels)),
                 args.output);
    return kExitOk;
}

int run_recognize(const CommonArgs& args) {
    auto doc = load(args);
    const trg::Graph& g = doc.graph;
    trg::io::Json report{
        {"split", trg::io::split_report(trg::split_partition(g), doc.labels)},
        {"chain", trg::io::chain_report(trg::chain_ordering(g), doc.labels)},
        {"cochain", trg::io::cochain_report(trg::cochain_ordering(g), doc.labels)}};
    write_output(trg::io::emit_report(report), args.output);
    return kExitOk;
}

int run_atoms_gen(int t, const std::string& output) {
    auto atoms = trg::atoms::generate_atoms(t);
    if (!atoms) throw Failure{"atom generation is capped at t = 5"};
    std::string text;
    for (const auto& g : *atoms) text += trg::io::emit_graph6(g) + "\n";
    write_output(text, output);
    return kExitOk;
}

int run_atoms_classify(int t, int budget_vertices, const std::string& output) {
    trg::oracle::SearchBudget budget;
    budget.max_vertices = budget_vertices;
    auto records = trg::atoms::classify_atoms(t, budget);
    if (!records)
        throw Failure{"classification budget exceeded (raise --budget or lower t)"};
    trg::io::Json report = trg::io::Json::array();
    for (const auto& rec : *records) report.push_back(trg::io::atom_report(rec));
    write_output(trg::io::emit_report(report), output);
    return kExitOk;
}

int run_ng(const CommonArgs& args, bool verify) {
    auto doc = load(args);
    const trg::Graph& g = doc.graph;
    trg::oracle::SearchBudget budget;
    budget.max_vertices = args.budget;

    trg::ng::NGReport report;
    if (verify) {
        if (trg::split_partition(g, /*want_witness=*/false).is_split())
            report = trg::ng::verify_ng_split(g);
        else if (trg::chain_ordering(g, /*want_witness=*/false).is_chain())
            report = trg::ng::verify_ng_chain(g);
        else
            throw Failure{"--verify needs a split or bipartite chain graph"};
    } else {
        auto sum = trg::ng::ng_sum(g, budget);
        if (!sum) throw Failure{"neither the graph nor its complement is solvable within budget"};
        report = *sum;
    }
    write_output(trg::io::emit_report(trg::io::ng_report(report)), args.output);
    return kExitOk;
}

int run_counterexample(int n_max, int budget_vertices, const std::string& output) {
    trg::oracle::SearchBudget budget;
    budget.max_vertices = budget_vertices;
    auto found = trg::ng::find_counterexamples(n_max, budget);
    if (!found) throw Failure{"counterexample scan budget exceeded (nmax > budget)"};
    trg::io::Json report = trg::io::Json::array();
    for (const auto& ce : *found) {
        trg::io::Json entry = trg::io::ng_report(ce.report);
        entry["graph6"] = trg::io::emit_graph6(ce.graph);
        report.push_back(std::move(entry));
    }
    write_output(trg::io::emit_report(report), output);
    return kExitOk;
}

int run_verify(const CommonArgs& args, const std::string& partition_path) {
    auto doc = load(args);
    auto partition = trg::io::parse_partition(trg::io::read_text_file(partition_path), doc);
    bool ok = false;
    std::string error;
    try {
        ok = trg::verify_transitive_partition(doc.graph, partition);
    } catch (const std::invalid_argument& e) {
        error = e.what();
    }
    trg::io::Json report{{"order", partition.order()}, {"verified", ok}};
    if (!error.empty()) report["error"] = error;
    write_output(trg::io::emit_report(report), args.output);
    return ok ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "trgraph: transitive vertex partitions of graphs.\n"
        "Computes transitivity exactly (linear time on split, bipartite chain and\n"
        "co-chain graphs; bounded exact search elsewhere), recognizes those classes\n"
        "with certificates, generates and classifies t-atoms, and checks\n"
        "Nordhaus-Gaddum sums. TRGRAPH_BUDGET sets the default exact-search budget."};
    app.require_subcommand(1);

    CommonArgs tr_args;
    std::string tr_method = "auto";
    bool tr_no_cert = false;
    auto* tr_cmd = app.add_subcommand("tr", "Compute the transitivity of a graph");
    tr_cmd->add_option("file", tr_args.input, "Graph file")->required();
    tr_cmd->add_option("--method", tr_method, "Solver to use")
        ->check(CLI::IsMember({"auto", "split", "chain", "cochain", "oracle"}));
    tr_cmd->add_flag("--no-cert", tr_no_cert, "Suppress the witness partition");
    add_format_option(tr_cmd, tr_args);
    add_budget_option(tr_cmd, tr_args);
    add_output_option(tr_cmd, tr_args);

    CommonArgs rec_args;
    auto* rec_cmd = app.add_subcommand("recognize", "Run the class recognizers");
    rec_cmd->add_option("file", rec_args.input, "Graph file")->required();
    add_format_option(rec_cmd, rec_args);
    add_output_option(rec_cmd, rec_args);

    auto* atoms_cmd = app.add_subcommand("atoms", "Generate or classify t-atoms");
    atoms_cmd->require_subcommand(1);
    int gen_t = 1;
    std::string gen_output;
    auto* gen_cmd = atoms_cmd->add_subcommand("gen", "Print the t-atom atlas as graph6 lines");
    gen_cmd->add_option("t", gen_t, "Atom level")->required()->check(CLI::Range(1, 16));
    gen_cmd->add_option("-o,--output", gen_output, "Write the atlas to a file");
    int classify_t = 1;
    int classify_budget = env_budget();
    std::string classify_output;
    auto* classify_cmd = atoms_cmd->add_subcommand("classify", "Classify t-atom criticality");
    classify_cmd->add_option("t", classify_t, "Atom level")->required()->check(CLI::Range(1, 16));
    classify_cmd
        ->add_option("--budget", classify_budget,
                     "Exact-search vertex budget (default: TRGRAPH_BUDGET or 12)")
        ->check(CLI::Range(1, 64));
    classify_cmd->add_option("-o,--output", classify_output, "Write the report to a file");

    CommonArgs ng_args;
    bool ng_verify = false;
    auto* ng_cmd = app.add_subcommand("ng", "Nordhaus-Gaddum sum Tr(G) + Tr(complement)");
    ng_cmd->add_option("file", ng_args.input, "Graph file")->required();
    ng_cmd->add_flag("--verify", ng_verify, "Check the split/chain theorem prediction");
    add_format_option(ng_cmd, ng_args);
    add_budget_option(ng_cmd, ng_args);
    add_output_option(ng_cmd, ng_args);

    int ce_nmax = 4;
    int ce_budget = env_budget();
    std::string ce_output;
    auto* ce_cmd = app.add_subcommand(
        "counterexample", "Graphs other than K_n and its complement with sum n+1");
    ce_cmd->add_option("--nmax", ce_nmax, "Scan all graphs with up to this many vertices")
        ->required()
        ->check(CLI::Range(1, 10));
    ce_cmd->add_option("--budget", ce_budget,
                       "Exact-search vertex budget (default: TRGRAPH_BUDGET or 12)")
        ->check(CLI::Range(1, 64));
    ce_cmd->add_option("-o,--output", ce_output, "Write the report to a file");

    CommonArgs verify_args;
    std::string verify_partition;
    auto* verify_cmd = app.add_subcommand("verify", "Check a transitive partition certificate");
    verify_cmd->add_option("graph", verify_args.input, "Graph file")->required();
    verify_cmd->add_option("partition", verify_partition, "Partition file (one class per line)")
        ->required();
    add_format_option(verify_cmd, verify_args);
    add_output_option(verify_cmd, verify_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (tr_cmd->parsed()) return run_tr(tr_args, tr_method, tr_no_cert);
        if (rec_cmd->parsed()) return run_recognize(rec_args);
        if (atoms_cmd->parsed()) {
            if (gen_cmd->parsed()) return run_atoms_gen(gen_t, gen_output);
            return run_atoms_classify(classify_t, classify_budget, classify_output);
        }
        if (ng_cmd->parsed()) return run_ng(ng_args, ng_verify);
        if (ce_cmd->parsed()) return run_counterexample(ce_nmax, ce_budget, ce_output);
        if (verify_cmd->parsed()) return run_verify(verify_args, verify_partition);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return kExitDomain;
    } catch (const trg::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
