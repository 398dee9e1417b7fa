#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trgraph/atoms.hpp"
#include "trgraph/graph.hpp"
#include "trgraph/nordhaus_gaddum.hpp"
#include "trgraph/recognition.hpp"
#include "trgraph/transitivity.hpp"

namespace trg::io {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);

    int line() const { return line_; }

private:
    int line_;
};

struct ParseWarning {
    int line = 0;
    std::string message;
};

/// A parsed graph plus the mapping back to the names used in the source.
/// An empty label vector means the identity labeling "0".."n-1".
struct GraphDocument {
    Graph graph;
    std::vector<std::string> labels;
    std::string format;  // "edges" or "graph6"
    std::vector<ParseWarning> warnings;

    std::string label_of(int v) const;
    std::optional<int> vertex_of(std::string_view name) const;
};

/// Edge list: one "u v" pair per line, '#' comments, optional leading
/// header "n <count>" which fixes the vertex count (tokens must then be
/// integers below the count; this is the only way to get isolated
/// vertices). Without a header, tokens are arbitrary names numbered by
/// first appearance. Self-loops and malformed lines raise ParseError with
/// the offending line number; duplicate edges are dropped with a warning.
GraphDocument parse_edge_list(std::string_view text);

/// graph6: 6-bit printable encoding of n followed by the upper triangle of
/// the adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),...
GraphDocument parse_graph6(std::string_view text);
std::vector<GraphDocument> parse_graph6_lines(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Reads a graph file, inferring the format from the extension (".g6" =>
/// graph6, anything else => edge list) unless `format` is given
/// ("graph6" | "edges").
GraphDocument load_graph_file(const std::string& path, std::string_view format = {});

/// Partition file for the verifier: one class per line, vertices
/// whitespace-separated (resolved through the document's labels), classes
/// in order V1..Vk. '#' comments allowed.
TransitivePartition parse_partition(std::string_view text, const GraphDocument& doc);

/// Serializes a report deterministically: sorted keys, two-space indent,
/// trailing newline. Identical reports are byte-identical.
std::string emit_report(const Json& report);

Json tr_report(const TrResult& result, bool verified,
               const std::vector<std::string>& labels = {});
Json split_report(const SplitRecognition& rec, const std::vector<std::string>& labels = {});
Json chain_report(const ChainRecognition& rec, const std::vector<std::string>& labels = {});
Json cochain_report(const CochainRecognition& rec, const std::vector<std::string>& labels = {});
Json ng_report(const ng::NGReport& report);
Json atom_report(const atoms::AtomRecord& record);

std::string read_text_file(const std::string& path);

}  // namespace trg::io
