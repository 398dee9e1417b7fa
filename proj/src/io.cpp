#include "trgraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace trg::io {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string GraphDocument::label_of(int v) const {
    if (labels.empty()) return std::to_string(v);
    return labels[static_cast<std::size_t>(v)];
}

std::optional<int> GraphDocument::vertex_of(std::string_view name) const {
    if (labels.empty()) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
        if (ec != std::errc{} || ptr != name.data() + name.size()) return std::nullopt;
        if (v < 0 || v >= graph.vertex_count()) return std::nullopt;
        return v;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line parsed{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) parsed.tokens.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::optional<long long> parse_int(const std::string& token) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return v;
}

}  // namespace

GraphDocument parse_edge_list(std::string_view text) {
    GraphDocument doc;
    doc.format = "edges";
    auto lines = tokenize(text);

    std::size_t first = 0;
    long long fixed_n = -1;
    if (!lines.empty() && lines[0].tokens.size() == 2 && lines[0].tokens[0] == "n") {
        auto count = parse_int(lines[0].tokens[1]);
        if (!count || *count < 0)
            throw ParseError(lines[0].number, "invalid vertex count in header");
        fixed_n = *count;
        first = 1;
    }

    std::unordered_map<std::string, int> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    auto resolve = [&](const std::string& token, int line) -> int {
        if (fixed_n >= 0) {
            auto v = parse_int(token);
            if (!v) throw ParseError(line, "expected a vertex index, got '" + token + "'");
            if (*v < 0 || *v >= fixed_n)
                throw ParseError(line, "vertex " + token + " outside header range");
            return static_cast<int>(*v);
        }
        auto [it, inserted] = ids.emplace(token, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    for (std::size_t i = first; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected an edge 'u v'");
        int u = resolve(line.tokens[0], line.number);
        int v = resolve(line.tokens[1], line.number);
        if (u == v)
            throw ParseError(line.number, "self-loop at vertex '" + line.tokens[0] + "'");
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) {
            doc.warnings.push_back({line.number, "duplicate edge '" + line.tokens[0] + " " +
                                                     line.tokens[1] + "' ignored"});
            continue;
        }
        edges.push_back(e);
    }

    int n = fixed_n >= 0 ? static_cast<int>(fixed_n) : static_cast<int>(labels.size());
    doc.graph = Graph::from_edges(n, edges);
    bool identity = fixed_n >= 0;
    if (!identity) {
        identity = true;
        for (std::size_t i = 0; i < labels.size() && identity; ++i)
            identity = labels[i] == std::to_string(i);
    }
    if (!identity) doc.labels = std::move(labels);
    return doc;
}

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

GraphDocument parse_graph6_line(std::string_view line, int line_number) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (line.empty()) throw ParseError(line_number, "empty graph6 string");

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= line.size()) throw ParseError(line_number, "truncated graph6 string");
        int c = static_cast<unsigned char>(line[i]);
        if (c < kG6Lo || c > kG6Hi)
            throw ParseError(line_number, "invalid graph6 character");
        return c - kG6Lo;
    };

    long long n = 0;
    if (static_cast<unsigned char>(line[0]) != 126) {
        n = byte(0);
        pos = 1;
    } else if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126) {
        throw ParseError(line_number, "graph6 strings beyond 258047 vertices are not supported");
    } else {
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }

    const long long bits = n * (n - 1) / 2;
    const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != payload)
        throw ParseError(line_number, "graph6 payload length does not match vertex count");

    std::vector<Edge> edges;
    long long b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b) {
            int value = byte(pos + static_cast<std::size_t>(b / 6));
            if ((value >> (5 - b % 6)) & 1) edges.emplace_back(i, j);
        }
    // Padding bits must be zero.
    for (long long pad = bits; pad < static_cast<long long>(payload) * 6; ++pad) {
        int value = byte(pos + static_cast<std::size_t>(pad / 6));
        if ((value >> (5 - pad % 6)) & 1)
            throw ParseError(line_number, "nonzero padding bits in graph6 string");
    }

    GraphDocument doc;
    doc.format = "graph6";
    doc.graph = Graph::from_edges(static_cast<int>(n), edges);
    return doc;
}

}  // namespace

GraphDocument parse_graph6(std::string_view text) {
    auto docs = parse_graph6_lines(text);
    if (docs.empty()) throw ParseError(1, "no graph6 string found");
    return std::move(docs.front());
}

std::vector<GraphDocument> parse_graph6_lines(std::string_view text) {
    std::vector<GraphDocument> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (!line.empty()) out.push_back(parse_graph6_line(line, number));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("emit_graph6: graph too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((n & 63) + kG6Lo));
    }
    int accum = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            accum = (accum << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(accum + kG6Lo));
                accum = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((accum << (6 - filled)) + kG6Lo));
    return out;
}

GraphDocument load_graph_file(const std::string& path, std::string_view format) {
    std::string text = read_text_file(path);
    bool graph6 = false;
    if (format.empty()) {
        graph6 = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
    } else if (format == "graph6" || format == "g6") {
        graph6 = true;
    } else if (format != "edges") {
        throw std::invalid_argument("unknown graph format '" + std::string(format) + "'");
    }
    return graph6 ? parse_graph6(text) : parse_edge_list(text);
}

TransitivePartition parse_partition(std::string_view text, const GraphDocument& doc) {
    TransitivePartition part;
    for (const auto& line : tokenize(text)) {
        std::vector<int> cls;
        for (const auto& token : line.tokens) {
            auto v = doc.vertex_of(token);
            if (!v) throw ParseError(line.number, "unknown vertex '" + token + "'");
            cls.push_back(*v);
        }
        part.classes.push_back(std::move(cls));
    }
    return part;
}

std::string emit_report(const Json& report) { return report.dump(2) + "\n"; }

namespace {

Json vertex_json(int v, const std::vector<std::string>& labels) {
    if (labels.empty()) return v;
    return labels[static_cast<std::size_t>(v)];
}

Json vertices_json(const std::vector<int>& vs, const std::vector<std::string>& labels) {
    Json arr = Json::array();
    for (int v : vs) arr.push_back(vertex_json(v, labels));
    return arr;
}

Json witness_json(const Obstruction& obstruction, const std::vector<std::string>& labels) {
    return Json{{"kind", obstruction_name(obstruction.kind)},
                {"vertices", vertices_json(obstruction.vertices, labels)}};
}

}  // namespace

Json tr_report(const TrResult& result, bool verified, const std::vector<std::string>& labels) {
    Json j{{"transitivity", result.value}, {"method", method_name(result.method)}};
    if (result.certificate) {
        Json classes = Json::array();
        for (const auto& cls : result.certificate->classes) classes.push_back(vertices_json(cls, labels));
        j["classes"] = std::move(classes);
        j["verified"] = verified;
    }
    return j;
}

Json split_report(const SplitRecognition& rec, const std::vector<std::string>& labels) {
    Json j{{"recognized", rec.is_split()}};
    if (rec.partition) {
        j["clique"] = vertices_json(rec.partition->clique, labels);
        j["independent_set"] = vertices_json(rec.partition->independent_set, labels);
        j["omega"] = rec.partition->clique.size();
    }
    if (rec.obstruction) j["witness"] = witness_json(*rec.obstruction, labels);
    return j;
}

namespace {

Json chain_like_report(const std::optional<ChainOrdering>& ordering,
                       const std::optional<Obstruction>& obstruction,
                       const std::vector<std::string>& labels) {
    Json j{{"recognized", ordering.has_value()}};
    if (ordering) {
        j["sigma_x"] = vertices_json(ordering->xs, labels);
        j["sigma_y"] = vertices_json(ordering->ys, labels);
        j["j"] = ordering->j;
        j["p"] = ordering->p;
    }
    if (obstruction) j["witness"] = witness_json(*obstruction, labels);
    return j;
}

}  // namespace

Json chain_report(const ChainRecognition& rec, const std::vector<std::string>& labels) {
    return chain_like_report(rec.ordering, rec.obstruction, labels);
}

Json cochain_report(const CochainRecognition& rec, const std::vector<std::string>& labels) {
    Json j = chain_like_report(rec.ordering, rec.obstruction, labels);
    if (!rec.reason.empty()) j["reason"] = rec.reason;
    return j;
}

Json ng_report(const ng::NGReport& report) {
    return Json{{"case", ng::predicted_case_name(report.predicted)},
                {"matches_theorem", report.matches_theorem},
                {"n", report.n},
                {"sum", report.sum},
                {"trG", report.tr_g},
                {"trGbar", report.tr_gbar}};
}

Json atom_report(const atoms::AtomRecord& record) {
    return Json{{"edge_critical", record.edge_critical},
                {"graph6", record.certificate},
                {"in_a_prime", record.in_a_prime},
                {"level", record.level},
                {"transitivity", record.transitivity},
                {"ve_critical", record.ve_critical},
                {"vertex_critical", record.vertex_critical}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace trg::io
