#include "ismt/stp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ismt/errors.hpp"

namespace ismt {

namespace {

constexpr const char* kMagic = "33D32945";

struct TokenLine {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize(const std::string& text) {
    std::vector<TokenLine> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        std::string raw = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? text.size() + 1 : end + 1;
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        TokenLine line;
        line.number = number;
        std::istringstream is(raw);
        std::string tok;
        while (is >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const TokenLine& line, const std::string& tok) {
    int value = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError(line.number, "malformed integer '" + tok + "'");
    return value;
}

double parse_weight(const TokenLine& line, const std::string& tok) {
    double value = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError(line.number, "malformed number '" + tok + "'");
    if (!std::isfinite(value)) throw ParseError(line.number, "weight must be finite");
    if (value < 0.0) throw ParseError(line.number, "weight must be nonnegative");
    return value;
}

int to_internal_id(const TokenLine& line, const std::string& tok, int n) {
    const int file_id = parse_int(line, tok);
    if (file_id < 1 || file_id > n)
        throw ParseError(line.number, "vertex id " + tok + " out of range 1.." + std::to_string(n));
    return file_id - 1;
}

}  // namespace

ParsedStp parse_stp(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty document");
    std::size_t i = 0;
    if (lines[i].tokens[0] != kMagic)
        throw ParseError(lines[i].number, "missing magic token " + std::string(kMagic));
    ++i;

    ParsedStp out;
    bool have_graph = false;
    bool have_terminals = false;
    bool have_eof = false;
    int declared_nodes = 0;

    while (i < lines.size()) {
        const TokenLine& line = lines[i];
        if (line.tokens[0] == "EOF") {
            have_eof = true;
            break;
        }
        if (line.tokens[0] != "SECTION" || line.tokens.size() < 2)
            throw ParseError(line.number, "expected SECTION or EOF, got '" + line.tokens[0] + "'");
        const std::string section = line.tokens[1];
        ++i;

        if (section == "Graph") {
            if (have_graph) throw ParseError(line.number, "duplicate Graph section");
            have_graph = true;
            if (i >= lines.size() || lines[i].tokens[0] != "Nodes" || lines[i].tokens.size() != 2)
                throw ParseError(i < lines.size() ? lines[i].number : line.number,
                                 "expected 'Nodes n'");
            declared_nodes = parse_int(lines[i], lines[i].tokens[1]);
            if (declared_nodes < 1) throw ParseError(lines[i].number, "node count must be positive");
            out.graph.n = declared_nodes;
            ++i;
            if (i >= lines.size() || lines[i].tokens[0] != "Edges" || lines[i].tokens.size() != 2)
                throw ParseError(i < lines.size() ? lines[i].number : line.number,
                                 "expected 'Edges m'");
            const int declared_edges = parse_int(lines[i], lines[i].tokens[1]);
            if (declared_edges < 0) throw ParseError(lines[i].number, "edge count must be nonnegative");
            ++i;
            int seen = 0;
            while (i < lines.size() && lines[i].tokens[0] == "E") {
                const TokenLine& e = lines[i];
                if (e.tokens.size() != 4) throw ParseError(e.number, "expected 'E u v w'");
                const int u = to_internal_id(e, e.tokens[1], declared_nodes);
                const int v = to_internal_id(e, e.tokens[2], declared_nodes);
                if (u == v) throw ParseError(e.number, "self-loops are not allowed");
                out.graph.edges.push_back({u, v, parse_weight(e, e.tokens[3])});
                ++seen;
                ++i;
            }
            if (i >= lines.size()) throw ParseError(lines.back().number, "unterminated Graph section");
            if (lines[i].tokens[0] != "END")
                throw ParseError(lines[i].number, "unexpected line in Graph section");
            if (seen != declared_edges)
                throw ParseError(lines[i].number,
                                 "edge count mismatch: declared " + std::to_string(declared_edges) +
                                     ", found " + std::to_string(seen));
            ++i;
        } else if (section == "Terminals") {
            if (have_terminals) throw ParseError(line.number, "duplicate Terminals section");
            if (!have_graph) throw ParseError(line.number, "Terminals section before Graph section");
            have_terminals = true;
            if (i >= lines.size() || lines[i].tokens[0] != "Terminals" || lines[i].tokens.size() != 2)
                throw ParseError(i < lines.size() ? lines[i].number : line.number,
                                 "expected 'Terminals k'");
            const int declared = parse_int(lines[i], lines[i].tokens[1]);
            if (declared < 0) throw ParseError(lines[i].number, "terminal count must be nonnegative");
            ++i;
            int seen = 0;
            while (i < lines.size() && lines[i].tokens[0] == "T") {
                const TokenLine& t = lines[i];
                if (t.tokens.size() != 2) throw ParseError(t.number, "expected 'T v'");
                out.terminals.push_back(to_internal_id(t, t.tokens[1], declared_nodes));
                ++seen;
                ++i;
            }
            if (i >= lines.size())
                throw ParseError(lines.back().number, "unterminated Terminals section");
            if (lines[i].tokens[0] != "END")
                throw ParseError(lines[i].number, "unexpected line in Terminals section");
            if (seen != declared)
                throw ParseError(lines[i].number,
                                 "terminal count mismatch: declared " + std::to_string(declared) +
                                     ", found " + std::to_string(seen));
            ++i;
        } else if (section == "Comment") {
            while (i < lines.size() && lines[i].tokens[0] != "END") {
                if (lines[i].tokens[0] == "Name" && lines[i].tokens.size() >= 2) {
                    // rebuild the quoted remainder of the line
                    std::string name;
                    for (std::size_t t = 1; t < lines[i].tokens.size(); ++t) {
                        if (t > 1) name += ' ';
                        name += lines[i].tokens[t];
                    }
                    if (name.size() >= 2 && name.front() == '"' && name.back() == '"')
                        name = name.substr(1, name.size() - 2);
                    out.name = name;
                }
                ++i;
            }
            if (i >= lines.size())
                throw ParseError(lines.back().number, "unterminated Comment section");
            ++i;
        } else {
            out.warnings.push_back("skipped unknown section '" + section + "' at line " +
                                   std::to_string(line.number));
            while (i < lines.size() && lines[i].tokens[0] != "END") ++i;
            if (i >= lines.size())
                throw ParseError(lines.back().number, "unterminated section '" + section + "'");
            ++i;
        }
    }
    if (!have_eof) throw ParseError(lines.back().number, "missing EOF marker");
    if (!have_graph) throw ParseError(lines.back().number, "missing Graph section");
    if (!have_terminals) throw ParseError(lines.back().number, "missing Terminals section");
    std::sort(out.terminals.begin(), out.terminals.end());
    out.terminals.erase(std::unique(out.terminals.begin(), out.terminals.end()),
                        out.terminals.end());
    return out;
}

ParsedStp parse_stp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_stp(buffer.str());
}

std::string format_weight(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string write_stp(const Instance& inst) {
    const int n = inst.graph.size();
    std::ostringstream os;
    os << kMagic << " STP File, STP Format Version 1.0\n\n";
    if (!inst.name.empty()) {
        os << "SECTION Comment\n";
        os << "Name \"" << inst.name << "\"\n";
        os << "END\n\n";
    }
    os << "SECTION Graph\n";
    os << "Nodes " << n << "\n";
    os << "Edges " << n * (n - 1) / 2 << "\n";
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v)
            os << "E " << u + 1 << " " << v + 1 << " " << format_weight(inst.graph.weight(u, v))
               << "\n";
    }
    os << "END\n\n";
    os << "SECTION Terminals\n";
    os << "Terminals " << inst.terminals.size() << "\n";
    for (int t : inst.terminals) os << "T " << t + 1 << "\n";
    os << "END\n\n";
    os << "EOF\n";
    return os.str();
}

bool is_complete(const WeightedRawGraph& g) {
    const int n = g.n;
    std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
    for (const RawEdge& e : g.edges) {
        present[static_cast<std::size_t>(e.u) * n + e.v] = 1;
        present[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!present[static_cast<std::size_t>(u) * n + v]) return false;
        }
    }
    return true;
}

Instance instance_from_parsed(const ParsedStp& parsed, bool metricize, double tol) {
    const WeightedRawGraph& raw = parsed.graph;
    if (is_complete(raw)) {
        MetricGraph g(raw.n);
        // last write wins for duplicate edge lines
        for (const RawEdge& e : raw.edges) g.set_weight(e.u, e.v, e.weight);
        if (validate_metric(g, tol).empty())
            return make_instance(std::move(g), parsed.terminals, parsed.name);
        if (!metricize)
            throw Error("input violates the triangle inequality; rerun with --metricize");
        return make_instance(metric_closure(raw), parsed.terminals, parsed.name);
    }
    if (!metricize) throw Error("input graph is not complete; rerun with --metricize");
    return make_instance(metric_closure(raw), parsed.terminals, parsed.name);
}

}  // namespace ismt
