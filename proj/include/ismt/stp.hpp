#pragma once

#include <string>
#include <vector>

#include "ismt/instance.hpp"
#include "ismt/metric_graph.hpp"

namespace ismt {

// Parse result of one STP document. Vertex ids are already converted to the
// 0-based internal convention; the file itself is 1-based.
struct ParsedStp {
    WeightedRawGraph graph;
    std::vector<int> terminals;  // sorted ascending
    std::string name;
    std::vector<std::string> warnings;  // skipped unknown sections
};

// Line-based parse of the STP-style text format:
//
//   33D32945 STP File, STP Format Version 1.0
//   SECTION Comment          (optional; Name "..." is picked up)
//   SECTION Graph            Nodes n / Edges m / m lines "E u v w"
//   SECTION Terminals        Terminals k / k lines "T v"
//   EOF
//
// Each section is closed by END. Unknown sections are skipped with a
// warning. Throws ParseError with the offending line number.
ParsedStp parse_stp(const std::string& text);

ParsedStp parse_stp_file(const std::string& path);

// Emits the complete edge list (n(n-1)/2 E-lines, ascending), weights in
// their shortest round-tripping decimal form. parse(write(x)) == x.
std::string write_stp(const Instance& inst);

bool is_complete(const WeightedRawGraph& g);

// Builds the solver-side instance. A complete input that validates as a
// metric is taken as-is; anything else requires metricize, which runs the
// metric closure. Throws Error when the input needs metricize but it was
// not requested.
Instance instance_from_parsed(const ParsedStp& parsed, bool metricize, double tol = 1e-9);

// Shortest decimal representation that round-trips through parsing.
std::string format_weight(double value);

}  // namespace ismt
