#pragma once

#include <vector>

#include "ismt/metric_graph.hpp"
#include "ismt/tree.hpp"

namespace ismt {

// Pluggable Steiner-minimum-tree subroutines with their guaranteed
// approximation ratios. The solver only depends on this enum, so further
// subroutines can be added without touching any caller.
enum class SteinerKind {
    TerminalMst,  // MST of the terminal-induced subgraph, ratio 2
    ExactDw,      // Dreyfus-Wagner dynamic program, ratio 1
};

double steiner_rho(SteinerKind kind);
const char* steiner_name(SteinerKind kind);

struct SteinerResult {
    Tree tree;
    double rho_used;
};

inline constexpr int kDefaultDwTerminalCap = 12;

// On a metric graph every direct edge is already a shortest path, so the
// classical distance-network 2-approximation collapses to the MST of the
// terminal-induced subgraph. Deterministic: edges sorted by
// (weight, min endpoint, max endpoint). Throws EmptyTerminalSet.
SteinerResult terminal_mst(const MetricGraph& g, const std::vector<int>& terminals);

// Exact Steiner minimum tree, exponential only in |terminals|. Throws
// EmptyTerminalSet and TerminalCapExceeded (the 3^|R| term needs a cap).
SteinerResult dreyfus_wagner(const MetricGraph& g, const std::vector<int>& terminals,
                             int terminal_cap = kDefaultDwTerminalCap);

SteinerResult run_steiner(SteinerKind kind, const MetricGraph& g,
                          const std::vector<int>& terminals);

}  // namespace ismt
