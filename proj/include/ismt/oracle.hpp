#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ismt/instance.hpp"
#include "ismt/tree.hpp"

namespace ismt {

inline constexpr int kDefaultOracleMaxN = 10;
inline constexpr std::size_t kDefaultOptimaCap = 1000;

// Ground truth produced by exhaustive enumeration. best_tree is the
// (weight, canonical edge list) lexicographic minimum over all optima.
struct OracleResult {
    double optimum_weight = 0.0;
    Tree best_tree;
    std::size_t optima_count = 0;
    std::vector<Tree> optima;  // capped; see optima_truncated
    bool optima_truncated = false;
};

// Visits every labeled tree on the given vertex set by decoding all
// m^(m-2) Prüfer sequences (Cayley's count). Meant for tests and the
// brute-force solvers below.
void enumerate_labeled_trees(
    const std::vector<int>& vertex_ids,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& visit);

// Exact internal Steiner minimum tree: every subset S with R <= S <= V,
// every labeled tree on S, keeping trees where each terminal has degree
// >= 2. Throws InstanceTooLarge past max_n.
OracleResult exact_ismt_bruteforce(const Instance& inst, int max_n = kDefaultOracleMaxN,
                                   std::size_t optima_cap = kDefaultOptimaCap);

// Exact Steiner minimum tree: same enumeration without the degree filter.
OracleResult exact_smt_bruteforce(const MetricGraph& g, const std::vector<int>& terminals,
                                  int max_n = kDefaultOracleMaxN,
                                  std::size_t optima_cap = kDefaultOptimaCap);

// Structural probe over the full set of optima:
//   leaves_touch_terminals -- some optimum has every leaf's unique neighbor
//                             in R;
//   leaf_edges_minimal     -- some optimum additionally has every leaf edge
//                             achieve min over r in R of w(leaf, r).
// The scan is streaming, so it is exact even when the optima count would
// overflow any stored list.
struct OptimaProbe {
    bool leaves_touch_terminals = false;
    bool leaf_edges_minimal = false;
    std::optional<Tree> witness_touch;
    std::optional<Tree> witness_minimal;
    double optimum_weight = 0.0;
    std::size_t optima_count = 0;
    bool truncated = false;  // kept for report compatibility; never set
};

OptimaProbe probe_optima(const Instance& inst, int max_n = kDefaultOracleMaxN);

}  // namespace ismt
