#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ismt/instance.hpp"
#include "ismt/steiner.hpp"
#include "ismt/tree.hpp"

namespace ismt {

struct MultiEdge {
    int u;
    int v;
    int multiplicity;

    bool operator==(const MultiEdge&) const = default;
};

// Multigraph obtained from a tree by doubling every edge off one designated
// path: all degrees even except the two path endpoints.
struct EulerMultigraph {
    std::vector<MultiEdge> edges;  // (min,max) endpoint order, sorted

    double total_weight(const MetricGraph& g) const;
};

// argmin of w(x, .) over the candidates, ties broken by smallest vertex id.
// x itself may be a candidate (w(x,x) = 0). Throws EmptyCandidateSet.
int nearest_in_set(const MetricGraph& g, int x, const std::vector<int>& candidates);

// Doubles every edge of t2 except those on the unique st-path. Requires s
// and t to be leaves of t2 (NotALeaf otherwise).
EulerMultigraph double_except_st_path(const Tree& t2, int s, int t);

// Open Eulerian walk from s to t, traversing every edge copy exactly once.
// Unvisited incident edges are taken in ascending (neighbor id, copy slot)
// order, which pins the output. Throws DegreeParityViolation.
std::vector<int> euler_walk(const EulerMultigraph& m, int s, int t);

// Keeps the first occurrence of each walk vertex, producing a simple path
// over the same vertex set. The triangle inequality keeps the weight from
// increasing; that is checked and enforced here.
Tree shortcut(const std::vector<int>& walk, const MetricGraph& g);

// Full trace of one (s,t) construction: subroutine tree on the graph minus
// {s,t}, nearest attachments, selective doubling, Euler walk, shortcut path.
struct PairConstruction {
    int s = -1;
    int t = -1;
    Tree t1;
    int u1 = -1;
    int u2 = -1;
    Tree t2;
    std::vector<int> st_path_in_t2;
    std::vector<int> walk;
    Tree path;
    double t1_weight = 0.0;
    double t2_weight = 0.0;
    double walk_weight = 0.0;
    double path_weight = 0.0;
};

PairConstruction build_st_path(const Instance& inst, int s, int t, SteinerKind sub);

struct SolveOptions {
    bool keep_traces = false;
    int jobs = 1;
};

struct Solution {
    Tree tree;
    double weight = 0.0;
    std::pair<int, int> pair{-1, -1};
    SteinerKind subroutine = SteinerKind::ExactDw;
    double rho = 1.0;
    std::size_t pairs_evaluated = 0;
    std::vector<PairConstruction> traces;  // populated when keep_traces
};

// Runs the construction for every unordered pair of non-terminals and keeps
// the lightest path; ties resolve to the lexicographically smallest (s,t),
// so the result does not depend on evaluation order. Throws EmptyTerminalSet
// and InfeasibleInstance.
Solution solve(const Instance& inst, SteinerKind sub, const SolveOptions& options = {});

}  // namespace ismt
