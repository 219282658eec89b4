#pragma once

#include <string>
#include <vector>

#include "ismt/metric_graph.hpp"
#include "ismt/tree.hpp"

namespace ismt {

// A metric graph together with the terminals that a solution must keep
// internal. Feasibility of the instance itself (nonempty R, at least two
// non-terminals) is checked by require_solvable rather than the constructor,
// so that I/O can load anything and the solver can report a clean error.
struct Instance {
    MetricGraph graph{0};
    std::vector<int> terminals;  // sorted ascending, no duplicates
    std::string name;

    bool is_terminal(int v) const;
    std::vector<int> non_terminals() const;
};

Instance make_instance(MetricGraph graph, std::vector<int> terminals, std::string name = {});

// Throws EmptyTerminalSet when R is empty and InfeasibleInstance when fewer
// than two non-terminals remain.
void require_solvable(const Instance& inst);

// True iff t is a valid tree inside the instance, spans every terminal and
// keeps each terminal at degree >= 2.
bool is_feasible_ismt(const Tree& t, const Instance& inst);

}  // namespace ismt
