#include "ismt/instance.hpp"

#include <algorithm>

#include "ismt/errors.hpp"

namespace ismt {

bool Instance::is_terminal(int v) const {
    return std::binary_search(terminals.begin(), terminals.end(), v);
}

std::vector<int> Instance::non_terminals() const {
    std::vector<int> out;
    out.reserve(graph.size());
    for (int v = 0; v < graph.size(); ++v) {
        if (!is_terminal(v)) out.push_back(v);
    }
    return out;
}

Instance make_instance(MetricGraph graph, std::vector<int> terminals, std::string name) {
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    for (int t : terminals) {
        if (t < 0 || t >= graph.size()) throw Error("terminal id out of range");
    }
    return {std::move(graph), std::move(terminals), std::move(name)};
}

void require_solvable(const Instance& inst) {
    if (inst.terminals.empty()) throw EmptyTerminalSet("terminal set must be nonempty");
    const int spare = inst.graph.size() - static_cast<int>(inst.terminals.size());
    if (spare < 2)
        throw InfeasibleInstance("infeasible instance: |V \\ R| >= 2 is required, but only " +
                                 std::to_string(spare) + " non-terminal vertex(es) exist");
}

bool is_feasible_ismt(const Tree& t, const Instance& inst) {
    if (!t.valid()) return false;
    for (int v : t.vertices()) {
        if (v < 0 || v >= inst.graph.size()) return false;
    }
    for (int r : inst.terminals) {
        if (!t.contains(r)) return false;
        if (t.degree(r) < 2) return false;
    }
    return true;
}

}  // namespace ismt
