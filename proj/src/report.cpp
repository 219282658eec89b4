#include "ismt/report.hpp"

#include <cmath>

#include "json.hpp"

namespace ismt {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json edges_json(const Tree& t) {
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
    return edges;
}

ordered_json instance_json(const Instance& inst) {
    ordered_json j;
    j["name"] = inst.name;
    j["n"] = inst.graph.size();
    j["terminals"] = inst.terminals;
    return j;
}

}  // namespace

std::string write_report(const Instance& inst, const Solution& sol,
                         const std::optional<double>& exact_weight, double timing_ms) {
    ordered_json j;
    j["schema_version"] = 1;
    j["instance"] = instance_json(inst);
    j["algorithm"] = {
        {"name", "ismt-2rho"},
        {"subroutine", steiner_name(sol.subroutine)},
        {"rho", sol.rho},
    };
    j["result"] = {
        {"weight", sol.weight},
        {"edges", edges_json(sol.tree)},
        {"pair", {sol.pair.first, sol.pair.second}},
        {"feasible", is_feasible_ismt(sol.tree, inst)},
        {"pairs_evaluated", sol.pairs_evaluated},
    };
    if (exact_weight) {
        const double ratio = sol.weight / *exact_weight;
        ordered_json oracle;
        oracle["exact_weight"] = *exact_weight;
        if (std::isfinite(ratio))
            oracle["ratio"] = ratio;
        else
            oracle["ratio"] = nullptr;
        j["oracle"] = oracle;
    }
    if (!sol.traces.empty()) {
        ordered_json traces = ordered_json::array();
        for (const PairConstruction& pc : sol.traces) {
            traces.push_back({
                {"s", pc.s},
                {"t", pc.t},
                {"u1", pc.u1},
                {"u2", pc.u2},
                {"t1_weight", pc.t1_weight},
                {"t2_weight", pc.t2_weight},
                {"walk", pc.walk},
                {"path_weight", pc.path_weight},
            });
        }
        j["traces"] = traces;
    }
    j["timing_ms"] = timing_ms;
    return j.dump(2) + "\n";
}

std::string write_exact_report(const Instance& inst, const OracleResult& result,
                               double timing_ms) {
    ordered_json j;
    j["schema_version"] = 1;
    j["instance"] = instance_json(inst);
    j["exact"] = {
        {"weight", result.optimum_weight},
        {"edges", edges_json(result.best_tree)},
        {"optima_count", result.optima_count},
        {"optima_truncated", result.optima_truncated},
    };
    j["timing_ms"] = timing_ms;
    return j.dump(2) + "\n";
}

}  // namespace ismt
