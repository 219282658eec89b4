#include "ismt/steiner.hpp"

#include <limits>

#include "doctest.h"
#include "ismt/errors.hpp"
#include "ismt/generator.hpp"
#include "ismt/oracle.hpp"
#include "support/micro_instances.hpp"

using namespace ismt;
using ismt::testing::instance_a;
using ismt::testing::star_metric;

namespace {

// independent oracle for terminal_mst: the cheapest spanning tree of the
// terminal-induced subgraph, found by enumerating every labeled tree on R
double bruteforce_spanning_tree_weight(const MetricGraph& g, const std::vector<int>& R) {
    double best = std::numeric_limits<double>::infinity();
    enumerate_labeled_trees(R, [&](const std::vector<std::pair<int, int>>& edges) {
        double w = sum_edge_weights(edges, g);
        if (w < best) best = w;
    });
    return best;
}

}  // namespace

TEST_CASE("subroutine descriptors") {
    CHECK(steiner_rho(SteinerKind::TerminalMst) == 2.0);
    CHECK(steiner_rho(SteinerKind::ExactDw) == 1.0);
    CHECK(std::string(steiner_name(SteinerKind::TerminalMst)) == "mst");
    CHECK(std::string(steiner_name(SteinerKind::ExactDw)) == "dw");
}

TEST_CASE("terminal_mst") {
    SUBCASE("two terminals take the direct edge") {
        const auto r = terminal_mst(instance_a().graph, {0, 1});
        CHECK(r.tree == Tree::from_edges({{0, 1}}));
        CHECK(tree_weight(r.tree, instance_a().graph) == 1.0);
        CHECK(r.rho_used == 2.0);
    }
    SUBCASE("single terminal degenerates to a vertex") {
        const auto r = terminal_mst(instance_a().graph, {2});
        CHECK(r.tree == Tree::single_vertex(2));
    }
    SUBCASE("star metric: MST of the terminal triangle costs 4") {
        const MetricGraph g = star_metric();
        const std::vector<int> R = {0, 1, 2};
        CHECK(bruteforce_spanning_tree_weight(g, R) == 4.0);
        const auto r = terminal_mst(g, R);
        CHECK(tree_weight(r.tree, g) == 4.0);
        CHECK(r.tree.vertices() == R);
    }
    SUBCASE("empty terminal set") {
        CHECK_THROWS_AS(terminal_mst(star_metric(), {}), EmptyTerminalSet);
    }
}

TEST_CASE("dreyfus_wagner") {
    SUBCASE("two terminals on unit K4") {
        const auto r = dreyfus_wagner(instance_a().graph, {0, 1});
        CHECK(tree_weight(r.tree, instance_a().graph) == 1.0);
        CHECK(r.rho_used == 1.0);
    }
    SUBCASE("star metric beats the terminal MST via the hub") {
        const MetricGraph g = star_metric();
        const auto exact = exact_smt_bruteforce(g, {0, 1, 2});
        CHECK(exact.optimum_weight == 3.0);
        const auto r = dreyfus_wagner(g, {0, 1, 2});
        CHECK(tree_weight(r.tree, g) == 3.0);
        CHECK(r.tree.contains(3));
    }
    SUBCASE("single terminal") {
        const auto r = dreyfus_wagner(star_metric(), {1});
        CHECK(r.tree == Tree::single_vertex(1));
    }
    SUBCASE("terminal cap") {
        MetricGraph g(5);
        for (int u = 0; u < 5; ++u) {
            for (int v = u + 1; v < 5; ++v) g.set_weight(u, v, 1.0);
        }
        CHECK_THROWS_AS(dreyfus_wagner(g, {0, 1, 2, 3}, 3), TerminalCapExceeded);
        CHECK_THROWS_AS(dreyfus_wagner(g, {}), EmptyTerminalSet);
    }
}

TEST_CASE("subroutines agree with the brute-force oracle on random instances") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const GenKind kind =
            seed % 3 == 0 ? GenKind::Euclidean : (seed % 3 == 1 ? GenKind::Random : GenKind::OneTwo);
        const int n = 5 + static_cast<int>(seed % 4);
        const int k = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 2));
        const Instance inst = generate({kind, n, k, seed});

        const auto exact = exact_smt_bruteforce(inst.graph, inst.terminals);
        const auto dw = dreyfus_wagner(inst.graph, inst.terminals);
        const auto mst = terminal_mst(inst.graph, inst.terminals);
        const double dw_w = tree_weight(dw.tree, inst.graph);
        const double mst_w = tree_weight(mst.tree, inst.graph);

        CHECK(dw_w == exact.optimum_weight);
        CHECK(dw_w <= mst_w);
        CHECK(mst_w <= 2.0 * dw_w * (1.0 + 1e-9));

        for (const auto& tree : {dw.tree, mst.tree}) {
            CHECK(tree.valid());
            for (int r : inst.terminals) CHECK(tree.contains(r));
            for (int v : tree.vertices()) CHECK(v < inst.graph.size());
        }
        ++checked;
    }
    CHECK(checked == 30);
}
