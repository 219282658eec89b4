#include "ismt/tree.hpp"

#include <algorithm>

#include "doctest.h"
#include "ismt/errors.hpp"
#include "ismt/instance.hpp"
#include "ismt/oracle.hpp"
#include "support/micro_instances.hpp"

using namespace ismt;

namespace {

// path 2-0-1-3
Tree zigzag_path() { return Tree::from_edges({{2, 0}, {0, 1}, {1, 3}}); }

}  // namespace

TEST_CASE("tree_leaves") {
    CHECK(tree_leaves(zigzag_path()) == std::vector<int>{2, 3});
    CHECK(tree_leaves(Tree::from_edges({{0, 1}, {0, 2}, {0, 3}})) == std::vector<int>{1, 2, 3});
    CHECK(tree_leaves(Tree::single_vertex(5)).empty());
}

TEST_CASE("unique_path") {
    SUBCASE("star center is forced") {
        const Tree t = Tree::from_edges({{1, 2}, {0, 2}, {3, 2}});
        CHECK(unique_path(t, 0, 3) == std::vector<int>{0, 2, 3});
    }
    SUBCASE("endpoints equal") {
        CHECK(unique_path(zigzag_path(), 1, 1) == std::vector<int>{1});
    }
    SUBCASE("full path") {
        CHECK(unique_path(zigzag_path(), 2, 3) == std::vector<int>{2, 0, 1, 3});
    }
    SUBCASE("missing vertex") {
        CHECK_THROWS_AS(unique_path(zigzag_path(), 2, 9), VertexNotInTree);
    }
    SUBCASE("reversal symmetry over all enumerated trees") {
        const std::vector<int> ids = {0, 1, 2, 3, 4};
        enumerate_labeled_trees(ids, [&](const std::vector<std::pair<int, int>>& edges) {
            const Tree t = Tree::from_edges(edges, ids);
            auto fwd = unique_path(t, 0, 4);
            auto bwd = unique_path(t, 4, 0);
            std::reverse(bwd.begin(), bwd.end());
            CHECK(fwd == bwd);
        });
    }
}

TEST_CASE("tree validity") {
    CHECK(zigzag_path().valid());
    CHECK(Tree::single_vertex(0).valid());
    // cycle: 3 edges on 3 vertices
    CHECK_FALSE(Tree::from_edges({{0, 1}, {1, 2}, {0, 2}}).valid());
    // disconnected with an isolated declared vertex
    CHECK_FALSE(Tree::from_edges({{0, 1}}, {0, 1, 2}).valid());
    CHECK_FALSE(Tree{}.valid());
}

TEST_CASE("tree_weight") {
    const Instance a = ismt::testing::instance_a();
    CHECK(tree_weight(zigzag_path(), a.graph) == 3.0);
    CHECK(tree_weight(Tree::single_vertex(1), a.graph) == 0.0);
    // star around vertex 2 inside instance C: 2 + 1 + 1
    const Instance c = ismt::testing::instance_c();
    const Tree t2 = Tree::from_edges({{1, 2}, {0, 2}, {3, 2}});
    CHECK(tree_weight(t2, c.graph) == 4.0);
}

TEST_CASE("every enumerated multi-vertex tree has at least two leaves") {
    const std::vector<int> ids = {0, 1, 2, 3};
    enumerate_labeled_trees(ids, [&](const std::vector<std::pair<int, int>>& edges) {
        const Tree t = Tree::from_edges(edges, ids);
        CHECK(tree_leaves(t).size() >= 2);
    });
}

TEST_CASE("is_feasible_ismt") {
    const Instance a = ismt::testing::instance_a();
    SUBCASE("terminals internal on the zigzag path") {
        CHECK(is_feasible_ismt(zigzag_path(), a));
    }
    SUBCASE("terminal as endpoint fails") {
        const Instance b = ismt::testing::instance_b();
        CHECK_FALSE(is_feasible_ismt(Tree::from_edges({{0, 1}, {1, 2}}), b));
    }
    SUBCASE("missing terminal fails") {
        CHECK_FALSE(is_feasible_ismt(Tree::from_edges({{0, 2}, {2, 3}}), a));
    }
    SUBCASE("feasible trees keep terminals off the leaf set") {
        const std::vector<int> ids = {0, 1, 2, 3};
        enumerate_labeled_trees(ids, [&](const std::vector<std::pair<int, int>>& edges) {
            const Tree t = Tree::from_edges(edges, ids);
            if (!is_feasible_ismt(t, a)) return;
            for (int leaf : tree_leaves(t)) CHECK_FALSE(a.is_terminal(leaf));
        });
    }
}

TEST_CASE("solver preconditions on the instance") {
    const Instance a = ismt::testing::instance_a();
    CHECK_NOTHROW(require_solvable(a));
    MetricGraph g(3);
    CHECK_THROWS_AS(require_solvable(make_instance(g, {0, 1})), InfeasibleInstance);
    CHECK_THROWS_AS(require_solvable(make_instance(g, {})), EmptyTerminalSet);
}
