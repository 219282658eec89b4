#include "ismt/steiner.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "ismt/errors.hpp"

namespace ismt {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_terminals(const MetricGraph& g, const std::vector<int>& terminals) {
    if (terminals.empty()) throw EmptyTerminalSet("terminal set must be nonempty");
    for (int t : terminals) {
        if (t < 0 || t >= g.size()) throw Error("terminal id out of range");
    }
}

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Deterministic Kruskal over an explicit edge list; ids are arbitrary dense
// local indices.
std::vector<std::pair<int, int>> kruskal(int n,
                                         std::vector<std::tuple<double, int, int>> edges) {
    std::sort(edges.begin(), edges.end());
    DisjointSets dsu(n);
    std::vector<std::pair<int, int>> picked;
    for (const auto& [w, u, v] : edges) {
        if (dsu.unite(u, v)) picked.emplace_back(u, v);
    }
    return picked;
}

}  // namespace

double steiner_rho(SteinerKind kind) {
    return kind == SteinerKind::TerminalMst ? 2.0 : 1.0;
}

const char* steiner_name(SteinerKind kind) {
    return kind == SteinerKind::TerminalMst ? "mst" : "dw";
}

SteinerResult terminal_mst(const MetricGraph& g, const std::vector<int>& terminals) {
    auto R = sorted_unique(terminals);
    check_terminals(g, R);
    if (R.size() == 1) return {Tree::single_vertex(R[0]), 2.0};
    const int k = static_cast<int>(R.size());
    std::vector<std::tuple<double, int, int>> edges;
    edges.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) edges.emplace_back(g.weight(R[a], R[b]), a, b);
    }
    auto picked = kruskal(k, std::move(edges));
    std::vector<std::pair<int, int>> tree_edges;
    tree_edges.reserve(picked.size());
    for (const auto& [a, b] : picked) tree_edges.emplace_back(R[a], R[b]);
    Tree t = Tree::from_edges(std::move(tree_edges));
    if (!t.valid() || t.vertices() != R) throw Error("terminal MST construction failed");
    return {std::move(t), 2.0};
}

SteinerResult dreyfus_wagner(const MetricGraph& g, const std::vector<int>& terminals,
                             int terminal_cap) {
    auto R = sorted_unique(terminals);
    check_terminals(g, R);
    const int k = static_cast<int>(R.size());
    if (k > terminal_cap)
        throw TerminalCapExceeded("instance has " + std::to_string(k) +
                                  " terminals, cap is " + std::to_string(terminal_cap));
    if (k == 1) return {Tree::single_vertex(R[0]), 1.0};

    // dp[mask][v] = min weight of a tree spanning {R[i] : bit i of mask} plus
    // v, for masks over R minus the root terminal q = R[k-1]. For |mask| >= 2
    // the tree is an edge (v,u) into a vertex u where mask splits into two
    // nonempty halves (u may equal v). Ties prefer the smallest
    // (split bitmask, vertex) decision so reconstruction is deterministic.
    const int n = g.size();
    const int q = R.back();
    const int bits = k - 1;
    const std::uint32_t nmask = 1u << bits;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(static_cast<std::size_t>(nmask) * n, inf);
    struct Cell {
        int via = -1;
        std::uint32_t split = 0;  // 0 marks a singleton-mask base cell
    };
    std::vector<Cell> choice(static_cast<std::size_t>(nmask) * n);

    for (int i = 0; i < bits; ++i) {
        const std::size_t row = static_cast<std::size_t>(1u << i) * n;
        for (int v = 0; v < n; ++v) {
            dp[row + v] = g.weight(v, R[i]);
            choice[row + v] = {R[i], 0};
        }
    }

    std::vector<double> merged(n);
    std::vector<std::uint32_t> merged_split(n);
    for (std::uint32_t mask = 1; mask < nmask; ++mask) {
        if ((mask & (mask - 1)) == 0) continue;  // singleton, base case
        const std::size_t row = static_cast<std::size_t>(mask) * n;
        std::fill(merged.begin(), merged.end(), inf);
        // proper nonempty submasks in increasing order
        for (std::uint32_t sub = (0u - mask) & mask; sub != mask; sub = (sub - mask) & mask) {
            const std::size_t a = static_cast<std::size_t>(sub) * n;
            const std::size_t b = static_cast<std::size_t>(mask ^ sub) * n;
            for (int u = 0; u < n; ++u) {
                const double cand = dp[a + u] + dp[b + u];
                if (cand < merged[u]) {
                    merged[u] = cand;
                    merged_split[u] = sub;
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            double best = inf;
            int best_u = -1;
            std::uint32_t best_split = 0;
            for (int u = 0; u < n; ++u) {
                const double cand = g.weight(v, u) + merged[u];
                if (cand < best ||
                    (cand == best && (merged_split[u] < best_split ||
                                      (merged_split[u] == best_split && u < best_u)))) {
                    best = cand;
                    best_u = u;
                    best_split = merged_split[u];
                }
            }
            dp[row + v] = best;
            choice[row + v] = {best_u, best_split};
        }
    }

    const std::uint32_t full = nmask - 1;
    std::vector<std::pair<int, int>> edges;
    std::set<int> verts = {q};
    std::vector<std::pair<std::uint32_t, int>> stack = {{full, q}};
    while (!stack.empty()) {
        auto [mask, v] = stack.back();
        stack.pop_back();
        verts.insert(v);
        const Cell& c = choice[static_cast<std::size_t>(mask) * n + v];
        if ((mask & (mask - 1)) == 0) {
            verts.insert(c.via);
            if (c.via != v) edges.emplace_back(std::min(v, c.via), std::max(v, c.via));
            continue;
        }
        verts.insert(c.via);
        if (c.via != v) edges.emplace_back(std::min(v, c.via), std::max(v, c.via));
        stack.emplace_back(c.split, c.via);
        stack.emplace_back(mask ^ c.split, c.via);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<int> vertex_list(verts.begin(), verts.end());
    Tree tree = Tree::from_edges(edges, vertex_list);
    if (!tree.valid()) {
        // Zero-weight edges can make two branches share an edge; rebuild a
        // spanning tree of the collected subgraph, which preserves the weight.
        std::vector<int> local_of(g.size(), -1);
        for (std::size_t i = 0; i < vertex_list.size(); ++i) local_of[vertex_list[i]] = static_cast<int>(i);
        std::vector<std::tuple<double, int, int>> cand;
        cand.reserve(edges.size());
        for (const auto& [u, v] : edges)
            cand.emplace_back(g.weight(u, v), local_of[u], local_of[v]);
        auto picked = kruskal(static_cast<int>(vertex_list.size()), std::move(cand));
        std::vector<std::pair<int, int>> rebuilt;
        rebuilt.reserve(picked.size());
        for (const auto& [a, b] : picked)
            rebuilt.emplace_back(vertex_list[a], vertex_list[b]);
        tree = Tree::from_edges(std::move(rebuilt), vertex_list);
    }
    if (!tree.valid()) throw Error("Steiner tree reconstruction failed");
    return {std::move(tree), 1.0};
}

SteinerResult run_steiner(SteinerKind kind, const MetricGraph& g,
                          const std::vector<int>& terminals) {
    switch (kind) {
        case SteinerKind::TerminalMst:
            return terminal_mst(g, terminals);
        case SteinerKind::ExactDw:
            return dreyfus_wagner(g, terminals);
    }
    throw Error("unknown subroutine");
}

}  // namespace ismt
