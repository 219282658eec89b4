#include "ismt/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "ismt/errors.hpp"

namespace ismt {

namespace {

constexpr int kMaxEnum = 16;  // bound for the fixed-size scratch buffers

// One vertex subset prepared for tree enumeration: local weight submatrix,
// terminal flags, and the distance from each vertex to its closest terminal
// (used by the structural probe).
struct Subset {
    int m = 0;
    int term_count = 0;
    std::array<int, kMaxEnum> ids{};
    std::array<bool, kMaxEnum> is_term{};
    std::array<double, kMaxEnum * kMaxEnum> w{};
    std::array<double, kMaxEnum> min_term_dist{};

    void fill(const MetricGraph& g, const std::vector<int>& members,
              const std::vector<int>& terminals) {
        m = static_cast<int>(members.size());
        term_count = static_cast<int>(terminals.size());
        for (int i = 0; i < m; ++i) {
            ids[i] = members[i];
            is_term[i] = std::binary_search(terminals.begin(), terminals.end(), members[i]);
        }
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b) w[a * m + b] = g.weight(ids[a], ids[b]);
        }
        for (int a = 0; a < m; ++a) {
            double best = std::numeric_limits<double>::infinity();
            for (int b = 0; b < m; ++b) {
                if (is_term[b]) best = std::min(best, w[a * m + b]);
            }
            min_term_dist[a] = best;
        }
    }
};

// Visits every labeled tree on the subset. Each tree arrives as
// (edges, edge_count, weight, seq_count) with local indices, where
// seq_count[i]+1 is the degree of vertex i -- a vertex is internal exactly
// when it appears in the Prüfer sequence. With internal_terminals set,
// sequences missing a terminal are skipped before decoding, which is the
// whole ISMT degree filter.
template <typename Visit>
void scan_subset_trees(const Subset& sc, bool internal_terminals, Visit&& visit) {
    const int m = sc.m;
    std::array<std::pair<int, int>, kMaxEnum> edges{};
    std::array<int, kMaxEnum> count{};
    if (m == 1) {
        if (!internal_terminals || sc.term_count == 0) visit(edges, 0, 0.0, count);
        return;
    }
    if (m == 2) {
        // both endpoints are leaves
        if (internal_terminals && sc.term_count > 0) return;
        edges[0] = {0, 1};
        visit(edges, 1, sc.w[1], count);
        return;
    }

    const int len = m - 2;
    std::array<int, kMaxEnum> seq{};
    count[0] = len;
    int missing_terms = 0;
    for (int i = 0; i < m; ++i) {
        if (sc.is_term[i] && count[i] == 0) ++missing_terms;
    }

    std::array<int, kMaxEnum> deg{};
    for (;;) {
        if (!internal_terminals || missing_terms == 0) {
            // classic linear Prüfer decode with a moving leaf pointer
            for (int i = 0; i < m; ++i) deg[i] = count[i] + 1;
            int ptr = 0;
            while (deg[ptr] != 1) ++ptr;
            int leaf = ptr;
            double wsum = 0.0;
            for (int j = 0; j < len; ++j) {
                const int x = seq[j];
                edges[j] = {leaf, x};
                wsum += sc.w[leaf * m + x];
                if (--deg[x] == 1 && x < ptr) {
                    leaf = x;
                } else {
                    ++ptr;
                    while (deg[ptr] != 1) ++ptr;
                    leaf = ptr;
                }
            }
            edges[len] = {leaf, m - 1};
            wsum += sc.w[leaf * m + (m - 1)];
            visit(edges, len + 1, wsum, count);
        }
        // odometer step over the sequence digits
        int pos = len - 1;
        while (pos >= 0) {
            const int old = seq[pos];
            --count[old];
            if (sc.is_term[old] && count[old] == 0) ++missing_terms;
            if (old + 1 < m) {
                seq[pos] = old + 1;
                if (sc.is_term[old + 1] && count[old + 1] == 0) --missing_terms;
                ++count[old + 1];
                break;
            }
            seq[pos] = 0;
            if (sc.is_term[0] && count[0] == 0) --missing_terms;
            ++count[0];
            --pos;
        }
        if (pos < 0) break;
    }
}

Tree to_global_tree(const Subset& sc, const std::array<std::pair<int, int>, kMaxEnum>& edges,
                    int edge_count) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count);
    for (int i = 0; i < edge_count; ++i)
        out.emplace_back(sc.ids[edges[i].first], sc.ids[edges[i].second]);
    std::vector<int> verts(sc.ids.begin(), sc.ids.begin() + sc.m);
    return Tree::from_edges(std::move(out), std::move(verts));
}

bool tree_less(const Tree& a, const Tree& b) {
    if (a.edges() != b.edges()) return a.edges() < b.edges();
    return a.vertices() < b.vertices();
}

// Runs `on_tree(subset, edges, edge_count, weight, seq_count)` over every
// labeled tree on every subset S with R <= S <= V. With internal_terminals,
// subsets too small to keep every terminal internal are skipped outright.
template <typename OnTree>
void scan_all(const MetricGraph& g, const std::vector<int>& terminals, bool internal_terminals,
              OnTree&& on_tree) {
    std::vector<int> others;
    for (int v = 0; v < g.size(); ++v) {
        if (!std::binary_search(terminals.begin(), terminals.end(), v)) others.push_back(v);
    }
    const int k = static_cast<int>(terminals.size());
    const std::uint32_t limit = 1u << others.size();
    Subset sc;
    std::vector<int> members;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        members.clear();
        for (std::size_t b = 0; b < others.size(); ++b) {
            if (mask & (1u << b)) members.push_back(others[b]);
        }
        std::vector<int> merged;
        merged.resize(members.size() + terminals.size());
        std::merge(terminals.begin(), terminals.end(), members.begin(), members.end(),
                   merged.begin());
        const int m = static_cast<int>(merged.size());
        if (internal_terminals && m - 2 < k) continue;  // some terminal would be a leaf
        sc.fill(g, merged, terminals);
        scan_subset_trees(sc, internal_terminals,
                          [&](const auto& edges, int edge_count, double wsum, const auto& cnt) {
                              on_tree(sc, edges, edge_count, wsum, cnt);
                          });
    }
}

OracleResult run_bruteforce(const MetricGraph& g, const std::vector<int>& terminals,
                            bool internal_terminals, std::size_t optima_cap) {
    OracleResult out;
    double best = std::numeric_limits<double>::infinity();
    bool have = false;
    scan_all(g, terminals, internal_terminals,
             [&](const Subset& sc, const auto& edges, int edge_count, double wsum,
                 const auto& /*cnt*/) {
                 if (!have || wsum < best) {
                     have = true;
                     best = wsum;
                     out.best_tree = to_global_tree(sc, edges, edge_count);
                     out.optima_count = 1;
                     out.optima.clear();
                     out.optima_truncated = false;
                     if (optima_cap > 0) out.optima.push_back(out.best_tree);
                     return;
                 }
                 if (wsum == best) {
                     Tree t = to_global_tree(sc, edges, edge_count);
                     ++out.optima_count;
                     if (out.optima.size() < optima_cap)
                         out.optima.push_back(t);
                     else
                         out.optima_truncated = true;
                     if (tree_less(t, out.best_tree)) out.best_tree = std::move(t);
                 }
             });
    if (!have) throw Error("enumeration found no feasible tree");
    out.optimum_weight = tree_weight(out.best_tree, g);
    return out;
}

}  // namespace

void enumerate_labeled_trees(
    const std::vector<int>& vertex_ids,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
    std::vector<int> ids(vertex_ids);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw EmptySubset("vertex set must be nonempty");
    if (ids.size() > kMaxEnum) throw InstanceTooLarge("too many vertices to enumerate");
    // a throwaway complete graph: the scan only needs ids, not weights
    MetricGraph dummy(ids.back() + 1);
    Subset sc;
    sc.fill(dummy, ids, {});
    std::vector<std::pair<int, int>> buffer;
    scan_subset_trees(sc, false,
                      [&](const auto& edges, int edge_count, double, const auto&) {
                          buffer.clear();
                          for (int i = 0; i < edge_count; ++i)
                              buffer.emplace_back(sc.ids[edges[i].first], sc.ids[edges[i].second]);
                          visit(buffer);
                      });
}

namespace {

void check_oracle_size(int n, int max_n) {
    const int cap = std::min(max_n, kMaxEnum);
    if (n > cap)
        throw InstanceTooLarge("instance has " + std::to_string(n) + " vertices, oracle cap is " +
                               std::to_string(cap));
}

}  // namespace

OracleResult exact_ismt_bruteforce(const Instance& inst, int max_n, std::size_t optima_cap) {
    require_solvable(inst);
    check_oracle_size(inst.graph.size(), max_n);
    return run_bruteforce(inst.graph, inst.terminals, true, optima_cap);
}

OracleResult exact_smt_bruteforce(const MetricGraph& g, const std::vector<int>& terminals,
                                  int max_n, std::size_t optima_cap) {
    std::vector<int> R(terminals);
    std::sort(R.begin(), R.end());
    R.erase(std::unique(R.begin(), R.end()), R.end());
    if (R.empty()) throw EmptyTerminalSet("terminal set must be nonempty");
    for (int r : R) {
        if (r < 0 || r >= g.size()) throw Error("terminal id out of range");
    }
    check_oracle_size(g.size(), max_n);
    return run_bruteforce(g, R, false, optima_cap);
}

OptimaProbe probe_optima(const Instance& inst, int max_n) {
    require_solvable(inst);
    check_oracle_size(inst.graph.size(), max_n);

    OptimaProbe probe;
    double best = std::numeric_limits<double>::infinity();
    bool have = false;
    Tree best_tree;
    scan_all(inst.graph, inst.terminals, true,
             [&](const Subset& sc, const auto& edges, int edge_count, double wsum,
                 const auto& cnt) {
                 if (have && wsum > best) return;
                 // leaves are exactly the vertices missing from the sequence
                 bool touch = true;
                 bool minimal = true;
                 for (int i = 0; i < sc.m && touch; ++i) {
                     if (cnt[i] != 0) continue;
                     int neighbor = -1;
                     for (int e = 0; e < edge_count; ++e) {
                         if (edges[e].first == i) {
                             neighbor = edges[e].second;
                             break;
                         }
                         if (edges[e].second == i) {
                             neighbor = edges[e].first;
                             break;
                         }
                     }
                     if (!sc.is_term[neighbor]) {
                         touch = false;
                         minimal = false;
                         break;
                     }
                     if (sc.w[i * sc.m + neighbor] != sc.min_term_dist[i]) minimal = false;
                 }
                 if (!have || wsum < best) {
                     have = true;
                     best = wsum;
                     best_tree = to_global_tree(sc, edges, edge_count);
                     probe.optima_count = 1;
                     probe.leaves_touch_terminals = touch;
                     probe.leaf_edges_minimal = minimal;
                     probe.witness_touch = touch ? std::optional<Tree>(best_tree) : std::nullopt;
                     probe.witness_minimal = minimal ? std::optional<Tree>(best_tree) : std::nullopt;
                     return;
                 }
                 ++probe.optima_count;
                 if ((touch && !probe.leaves_touch_terminals) ||
                     (minimal && !probe.leaf_edges_minimal)) {
                     Tree t = to_global_tree(sc, edges, edge_count);
                     if (touch && !probe.leaves_touch_terminals) probe.witness_touch = t;
                     if (minimal && !probe.leaf_edges_minimal) probe.witness_minimal = t;
                 }
                 probe.leaves_touch_terminals = probe.leaves_touch_terminals || touch;
                 probe.leaf_edges_minimal = probe.leaf_edges_minimal || minimal;
             });
    if (!have) throw Error("enumeration found no feasible tree");
    probe.optimum_weight = tree_weight(best_tree, inst.graph);
    return probe;
}

}  // namespace ismt
