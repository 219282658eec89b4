#include "ismt/solver.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "ismt/errors.hpp"

namespace ismt {

double EulerMultigraph::total_weight(const MetricGraph& g) const {
    std::vector<std::pair<int, int>> expanded;
    for (const MultiEdge& e : edges) {
        for (int i = 0; i < e.multiplicity; ++i) expanded.emplace_back(e.u, e.v);
    }
    return sum_edge_weights(std::move(expanded), g);
}

int nearest_in_set(const MetricGraph& g, int x, const std::vector<int>& candidates) {
    if (candidates.empty()) throw EmptyCandidateSet("candidate set must be nonempty");
    std::vector<int> sorted(candidates);
    std::sort(sorted.begin(), sorted.end());
    int best = sorted.front();
    double best_w = g.weight(x, best);
    for (int v : sorted) {
        const double w = g.weight(x, v);
        if (w < best_w) {
            best = v;
            best_w = w;
        }
    }
    return best;
}

EulerMultigraph double_except_st_path(const Tree& t2, int s, int t) {
    if (!t2.contains(s)) throw VertexNotInTree("s is not in the tree");
    if (!t2.contains(t)) throw VertexNotInTree("t is not in the tree");
    if (t2.degree(s) != 1) throw NotALeaf("s must be a leaf of the tree");
    if (t2.degree(t) != 1) throw NotALeaf("t must be a leaf of the tree");
    const auto path = unique_path(t2, s, t);
    std::set<std::pair<int, int>> on_path;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        on_path.insert({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
    EulerMultigraph m;
    m.edges.reserve(t2.edges().size());
    for (const auto& e : t2.edges())
        m.edges.push_back({e.first, e.second, on_path.count(e) ? 1 : 2});
    return m;
}

std::vector<int> euler_walk(const EulerMultigraph& m, int s, int t) {
    if (s == t) throw Error("walk endpoints must be distinct");
    std::map<int, int> degree;
    for (const MultiEdge& e : m.edges) {
        degree[e.u] += e.multiplicity;
        degree[e.v] += e.multiplicity;
    }
    if (!degree.count(s) || !degree.count(t))
        throw DegreeParityViolation("walk endpoint has no incident edges");
    for (const auto& [v, d] : degree) {
        const bool endpoint = (v == s || v == t);
        if (endpoint != (d % 2 == 1))
            throw DegreeParityViolation("vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(d));
    }

    // Expand multiplicities into individual edge copies; per-vertex incidence
    // lists sorted by (neighbor, copy slot) fix the traversal order.
    std::vector<std::pair<int, int>> copies;
    std::map<int, std::vector<std::pair<int, std::size_t>>> adjacency;
    for (const MultiEdge& e : m.edges) {
        for (int i = 0; i < e.multiplicity; ++i) {
            const std::size_t id = copies.size();
            copies.emplace_back(e.u, e.v);
            adjacency[e.u].emplace_back(e.v, id);
            adjacency[e.v].emplace_back(e.u, id);
        }
    }
    for (auto& [v, list] : adjacency) std::sort(list.begin(), list.end());

    std::vector<char> used(copies.size(), 0);
    std::map<int, std::size_t> cursor;
    std::vector<int> stack = {s};
    std::vector<int> out;
    while (!stack.empty()) {
        const int v = stack.back();
        auto& list = adjacency[v];
        std::size_t& i = cursor[v];
        while (i < list.size() && used[list[i].second]) ++i;
        if (i == list.size()) {
            out.push_back(v);
            stack.pop_back();
        } else {
            used[list[i].second] = 1;
            stack.push_back(list[i].first);
        }
    }
    if (out.size() != copies.size() + 1) throw Error("multigraph is not connected");
    std::reverse(out.begin(), out.end());
    if (out.front() != s || out.back() != t) throw Error("walk endpoints were lost");
    return out;
}

Tree shortcut(const std::vector<int>& walk, const MetricGraph& g) {
    if (walk.empty()) throw Error("walk must be nonempty");
    if (walk.size() == 1) {
        if (walk[0] < 0 || walk[0] >= g.size()) throw Error("walk vertex out of range");
        return Tree::single_vertex(walk[0]);
    }
    if (walk.front() == walk.back()) throw Error("walk endpoints must be distinct");
    std::vector<char> seen(g.size(), 0);
    std::vector<int> firsts;
    std::size_t front_hits = 0;
    std::size_t back_hits = 0;
    for (int v : walk) {
        if (v < 0 || v >= g.size()) throw Error("walk vertex out of range");
        if (v == walk.front()) ++front_hits;
        if (v == walk.back()) ++back_hits;
        if (!seen[v]) {
            seen[v] = 1;
            firsts.push_back(v);
        }
    }
    if (front_hits != 1 || back_hits != 1)
        throw Error("walk endpoints must occur exactly once");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> walk_edges;
    for (std::size_t i = 0; i + 1 < firsts.size(); ++i) edges.emplace_back(firsts[i], firsts[i + 1]);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) walk_edges.emplace_back(walk[i], walk[i + 1]);
    const double path_w = sum_edge_weights(edges, g);
    const double walk_w = sum_edge_weights(std::move(walk_edges), g);
    if (path_w > walk_w) throw Error("shortcut increased the weight; graph is not metric");
    return Tree::from_edges(std::move(edges));
}

PairConstruction build_st_path(const Instance& inst, int s, int t, SteinerKind sub) {
    const MetricGraph& g = inst.graph;
    if (s < 0 || t < 0 || s >= g.size() || t >= g.size()) throw Error("vertex id out of range");
    if (s == t) throw Error("s and t must be distinct");
    if (inst.is_terminal(s) || inst.is_terminal(t)) throw Error("s and t must be non-terminals");

    std::vector<int> rest;
    rest.reserve(g.size() - 2);
    for (int v = 0; v < g.size(); ++v) {
        if (v != s && v != t) rest.push_back(v);
    }
    const InducedSubgraph sg = induced_subgraph(g, rest);
    std::vector<int> local_terms;
    local_terms.reserve(inst.terminals.size());
    for (int r : inst.terminals) local_terms.push_back(sg.to_local(r));

    const SteinerResult sr = run_steiner(sub, sg.graph, local_terms);
    std::vector<std::pair<int, int>> t1_edges;
    t1_edges.reserve(sr.tree.edges().size());
    for (const auto& [a, b] : sr.tree.edges())
        t1_edges.emplace_back(sg.vertex_ids[a], sg.vertex_ids[b]);
    std::vector<int> t1_verts;
    t1_verts.reserve(sr.tree.vertices().size());
    for (int v : sr.tree.vertices()) t1_verts.push_back(sg.vertex_ids[v]);

    PairConstruction pc;
    pc.s = s;
    pc.t = t;
    pc.t1 = Tree::from_edges(std::move(t1_edges), std::move(t1_verts));
    pc.u1 = nearest_in_set(g, s, pc.t1.vertices());
    pc.u2 = nearest_in_set(g, t, pc.t1.vertices());

    std::vector<std::pair<int, int>> t2_edges(pc.t1.edges());
    t2_edges.emplace_back(s, pc.u1);
    t2_edges.emplace_back(t, pc.u2);
    pc.t2 = Tree::from_edges(std::move(t2_edges));
    pc.st_path_in_t2 = unique_path(pc.t2, s, t);

    const EulerMultigraph mg = double_except_st_path(pc.t2, s, t);
    pc.walk = euler_walk(mg, s, t);
    pc.path = shortcut(pc.walk, g);

    pc.t1_weight = tree_weight(pc.t1, g);
    pc.t2_weight = tree_weight(pc.t2, g);
    pc.walk_weight = mg.total_weight(g);
    pc.path_weight = tree_weight(pc.path, g);

    if (pc.path.vertices() != pc.t2.vertices()) throw Error("path must span the attached tree");
    if (!is_feasible_ismt(pc.path, inst)) throw Error("constructed path is not feasible");
    return pc;
}

Solution solve(const Instance& inst, SteinerKind sub, const SolveOptions& options) {
    require_solvable(inst);
    const std::vector<int> free_vertices = inst.non_terminals();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(free_vertices.size() * (free_vertices.size() - 1) / 2);
    for (std::size_t i = 0; i < free_vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < free_vertices.size(); ++j)
            pairs.emplace_back(free_vertices[i], free_vertices[j]);
    }

    std::vector<double> weights(pairs.size());
    std::vector<PairConstruction> traces;
    if (options.keep_traces) traces.resize(pairs.size());

    auto evaluate = [&](std::size_t idx) {
        PairConstruction pc = build_st_path(inst, pairs[idx].first, pairs[idx].second, sub);
        weights[idx] = pc.path_weight;
        if (options.keep_traces) traces[idx] = std::move(pc);
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || pairs.size() <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= pairs.size()) return;
                try {
                    evaluate(idx);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> threads;
        const int count = std::min<int>(jobs, static_cast<int>(pairs.size()));
        threads.reserve(count);
        for (int i = 0; i < count; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    // Pairs are generated in ascending (s,t) order, so the first strict
    // minimum is the lexicographically smallest winner.
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (weights[i] < weights[best]) best = i;
    }

    Solution sol;
    PairConstruction winner = options.keep_traces
                                  ? traces[best]
                                  : build_st_path(inst, pairs[best].first, pairs[best].second, sub);
    sol.tree = std::move(winner.path);
    sol.weight = winner.path_weight;
    sol.pair = pairs[best];
    sol.subroutine = sub;
    sol.rho = steiner_rho(sub);
    sol.pairs_evaluated = pairs.size();
    if (options.keep_traces) sol.traces = std::move(traces);
    return sol;
}

}  // namespace ismt
