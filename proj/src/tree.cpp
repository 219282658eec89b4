#include "ismt/tree.hpp"

#include <algorithm>

#include "ismt/errors.hpp"

namespace ismt {

namespace {

void normalize_edges(std::vector<std::pair<int, int>>& edges) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
}

}  // namespace

Tree Tree::single_vertex(int v) {
    Tree t;
    t.vertices_ = {v};
    return t;
}

Tree Tree::from_edges(std::vector<std::pair<int, int>> edges) {
    Tree t;
    normalize_edges(edges);
    for (const auto& [u, v] : edges) {
        t.vertices_.push_back(u);
        t.vertices_.push_back(v);
    }
    std::sort(t.vertices_.begin(), t.vertices_.end());
    t.vertices_.erase(std::unique(t.vertices_.begin(), t.vertices_.end()), t.vertices_.end());
    t.edges_ = std::move(edges);
    return t;
}

Tree Tree::from_edges(std::vector<std::pair<int, int>> edges, std::vector<int> vertices) {
    Tree t;
    normalize_edges(edges);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    t.vertices_ = std::move(vertices);
    t.edges_ = std::move(edges);
    return t;
}

bool Tree::contains(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Tree::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_) {
        if (a == v || b == v) ++d;
    }
    return d;
}

bool Tree::valid() const {
    if (vertices_.empty()) return false;
    if (edges_.size() != vertices_.size() - 1) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& [u, v] = edges_[i];
        if (u == v) return false;
        if (!contains(u) || !contains(v)) return false;
        if (i > 0 && edges_[i] == edges_[i - 1]) return false;
    }
    if (vertices_.size() == 1) return true;
    // |E| = |V|-1 plus connectivity rules out cycles.
    std::vector<std::vector<int>> adj(vertices_.size());
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(vertices_.begin(), vertices_.end(), v) -
                                vertices_.begin());
    };
    for (const auto& [u, v] : edges_) {
        adj[local(u)].push_back(local(v));
        adj[local(v)].push_back(local(u));
    }
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == vertices_.size();
}

std::vector<int> tree_leaves(const Tree& t) {
    std::vector<int> out;
    for (int v : t.vertices()) {
        if (t.degree(v) == 1) out.push_back(v);
    }
    return out;
}

std::vector<int> unique_path(const Tree& t, int a, int b) {
    if (!t.contains(a)) throw VertexNotInTree("vertex " + std::to_string(a) + " is not in the tree");
    if (!t.contains(b)) throw VertexNotInTree("vertex " + std::to_string(b) + " is not in the tree");
    if (a == b) return {a};
    const auto& verts = t.vertices();
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<std::vector<int>> adj(verts.size());
    for (const auto& [u, v] : t.edges()) {
        adj[local(u)].push_back(local(v));
        adj[local(v)].push_back(local(u));
    }
    std::vector<int> parent(verts.size(), -1);
    std::vector<int> stack = {local(a)};
    parent[local(a)] = local(a);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == local(b)) break;
        for (int w : adj[v]) {
            if (parent[w] < 0) {
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    if (parent[local(b)] < 0) throw Error("tree is not connected");
    std::vector<int> path;
    for (int v = local(b); v != local(a); v = parent[v]) path.push_back(verts[v]);
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

double sum_edge_weights(std::vector<std::pair<int, int>> edges, const MetricGraph& g) {
    normalize_edges(edges);
    double total = 0.0;
    for (const auto& [u, v] : edges) total += g.weight(u, v);
    return total;
}

double tree_weight(const Tree& t, const MetricGraph& g) {
    return sum_edge_weights(t.edges(), g);
}

}  // namespace ismt
