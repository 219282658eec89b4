#pragma once

#include <utility>
#include <vector>

#include "ismt/metric_graph.hpp"

namespace ismt {

// Connected acyclic edge set over an explicit vertex set. A single vertex
// with no edges is a valid tree. Edges and vertices are kept sorted with
// (min,max) endpoint order, so equal trees compare equal.
class Tree {
public:
    Tree() = default;

    static Tree single_vertex(int v);

    // Vertex set is inferred from the edge endpoints.
    static Tree from_edges(std::vector<std::pair<int, int>> edges);

    // Explicit vertex set; needed for the single-vertex case and asserted to
    // cover all endpoints.
    static Tree from_edges(std::vector<std::pair<int, int>> edges, std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool empty() const { return vertices_.empty(); }
    bool contains(int v) const;
    int degree(int v) const;

    // Connected, acyclic, no duplicate or dangling edges.
    bool valid() const;

    bool operator==(const Tree& other) const = default;

private:
    std::vector<int> vertices_;
    std::vector<std::pair<int, int>> edges_;
};

// Vertices of degree exactly one; empty for a single-vertex tree.
std::vector<int> tree_leaves(const Tree& t);

// The unique simple a-b path as an ordered vertex list starting at a.
// Throws VertexNotInTree.
std::vector<int> unique_path(const Tree& t, int a, int b);

// Canonical edge-multiset sum: edges are normalized, sorted and accumulated
// in that order, so equal multisets give bit-identical totals.
double sum_edge_weights(std::vector<std::pair<int, int>> edges, const MetricGraph& g);

double tree_weight(const Tree& t, const MetricGraph& g);

}  // namespace ismt
