#pragma once

#include <string>
#include <vector>

namespace ismt {

// Complete undirected graph on vertices 0..n-1 with a full symmetric weight
// matrix. Construction fills the matrix; afterwards instances are treated as
// immutable and are safe to read from multiple threads.
class MetricGraph {
public:
    explicit MetricGraph(int n);

    // Takes an arbitrary row-major n*n matrix. No invariants are enforced
    // here; run validate_metric to find out what is wrong with it.
    static MetricGraph from_matrix(int n, std::vector<double> weights);

    int size() const { return n_; }

    double weight(int u, int v) const { return w_[static_cast<std::size_t>(u) * n_ + v]; }

    // Symmetric assignment, construction-time only. u == v is rejected.
    void set_weight(int u, int v, double w);

    bool operator==(const MetricGraph& other) const = default;

private:
    int n_ = 0;
    std::vector<double> w_;
};

enum class ViolationKind {
    NegativeWeight,
    NonFiniteWeight,
    NonZeroDiagonal,
    Asymmetry,
    TriangleInequality,
};

// One invariant violation. For triangle violations the reported triple is
// (u, x, v): the direct edge (u,v) is longer than the detour through x.
struct MetricViolation {
    ViolationKind kind;
    int u = -1;
    int v = -1;
    int x = -1;
    double slack = 0.0;

    std::string describe() const;
};

// Scans all pairs and all Theta(n^3) triples. Returns every violation found;
// an empty result means g is a metric within relative tolerance tol.
std::vector<MetricViolation> validate_metric(const MetricGraph& g, double tol = 1e-9);

struct RawEdge {
    int u;
    int v;
    double weight;
};

// Possibly sparse weighted graph, the ingestion form before metricization.
struct WeightedRawGraph {
    int n = 0;
    std::vector<RawEdge> edges;
};

// Completes g with all-pairs shortest-path distances (Floyd-Warshall).
// Throws DisconnectedInput when some pair has no connecting path and Error
// when g itself is malformed (bad endpoint, self-loop, negative weight).
MetricGraph metric_closure(const WeightedRawGraph& g);

// Complete metric graph on a vertex subset, with the mapping back to the
// host graph. vertex_ids is ascending; local ids are positions in it.
struct InducedSubgraph {
    MetricGraph graph;
    std::vector<int> vertex_ids;

    int to_local(int host_id) const;
};

// Throws EmptySubset; out-of-range ids throw Error.
InducedSubgraph induced_subgraph(const MetricGraph& g, const std::vector<int>& vertices);

}  // namespace ismt
