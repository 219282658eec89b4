#include "ismt/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ismt/errors.hpp"

namespace ismt {

MetricGraph::MetricGraph(int n) : n_(n) {
    if (n < 0) throw Error("vertex count must be nonnegative");
    w_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

MetricGraph MetricGraph::from_matrix(int n, std::vector<double> weights) {
    MetricGraph g(n);
    if (weights.size() != static_cast<std::size_t>(n) * n)
        throw Error("weight matrix size does not match vertex count");
    g.w_ = std::move(weights);
    return g;
}

void MetricGraph::set_weight(int u, int v, double w) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("vertex id out of range");
    if (u == v) throw Error("diagonal entries are fixed at zero");
    w_[static_cast<std::size_t>(u) * n_ + v] = w;
    w_[static_cast<std::size_t>(v) * n_ + u] = w;
}

std::string MetricViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case ViolationKind::NegativeWeight:
            os << "negative weight at (" << u << "," << v << "): " << slack;
            break;
        case ViolationKind::NonFiniteWeight:
            os << "non-finite weight at (" << u << "," << v << ")";
            break;
        case ViolationKind::NonZeroDiagonal:
            os << "nonzero diagonal at " << u << ": " << slack;
            break;
        case ViolationKind::Asymmetry:
            os << "asymmetric pair (" << u << "," << v << "): difference " << slack;
            break;
        case ViolationKind::TriangleInequality:
            os << "triangle violation at (" << u << "," << x << "," << v << "): w(" << u << "," << v
               << ") exceeds the detour through " << x << " by " << slack;
            break;
    }
    return os.str();
}

std::vector<MetricViolation> validate_metric(const MetricGraph& g, double tol) {
    std::vector<MetricViolation> out;
    const int n = g.size();
    for (int u = 0; u < n; ++u) {
        if (g.weight(u, u) != 0.0)
            out.push_back({ViolationKind::NonZeroDiagonal, u, u, -1, g.weight(u, u)});
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double w = g.weight(u, v);
            if (!std::isfinite(w)) {
                out.push_back({ViolationKind::NonFiniteWeight, u, v, -1, 0.0});
                continue;
            }
            if (w < 0.0) out.push_back({ViolationKind::NegativeWeight, u, v, -1, w});
            if (g.weight(v, u) != w)
                out.push_back({ViolationKind::Asymmetry, u, v, -1, std::abs(g.weight(v, u) - w)});
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double direct = g.weight(u, v);
            if (!std::isfinite(direct)) continue;
            for (int x = 0; x < n; ++x) {
                if (x == u || x == v) continue;
                const double detour = g.weight(u, x) + g.weight(x, v);
                if (!std::isfinite(detour)) continue;
                if (direct > detour * (1.0 + tol))
                    out.push_back({ViolationKind::TriangleInequality, u, v, x, direct - detour});
            }
        }
    }
    return out;
}

MetricGraph metric_closure(const WeightedRawGraph& g) {
    const int n = g.n;
    if (n <= 0) throw Error("metric closure needs at least one vertex");
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(static_cast<std::size_t>(n) * n, inf);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 0.0;
    for (const RawEdge& e : g.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
        if (e.u == e.v) throw Error("self-loops are not allowed");
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
            throw Error("edge weights must be nonnegative and finite");
        auto& a = d[static_cast<std::size_t>(e.u) * n + e.v];
        auto& b = d[static_cast<std::size_t>(e.v) * n + e.u];
        a = std::min(a, e.weight);
        b = std::min(b, e.weight);
    }
    // Repeat the relaxation until a full pass is stable. One pass finds the
    // shortest paths; the extra passes remove the last-ulp rounding drift so
    // the result is a true fixpoint and a second closure reproduces it
    // exactly.
    for (bool changed = true; changed;) {
        changed = false;
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                const double dik = d[static_cast<std::size_t>(i) * n + k];
                if (dik == inf) continue;
                for (int j = 0; j < n; ++j) {
                    const double via = dik + d[static_cast<std::size_t>(k) * n + j];
                    auto& cur = d[static_cast<std::size_t>(i) * n + j];
                    if (via < cur) {
                        cur = via;
                        changed = true;
                    }
                }
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (d[static_cast<std::size_t>(i) * n + j] == inf)
                throw DisconnectedInput("no path between vertices " + std::to_string(i) + " and " +
                                        std::to_string(j));
        }
    }
    return MetricGraph::from_matrix(n, std::move(d));
}

int InducedSubgraph::to_local(int host_id) const {
    auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), host_id);
    if (it == vertex_ids.end() || *it != host_id) return -1;
    return static_cast<int>(it - vertex_ids.begin());
}

InducedSubgraph induced_subgraph(const MetricGraph& g, const std::vector<int>& vertices) {
    std::vector<int> ids(vertices);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw EmptySubset("induced subgraph needs a nonempty vertex set");
    for (int v : ids) {
        if (v < 0 || v >= g.size()) throw Error("vertex id out of range");
    }
    const int m = static_cast<int>(ids.size());
    MetricGraph sub(m);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) sub.set_weight(a, b, g.weight(ids[a], ids[b]));
    }
    return {std::move(sub), std::move(ids)};
}

}  // namespace ismt
