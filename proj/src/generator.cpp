#include "ismt/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ismt/errors.hpp"

namespace ismt {

const char* gen_kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::Euclidean:
            return "euclidean";
        case GenKind::Random:
            return "random";
        case GenKind::OneTwo:
            return "onetwo";
    }
    return "?";
}

std::optional<GenKind> parse_gen_kind(std::string_view name) {
    if (name == "euclidean") return GenKind::Euclidean;
    if (name == "random") return GenKind::Random;
    if (name == "onetwo") return GenKind::OneTwo;
    return std::nullopt;
}

Instance generate(const GenSpec& spec) {
    if (spec.n < 3) throw SpecInvalid("generator needs n >= 3");
    if (spec.k < 1 || spec.k > spec.n - 2)
        throw SpecInvalid("generator needs 1 <= k <= n-2, got k=" + std::to_string(spec.k) +
                          " with n=" + std::to_string(spec.n));

    SplitMix64 rng(spec.seed);
    const int n = spec.n;
    MetricGraph g(n);
    switch (spec.kind) {
        case GenKind::Euclidean: {
            std::vector<double> xs(n), ys(n);
            for (int i = 0; i < n; ++i) {
                xs[i] = rng.next_double();
                ys[i] = rng.next_double();
            }
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    const double dx = xs[u] - xs[v];
                    const double dy = ys[u] - ys[v];
                    // sqrt is correctly rounded; hypot is not pinned across libms
                    g.set_weight(u, v, std::sqrt(dx * dx + dy * dy));
                }
            }
            break;
        }
        case GenKind::Random: {
            WeightedRawGraph raw;
            raw.n = n;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) raw.edges.push_back({u, v, 1.0 + rng.next_double()});
            }
            g = metric_closure(raw);
            break;
        }
        case GenKind::OneTwo: {
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v)
                    g.set_weight(u, v, (rng.next() & 1u) ? 2.0 : 1.0);
            }
            break;
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.next_below(i + 1)]);
    std::vector<int> terminals(order.begin(), order.begin() + spec.k);

    std::string name = std::string(gen_kind_name(spec.kind)) + "-n" + std::to_string(n) + "-k" +
                       std::to_string(spec.k) + "-s" + std::to_string(spec.seed);
    return make_instance(std::move(g), std::move(terminals), std::move(name));
}

}  // namespace ismt
