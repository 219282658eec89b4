#pragma once

// The three tiny instances used throughout the tests. All expected values
// asserted against them are re-derived by the brute-force oracles in the
// tests themselves.

#include "ismt/instance.hpp"

namespace ismt::testing {

// K4 with unit weights, terminals {0,1}.
inline Instance instance_a() {
    MetricGraph g(4);
    for (int u = 0; u < 4; ++u) {
        for (int v = u + 1; v < 4; ++v) g.set_weight(u, v, 1.0);
    }
    return make_instance(std::move(g), {0, 1}, "A");
}

// Triangle with a single terminal: w(0,1)=1, w(0,2)=2, w(1,2)=2, R={0}.
inline Instance instance_b() {
    MetricGraph g(3);
    g.set_weight(0, 1, 1.0);
    g.set_weight(0, 2, 2.0);
    g.set_weight(1, 2, 2.0);
    return make_instance(std::move(g), {0}, "B");
}

// Four vertices, terminals {1,2}: w(0,1)=2, w(0,2)=1, w(0,3)=2, w(1,2)=2,
// w(1,3)=3, w(2,3)=1. The approximation returns 6 while the optimum is 5.
inline Instance instance_c() {
    MetricGraph g(4);
    g.set_weight(0, 1, 2.0);
    g.set_weight(0, 2, 1.0);
    g.set_weight(0, 3, 2.0);
    g.set_weight(1, 2, 2.0);
    g.set_weight(1, 3, 3.0);
    g.set_weight(2, 3, 1.0);
    return make_instance(std::move(g), {1, 2}, "C");
}

// Star metric: w(i,3)=1 for i in {0,1,2}, w(i,j)=2 otherwise.
inline MetricGraph star_metric() {
    MetricGraph g(4);
    for (int i = 0; i < 3; ++i) g.set_weight(i, 3, 1.0);
    g.set_weight(0, 1, 2.0);
    g.set_weight(0, 2, 2.0);
    g.set_weight(1, 2, 2.0);
    return g;
}

}  // namespace ismt::testing
