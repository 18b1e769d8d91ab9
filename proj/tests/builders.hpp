#pragma once

// Shared instance builders for the test suites.

#include "rainbow/extremal.hpp"
#include "rainbow/graph.hpp"

namespace builders {

inline rainbow::BipartiteGraph complete(int n) {
    rainbow::BipartiteGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.set_edge(i, j);
    return g;
}

inline rainbow::BipartiteGraph empty(int n) { return rainbow::BipartiteGraph(n); }

/// The identity perfect matching x_i - y_i.
inline rainbow::BipartiteGraph matching(int n) {
    rainbow::BipartiteGraph g(n);
    for (int i = 0; i < n; ++i)
        g.set_edge(i, i);
    return g;
}

inline rainbow::GraphCollection copies(const rainbow::BipartiteGraph &g, int m) {
    return rainbow::GraphCollection(std::vector<rainbow::BipartiteGraph>(static_cast<std::size_t>(m), g));
}

inline std::vector<int> range(int from, int count) {
    std::vector<int> out;
    for (int i = 0; i < count; ++i)
        out.push_back(from + i);
    return out;
}

/// 2n-1 copies of the canonical double complete graph (X1 = Y1 = {0..n/2-1}).
inline rainbow::GraphCollection double_complete_collection(int n, int m = -1) {
    auto g = rainbow::extremal::make_double_complete(n, range(0, n / 2), range(0, n / 2));
    return copies(g, m < 0 ? 2 * n - 1 : m);
}

inline rainbow::GraphCollection f_collection(int n, int m = -1) {
    auto g = rainbow::extremal::make_F(rainbow::extremal::FFrame::canonical(n));
    return copies(g, m < 0 ? 2 * n - 1 : m);
}

} // namespace builders
