#pragma once

#include <random>
#include <sstream>

#include "locex/graph.hpp"
#include "locex/objective.hpp"

namespace locex::testing {

/// Barbell on 6 nodes: triangles {1,2,3} and {4,5,6}, bridge 3-4.
inline Graph b6() {
    std::istringstream in(
        "1 2\n1 3\n2 3\n3 4\n4 5\n4 6\n5 6\n");
    return Graph::from_edge_list(in);
}

inline Graph triangle() {
    std::istringstream in("a b\nb c\nc a\n");
    return Graph::from_edge_list(in);
}

/// Connected-ish random G(n,p) with at least one edge.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unif(rng) < p) edges.push_back({i, j, 1.0});
    if (edges.empty()) edges.push_back({0, n > 1 ? 1 : 0, 1.0});
    return Graph::from_edges(n, edges);
}

inline CommunityState random_subset(int n, std::mt19937_64& rng,
                                    bool nonempty = false) {
    std::bernoulli_distribution bit(0.5);
    CommunityState s(n);
    for (int i = 0; i < n; ++i) s.bits[i] = bit(rng) ? 1 : 0;
    if (nonempty && s.empty()) s.bits[rng() % n] = 1;
    return s;
}

/// From-scratch set-function evaluation used as the independent oracle
/// for the closed-form and operator-based paths.
inline double direct_W_rho(const Graph& g, const CommunityState& s,
                           double rho) {
    double os = 0.0, bs = 0.0;
    for (int i = 0; i < g.node_count(); ++i) {
        if (!s.bits[i]) continue;
        auto nb = g.neighbors(i);
        auto ww = g.weights(i);
        for (std::size_t k = 0; k < nb.size(); ++k)
            (s.bits[nb[k]] ? os : bs) += ww[k];
    }
    const double sz = s.size();
    return rho * g.node_count() * os / sz - os - bs;
}

inline double direct_Q(const Graph& g, const CommunityState& s) {
    double os = 0.0, bs = 0.0;
    for (int i = 0; i < g.node_count(); ++i) {
        if (!s.bits[i]) continue;
        auto nb = g.neighbors(i);
        auto ww = g.weights(i);
        for (std::size_t k = 0; k < nb.size(); ++k)
            (s.bits[nb[k]] ? os : bs) += ww[k];
    }
    const double ov = g.total_weight();
    return os / ov - ((os + bs) / ov) * ((os + bs) / ov);
}

/// Densely materialized Hopfield matrix, for small-n operator checks.
inline std::vector<std::vector<double>> dense_matrix(const Graph& g,
                                                     ObjectiveKind kind,
                                                     double rho) {
    const int n = g.node_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        auto nb = g.neighbors(i);
        auto ww = g.weights(i);
        for (std::size_t k = 0; k < nb.size(); ++k) a[i][nb[k]] = ww[k];
    }
    const auto& d = g.degrees();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (kind == ObjectiveKind::Q)
                m[i][j] = a[i][j] - d[i] * d[j] / g.total_weight();
            else
                m[i][j] = rho * a[i][j] - (d[i] + d[j]) / (2.0 * n);
        }
    return m;
}

}  // namespace locex::testing
