#include "locex/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace locex {

namespace {

using Edge = Graph::Edge;

void add_clique(std::vector<Edge>& edges, int first, int count) {
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            edges.push_back({first + i, first + j, 1.0});
}

// Visit each pair (i,j), i<j, within the index list with probability p,
// via geometric skips over the linearized pair space.
template <typename Visit>
void sample_pairs(const std::vector<int>& nodes, double p, std::mt19937_64& rng,
                  Visit visit) {
    const std::int64_t k = static_cast<std::int64_t>(nodes.size());
    const std::int64_t total = k * (k - 1) / 2;
    if (total == 0 || p <= 0.0) return;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    if (p >= 1.0) {
        for (std::int64_t i = 0; i < k; ++i)
            for (std::int64_t j = i + 1; j < k; ++j)
                visit(nodes[i], nodes[j]);
        return;
    }
    const double log1mp = std::log1p(-p);
    std::int64_t pos = -1;
    while (true) {
        const double u = 1.0 - unif(rng);  // in (0,1]
        pos += 1 + static_cast<std::int64_t>(std::floor(std::log(u) / log1mp));
        if (pos >= total) break;
        // Decode linear index -> (i,j), i<j, row-major over rows i.
        std::int64_t i = 0, row_start = 0;
        // row i holds (k-1-i) pairs
        while (pos >= row_start + (k - 1 - i)) {
            row_start += k - 1 - i;
            ++i;
        }
        const std::int64_t j = i + 1 + (pos - row_start);
        visit(nodes[static_cast<int>(i)], nodes[static_cast<int>(j)]);
    }
}

}  // namespace

std::vector<int> PlantedTruth::community(int which) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(assignment.size()); ++i)
        if (assignment[i] == which) out.push_back(i);
    return out;
}

Graph ring_of_cliques(int m, int n_cliques) {
    if (m < 2 || n_cliques < 3)
        throw std::invalid_argument("ring_of_cliques requires m >= 2, n_cliques >= 3");
    const int n = m * n_cliques;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n_cliques) * m * (m - 1) / 2 + n_cliques);
    for (int c = 0; c < n_cliques; ++c) add_clique(edges, c * m, m);
    for (int c = 0; c < n_cliques; ++c) {
        const int from = c * m + m - 1;          // last node of clique c
        const int to = ((c + 1) % n_cliques) * m;  // first node of next
        edges.push_back({from, to, 1.0});
    }
    return Graph::from_edges(n, edges);
}

Graph two_cliques_background(int p, int n_bg, double bg_prob,
                             std::uint64_t seed) {
    if (p < 2 || n_bg < 1 || bg_prob < 0.0 || bg_prob > 1.0)
        throw std::invalid_argument("bad two_cliques_background parameters");
    const int n = 2 * p + n_bg;
    std::vector<Edge> edges;
    add_clique(edges, 0, p);
    add_clique(edges, p, p);
    edges.push_back({p - 1, p, 1.0});       // clique-clique bridge
    edges.push_back({0, 2 * p, 1.0});       // clique 1 -> background port
    edges.push_back({2 * p - 1, 2 * p, 1.0});  // clique 2 -> background port

    std::mt19937_64 rng(seed);
    std::vector<int> bg(n_bg);
    for (int i = 0; i < n_bg; ++i) bg[i] = 2 * p + i;
    sample_pairs(bg, bg_prob, rng,
                 [&](int u, int v) { edges.push_back({u, v, 1.0}); });
    return Graph::from_edges(n, edges);
}

std::pair<Graph, PlantedTruth> planted_two_communities(int n, int n1, int n2,
                                                       double p_in,
                                                       double p_out,
                                                       std::uint64_t seed) {
    if (n < 1 || n1 < 0 || n2 < 0 || n1 + n2 > n)
        throw std::invalid_argument("bad planted sizes");
    if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0)
        throw std::invalid_argument("probabilities must be in [0,1]");

    PlantedTruth truth;
    truth.n1 = n1;
    truth.n2 = n2;
    truth.p_in = p_in;
    truth.p_out = p_out;
    truth.assignment.assign(n, -1);
    for (int i = 0; i < n1; ++i) truth.assignment[i] = 0;
    for (int i = n1; i < n1 + n2; ++i) truth.assignment[i] = 1;

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<int> c1(n1), c2(n2), all(n);
    for (int i = 0; i < n1; ++i) c1[i] = i;
    for (int i = 0; i < n2; ++i) c2[i] = n1 + i;
    for (int i = 0; i < n; ++i) all[i] = i;

    sample_pairs(c1, p_in, rng,
                 [&](int u, int v) { edges.push_back({u, v, 1.0}); });
    sample_pairs(c2, p_in, rng,
                 [&](int u, int v) { edges.push_back({u, v, 1.0}); });
    // Background sampling covers every pair; within-community pairs were
    // already decided above and are discarded here.
    sample_pairs(all, p_out, rng, [&](int u, int v) {
        const int au = truth.assignment[u], av = truth.assignment[v];
        if (au >= 0 && au == av) return;
        edges.push_back({u, v, 1.0});
    });
    return {Graph::from_edges(n, edges), std::move(truth)};
}

Graph gnm_random(int n, std::int64_t m_edges, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const std::int64_t max_edges =
        static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m_edges < 0 || m_edges > max_edges)
        throw std::invalid_argument("infeasible edge count");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::unordered_set<std::int64_t> seen;
    std::vector<Edge> edges;
    edges.reserve(m_edges);
    while (static_cast<std::int64_t>(edges.size()) < m_edges) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        const std::int64_t id = static_cast<std::int64_t>(u) * n + v;
        if (seen.insert(id).second) edges.push_back({u, v, 1.0});
    }
    return Graph::from_edges(n, edges);
}

Graph degree_preserving_rewire(const Graph& g, std::int64_t swap_attempts,
                               std::uint64_t seed) {
    if (!g.unit_weights())
        throw std::invalid_argument("rewiring requires unweighted graph");
    if (swap_attempts < 0)
        throw std::invalid_argument("swap_attempts must be >= 0");
    auto edges = g.undirected_edges();
    for (const auto& e : edges)
        if (e.u == e.v)
            throw std::invalid_argument("rewiring requires loop-free graph");

    const int n = g.node_count();
    auto pair_id = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::int64_t>(u) * n + v;
    };
    std::unordered_set<std::int64_t> present;
    for (const auto& e : edges) present.insert(pair_id(e.u, e.v));

    std::mt19937_64 rng(seed);
    if (edges.size() >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        for (std::int64_t t = 0; t < swap_attempts; ++t) {
            const std::size_t a = pick(rng), b = pick(rng);
            if (a == b) continue;
            int u1 = edges[a].u, v1 = edges[a].v;
            int u2 = edges[b].u, v2 = edges[b].v;
            if (coin(rng)) std::swap(u2, v2);
            // (u1,v1),(u2,v2) -> (u1,v2),(u2,v1)
            if (u1 == v2 || u2 == v1) continue;
            const auto e1 = pair_id(u1, v2), e2 = pair_id(u2, v1);
            if (present.count(e1) || present.count(e2)) continue;
            present.erase(pair_id(u1, v1));
            present.erase(pair_id(u2, v2));
            present.insert(e1);
            present.insert(e2);
            edges[a] = {u1, v2, 1.0};
            edges[b] = {u2, v1, 1.0};
        }
    }
    std::vector<std::string> labels = g.labels();
    return Graph::from_edges(n, edges, std::move(labels));
}

}  // namespace locex
