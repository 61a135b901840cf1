#pragma once

#include <cstdint>
#include <vector>

#include "locex/graph.hpp"

namespace locex {

struct PlantedTruth {
    /// Per node: 0 = community 1, 1 = community 2, -1 = background.
    std::vector<int> assignment;
    int n1 = 0;
    int n2 = 0;
    double p_in = 0.0;
    double p_out = 0.0;

    std::vector<int> community(int which) const;  // which in {0,1}
};

/// Ring of n_cliques complete K_m cliques; consecutive cliques joined by
/// one bridge edge between fixed port nodes (last of clique i, first of
/// clique i+1). Edge count: n_cliques*m*(m-1)/2 + n_cliques.
Graph ring_of_cliques(int m, int n_cliques);

/// Two K_p cliques joined by a single edge, each attached to a random
/// background of n_bg nodes (pairwise edge probability bg_prob) by one
/// fixed-port edge.
Graph two_cliques_background(int p, int n_bg, double bg_prob,
                             std::uint64_t seed);

/// Two planted communities of sizes n1, n2 inside an n-node background:
/// within-community pairs with probability p_in, all other pairs p_out.
std::pair<Graph, PlantedTruth> planted_two_communities(int n, int n1, int n2,
                                                       double p_in,
                                                       double p_out,
                                                       std::uint64_t seed);

/// Uniform simple graph with exactly n nodes and m_edges edges.
Graph gnm_random(int n, std::int64_t m_edges, std::uint64_t seed);

/// Degree-preserving double-edge swaps; requires unit edge weights and
/// no self-loops. Swaps creating loops or multi-edges are rejected.
Graph degree_preserving_rewire(const Graph& g, std::int64_t swap_attempts,
                               std::uint64_t seed);

}  // namespace locex
