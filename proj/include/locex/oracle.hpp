#pragma once

#include <vector>

#include "locex/dynamics.hpp"

namespace locex {

struct OracleResult {
    std::vector<int> best_subset;
    double best_value = 0.0;
    std::uint64_t evaluated_count = 0;
    std::vector<std::vector<int>> ties;  // all co-optimal subsets, best first
};

/// Exhaustive subset optimization via Gray-code incremental updates of
/// O_S, B_S and |S|. Hard cap n <= 24. For W-type objectives the empty
/// set is excluded.
OracleResult brute_force_best(const Graph& g, const ObjectiveSpec& spec);

/// All states with x = sgn(Mx - T), tested over the full state space.
/// Cap n <= 20.
std::vector<CommunityState> enumerate_stable_states(const HopfieldOperator& op,
                                                    double eps = 1e-12);

}  // namespace locex
