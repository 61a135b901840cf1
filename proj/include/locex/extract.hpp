#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locex/fractional.hpp"
#include "locex/generate.hpp"

namespace locex {

struct ExtractConfig {
    int trials = 500;
    std::uint64_t seed = 0;
    QfpConfig qfp;
    /// Worker threads over trials; 0 = auto. Results are independent of
    /// the thread count because trials are seeded individually.
    int threads = 0;
};

struct CommunityRecord {
    std::vector<int> nodes;            // indices in the extraction graph
    std::vector<std::string> labels;   // sorted external labels
    double objective = 0.0;
    std::optional<double> lambda_star;  // W-type only
    int count = 0;                      // trials ending in this state
    bool stable = false;
    bool rho_valid = true;              // 2|S|/n < rho check (W-type)
};

struct ExtractionReport {
    std::vector<CommunityRecord> communities;  // ranked, best first
    int trials = 0;
    int failed_trials = 0;
    ObjectiveSpec spec;
    std::uint64_t seed = 0;
};

ExtractionReport extract_one(const Graph& g, const ObjectiveSpec& spec,
                             const ExtractConfig& cfg);

/// Extract up to k communities by repeatedly removing the top community
/// and recursing on the induced complement. Labels stay in the original
/// graph's label space.
std::vector<ExtractionReport> extract_sequential(const Graph& g,
                                                 const ObjectiveSpec& spec,
                                                 int k,
                                                 const ExtractConfig& cfg);

struct SweepResult {
    std::vector<double> rho_grid;
    /// membership[r][v]: community rank of node v at rho_grid[r], or -1.
    std::vector<std::vector<int>> membership;
    std::vector<std::vector<ExtractionReport>> reports;  // per rho
};

SweepResult rho_sweep(const Graph& g, const std::vector<double>& rho_grid,
                      int k, const ExtractConfig& cfg);

enum class NullModel { gnm, rewire };

struct SignificanceResult {
    double observed = 0.0;
    std::vector<double> null_objectives;  // -inf marks a failed replicate
    double p_value = 1.0;
    NullModel model = NullModel::gnm;
};

/// Empirical p-value of a community's objective against random networks
/// with the same node count and edge count (gnm) or the same degree
/// sequence (rewire, 10*m swap attempts per replicate).
SignificanceResult significance(const Graph& g,
                                const std::vector<int>& community,
                                const ObjectiveSpec& spec, int nulls,
                                NullModel model, const ExtractConfig& cfg);

}  // namespace locex
