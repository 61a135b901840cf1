#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace locex {

/// Immutable sparse undirected weighted graph in CSR layout.
///
/// Self-loops are stored as a single (i,i) entry whose weight is twice
/// the loop weight, so that degree(i) = sum of the i-th adjacency row
/// and total_weight() = sum of all degrees hold exactly.
class Graph {
public:
    struct Edge {
        int u;
        int v;
        double w;
    };

    /// Parse whitespace-separated "u v [w]" lines; '#' starts a comment.
    /// Labels are assigned dense indices in first-appearance order and
    /// duplicate edges have their weights summed.
    static Graph from_edge_list(std::istream& in);
    static Graph from_edge_list_file(const std::string& path);

    /// Build from explicit 0-based index edges. Labels default to "1".."n".
    static Graph from_edges(int n, const std::vector<Edge>& edges,
                            std::vector<std::string> labels = {});

    int node_count() const { return n_; }
    /// Number of stored undirected edges (self-loops count once).
    std::int64_t edge_count() const { return edge_count_; }
    /// 2m = sum of all degrees.
    double total_weight() const { return total_weight_; }
    double degree(int i) const { return degree_[i]; }
    const std::vector<double>& degrees() const { return degree_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    bool unit_weights() const { return unit_weights_; }

    std::span<const int> neighbors(int i) const {
        return {nbr_.data() + offset_[i], nbr_.data() + offset_[i + 1]};
    }
    std::span<const double> weights(int i) const {
        return {wgt_.data() + offset_[i], wgt_.data() + offset_[i + 1]};
    }

    /// out[i] = sum_j A_ij x[j]; runs in O(m+n).
    void multiply(std::span<const double> x, std::span<double> out) const;

    /// All undirected edges, each once with u <= v. Self-loop weight is
    /// reported as the original loop weight (stored/2).
    std::vector<Edge> undirected_edges() const;

    /// Restriction to `keep` (0-based indices). Second element maps
    /// old index -> new index (-1 for dropped nodes).
    std::pair<Graph, std::vector<int>> induced_subgraph(
        const std::vector<int>& keep) const;

private:
    Graph() = default;

    static Graph build_csr(int n, std::vector<std::string> labels,
                           const std::vector<Edge>& edges, bool unit_weights);

    int n_ = 0;
    std::int64_t edge_count_ = 0;
    double total_weight_ = 0.0;
    bool unit_weights_ = true;
    std::vector<std::string> labels_;
    std::vector<std::int64_t> offset_;
    std::vector<int> nbr_;
    std::vector<double> wgt_;
    std::vector<double> degree_;
};

}  // namespace locex
