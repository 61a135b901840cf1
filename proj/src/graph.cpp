#include "locex/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace locex {

Graph Graph::from_edge_list(std::istream& in) {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    bool unit_weights = true;

    auto intern = [&](const std::string& s) {
        auto [it, inserted] = index.emplace(s, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(s);
        return it->second;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string u, v, w, extra;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v) || (ls >> w && ls >> extra))
            throw std::runtime_error("parse error at line " +
                                     std::to_string(lineno) +
                                     ": expected 'u v' or 'u v w'");
        double weight = 1.0;
        if (!w.empty()) {
            std::size_t pos = 0;
            try {
                weight = std::stod(w, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != w.size() || !std::isfinite(weight) || weight <= 0.0)
                throw std::runtime_error("parse error at line " +
                                         std::to_string(lineno) +
                                         ": bad weight '" + w + "'");
            if (weight != 1.0) unit_weights = false;
        }
        edges.push_back({intern(u), intern(v), weight});
    }
    if (edges.empty()) throw std::runtime_error("no edges");
    const int n = static_cast<int>(labels.size());
    return build_csr(n, std::move(labels), edges, unit_weights);
}

Graph Graph::from_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return from_edge_list(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges,
                        std::vector<std::string> labels) {
    if (n < 1) throw std::invalid_argument("graph needs at least one node");
    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    }
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label count mismatch");
    bool unit = true;
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.w <= 0.0) throw std::invalid_argument("nonpositive edge weight");
        if (e.w != 1.0) unit = false;
    }
    return build_csr(n, std::move(labels), edges, unit);
}

Graph Graph::build_csr(int n, std::vector<std::string> labels,
                       const std::vector<Edge>& edges, bool unit_weights) {
    // Accumulate per-row neighbor weights, summing duplicates.
    // std::map keeps neighbor order sorted, so summation order is fixed.
    std::vector<std::map<int, double>> rows(n);
    for (const auto& e : edges) {
        if (e.u == e.v) {
            rows[e.u][e.u] += 2.0 * e.w;  // loop counts twice in the degree
        } else {
            rows[e.u][e.v] += e.w;
            rows[e.v][e.u] += e.w;
        }
    }

    Graph g;
    g.n_ = n;
    g.labels_ = std::move(labels);
    g.unit_weights_ = unit_weights;
    g.offset_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i)
        g.offset_[i + 1] = g.offset_[i] + static_cast<std::int64_t>(rows[i].size());
    g.nbr_.reserve(g.offset_[n]);
    g.wgt_.reserve(g.offset_[n]);
    g.degree_.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double d = 0.0;
        for (const auto& [j, w] : rows[i]) {
            g.nbr_.push_back(j);
            g.wgt_.push_back(w);
            d += w;
        }
        g.degree_[i] = d;
    }
    double tw = 0.0;
    for (double d : g.degree_) tw += d;
    g.total_weight_ = tw;
    std::int64_t stored = 0;
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors(i))
            if (j >= i) ++stored;
    g.edge_count_ = stored;
    return g;
}

void Graph::multiply(std::span<const double> x, std::span<double> out) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(out.size()) != n_)
        throw std::invalid_argument("vector length mismatch");
    for (int i = 0; i < n_; ++i) {
        double acc = 0.0;
        const auto jb = offset_[i], je = offset_[i + 1];
        for (std::int64_t k = jb; k < je; ++k) acc += wgt_[k] * x[nbr_[k]];
        out[i] = acc;
    }
}

std::vector<Graph::Edge> Graph::undirected_edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int i = 0; i < n_; ++i) {
        auto nb = neighbors(i);
        auto ww = weights(i);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            if (nb[k] < i) continue;
            double w = (nb[k] == i) ? ww[k] / 2.0 : ww[k];
            out.push_back({i, nb[k], w});
        }
    }
    return out;
}

std::pair<Graph, std::vector<int>> Graph::induced_subgraph(
    const std::vector<int>& keep) const {
    if (keep.empty()) throw std::invalid_argument("empty subgraph");
    std::vector<int> old_to_new(n_, -1);
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::string> labels;
    labels.reserve(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        int v = sorted[k];
        if (v < 0 || v >= n_) throw std::invalid_argument("node out of range");
        old_to_new[v] = static_cast<int>(k);
        labels.push_back(labels_[v]);
    }
    std::vector<Edge> edges;
    for (const auto& e : undirected_edges()) {
        int u = old_to_new[e.u], v = old_to_new[e.v];
        if (u >= 0 && v >= 0) edges.push_back({u, v, e.w});
    }
    Graph sub = build_csr(static_cast<int>(sorted.size()), std::move(labels),
                          edges, unit_weights_);
    return {std::move(sub), std::move(old_to_new)};
}

}  // namespace locex
