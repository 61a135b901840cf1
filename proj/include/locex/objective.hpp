#pragma once

#include <span>
#include <string>
#include <vector>

#include "locex/graph.hpp"

namespace locex {

/// Binary indicator vector over the nodes of a graph.
struct CommunityState {
    std::vector<std::uint8_t> bits;

    CommunityState() = default;
    explicit CommunityState(int n) : bits(n, 0) {}
    static CommunityState from_members(int n, const std::vector<int>& members);

    int dim() const { return static_cast<int>(bits.size()); }
    int size() const;
    bool empty() const { return size() == 0; }
    std::vector<int> members() const;

    bool operator==(const CommunityState&) const = default;
};

enum class ObjectiveKind { Q, W, WRho };

struct ObjectiveSpec {
    ObjectiveKind kind = ObjectiveKind::W;
    double rho = 1.0;  // only meaningful for WRho; W is WRho at rho=1

    double effective_rho() const { return kind == ObjectiveKind::WRho ? rho : 1.0; }
    std::string name() const;
};

/// O_S (twice the internal weight) and B_S (boundary weight) of a subset.
struct SubsetWeights {
    double internal = 0.0;  // O_S
    double boundary = 0.0;  // B_S
};
SubsetWeights subset_weights(const Graph& g, const CommunityState& s);

double eval_Q(const Graph& g, const CommunityState& s);
/// Expanded form rho*n*O_S/|S| - O_S - B_S; requires |S| >= 1.
double eval_W_rho(const Graph& g, const CommunityState& s, double rho);
double eval_objective(const Graph& g, const CommunityState& s,
                      const ObjectiveSpec& spec);

/// x^T M_Q x / (2m), computed through the implicit operator.
double quadratic_identity_Q(const Graph& g, const CommunityState& s);
/// n * x^T M_{W^rho} x / (e^T x); requires |S| >= 1.
double fractional_identity_W(const Graph& g, const CommunityState& s, double rho);

/// Implicit Hopfield weight matrix plus uniform threshold.
///
///   Q:     M = A - d d^T/(2m),                      T = 0
///   W^rho: M = rho*A - (d e^T + e d^T)/(2n),        T = -lambda/2
///
/// apply() costs O(m+n); no dense matrix is formed.
class HopfieldOperator {
public:
    static HopfieldOperator modularity(const Graph& g);
    static HopfieldOperator resolution(const Graph& g, double rho, double lambda);

    int dim() const { return g_->node_count(); }
    const Graph& graph() const { return *g_; }
    ObjectiveKind kind() const { return kind_; }
    double rho() const { return rho_; }
    double threshold() const { return threshold_; }
    double lambda() const { return lambda_; }

    void apply(std::span<const double> x, std::span<double> out) const;
    /// Margin of one component given precomputed (Ax)_i, d^T x, e^T x.
    double component(int i, double ax_i, double dx, double ex) const;
    /// x^T M x via one apply pass.
    double quadratic_form(const CommunityState& x) const;

private:
    HopfieldOperator(const Graph& g, ObjectiveKind kind, double rho,
                     double lambda);

    const Graph* g_;
    ObjectiveKind kind_;
    double rho_;
    double lambda_;
    double threshold_;
    double inv_2m_;  // 1/(2m) for Q
    double inv_2n_;  // 1/(2n) for W
};

}  // namespace locex
