#include "locex/objective.hpp"

#include <numeric>
#include <stdexcept>

namespace locex {

CommunityState CommunityState::from_members(int n,
                                            const std::vector<int>& members) {
    CommunityState s(n);
    for (int v : members) {
        if (v < 0 || v >= n) throw std::invalid_argument("member out of range");
        s.bits[v] = 1;
    }
    return s;
}

int CommunityState::size() const {
    return static_cast<int>(
        std::accumulate(bits.begin(), bits.end(), std::int64_t{0}));
}

std::vector<int> CommunityState::members() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (bits[i]) out.push_back(i);
    return out;
}

std::string ObjectiveSpec::name() const {
    switch (kind) {
        case ObjectiveKind::Q: return "Q";
        case ObjectiveKind::W: return "W";
        case ObjectiveKind::WRho: return "W_rho";
    }
    return "?";
}

SubsetWeights subset_weights(const Graph& g, const CommunityState& s) {
    if (s.dim() != g.node_count())
        throw std::invalid_argument("state dimension mismatch");
    SubsetWeights w;
    for (int i = 0; i < g.node_count(); ++i) {
        if (!s.bits[i]) continue;
        auto nb = g.neighbors(i);
        auto ww = g.weights(i);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            if (s.bits[nb[k]])
                w.internal += ww[k];
            else
                w.boundary += ww[k];
        }
    }
    return w;
}

double eval_Q(const Graph& g, const CommunityState& s) {
    const auto [os, bs] = subset_weights(g, s);
    const double ov = g.total_weight();
    const double vol = (os + bs) / ov;
    return os / ov - vol * vol;
}

double eval_W_rho(const Graph& g, const CommunityState& s, double rho) {
    const int sz = s.size();
    if (sz == 0) throw std::invalid_argument("undefined on empty set");
    const auto [os, bs] = subset_weights(g, s);
    return rho * g.node_count() * os / sz - os - bs;
}

double eval_objective(const Graph& g, const CommunityState& s,
                      const ObjectiveSpec& spec) {
    if (spec.kind == ObjectiveKind::Q) return eval_Q(g, s);
    return eval_W_rho(g, s, spec.effective_rho());
}

double quadratic_identity_Q(const Graph& g, const CommunityState& s) {
    auto op = HopfieldOperator::modularity(g);
    return op.quadratic_form(s) / g.total_weight();
}

double fractional_identity_W(const Graph& g, const CommunityState& s,
                             double rho) {
    const int sz = s.size();
    if (sz == 0) throw std::invalid_argument("a(x)=0");
    auto op = HopfieldOperator::resolution(g, rho, 0.0);
    return g.node_count() * op.quadratic_form(s) / sz;
}

HopfieldOperator::HopfieldOperator(const Graph& g, ObjectiveKind kind,
                                   double rho, double lambda)
    : g_(&g),
      kind_(kind),
      rho_(rho),
      lambda_(lambda),
      threshold_(kind == ObjectiveKind::Q ? 0.0 : -lambda / 2.0),
      inv_2m_(1.0 / g.total_weight()),
      inv_2n_(1.0 / (2.0 * g.node_count())) {}

HopfieldOperator HopfieldOperator::modularity(const Graph& g) {
    return HopfieldOperator(g, ObjectiveKind::Q, 1.0, 0.0);
}

HopfieldOperator HopfieldOperator::resolution(const Graph& g, double rho,
                                              double lambda) {
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("rho must be in (0,1]");
    return HopfieldOperator(g, ObjectiveKind::WRho, rho, lambda);
}

void HopfieldOperator::apply(std::span<const double> x,
                             std::span<double> out) const {
    const int n = dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(out.size()) != n)
        throw std::invalid_argument("vector length mismatch");
    g_->multiply(x, out);
    const auto& d = g_->degrees();
    double dx = 0.0, ex = 0.0;
    for (int i = 0; i < n; ++i) {
        dx += d[i] * x[i];
        ex += x[i];
    }
    if (kind_ == ObjectiveKind::Q) {
        const double c = dx * inv_2m_;
        for (int i = 0; i < n; ++i) out[i] -= d[i] * c;
    } else {
        for (int i = 0; i < n; ++i)
            out[i] = rho_ * out[i] - (d[i] * ex + dx) * inv_2n_;
    }
}

double HopfieldOperator::component(int i, double ax_i, double dx,
                                   double ex) const {
    const auto& d = g_->degrees();
    if (kind_ == ObjectiveKind::Q) return ax_i - d[i] * dx * inv_2m_;
    return rho_ * ax_i - (d[i] * ex + dx) * inv_2n_;
}

double HopfieldOperator::quadratic_form(const CommunityState& x) const {
    const int n = dim();
    std::vector<double> xv(n), mx(n);
    for (int i = 0; i < n; ++i) xv[i] = x.bits[i];
    apply(xv, mx);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += xv[i] * mx[i];
    return acc;
}

}  // namespace locex
