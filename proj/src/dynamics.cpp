#include "locex/dynamics.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace locex {

CommunityState sgn_threshold(std::span<const double> v,
                             std::span<const double> t, double eps) {
    if (v.size() != t.size())
        throw std::invalid_argument("vector length mismatch");
    CommunityState out(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        out.bits[i] = (v[i] - t[i] >= -eps) ? 1 : 0;
    return out;
}

double energy(const HopfieldOperator& op, const CommunityState& x) {
    return -0.5 * op.quadratic_form(x) + op.threshold() * x.size();
}

bool is_stable(const HopfieldOperator& op, const CommunityState& x,
               double eps) {
    const int n = op.dim();
    if (x.dim() != n) throw std::invalid_argument("state dimension mismatch");
    std::vector<double> xv(n), mv(n);
    for (int i = 0; i < n; ++i) xv[i] = x.bits[i];
    op.apply(xv, mv);
    const double t = op.threshold();
    for (int i = 0; i < n; ++i) {
        const std::uint8_t want = (mv[i] - t >= -eps) ? 1 : 0;
        if (want != x.bits[i]) return false;
    }
    return true;
}

bool async_settle(const HopfieldOperator& op, CommunityState& x,
                  const SdhnConfig& cfg) {
    const Graph& g = op.graph();
    const int n = g.node_count();
    if (x.dim() != n) throw std::invalid_argument("state dimension mismatch");
    std::vector<double> xv(n), ax(n);
    for (int i = 0; i < n; ++i) xv[i] = x.bits[i];
    g.multiply(xv, ax);
    double dx = 0.0, ex = 0.0;
    const auto& d = g.degrees();
    for (int i = 0; i < n; ++i) {
        dx += d[i] * xv[i];
        ex += xv[i];
    }
    const double t = op.threshold();
    std::mt19937_64 order_rng(cfg.order_seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int sweep = 0; sweep < cfg.max_iterations; ++sweep) {
        std::shuffle(order.begin(), order.end(), order_rng);
        bool flipped = false;
        for (int i : order) {
            const std::uint8_t want =
                (op.component(i, ax[i], dx, ex) - t >= -cfg.sign_tolerance) ? 1
                                                                            : 0;
            if (want == x.bits[i]) continue;
            const double delta = want ? 1.0 : -1.0;
            x.bits[i] = want;
            auto nb = g.neighbors(i);
            auto ww = g.weights(i);
            for (std::size_t k = 0; k < nb.size(); ++k)
                ax[nb[k]] += delta * ww[k];
            dx += delta * d[i];
            ex += delta;
            flipped = true;
        }
        if (!flipped) return true;
    }
    return false;
}

SdhnOutcome sdhn_run(const HopfieldOperator& op, const CommunityState& x0,
                     const SdhnConfig& cfg) {
    const int n = op.dim();
    if (x0.dim() != n) throw std::invalid_argument("state dimension mismatch");
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("max_iterations must be >= 1");

    const double t = op.threshold();
    CommunityState prev = x0, cur = x0;
    std::vector<double> xv(n), mv(n);

    SdhnOutcome out;
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        for (int i = 0; i < n; ++i) xv[i] = cur.bits[i];
        op.apply(xv, mv);
        CommunityState next(n);
        for (int i = 0; i < n; ++i)
            next.bits[i] = (mv[i] - t >= -cfg.sign_tolerance) ? 1 : 0;
        out.iterations = it;
        if (next == cur) {
            out.status = SdhnStatus::fixed_point;
            out.state = std::move(next);
            out.energy = energy(op, out.state);
            return out;
        }
        if (it >= 2 && next == prev) {
            // 2-cycle between prev and cur; keep the lower-energy member.
            const double ep = energy(op, prev), ec = energy(op, cur);
            CommunityState member = (ep <= ec) ? prev : cur;
            if (cfg.cycle_handling == CycleHandling::async_break) {
                if (async_settle(op, member, cfg)) {
                    out.status = SdhnStatus::fixed_point;
                } else {
                    out.status = SdhnStatus::max_iter;
                }
            } else {
                out.status = SdhnStatus::two_cycle;
            }
            out.state = std::move(member);
            out.energy = energy(op, out.state);
            return out;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    out.status = SdhnStatus::max_iter;
    out.state = std::move(cur);
    out.energy = energy(op, out.state);
    return out;
}

}  // namespace locex
