#include "locex/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace locex {

namespace {

// Weight from node v to the current subset (excluding v's self-loop),
// plus the stored self-loop entry separately.
struct FlipDelta {
    double to_subset = 0.0;
    double self_loop = 0.0;
};

FlipDelta flip_delta(const Graph& g, int v,
                     const std::vector<std::uint8_t>& in) {
    FlipDelta d;
    auto nb = g.neighbors(v);
    auto ww = g.weights(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
        if (nb[k] == v)
            d.self_loop = ww[k];
        else if (in[nb[k]])
            d.to_subset += ww[k];
    }
    return d;
}

}  // namespace

OracleResult brute_force_best(const Graph& g, const ObjectiveSpec& spec) {
    const int n = g.node_count();
    if (n > 24) throw std::invalid_argument("oracle limit exceeded (n <= 24)");

    const bool is_q = spec.kind == ObjectiveKind::Q;
    const double rho = spec.effective_rho();
    const double ov = g.total_weight();

    auto value = [&](double os, double vol, int sz) {
        if (is_q) {
            const double f = vol / ov;
            return os / ov - f * f;
        }
        return rho * n * os / sz - vol;  // vol = O_S + B_S
    };

    std::vector<std::uint8_t> in(n, 0);
    double os = 0.0, vol = 0.0;
    int sz = 0;

    OracleResult res;
    res.evaluated_count = std::uint64_t{1} << n;
    bool have = false;
    auto consider = [&]() {
        if (sz == 0 && !is_q) return;
        const double v = (sz == 0) ? 0.0 : value(os, vol, sz);
        if (!have || v > res.best_value) {
            res.best_value = v;
            res.ties.clear();
            have = true;
        }
        if (v == res.best_value) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (in[i]) s.push_back(i);
            res.ties.push_back(std::move(s));
        }
    };

    consider();  // empty set (Q only)
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int v = std::countr_zero(k);  // Gray-code flip position
        const auto d = flip_delta(g, v, in);
        if (in[v]) {
            in[v] = 0;
            os -= 2.0 * d.to_subset + d.self_loop;
            vol -= g.degree(v);
            --sz;
        } else {
            in[v] = 1;
            os += 2.0 * d.to_subset + d.self_loop;
            vol += g.degree(v);
            ++sz;
        }
        consider();
    }
    res.best_subset = res.ties.empty() ? std::vector<int>{} : res.ties.front();
    return res;
}

std::vector<CommunityState> enumerate_stable_states(const HopfieldOperator& op,
                                                    double eps) {
    const int n = op.dim();
    if (n > 20) throw std::invalid_argument("oracle limit exceeded (n <= 20)");
    const Graph& g = op.graph();
    const auto& deg = g.degrees();
    const double t = op.threshold();

    std::vector<std::uint8_t> in(n, 0);
    std::vector<double> ax(n, 0.0);
    double dx = 0.0, ex = 0.0;

    std::vector<CommunityState> stable;
    auto check = [&]() {
        for (int i = 0; i < n; ++i) {
            const std::uint8_t want =
                (op.component(i, ax[i], dx, ex) - t >= -eps) ? 1 : 0;
            if (want != in[i]) return;
        }
        CommunityState s(n);
        s.bits.assign(in.begin(), in.end());
        stable.push_back(std::move(s));
    };

    check();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int v = std::countr_zero(k);
        const double delta = in[v] ? -1.0 : 1.0;
        in[v] = !in[v];
        auto nb = g.neighbors(v);
        auto ww = g.weights(v);
        for (std::size_t j = 0; j < nb.size(); ++j) ax[nb[j]] += delta * ww[j];
        dx += delta * deg[v];
        ex += delta;
        check();
    }
    return stable;
}

}  // namespace locex
