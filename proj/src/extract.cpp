#include "locex/extract.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace locex {

namespace {

struct TrialOutcome {
    CommunityState state;
    double objective = 0.0;
    double lambda = 0.0;
    bool failed = true;
};

CommunityState initial_state(const Graph& g, std::uint64_t seed) {
    const int n = g.node_count();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double mode = unit(rng);
    if (mode < 0.5 || n < 3 || g.edge_count() == 0) {
        // Log-uniform per-trial density in [1/n, 1/2]: dense states probe
        // large communities while sparse ones start the dynamics next to
        // small dense cores, so one batch covers every resolution scale.
        double density = 0.5;
        if (n > 2) density = 0.5 * std::exp(unit(rng) * std::log(2.0 / n));
        std::bernoulli_distribution bit(density);
        CommunityState s(n);
        for (int i = 0; i < n; ++i) s.bits[i] = bit(rng) ? 1 : 0;
        return s;
    }
    // Neighborhood seed: the closed neighborhood of a random node (or of
    // both endpoints of one of its edges) is already concentrated on a
    // dense region, so the dynamics start next to the stable community
    // containing it instead of having to grow one from scattered bits.
    CommunityState s(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const int u = pick(rng);
    s.bits[u] = 1;
    for (int w : g.neighbors(u)) s.bits[w] = 1;
    auto nb = g.neighbors(u);
    if (mode < 0.75 && !nb.empty()) {
        std::uniform_int_distribution<std::size_t> pe(0, nb.size() - 1);
        const int v = nb[pe(rng)];
        s.bits[v] = 1;
        for (int w : g.neighbors(v)) s.bits[w] = 1;
    }
    return s;
}

TrialOutcome run_trial(const Graph& g, const ObjectiveSpec& spec,
                       const ExtractConfig& cfg, int trial) {
    TrialOutcome out;
    const std::uint64_t trial_seed =
        cfg.seed ^ static_cast<std::uint64_t>(trial);
    CommunityState x0 = initial_state(g, trial_seed);
    QfpConfig qfp = cfg.qfp;
    qfp.sdhn.order_seed = trial_seed * 0x9e3779b97f4a7c15ULL + 1;
    if (spec.kind == ObjectiveKind::Q) {
        auto op = HopfieldOperator::modularity(g);
        SdhnOutcome run = sdhn_run(op, x0, qfp.sdhn);
        if (run.status == SdhnStatus::fixed_point && !run.state.empty()) {
            out.state = std::move(run.state);
            out.objective = eval_Q(g, out.state);
            out.failed = false;
        }
    } else {
        if (x0.empty()) return out;  // trivial initial state counts as failed
        const double rho = spec.effective_rho();
        QfpResult res = qfp_solve(g, rho, x0, qfp);
        if (!res.failed && !res.state.empty()) {
            // Only certified states are listed: a run that ends in a limit
            // cycle at its own ratio (possible because the operator diagonal
            // is negative) counts as a failed trial, not a community.
            auto op = HopfieldOperator::resolution(g, rho, res.lambda_star);
            if (is_stable(op, res.state, qfp.sdhn.sign_tolerance)) {
                out.state = std::move(res.state);
                out.objective = res.objective;
                out.lambda = res.lambda_star;
                out.failed = false;
            }
        }
    }
    return out;
}

int resolve_threads(int configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("LOCEX_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

ExtractionReport extract_one(const Graph& g, const ObjectiveSpec& spec,
                             const ExtractConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const int n = g.node_count();

    std::vector<TrialOutcome> outcomes(cfg.trials);
    const int workers = std::min(resolve_threads(cfg.threads), cfg.trials);
    if (workers <= 1) {
        for (int t = 0; t < cfg.trials; ++t)
            outcomes[t] = run_trial(g, spec, cfg, t);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int t = w; t < cfg.trials; t += workers)
                    outcomes[t] = run_trial(g, spec, cfg, t);
            });
        }
        for (auto& th : pool) th.join();
    }

    ExtractionReport report;
    report.trials = cfg.trials;
    report.spec = spec;
    report.seed = cfg.seed;

    struct Agg {
        CommunityState state;
        double objective = 0.0;
        double lambda = 0.0;
        int count = 0;
    };
    std::map<std::vector<std::uint8_t>, Agg> distinct;
    for (auto& o : outcomes) {
        if (o.failed) {
            ++report.failed_trials;
            continue;
        }
        auto& agg = distinct[o.state.bits];
        if (agg.count == 0) {
            agg.state = o.state;
            agg.objective = o.objective;
            agg.lambda = o.lambda;
        }
        ++agg.count;
    }

    const bool is_w = spec.kind != ObjectiveKind::Q;
    const double rho = spec.effective_rho();
    for (auto& [bits, agg] : distinct) {
        CommunityRecord rec;
        rec.nodes = agg.state.members();
        for (int v : rec.nodes) rec.labels.push_back(g.label(v));
        std::sort(rec.labels.begin(), rec.labels.end());
        rec.objective = agg.objective;
        rec.count = agg.count;
        if (is_w) {
            rec.lambda_star = agg.lambda;
            rec.rho_valid = 2.0 * agg.state.size() / n < rho;
            auto op = HopfieldOperator::resolution(g, rho, agg.lambda);
            rec.stable = is_stable(op, agg.state);
        } else {
            auto op = HopfieldOperator::modularity(g);
            rec.stable = is_stable(op, agg.state);
        }
        report.communities.push_back(std::move(rec));
    }
    std::sort(report.communities.begin(), report.communities.end(),
              [](const CommunityRecord& a, const CommunityRecord& b) {
                  if (a.objective != b.objective) return a.objective > b.objective;
                  if (a.nodes.size() != b.nodes.size())
                      return a.nodes.size() < b.nodes.size();
                  return a.labels < b.labels;
              });
    return report;
}

std::vector<ExtractionReport> extract_sequential(const Graph& g,
                                                 const ObjectiveSpec& spec,
                                                 int k,
                                                 const ExtractConfig& cfg) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<ExtractionReport> reports;
    Graph cur = g;
    for (int round = 0; round < k; ++round) {
        if (cur.node_count() == 0 || cur.total_weight() <= 0.0) break;
        ExtractionReport rep = extract_one(cur, spec, cfg);
        if (rep.communities.empty()) break;
        const auto& top = rep.communities.front();
        std::vector<int> remaining;
        for (int v = 0; v < cur.node_count(); ++v)
            if (!std::binary_search(top.nodes.begin(), top.nodes.end(), v))
                remaining.push_back(v);
        reports.push_back(std::move(rep));
        if (remaining.empty()) break;
        cur = cur.induced_subgraph(remaining).first;
    }
    return reports;
}

SweepResult rho_sweep(const Graph& g, const std::vector<double>& rho_grid,
                      int k, const ExtractConfig& cfg) {
    if (rho_grid.empty()) throw std::invalid_argument("empty rho grid");
    for (std::size_t i = 0; i < rho_grid.size(); ++i) {
        if (!(rho_grid[i] > 0.0 && rho_grid[i] <= 1.0))
            throw std::invalid_argument("rho values must be in (0,1]");
        if (i > 0 && rho_grid[i] <= rho_grid[i - 1])
            throw std::invalid_argument("rho grid must be strictly increasing");
    }
    std::unordered_map<std::string, int> by_label;
    for (int v = 0; v < g.node_count(); ++v) by_label[g.label(v)] = v;

    SweepResult sweep;
    sweep.rho_grid = rho_grid;
    for (double rho : rho_grid) {
        ObjectiveSpec spec{ObjectiveKind::WRho, rho};
        auto reports = extract_sequential(g, spec, k, cfg);
        std::vector<int> membership(g.node_count(), -1);
        for (std::size_t c = 0; c < reports.size(); ++c)
            for (const auto& label : reports[c].communities.front().labels)
                membership[by_label.at(label)] = static_cast<int>(c);
        sweep.membership.push_back(std::move(membership));
        sweep.reports.push_back(std::move(reports));
    }
    return sweep;
}

SignificanceResult significance(const Graph& g,
                                const std::vector<int>& community,
                                const ObjectiveSpec& spec, int nulls,
                                NullModel model, const ExtractConfig& cfg) {
    if (nulls < 1) throw std::invalid_argument("nulls must be >= 1");
    if (community.empty()) throw std::invalid_argument("empty community");
    for (int v : community)
        if (v < 0 || v >= g.node_count())
            throw std::invalid_argument("community node out of range");

    SignificanceResult res;
    res.model = model;
    auto state = CommunityState::from_members(g.node_count(), community);
    res.observed = eval_objective(g, state, spec);

    int at_least = 0;
    for (int r = 0; r < nulls; ++r) {
        const std::uint64_t null_seed =
            cfg.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r + 1));
        Graph null_graph =
            model == NullModel::gnm
                ? gnm_random(g.node_count(), g.edge_count(), null_seed)
                : degree_preserving_rewire(g, 10 * g.edge_count(), null_seed);
        ExtractConfig null_cfg = cfg;
        null_cfg.seed = null_seed;
        ExtractionReport rep = extract_one(null_graph, spec, null_cfg);
        double best = -std::numeric_limits<double>::infinity();
        if (!rep.communities.empty()) best = rep.communities.front().objective;
        res.null_objectives.push_back(best);
        if (best >= res.observed) ++at_least;
    }
    res.p_value = static_cast<double>(at_least + 1) / (nulls + 1);
    return res;
}

}  // namespace locex
