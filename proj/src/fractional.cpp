#include "locex/fractional.hpp"

#include <cmath>
#include <stdexcept>

namespace locex {

double lambda_of(const Graph& g, double rho, const CommunityState& x) {
    const int sz = x.size();
    if (sz == 0) throw std::invalid_argument("lambda undefined on empty state");
    return -eval_W_rho(g, x, rho) / g.node_count();
}

QfpResult qfp_solve(const Graph& g, double rho, const CommunityState& x0,
                    const QfpConfig& cfg) {
    if (x0.dim() != g.node_count())
        throw std::invalid_argument("state dimension mismatch");
    if (x0.empty()) throw std::invalid_argument("trivial initial state");

    QfpResult res;
    double lambda = lambda_of(g, rho, x0);
    res.trajectory.push_back(lambda);

    CommunityState cur = x0;
    bool have_best = false;

    for (int k = 1; k <= cfg.max_outer_iterations; ++k) {
        res.outer_iterations = k;
        auto op = HopfieldOperator::resolution(g, rho, lambda);
        SdhnOutcome run = sdhn_run(op, cur, cfg.sdhn);
        if (run.state.empty()) break;  // trivial-state trap

        // b(x) = -x^T M x, a(x) = e^T x
        const double a = run.state.size();
        const double b = -op.quadratic_form(run.state);
        const double delta = b - lambda * a;

        const double next_lambda = b / a;
        const bool improves = next_lambda < lambda;

        if (improves || !have_best) {
            res.state = run.state;
            res.lambda_star = improves ? next_lambda : lambda;
            have_best = true;
        }
        if (std::fabs(delta) <= cfg.lambda_tolerance * std::max(1.0, std::fabs(b))) {
            res.lambda_star = next_lambda;
            res.state = run.state;
            res.converged = true;
            break;
        }
        if (!improves) break;  // heuristic subsolver failed to improve
        lambda = next_lambda;
        res.trajectory.push_back(lambda);
        cur = run.state;
    }

    if (!have_best) {
        res.failed = true;
        return res;
    }

    // The heuristic subsolver can stall on a state that was a fixed point
    // at the solve-time lambda but not at its own ratio. Keep settling at
    // the current ratio until the state certifies; every settle strictly
    // lowers lambda, so this terminates and never worsens the objective.
    for (int k = res.outer_iterations; k <= cfg.max_outer_iterations; ++k) {
        const double lam = lambda_of(g, rho, res.state);
        auto op = HopfieldOperator::resolution(g, rho, lam);
        if (is_stable(op, res.state, cfg.sdhn.sign_tolerance)) {
            res.converged = true;
            break;
        }
        CommunityState next = res.state;
        if (!async_settle(op, next, cfg.sdhn) || next.empty()) break;
        const double next_lambda = lambda_of(g, rho, next);
        if (!(next_lambda < lam)) break;
        res.state = std::move(next);
        if (next_lambda < res.trajectory.back())
            res.trajectory.push_back(next_lambda);
        res.outer_iterations = k;
    }

    res.objective = eval_W_rho(g, res.state, rho);
    res.lambda_star = -res.objective / g.node_count();
    return res;
}

}  // namespace locex
