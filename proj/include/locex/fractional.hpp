#pragma once

#include <vector>

#include "locex/dynamics.hpp"

namespace locex {

struct QfpConfig {
    double lambda_tolerance = 1e-9;
    int max_outer_iterations = 50;
    SdhnConfig sdhn;
};

struct QfpResult {
    CommunityState state;
    double lambda_star = 0.0;
    double objective = 0.0;
    int outer_iterations = 0;
    std::vector<double> trajectory;  // accepted lambda values, decreasing
    bool converged = false;
    /// No nonzero fixed point was ever reached (trivial-state trap).
    bool failed = false;
};

/// lambda(x) = b(x)/a(x) with b = -x^T M_{W^rho} x and a = e^T x, which
/// equals -W_S^rho(x)/n. Requires x nonzero.
double lambda_of(const Graph& g, double rho, const CommunityState& x);

/// Dinkelbach loop for maximizing W_S^rho: alternate SDHN solves of the
/// parametric subproblem (threshold T = -lambda/2) with lambda updates,
/// accepting an update only when it decreases lambda.
QfpResult qfp_solve(const Graph& g, double rho, const CommunityState& x0,
                    const QfpConfig& cfg = {});

}  // namespace locex
