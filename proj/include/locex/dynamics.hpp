#pragma once

#include <cstdint>
#include <span>

#include "locex/objective.hpp"

namespace locex {

enum class SdhnStatus { fixed_point, two_cycle, max_iter };
enum class CycleHandling { report, async_break };

struct SdhnConfig {
    int max_iterations = 100;
    double sign_tolerance = 1e-12;
    CycleHandling cycle_handling = CycleHandling::async_break;
    /// Seeds the node visit order of asynchronous sweeps; the order is
    /// reshuffled every sweep so it is a pure function of this seed.
    std::uint64_t order_seed = 0;
};

struct SdhnOutcome {
    SdhnStatus status = SdhnStatus::max_iter;
    CommunityState state;
    int iterations = 0;
    double energy = 0.0;
};

/// out_i = 1 iff v_i - t_i >= -eps, else 0.
CommunityState sgn_threshold(std::span<const double> v,
                             std::span<const double> t, double eps = 1e-12);

/// Synchronous iteration x(t+1) = sgn(Mx(t) - T) until a fixed point,
/// a 2-cycle, or the iteration cap. Under async_break, a detected
/// 2-cycle is resolved by sequential single-component updates starting
/// from the lower-energy cycle member.
SdhnOutcome sdhn_run(const HopfieldOperator& op, const CommunityState& x0,
                     const SdhnConfig& cfg = {});

bool is_stable(const HopfieldOperator& op, const CommunityState& x,
               double eps = 1e-12);

/// Sequential single-component updates (visit order seeded by
/// cfg.order_seed) until a full sweep makes no flip or the sweep cap
/// is hit. Each flip is O(deg) and never increases the energy, so the
/// settled state is nonempty whenever a strictly improving flip
/// occurred. Returns true iff a quiescent sweep was reached.
bool async_settle(const HopfieldOperator& op, CommunityState& x,
                  const SdhnConfig& cfg = {});

/// E(x) = -x^T M x / 2 + T^T x.
double energy(const HopfieldOperator& op, const CommunityState& x);

}  // namespace locex
