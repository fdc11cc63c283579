#pragma once

// Exact 0-1 optimization by branch-and-bound over the LP relaxation.
// Bound strengthening: clique cuts separated from the model's conflict graph,
// plus fixing propagation on all-ones constraints.

#include <optional>

#include "combip/ilp.hpp"
#include "combip/relax.hpp"

namespace combip {

struct SolveConfig {
    double time_limit_sec = 0;   // 0 = unlimited
    long long node_limit = 0;    // 0 = unlimited
    int threads = 1;
    int branching_rule = 0;      // 0 = most-fractional, ties by lowest index
    std::optional<Assignment> warm_start;  // must be feasible (checked)
    Fixings pre_fixed;           // caller-imposed restrictions; flags the outcome
};

// Exact solve. status OPTIMAL means the returned objective is the true
// optimum of the (possibly pre-fixed) model.
IpOutcome solve_ip(const IlpModel& model, const SolveConfig& cfg = {});

struct FeasibilityResult {
    bool achievable = false;               // objective >= target reachable
    std::optional<Assignment> witness;     // present when achievable
    IpOutcome outcome;                     // underlying search details
};

// Decides whether the objective can reach `target` (>= for MAXIMIZE models,
// <= for MINIMIZE); early-exits on the first witness. If a node/time limit
// stops the search first, `achievable` is false and outcome.status records
// the limit.
FeasibilityResult solve_feasibility(const IlpModel& model, long long target,
                                    const SolveConfig& cfg = {});

}  // namespace combip
