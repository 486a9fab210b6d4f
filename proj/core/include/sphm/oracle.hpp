#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sphm/types.hpp"

// Brute-force ground truth at small n: Pareto-dominance by definition,
// Pareto-optimality by enumerating all n! allocations, individual
// rationality, and an exhaustive strategy-proofness search. Everything here
// is deliberately independent of the mechanisms' logic so it can referee
// them.

namespace sphm {

// Every agent weakly prefers her pi_prime resource (equal counts) and at
// least one strictly prefers it.
bool dominates(const Allocation& pi_prime, const Allocation& pi,
               const std::vector<PreferenceOrder>& profile);

struct DominanceWitness {
    Allocation dominating;
    std::vector<Agent> strict_improvers;  // non-empty
};

struct OracleVerdict {
    bool po = true;
    std::optional<DominanceWitness> witness;  // engaged exactly when not PO
};

// Enumerates allocations in lexicographic order and returns the first one
// dominating the endowment, if any. Throws InstanceTooLarge above `cap`
// agents (default 8: at most 8! = 40320 candidates).
OracleVerdict brute_force_po(const Instance& instance, int cap = 8);

// The first trade cycle inside a dominating allocation: the lowest-indexed
// agent whose resource changed, followed around the permutation
// endowment -> dominating. Every member strictly improves.
ImprovingCycle improving_cycle_from(const DominanceWitness& witness,
                                    const Allocation& endowment);

struct IrResult {
    bool individually_rational = true;
    Agent violator = -1;  // first agent strictly preferring her endowment

    explicit operator bool() const { return individually_rational; }
};

// True when every agent weakly prefers `pi` over the endowment.
IrResult is_individually_rational(const Allocation& pi, const Instance& instance);

// One profitable lie found by the exhaustive search: in `instance`,
// `manipulator` truthfully obtains `truthful_resource` but reporting
// `misreport` (single-peaked w.r.t. the same axis) obtains
// `misreport_resource`, which she truly strictly prefers.
struct SpCounterexample {
    Instance instance;
    Agent manipulator = -1;
    PreferenceOrder misreport;
    Resource truthful_resource = -1;
    Resource misreport_resource = -1;
};

struct SpCheckResult {
    bool strategy_proof = true;
    std::optional<SpCounterexample> counterexample;
};

// Tries every single-peaked profile, every endowment, every agent and every
// single-peaked misreport for markets of size n. The search space is
// (2^(n-1))^n profiles x n! endowments x n * (2^(n-1) - 1) lies, so n is
// capped (default 4). `mechanism` must return the full allocation.
SpCheckResult exhaustive_sp_check(
    int n, const std::function<Allocation(const Instance&)>& mechanism, int cap = 4);

}  // namespace sphm
