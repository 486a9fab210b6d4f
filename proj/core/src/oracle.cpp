#include "sphm/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "sphm/domains.hpp"

namespace sphm {

namespace {

bool dominates_raw(const std::vector<Resource>& prime, const Allocation& pi,
                   const std::vector<PreferenceOrder>& profile) {
    const int n = static_cast<int>(profile.size());
    bool strict = false;
    for (Agent a = 0; a < n; ++a) {
        const Resource now = prime[a];
        const Resource before = pi.of_agent(a);
        if (now == before) continue;
        if (!profile[a].prefers(now, before)) return false;
        strict = true;
    }
    return strict;
}

}  // namespace

bool dominates(const Allocation& pi_prime, const Allocation& pi,
               const std::vector<PreferenceOrder>& profile) {
    return dominates_raw(pi_prime.assignment(), pi, profile);
}

OracleVerdict brute_force_po(const Instance& instance, int cap) {
    const int n = instance.n();
    if (n > cap) throw InstanceTooLarge(n, cap);

    std::vector<Resource> candidate(n);
    std::iota(candidate.begin(), candidate.end(), 0);
    do {
        if (dominates_raw(candidate, instance.endowment(), instance.profile())) {
            DominanceWitness witness{Allocation::of(candidate), {}};
            for (Agent a = 0; a < n; ++a)
                if (candidate[a] != instance.endowment().of_agent(a))
                    witness.strict_improvers.push_back(a);
            return {false, std::move(witness)};
        }
    } while (std::next_permutation(candidate.begin(), candidate.end()));
    return {};
}

ImprovingCycle improving_cycle_from(const DominanceWitness& witness,
                                    const Allocation& endowment) {
    const int n = endowment.size();
    Agent start = -1;
    for (Agent a = 0; a < n && start < 0; ++a)
        if (witness.dominating.of_agent(a) != endowment.of_agent(a)) start = a;
    ImprovingCycle cycle;
    if (start < 0) return cycle;
    // Agents with changed resources decompose into trade cycles; walk the
    // one through `start`. Each member receives the next member's endowment.
    Agent a = start;
    do {
        cycle.members.push_back(a);
        cycle.gets.push_back(witness.dominating.of_agent(a));
        a = endowment.holder_of(witness.dominating.of_agent(a));
    } while (a != start);
    return cycle;
}

IrResult is_individually_rational(const Allocation& pi, const Instance& instance) {
    for (Agent a = 0; a < instance.n(); ++a) {
        const Resource got = pi.of_agent(a);
        const Resource endowed = instance.endowment().of_agent(a);
        if (got != endowed && instance.preference(a).prefers(endowed, got))
            return {false, a};
    }
    return {};
}

SpCheckResult exhaustive_sp_check(
    int n, const std::function<Allocation(const Instance&)>& mechanism, int cap) {
    if (n > cap) throw InstanceTooLarge(n, cap);
    const std::vector<PreferenceOrder> orders = all_sp_orders(n);
    const Axis axis = Axis::identity(n);
    const std::size_t variants = orders.size();

    std::vector<std::size_t> choice(n, 0);  // odometer over profiles
    for (;;) {
        std::vector<PreferenceOrder> profile;
        profile.reserve(n);
        for (int a = 0; a < n; ++a) profile.push_back(orders[choice[a]]);

        std::vector<Resource> endowment(n);
        std::iota(endowment.begin(), endowment.end(), 0);
        do {
            const Instance truth =
                Instance::assemble(axis, profile, Allocation::of(endowment));
            const Allocation honest = mechanism(truth);
            for (Agent a = 0; a < n; ++a) {
                for (std::size_t lie = 0; lie < variants; ++lie) {
                    if (orders[lie] == profile[a]) continue;
                    std::vector<PreferenceOrder> reported = profile;
                    reported[a] = orders[lie];
                    const Instance misreported = Instance::assemble(
                        axis, std::move(reported), Allocation::of(endowment));
                    const Resource obtained = mechanism(misreported).of_agent(a);
                    if (profile[a].prefers(obtained, honest.of_agent(a)))
                        return {false,
                                SpCounterexample{truth, a, orders[lie],
                                                 honest.of_agent(a), obtained}};
                }
            }
        } while (std::next_permutation(endowment.begin(), endowment.end()));

        int digit = 0;
        while (digit < n && ++choice[digit] == variants) choice[digit++] = 0;
        if (digit == n) break;
    }
    return {};
}

}  // namespace sphm
