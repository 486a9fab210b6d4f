#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <sphm/domains.hpp>
#include <sphm/types.hpp>

namespace fixtures {

// Five-agent market used throughout: the crawler returns the identity
// allocation on it, while the endowment itself is not Pareto-optimal.
inline sphm::Instance example1() {
    sphm::RawInstance raw;
    raw.n = 5;
    raw.axis = {1, 2, 3, 4, 5};
    raw.preferences = {
        {1, 2, 3, 4, 5},
        {5, 4, 3, 2, 1},
        {3, 2, 1, 4, 5},
        {4, 3, 2, 1, 5},
        {4, 5, 3, 2, 1},
    };
    raw.endowment = {5, 1, 3, 4, 2};
    return sphm::validate(raw);
}

inline std::string example1_text() {
    return "n 5\n"
           "axis 1 2 3 4 5\n"
           "pref 1: 1 2 3 4 5\n"
           "pref 2: 5 4 3 2 1\n"
           "pref 3: 3 2 1 4 5\n"
           "pref 4: 4 3 2 1 5\n"
           "pref 5: 4 5 3 2 1\n"
           "endow 5 1 3 4 2\n";
}

// Same profile with a reshuffled endowment that is already Pareto-optimal.
inline sphm::Instance example1_po_variant() {
    sphm::RawInstance raw;
    raw.n = 5;
    raw.axis = {1, 2, 3, 4, 5};
    raw.preferences = {
        {1, 2, 3, 4, 5},
        {5, 4, 3, 2, 1},
        {3, 2, 1, 4, 5},
        {4, 3, 2, 1, 5},
        {4, 5, 3, 2, 1},
    };
    raw.endowment = {1, 5, 2, 4, 3};
    return sphm::validate(raw);
}

// Agent i holds resource i and peaks on it (ranking descends rightward
// from the peak, then leftward).  Every mechanism must keep it fixed.
inline sphm::Instance everyone_at_peak(int n) {
    sphm::RawInstance raw;
    raw.n = n;
    for (int r = 1; r <= n; ++r) raw.axis.push_back(r);
    for (int a = 0; a < n; ++a) {
        std::vector<int> ranking;
        for (int r = a + 1; r <= n; ++r) ranking.push_back(r);
        for (int r = a; r >= 1; --r) ranking.push_back(r);
        raw.preferences.push_back(ranking);
        raw.endowment.push_back(a + 1);
    }
    return sphm::validate(raw);
}

// Same axis reversed, same rankings, same endowment.  Single-peakedness
// is symmetric under reversal, so this is always a valid instance.
inline sphm::Instance mirrored(const sphm::Instance& instance) {
    const int n = instance.n();
    std::vector<sphm::Resource> order;
    for (int pos = n - 1; pos >= 0; --pos) order.push_back(instance.axis().at(pos));
    const sphm::Axis axis = sphm::Axis::from_order(order);

    std::vector<sphm::PreferenceOrder> profile;
    for (sphm::Agent a = 0; a < n; ++a) {
        profile.push_back(sphm::PreferenceOrder::over(instance.preference(a).ranking(), axis));
    }

    std::vector<sphm::Resource> held;
    for (sphm::Agent a = 0; a < n; ++a) held.push_back(instance.endowment().of_agent(a));
    return sphm::Instance::assemble(axis, profile, sphm::Allocation::of(held), true);
}

// Every single-peaked profile crossed with every endowment, for small n.
inline std::vector<sphm::Instance> exhaustive_instances(int n) {
    const std::vector<sphm::PreferenceOrder> orders = sphm::all_sp_orders(n);
    const sphm::Axis axis = sphm::Axis::identity(n);

    std::vector<std::vector<int>> profiles;
    std::vector<int> pick(n, 0);
    while (true) {
        profiles.push_back(pick);
        int slot = n - 1;
        while (slot >= 0 && pick[slot] + 1 == static_cast<int>(orders.size())) {
            pick[slot] = 0;
            --slot;
        }
        if (slot < 0) break;
        ++pick[slot];
    }

    std::vector<std::vector<sphm::Resource>> endowments;
    std::vector<sphm::Resource> held;
    for (int r = 0; r < n; ++r) held.push_back(r);
    do {
        endowments.push_back(held);
    } while (std::next_permutation(held.begin(), held.end()));

    std::vector<sphm::Instance> out;
    for (const std::vector<int>& choice : profiles) {
        std::vector<sphm::PreferenceOrder> profile;
        for (int a = 0; a < n; ++a) profile.push_back(orders[choice[a]]);
        for (const std::vector<sphm::Resource>& endow : endowments) {
            out.push_back(sphm::Instance::assemble(axis, profile, sphm::Allocation::of(endow), true));
        }
    }
    return out;
}

inline std::vector<sphm::Instance> random_corpus(int n, int count, std::uint64_t seed_base) {
    std::vector<sphm::Instance> out;
    for (int k = 0; k < count; ++k) out.push_back(sphm::gen_random_sp(n, seed_base + k));
    return out;
}

}  // namespace fixtures
