#include "sphm/types.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "sphm/domains.hpp"

namespace sphm {

namespace {

// Verifies `values` is a permutation of 0..n-1 and returns the inverse map.
std::vector<std::int32_t> invert_permutation(const std::vector<std::int32_t>& values,
                                             const char* what) {
    const auto n = static_cast<std::int32_t>(values.size());
    std::vector<std::int32_t> inverse(values.size(), -1);
    for (std::int32_t i = 0; i < n; ++i) {
        const auto v = values[i];
        if (v < 0 || v >= n || inverse[v] != -1)
            throw NotABijection(std::string(what) + " is not a permutation of the resources");
        inverse[v] = i;
    }
    return inverse;
}

}  // namespace

NotSinglePeaked::NotSinglePeaked(Agent agent_, Resource closer_, Resource farther_)
    : Error("agent " + agent_label(agent_) + " is not single-peaked: prefers " +
            resource_label(farther_) + " over " + resource_label(closer_) +
            " although " + resource_label(closer_) + " lies between its peak and " +
            resource_label(farther_)),
      agent(agent_),
      closer(closer_),
      farther(farther_) {}

InstanceTooLarge::InstanceTooLarge(int n_, int cap_)
    : Error("instance has " + std::to_string(n_) + " agents; this operation supports at most " +
            std::to_string(cap_)),
      n(n_),
      cap(cap_) {}

ParseError::ParseError(int line_, const std::string& what_)
    : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}

Axis Axis::identity(int n) {
    Axis axis;
    axis.order_.resize(n);
    axis.position_.resize(n);
    std::iota(axis.order_.begin(), axis.order_.end(), 0);
    std::iota(axis.position_.begin(), axis.position_.end(), 0);
    return axis;
}

Axis Axis::from_order(std::vector<Resource> order) {
    Axis axis;
    axis.position_ = invert_permutation(order, "axis");
    axis.order_ = std::move(order);
    return axis;
}

bool Axis::is_identity() const {
    for (int p = 0; p < size(); ++p)
        if (order_[p] != p) return false;
    return true;
}

PreferenceOrder PreferenceOrder::over(std::vector<Resource> ranking, const Axis& axis) {
    if (static_cast<int>(ranking.size()) != axis.size())
        throw DuplicateResourceInRanking("ranking length does not match the resource count");
    PreferenceOrder order;
    const auto n = static_cast<std::int32_t>(ranking.size());
    order.rank_.assign(ranking.size(), -1);
    for (std::int32_t rank = 0; rank < n; ++rank) {
        const auto r = ranking[rank];
        if (r < 0 || r >= n || order.rank_[r] != -1)
            throw DuplicateResourceInRanking(
                "ranking is not a strict order over all resources");
        order.rank_[r] = rank;
    }
    order.ranking_ = std::move(ranking);
    order.peak_ = axis.position_of(order.ranking_[0]);
    return order;
}

Resource PreferenceOrder::second() const {
    return ranking_.at(1);
}

Allocation Allocation::of(std::vector<Resource> assignment) {
    Allocation allocation;
    allocation.holder_ = invert_permutation(assignment, "allocation");
    allocation.assignment_ = std::move(assignment);
    return allocation;
}

Allocation Allocation::identity(int n) {
    std::vector<Resource> assignment(n);
    std::iota(assignment.begin(), assignment.end(), 0);
    return of(std::move(assignment));
}

bool Allocation::is_identity() const {
    for (Agent a = 0; a < size(); ++a)
        if (assignment_[a] != a) return false;
    return true;
}

Instance Instance::assemble(Axis axis, std::vector<PreferenceOrder> profile,
                            Allocation endowment, bool require_single_peaked) {
    const int n = axis.size();
    if (static_cast<int>(profile.size()) != n || endowment.size() != n)
        throw NotABijection("axis, profile and endowment sizes disagree");
    for (Agent a = 0; a < n; ++a) {
        if (profile[a].size() != n)
            throw DuplicateResourceInRanking("preference order of agent " + agent_label(a) +
                                             " has the wrong length");
        if (profile[a].peak() != axis.position_of(profile[a].top()))
            throw NotABijection("preference order of agent " + agent_label(a) +
                                " was built against a different axis");
        if (require_single_peaked) {
            const SinglePeakedResult check = is_single_peaked(profile[a], axis);
            if (!check) throw NotSinglePeaked(a, check.closer, check.farther);
        }
    }
    Instance instance;
    instance.axis_ = std::move(axis);
    instance.profile_ = std::move(profile);
    instance.endowment_ = std::move(endowment);
    instance.single_peaked_ = require_single_peaked;
    return instance;
}

bool Instance::is_normalized() const {
    return axis_.is_identity() && endowment_.is_identity();
}

namespace {

std::vector<std::int32_t> to_zero_based(const std::vector<int>& values, int n,
                                        const char* what) {
    std::vector<std::int32_t> result;
    result.reserve(values.size());
    for (int v : values) {
        if (v < 1 || v > n)
            throw NotABijection(std::string(what) + ": label " + std::to_string(v) +
                                " is out of range 1.." + std::to_string(n));
        result.push_back(v - 1);
    }
    return result;
}

}  // namespace

Instance validate(const RawInstance& raw, ValidateOptions options) {
    if (raw.n <= 0) throw NotABijection("instance must have at least one agent");
    const int n = raw.n;
    if (static_cast<int>(raw.axis.size()) != n)
        throw NotABijection("axis must list all " + std::to_string(n) + " resources");
    if (static_cast<int>(raw.preferences.size()) != n)
        throw NotABijection("expected one preference order per agent");
    if (static_cast<int>(raw.endowment.size()) != n)
        throw NotABijection("endowment must assign a resource to every agent");

    Axis axis = Axis::from_order(to_zero_based(raw.axis, n, "axis"));
    std::vector<PreferenceOrder> profile;
    profile.reserve(n);
    for (Agent a = 0; a < n; ++a) {
        if (static_cast<int>(raw.preferences[a].size()) != n)
            throw DuplicateResourceInRanking("preference order of agent " + agent_label(a) +
                                             " must list all resources");
        std::vector<Resource> ranking;
        ranking.reserve(n);
        for (int v : raw.preferences[a]) {
            if (v < 1 || v > n)
                throw DuplicateResourceInRanking("preference order of agent " + agent_label(a) +
                                                 ": label " + std::to_string(v) +
                                                 " is out of range 1.." + std::to_string(n));
            ranking.push_back(v - 1);
        }
        try {
            profile.push_back(PreferenceOrder::over(std::move(ranking), axis));
        } catch (const DuplicateResourceInRanking&) {
            throw DuplicateResourceInRanking("preference order of agent " + agent_label(a) +
                                             " is not a strict order over all resources");
        }
    }
    Allocation endowment = Allocation::of(to_zero_based(raw.endowment, n, "endowment"));
    return Instance::assemble(std::move(axis), std::move(profile), std::move(endowment),
                              options.require_single_peaked);
}

Allocation NormalizeResult::to_original(const Allocation& normalized) const {
    const int n = normalized.size();
    std::vector<Resource> assignment(n);
    for (Agent a = 0; a < n; ++a)
        assignment[agent_to_original[a]] = resource_to_original[normalized.of_agent(a)];
    return Allocation::of(std::move(assignment));
}

ImprovingCycle NormalizeResult::to_original(const ImprovingCycle& normalized) const {
    ImprovingCycle cycle;
    cycle.members.reserve(normalized.members.size());
    cycle.gets.reserve(normalized.gets.size());
    for (Agent a : normalized.members) cycle.members.push_back(agent_to_original[a]);
    for (Resource r : normalized.gets) cycle.gets.push_back(resource_to_original[r]);
    return cycle;
}

NormalizeResult normalize(const Instance& instance) {
    const int n = instance.n();
    // New resource id = old axis position, so the new axis is the identity.
    // New agent index = axis position of the resource it holds, so agent i
    // holds resource i afterwards.
    NormalizeResult result;
    result.resource_to_original.resize(n);
    result.agent_to_original.resize(n);
    for (int p = 0; p < n; ++p) result.resource_to_original[p] = instance.axis().at(p);
    for (Agent a = 0; a < n; ++a) {
        const int p = instance.axis().position_of(instance.endowment().of_agent(a));
        result.agent_to_original[p] = a;
    }

    const Axis axis = Axis::identity(n);
    std::vector<PreferenceOrder> profile;
    profile.reserve(n);
    for (Agent a = 0; a < n; ++a) {
        const PreferenceOrder& original = instance.preference(result.agent_to_original[a]);
        std::vector<Resource> ranking;
        ranking.reserve(n);
        for (Resource r : original.ranking())
            ranking.push_back(instance.axis().position_of(r));
        profile.push_back(PreferenceOrder::over(std::move(ranking), axis));
    }
    // Relabeling preserves betweenness, so single-peakedness carries over
    // without a recheck.
    result.instance =
        Instance::assemble(axis, std::move(profile), Allocation::identity(n), false);
    result.instance.single_peaked_ = instance.single_peaked();
    return result;
}

Allocation apply_cycle(const Allocation& allocation, const ImprovingCycle& cycle) {
    if (cycle.members.size() != cycle.gets.size())
        throw CycleResourceMismatch("cycle lists " + std::to_string(cycle.members.size()) +
                                    " members but " + std::to_string(cycle.gets.size()) +
                                    " resources");
    std::vector<Resource> assignment = allocation.assignment();
    const auto k = cycle.members.size();
    // The resources received must be exactly the resources the members held.
    std::vector<Resource> held;
    held.reserve(k);
    for (Agent a : cycle.members) {
        if (a < 0 || a >= allocation.size())
            throw CycleResourceMismatch("cycle member out of range");
        held.push_back(allocation.of_agent(a));
    }
    std::vector<Resource> sorted_held = held;
    std::vector<Resource> sorted_gets = cycle.gets;
    std::sort(sorted_held.begin(), sorted_held.end());
    std::sort(sorted_gets.begin(), sorted_gets.end());
    if (sorted_held != sorted_gets)
        throw CycleResourceMismatch(
            "cycle redistributes resources its members do not hold");
    for (std::size_t i = 0; i < k; ++i) assignment[cycle.members[i]] = cycle.gets[i];
    return Allocation::of(std::move(assignment));
}

std::string agent_label(Agent a) {
    return "a" + std::to_string(a + 1);
}

std::string resource_label(Resource r) {
    return "r" + std::to_string(r + 1);
}

}  // namespace sphm
