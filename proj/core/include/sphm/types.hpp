#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// House markets: n agents, n resources, one resource each, with initial
// endowments and strict preferences that are single-peaked along a shared
// axis. This header holds the domain types plus validation, normalization
// and cycle application. Everything is immutable after construction and
// safe to share across threads.

namespace sphm {

// Agents and resources are dense 0-based indices inside the library. Every
// user-facing surface (instance files, CLI output, error messages) uses the
// 1-based labels a1..an and r1..rn instead.
using Agent = std::int32_t;
using Resource = std::int32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateResourceInRanking final : public Error {
public:
    using Error::Error;
};

class NotABijection final : public Error {
public:
    using Error::Error;
};

// `closer` sits between the peak and `farther` on the axis, yet the order
// ranks `farther` above `closer`.
class NotSinglePeaked final : public Error {
public:
    NotSinglePeaked(Agent agent, Resource closer, Resource farther);
    Agent agent;
    Resource closer;
    Resource farther;
};

class CycleResourceMismatch final : public Error {
public:
    using Error::Error;
};

class ProfilesIdentical final : public Error {
public:
    using Error::Error;
};

class InstanceTooLarge final : public Error {
public:
    explicit InstanceTooLarge(int n, int cap);
    int n;
    int cap;
};

class ParseError final : public Error {
public:
    ParseError(int line, const std::string& what);
    int line;
};

// The shared left-to-right order over the resources.
class Axis {
public:
    Axis() = default;  // empty; build real axes via the factories
    static Axis identity(int n);
    // `order` lists resources left to right; throws NotABijection otherwise.
    static Axis from_order(std::vector<Resource> order);

    int size() const { return static_cast<int>(order_.size()); }
    Resource at(int position) const { return order_[position]; }
    int position_of(Resource r) const { return position_[r]; }
    const std::vector<Resource>& order() const { return order_; }
    bool is_identity() const;

    bool operator==(const Axis&) const = default;

private:
    std::vector<Resource> order_;         // position -> resource
    std::vector<std::int32_t> position_;  // resource -> position
};

// One agent's strict, complete ranking with its rank table (0 = best) and
// the axis position of the top choice. Rank lookups make every pairwise
// comparison constant-time.
class PreferenceOrder {
public:
    PreferenceOrder() = default;  // empty; build real orders via `over`
    // `ranking` lists resources best to worst over the full resource set of
    // `axis`; throws DuplicateResourceInRanking otherwise.
    static PreferenceOrder over(std::vector<Resource> ranking, const Axis& axis);

    int size() const { return static_cast<int>(ranking_.size()); }
    Resource top() const { return ranking_[0]; }
    Resource second() const;  // rank-1 choice; requires size() >= 2
    int rank_of(Resource r) const { return rank_[r]; }
    bool prefers(Resource a, Resource b) const { return rank_[a] < rank_[b]; }
    int peak() const { return peak_; }  // axis position of top()
    const std::vector<Resource>& ranking() const { return ranking_; }

    bool operator==(const PreferenceOrder&) const = default;

private:
    std::vector<Resource> ranking_;    // rank -> resource
    std::vector<std::int32_t> rank_;   // resource -> rank
    std::int32_t peak_ = 0;
};

// agent -> resource bijection.
class Allocation {
public:
    Allocation() = default;  // empty; build real allocations via the factories
    static Allocation of(std::vector<Resource> assignment);  // throws NotABijection
    static Allocation identity(int n);

    int size() const { return static_cast<int>(assignment_.size()); }
    Resource of_agent(Agent a) const { return assignment_[a]; }
    Agent holder_of(Resource r) const { return holder_[r]; }
    const std::vector<Resource>& assignment() const { return assignment_; }
    bool is_identity() const;

    bool operator==(const Allocation&) const = default;

private:
    std::vector<Resource> assignment_;  // agent -> resource
    std::vector<Agent> holder_;         // resource -> agent
};

// A cyclic trade: members[k] gives up their held resource and receives
// gets[k]. For witnesses of non-optimality every member strictly gains.
struct ImprovingCycle {
    std::vector<Agent> members;
    std::vector<Resource> gets;

    bool empty() const { return members.empty(); }
    bool operator==(const ImprovingCycle&) const = default;
};

// Unvalidated instance data, 1-based, as read from files or built by hand.
struct RawInstance {
    int n = 0;
    std::vector<int> axis;                      // resources left to right
    std::vector<std::vector<int>> preferences;  // per agent, best to worst
    std::vector<int> endowment;                 // resource held by agent 1..n
};

struct NormalizeResult;

// A validated market: axis, one preference order per agent, endowment.
class Instance {
public:
    Instance() = default;  // empty; build real instances via `assemble`
    // Parts must agree in size and peaks must match `axis`; when
    // `require_single_peaked` every order is checked against the axis
    // (throws NotSinglePeaked with the offending agent and pair).
    static Instance assemble(Axis axis, std::vector<PreferenceOrder> profile,
                             Allocation endowment, bool require_single_peaked = true);

    int n() const { return static_cast<int>(profile_.size()); }
    const Axis& axis() const { return axis_; }
    const PreferenceOrder& preference(Agent a) const { return profile_[a]; }
    const std::vector<PreferenceOrder>& profile() const { return profile_; }
    const Allocation& endowment() const { return endowment_; }

    // True when the profile was checked single-peaked w.r.t. the axis.
    // The Crawler and the Diver refuse instances without it.
    bool single_peaked() const { return single_peaked_; }
    // Identity axis and agent i holding resource i.
    bool is_normalized() const;

    bool operator==(const Instance&) const = default;

private:
    // normalize() relabels without changing betweenness, so it may carry the
    // single-peaked flag over instead of rechecking.
    friend NormalizeResult normalize(const Instance& instance);

    Axis axis_;
    std::vector<PreferenceOrder> profile_;
    Allocation endowment_;
    bool single_peaked_ = false;
};

struct ValidateOptions {
    // The Crawler/Diver are only correct on single-peaked input, so this is
    // on by default; the general-domain cycle checker may turn it off.
    bool require_single_peaked = true;
};

// Checks all type invariants on 1-based raw data and builds the Instance.
// Throws DuplicateResourceInRanking, NotABijection or NotSinglePeaked.
Instance validate(const RawInstance& raw, ValidateOptions options = {});

// A normalized instance (identity axis, agent i holds resource i) plus the
// maps back to the caller's labels.
struct NormalizeResult {
    Instance instance;
    std::vector<Agent> agent_to_original;      // normalized index -> original agent
    std::vector<Resource> resource_to_original;  // normalized id -> original resource

    Agent original_agent(Agent normalized) const { return agent_to_original[normalized]; }
    Resource original_resource(Resource normalized) const {
        return resource_to_original[normalized];
    }
    Allocation to_original(const Allocation& normalized) const;
    ImprovingCycle to_original(const ImprovingCycle& normalized) const;
};

// Relabels resources so the axis becomes the identity and reorders agents by
// the axis position of their held resource (a counting sort; the keys are
// distinct positions). Preference semantics and single-peakedness carry over.
NormalizeResult normalize(const Instance& instance);

// Executes the trade described by `cycle` on `allocation`. Members must hold
// exactly the resources the cycle redistributes (throws
// CycleResourceMismatch); non-members keep their assignment.
Allocation apply_cycle(const Allocation& allocation, const ImprovingCycle& cycle);

// 1-based display labels.
std::string agent_label(Agent a);
std::string resource_label(Resource r);

}  // namespace sphm
