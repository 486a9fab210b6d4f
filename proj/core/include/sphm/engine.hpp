#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sphm/transcript.hpp"
#include "sphm/types.hpp"

// Algorithm cores for the two screening protocols, templated over the market
// representation so the scaling harness can run them on implicit profiles
// (no O(n^2) rank tables) and count bits without storing events.
//
// A view models a market in normalized form: the axis is the identity
// (resource id = axis position) and agent i initially holds resource i.
// `peak(a)` is the id of a's most preferred resource and `prefers(a, r, s)`
// is a's strict comparison. Use sphm::normalize to bring an Instance into
// this form first.

namespace sphm {

template <typename V>
concept PreferenceView = requires(const V& v, Agent a, Resource r, Resource s) {
    { v.size() } -> std::convertible_to<int>;
    { v.peak(a) } -> std::convertible_to<int>;
    { v.prefers(a, r, s) } -> std::convertible_to<bool>;
};

template <typename S>
concept TranscriptSink = requires(S& s, QueryKind k, Agent a, Answer ans, Resource r) {
    s.record(k, a, ans, r);
};

// Appends events to a Transcript.
class RecordingSink {
public:
    explicit RecordingSink(Transcript& transcript) : transcript_(&transcript) {}
    void record(QueryKind kind, Agent agent, Answer answer, Resource designated = -1) {
        transcript_->record(kind, agent, answer, designated);
    }

private:
    Transcript* transcript_;
};

// Keeps the exact bit total only; use at sizes where storing every event
// would dominate memory.
class CountingSink {
public:
    explicit CountingSink(int n) : n_(n) {}
    void record(QueryKind kind, Agent /*agent*/, Answer answer, Resource /*designated*/ = -1) {
        total_bits_ += answer_cost(kind, answer, n_);
        ++events_;
    }
    std::int64_t total_bits() const { return total_bits_; }
    std::int64_t events() const { return events_; }

private:
    int n_ = 0;
    std::int64_t total_bits_ = 0;
    std::int64_t events_ = 0;
};

// Normalized-form access to a validated Instance.
class DenseView {
public:
    explicit DenseView(const Instance& normalized) : instance_(&normalized) {}
    int size() const { return instance_->n(); }
    int peak(Agent a) const { return instance_->preference(a).peak(); }
    bool prefers(Agent a, Resource r, Resource s) const {
        return instance_->preference(a).prefers(r, s);
    }

private:
    const Instance* instance_;
};

struct EnginePick {
    Agent agent = 0;
    Resource resource = 0;
    int pass = 0;  // 1-based screening-pass index

    bool operator==(const EnginePick&) const = default;
};

// Repeated left-to-right screening. Each pass walks the remaining agents in
// axis order; an agent passes while her top choice among the remaining
// resources lies strictly to her right, which under single-peakedness holds
// exactly when she prefers the next remaining resource over her current one.
// The first agent who does not pass designates her top among the remaining;
// she leaves with it and every resource between the taken one and hers moves
// one remaining agent to the left (realized by deleting the agent and the
// resource from two parallel position-sorted lists). Screening restarts until
// everyone picked. Returns the n picks in pick order.
template <PreferenceView V, TranscriptSink S>
std::vector<EnginePick> crawl(const V& view, S& sink) {
    const int n = view.size();
    std::vector<Agent> agents(n);
    std::vector<Resource> resources(n);
    std::iota(agents.begin(), agents.end(), 0);
    std::iota(resources.begin(), resources.end(), 0);

    std::vector<EnginePick> picks;
    picks.reserve(n);
    for (int pass = 1; !agents.empty(); ++pass) {
        const int m = static_cast<int>(agents.size());
        for (int k = 0; k < m; ++k) {
            const Agent a = agents[k];
            if (k + 1 < m && view.prefers(a, resources[k + 1], resources[k])) {
                sink.record(QueryKind::CrawlerScreen, a, Answer::Pass, -1);
                continue;
            }
            // Her top among the remaining is at or left of her position:
            // walk left while the next resource is better.
            int j = k;
            while (j > 0 && view.prefers(a, resources[j - 1], resources[j])) --j;
            sink.record(QueryKind::CrawlerScreen, a, Answer::Designate, resources[j]);
            picks.push_back({a, resources[j], pass});
            agents.erase(agents.begin() + k);
            resources.erase(resources.begin() + j);
            break;
        }
    }
    return picks;
}

// Verdict of a dive in normalized form. When not Pareto-optimal, `members`
// (ascending positions, the designating agent last) and `gets` describe an
// improving trade cycle: members[k] receives gets[k].
struct DiveOutcome {
    bool po = true;
    std::vector<Agent> members;
    std::vector<Resource> gets;
};

// Called after each screening step fully resolves (including the backtrack
// questions a pick-current answer triggers): `next` is the next position to
// screen (n when done) and `divers` the positions currently diving. At these
// settled points every diver strictly prefers the nearest still-available
// resource to her right over her own.
struct NoAudit {
    void operator()(int /*next*/, const std::vector<int>& /*divers*/) const {}
};

// Single left-to-right screening. Position i holds resource i. An agent
// whose peak lies to her right passes and starts diving (joins D, hoping to
// grab a better resource later). An agent whose top among the still-available
// resources is her own picks it; the divers are then asked in reverse order
// whether they still prefer the nearest available resource on their right
// (now the next unscreened one) over their own — each 'no' settles that diver
// with her own resource, the first 'yes' ends the questions. An agent who
// prefers some available resource to the left of hers designates it: the
// endowment is not Pareto-optimal and the divers from that resource's holder
// upward, plus the designating agent, form an improving cycle (each takes the
// next member's resource, the designator takes the designated one).
template <PreferenceView V, TranscriptSink S, typename Audit = NoAudit>
DiveOutcome dive(const V& view, S& sink, Audit&& audit = {}) {
    const int n = view.size();
    std::vector<int> divers;  // ascending positions, all unmatched
    for (int i = 0; i < n; ++i) {
        const int peak = view.peak(i);
        if (peak > i) {
            sink.record(QueryKind::DiverMain, i, Answer::Pass, -1);
            divers.push_back(i);
            audit(i + 1, divers);
            continue;
        }

        // Top among available: the still-available resources left of i are
        // exactly the divers' own; the ones right of i are all worse than
        // r_i (the peak is not to the right). Under single-peakedness only
        // the divers bracketing the peak can beat r_i.
        Resource best = i;
        if (peak < i && !divers.empty()) {
            const auto it = std::lower_bound(divers.begin(), divers.end(), peak);
            if (it != divers.end() && view.prefers(i, *it, best)) best = *it;
            if (it != divers.begin() && view.prefers(i, *(it - 1), best)) best = *(it - 1);
        }

        if (best == i) {
            sink.record(QueryKind::DiverMain, i, Answer::PickCurrent, -1);
            const Resource next_available = i + 1 < n ? i + 1 : -1;
            while (!divers.empty()) {
                const int p = divers.back();
                const bool keeps_diving =
                    next_available != -1 && view.prefers(p, next_available, p);
                sink.record(QueryKind::Backtrack, p,
                            keeps_diving ? Answer::Yes : Answer::No, -1);
                if (keeps_diving) break;
                divers.pop_back();  // settles with her own resource
            }
            audit(i + 1, divers);
            continue;
        }

        sink.record(QueryKind::DiverMain, i, Answer::Designate, best);
        DiveOutcome outcome;
        outcome.po = false;
        for (auto it = std::lower_bound(divers.begin(), divers.end(), best);
             it != divers.end(); ++it)
            outcome.members.push_back(*it);
        outcome.members.push_back(i);
        for (std::size_t k = 1; k < outcome.members.size(); ++k)
            outcome.gets.push_back(outcome.members[k]);
        outcome.gets.push_back(best);
        return outcome;
    }
    return {};
}

}  // namespace sphm
