#include "sphm/mechanisms.hpp"

#include <numeric>
#include <utility>

#include "sphm/domains.hpp"
#include "sphm/engine.hpp"

namespace sphm {

namespace {

// The screening protocols are only correct on single-peaked profiles:
// accept instances validated as such, re-check ones that were not.
void require_single_peaked(const Instance& instance) {
    if (instance.single_peaked()) return;
    for (Agent a = 0; a < instance.n(); ++a) {
        const SinglePeakedResult check = is_single_peaked(instance.preference(a),
                                                          instance.axis());
        if (!check) throw NotSinglePeaked(a, check.closer, check.farther);
    }
}

// Records engine events under the caller's original labels.
class TranslatingSink {
public:
    TranslatingSink(Transcript& transcript, const NormalizeResult& maps)
        : transcript_(&transcript), maps_(&maps) {}

    void record(QueryKind kind, Agent agent, Answer answer, Resource designated = -1) {
        transcript_->record(kind, maps_->original_agent(agent), answer,
                            designated < 0 ? -1 : maps_->original_resource(designated));
    }

private:
    Transcript* transcript_;
    const NormalizeResult* maps_;
};

CrawlerTrace make_trace(const std::vector<EnginePick>& picks, int n,
                        const NormalizeResult* maps) {
    CrawlerTrace trace;
    trace.picks.reserve(picks.size());
    std::vector<Resource> assignment(n, -1);
    for (const EnginePick& pick : picks) {
        const Agent agent = maps ? maps->original_agent(pick.agent) : pick.agent;
        const Resource resource =
            maps ? maps->original_resource(pick.resource) : pick.resource;
        trace.picks.push_back({agent, resource, pick.pass});
        assignment[agent] = resource;
    }
    trace.final = Allocation::of(std::move(assignment));
    return trace;
}

}  // namespace

CrawlerResult crawler(const Instance& instance) {
    require_single_peaked(instance);
    const int n = instance.n();
    CrawlerResult result;
    result.transcript = Transcript(n);
    if (instance.is_normalized()) {
        RecordingSink sink(result.transcript);
        result.trace = make_trace(crawl(DenseView(instance), sink), n, nullptr);
    } else {
        const NormalizeResult norm = normalize(instance);
        TranslatingSink sink(result.transcript, norm);
        result.trace = make_trace(crawl(DenseView(norm.instance), sink), n, &norm);
    }
    return result;
}

DiverResult diver(const Instance& instance) {
    require_single_peaked(instance);
    const int n = instance.n();
    DiverResult result;
    result.transcript = Transcript(n);
    DiveOutcome outcome;
    if (instance.is_normalized()) {
        RecordingSink sink(result.transcript);
        outcome = dive(DenseView(instance), sink);
        if (!outcome.po)
            result.verdict = {false,
                              {std::move(outcome.members), std::move(outcome.gets)}};
    } else {
        const NormalizeResult norm = normalize(instance);
        TranslatingSink sink(result.transcript, norm);
        outcome = dive(DenseView(norm.instance), sink);
        if (!outcome.po)
            result.verdict = {
                false, norm.to_original({std::move(outcome.members),
                                         std::move(outcome.gets)})};
    }
    return result;
}

Allocation ttc(const Instance& instance) {
    const int n = instance.n();
    const Allocation& endowment = instance.endowment();
    std::vector<Resource> result(n, -1);
    std::vector<char> taken(n, 0);
    std::vector<int> next_choice(n, 0);  // index into each agent's ranking
    std::vector<int> seen(n, -1);        // walk stamp
    std::vector<Agent> path;

    const auto top_remaining = [&](Agent a) {
        const std::vector<Resource>& ranking = instance.preference(a).ranking();
        int& k = next_choice[a];
        while (taken[ranking[k]]) ++k;
        return ranking[k];
    };

    int stamp = 0;
    for (Agent start = 0; start < n; ++start) {
        // Follow successor pointers (holder of my top remaining resource)
        // until some agent repeats: the tail since that repeat is a trading
        // cycle. Unassigned agents always point at unassigned agents, since
        // the remaining resources are exactly the remaining agents' own. The
        // found cycle may not contain `start` (the walk can have a prefix),
        // so walk again until it does.
        while (result[start] == -1) {
            ++stamp;
            path.clear();
            Agent a = start;
            while (seen[a] != stamp) {
                seen[a] = stamp;
                path.push_back(a);
                a = endowment.holder_of(top_remaining(a));
            }
            std::size_t cycle_start = 0;
            while (path[cycle_start] != a) ++cycle_start;
            for (std::size_t k = cycle_start; k < path.size(); ++k) {
                const Agent member = path[k];
                result[member] = top_remaining(member);
            }
            for (std::size_t k = cycle_start; k < path.size(); ++k)
                taken[endowment.of_agent(path[k])] = 1;
        }
    }
    return Allocation::of(std::move(result));
}

Verdict cycle_check_po(const Instance& instance) {
    const int n = instance.n();
    const Allocation& endowment = instance.endowment();
    const auto envies = [&](Agent i, Agent j) {
        return instance.preference(i).prefers(endowment.of_agent(j),
                                              endowment.of_agent(i));
    };

    // Iterative depth-first search over the implicit envy digraph, neighbors
    // in ascending agent order; a back edge to an agent on the current path
    // closes an improving cycle.
    enum : char { White, Gray, Black };
    std::vector<char> color(n, White);
    struct Frame {
        Agent agent;
        Agent next = 0;  // next neighbor candidate to examine
    };
    std::vector<Frame> stack;

    for (Agent start = 0; start < n; ++start) {
        if (color[start] != White) continue;
        color[start] = Gray;
        stack.push_back({start});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            bool descended = false;
            while (frame.next < n) {
                const Agent j = frame.next++;
                if (j == frame.agent || !envies(frame.agent, j)) continue;
                if (color[j] == Gray) {
                    // Unwind the path from j to the top of the stack.
                    ImprovingCycle cycle;
                    std::size_t from = 0;
                    while (stack[from].agent != j) ++from;
                    for (std::size_t k = from; k < stack.size(); ++k)
                        cycle.members.push_back(stack[k].agent);
                    for (std::size_t k = 1; k < cycle.members.size(); ++k)
                        cycle.gets.push_back(endowment.of_agent(cycle.members[k]));
                    cycle.gets.push_back(endowment.of_agent(j));
                    return {false, std::move(cycle)};
                }
                if (color[j] == White) {
                    color[j] = Gray;
                    stack.push_back({j});
                    descended = true;
                    break;
                }
            }
            if (descended) continue;
            color[frame.agent] = Black;
            stack.pop_back();
        }
    }
    return {};
}

}  // namespace sphm
