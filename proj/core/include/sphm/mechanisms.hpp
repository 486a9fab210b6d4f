#pragma once

#include <vector>

#include "sphm/transcript.hpp"
#include "sphm/types.hpp"

// The four procedures over a validated market. The crawler and the diver
// require single-peaked preferences (they are incorrect outside that
// domain and throw NotSinglePeaked); ttc and cycle_check_po work on any
// strict preferences. Inputs need not be in normalized form: the two
// screening protocols normalize internally and translate every output —
// picks, witnesses and transcript events — back to the caller's labels.

namespace sphm {

struct CrawlerPick {
    Agent agent = 0;
    Resource resource = 0;
    int pass = 0;  // 1-based index of the screening pass that ended here

    bool operator==(const CrawlerPick&) const = default;
};

struct CrawlerTrace {
    std::vector<CrawlerPick> picks;  // in pick order, n entries
    Allocation final;

    bool operator==(const CrawlerTrace&) const = default;
};

struct CrawlerResult {
    CrawlerTrace trace;
    Transcript transcript{0};

    const Allocation& allocation() const { return trace.final; }
};

// Repeated left-to-right screening; the first agent whose top among the
// remaining resources does not lie strictly to her right takes that top,
// the resources between the taken one and hers each move one agent to the
// left, and screening restarts. O(n^2) queries; the result is always
// Pareto-optimal and individually rational.
CrawlerResult crawler(const Instance& instance);

struct Verdict {
    bool po = true;
    ImprovingCycle witness;  // non-empty exactly when not Pareto-optimal
};

struct DiverResult {
    Verdict verdict;
    Transcript transcript{0};
};

// Single left-to-right screening deciding whether the endowment is
// Pareto-optimal, in O(n) queries and at most 4n bits. When it is not, the
// verdict carries an improving trade cycle as witness.
DiverResult diver(const Instance& instance);

// Top Trading Cycles: every remaining agent points at the holder of her top
// remaining resource; each pointing cycle trades and leaves. Any strict
// preferences.
Allocation ttc(const Instance& instance);

// General-domain Pareto-optimality of the endowment: build the strict-envy
// digraph (i -> j when i prefers j's resource over her own) and search it
// depth-first with ascending neighbor order; the endowment is Pareto-optimal
// iff the digraph is acyclic, and a found cycle is the witness. O(n^2).
Verdict cycle_check_po(const Instance& instance);

}  // namespace sphm
