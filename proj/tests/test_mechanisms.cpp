#include <doctest.h>

#include <vector>

#include <sphm/domains.hpp>
#include <sphm/engine.hpp>
#include <sphm/mechanisms.hpp>
#include <sphm/types.hpp>

#include "fixtures.hpp"

using namespace sphm;

namespace {

// Endowment replaced, everything else kept; used to re-check an allocation.
Instance with_endowment(const Instance& instance, const Allocation& endowment) {
    return Instance::assemble(instance.axis(), instance.profile(), endowment,
                              instance.single_peaked());
}

// Every member strictly gains and the trade really is a cycle on held
// resources; non-members keep theirs.
void check_witness(const Instance& instance, const ImprovingCycle& witness) {
    REQUIRE_FALSE(witness.empty());
    REQUIRE(witness.members.size() == witness.gets.size());
    const Allocation traded = apply_cycle(instance.endowment(), witness);
    for (std::size_t k = 0; k < witness.members.size(); ++k) {
        const Agent member = witness.members[k];
        CHECK(traded.of_agent(member) == witness.gets[k]);
        CHECK(instance.preference(member).prefers(witness.gets[k],
                                                  instance.endowment().of_agent(member)));
    }
}

}  // namespace

TEST_CASE("crawler reproduces the running example pick by pick") {
    const CrawlerResult result = crawler(fixtures::example1());

    const std::vector<CrawlerPick> expected = {
        {2, 2, 1}, {3, 3, 2}, {0, 0, 3}, {4, 4, 4}, {1, 1, 5},
    };
    CHECK(result.trace.picks == expected);
    CHECK(result.allocation() == Allocation::identity(5));

    Transcript want(5);
    want.record(QueryKind::CrawlerScreen, 1, Answer::Pass);
    want.record(QueryKind::CrawlerScreen, 4, Answer::Pass);
    want.record(QueryKind::CrawlerScreen, 2, Answer::Designate, 2);
    want.record(QueryKind::CrawlerScreen, 1, Answer::Pass);
    want.record(QueryKind::CrawlerScreen, 4, Answer::Pass);
    want.record(QueryKind::CrawlerScreen, 3, Answer::Designate, 3);
    want.record(QueryKind::CrawlerScreen, 1, Answer::Pass);
    want.record(QueryKind::CrawlerScreen, 4, Answer::Pass);
    want.record(QueryKind::CrawlerScreen, 0, Answer::Designate, 0);
    want.record(QueryKind::CrawlerScreen, 1, Answer::Pass);
    want.record(QueryKind::CrawlerScreen, 4, Answer::Designate, 4);
    want.record(QueryKind::CrawlerScreen, 1, Answer::Designate, 1);
    CHECK(result.transcript == want);
    CHECK(result.transcript.total_bits() == 22);
    CHECK(check_transcript(result.transcript).ok);
}

TEST_CASE("diver refutes the running example with a three-cycle") {
    const DiverResult result = diver(fixtures::example1());
    CHECK_FALSE(result.verdict.po);
    CHECK(result.verdict.witness.members == std::vector<Agent>{1, 4, 0});
    CHECK(result.verdict.witness.gets == std::vector<Resource>{1, 4, 0});
    check_witness(fixtures::example1(), result.verdict.witness);

    Transcript want(5);
    want.record(QueryKind::DiverMain, 1, Answer::Pass);
    want.record(QueryKind::DiverMain, 4, Answer::Pass);
    want.record(QueryKind::DiverMain, 2, Answer::PickCurrent);
    want.record(QueryKind::Backtrack, 4, Answer::Yes);
    want.record(QueryKind::DiverMain, 3, Answer::PickCurrent);
    want.record(QueryKind::Backtrack, 4, Answer::Yes);
    want.record(QueryKind::DiverMain, 0, Answer::Designate, 0);
    CHECK(result.transcript == want);
    CHECK(result.transcript.total_bits() == 12);
}

TEST_CASE("diver certifies the reshuffled example, asking both flanks down") {
    const DiverResult result = diver(fixtures::example1_po_variant());
    CHECK(result.verdict.po);
    CHECK(result.verdict.witness.empty());

    Transcript want(5);
    want.record(QueryKind::DiverMain, 0, Answer::PickCurrent);
    want.record(QueryKind::DiverMain, 2, Answer::Pass);
    want.record(QueryKind::DiverMain, 4, Answer::Pass);
    want.record(QueryKind::DiverMain, 3, Answer::PickCurrent);
    want.record(QueryKind::Backtrack, 4, Answer::Yes);
    want.record(QueryKind::DiverMain, 1, Answer::PickCurrent);
    want.record(QueryKind::Backtrack, 4, Answer::No);
    want.record(QueryKind::Backtrack, 2, Answer::No);
    CHECK(result.transcript == want);
    CHECK(result.transcript.total_bits() == 13);
}

TEST_CASE("ttc trades the running example's top cycle") {
    const Allocation alloc = ttc(fixtures::example1());
    CHECK(alloc == Allocation::of({0, 4, 2, 3, 1}));
}

TEST_CASE("cycle check finds the two-cycle in the running example") {
    const Verdict verdict = cycle_check_po(fixtures::example1());
    CHECK_FALSE(verdict.po);
    CHECK(verdict.witness.members == std::vector<Agent>{0, 1});
    CHECK(verdict.witness.gets == std::vector<Resource>{0, 4});
    check_witness(fixtures::example1(), verdict.witness);

    CHECK(cycle_check_po(fixtures::example1_po_variant()).po);
}

TEST_CASE("cycle check works on arbitrary strict preferences") {
    RawInstance raw;
    raw.n = 3;
    raw.axis = {1, 2, 3};
    raw.preferences = {{2, 1, 3}, {3, 2, 1}, {1, 3, 2}};
    raw.endowment = {1, 2, 3};
    ValidateOptions lax;
    lax.require_single_peaked = false;
    const Instance rochambeau = validate(raw, lax);
    CHECK_FALSE(rochambeau.single_peaked());

    const Verdict verdict = cycle_check_po(rochambeau);
    CHECK_FALSE(verdict.po);
    CHECK(verdict.witness.members.size() == 3);
    check_witness(rochambeau, verdict.witness);
}

TEST_CASE("everyone at their peak: nothing moves, nobody passes") {
    const Instance instance = fixtures::everyone_at_peak(6);

    const CrawlerResult crawl = crawler(instance);
    CHECK(crawl.allocation() == instance.endowment());
    CHECK(crawl.transcript.events().size() == 6);
    for (const QueryEvent& event : crawl.transcript.events())
        CHECK(event.answer == Answer::Designate);
    CHECK(crawl.transcript.total_bits() == 6 * designation_bits(6));

    const DiverResult dive = diver(instance);
    CHECK(dive.verdict.po);
    CHECK(dive.transcript.events().size() == 6);
    CHECK(dive.transcript.total_bits() == 12);

    CHECK(ttc(instance) == instance.endowment());
    CHECK(cycle_check_po(instance).po);
}

TEST_CASE("single-agent and two-agent markets") {
    const Instance one = fixtures::everyone_at_peak(1);
    CHECK(crawler(one).allocation() == Allocation::identity(1));
    CHECK(crawler(one).transcript.total_bits() == 0);  // naming 1 of 1 is free
    CHECK(diver(one).verdict.po);
    CHECK(diver(one).transcript.total_bits() == 2);
    CHECK(ttc(one) == Allocation::identity(1));

    // Two agents, both preferring the other's resource.
    RawInstance raw;
    raw.n = 2;
    raw.axis = {1, 2};
    raw.preferences = {{2, 1}, {1, 2}};
    raw.endowment = {1, 2};
    const Instance swap = validate(raw);
    CHECK(crawler(swap).allocation() == Allocation::of({1, 0}));
    CHECK(ttc(swap) == Allocation::of({1, 0}));
    const DiverResult dive = diver(swap);
    CHECK_FALSE(dive.verdict.po);
    check_witness(swap, dive.verdict.witness);
}

TEST_CASE("screening protocols refuse non-single-peaked input") {
    RawInstance raw;
    raw.n = 3;
    raw.axis = {1, 2, 3};
    raw.preferences = {{1, 3, 2}, {2, 1, 3}, {3, 2, 1}};
    raw.endowment = {2, 1, 3};
    ValidateOptions lax;
    lax.require_single_peaked = false;
    const Instance instance = validate(raw, lax);
    CHECK_THROWS_AS(crawler(instance), NotSinglePeaked);
    CHECK_THROWS_AS(diver(instance), NotSinglePeaked);
    CHECK_NOTHROW(ttc(instance));
    CHECK_NOTHROW(cycle_check_po(instance));
}

TEST_CASE("crawler invariants over random markets") {
    for (int n : {2, 3, 5, 8}) {
        for (int k = 0; k < 150; ++k) {
            const Instance instance = gen_random_sp(n, 1000 * n + k);
            const CrawlerResult result = crawler(instance);

            // One pick per screening pass, all agents and resources once.
            REQUIRE(static_cast<int>(result.trace.picks.size()) == n);
            std::vector<bool> agent_seen(n, false);
            std::vector<bool> resource_seen(n, false);
            for (int p = 0; p < n; ++p) {
                const CrawlerPick& pick = result.trace.picks[p];
                CHECK(pick.pass == p + 1);
                CHECK_FALSE(agent_seen[pick.agent]);
                CHECK_FALSE(resource_seen[pick.resource]);
                agent_seen[pick.agent] = true;
                resource_seen[pick.resource] = true;
                CHECK(result.allocation().of_agent(pick.agent) == pick.resource);
            }

            // Individually rational, Pareto-optimal, within the bit budget.
            for (Agent a = 0; a < n; ++a) {
                const Resource got = result.allocation().of_agent(a);
                const Resource held = instance.endowment().of_agent(a);
                CHECK_FALSE(instance.preference(a).prefers(held, got));
            }
            CHECK(cycle_check_po(with_endowment(instance, result.allocation())).po);
            CHECK(check_transcript(result.transcript).ok);
            CHECK(result.transcript.total_bits() <= crawler_bound(n));
        }
    }
}

TEST_CASE("crawling the mirrored market returns the same allocation") {
    CHECK(crawler(fixtures::mirrored(fixtures::example1())).allocation() ==
          crawler(fixtures::example1()).allocation());
    for (int n : {2, 3, 4, 5, 6, 7, 8}) {
        for (int k = 0; k < 60; ++k) {
            const Instance instance = gen_random_sp(n, 7000 * n + k);
            const Instance mirror = fixtures::mirrored(instance);
            CHECK(crawler(mirror).allocation() == crawler(instance).allocation());
        }
    }
}

TEST_CASE("diver agrees with the cycle check and stays within 4n bits") {
    for (const Instance& instance : fixtures::exhaustive_instances(3)) {
        const DiverResult result = diver(instance);
        CHECK(result.verdict.po == cycle_check_po(instance).po);
        if (!result.verdict.po) check_witness(instance, result.verdict.witness);
        CHECK(check_transcript(result.transcript).ok);
        CHECK(result.transcript.total_bits() <= diver_bound(3));
    }
    for (int n : {5, 8, 13}) {
        for (int k = 0; k < 200; ++k) {
            const Instance instance = gen_random_sp(n, 3000 * n + k);
            const DiverResult result = diver(instance);
            CHECK(result.verdict.po == cycle_check_po(instance).po);
            if (!result.verdict.po) check_witness(instance, result.verdict.witness);
            CHECK(result.transcript.total_bits() <= diver_bound(n));
        }
    }
}

TEST_CASE("divers always want the nearest available resource on their right") {
    for (int n : {3, 6, 12, 25}) {
        for (int k = 0; k < 120; ++k) {
            const NormalizeResult norm = normalize(gen_random_sp(n, 5000 * n + k));
            const DenseView view(norm.instance);
            CountingSink sink(n);
            bool invariant = true;
            const auto audit = [&](int next, const std::vector<int>& divers) {
                for (std::size_t d = 0; d < divers.size(); ++d) {
                    if (d > 0 && divers[d - 1] >= divers[d]) invariant = false;
                    if (divers[d] >= next) invariant = false;
                    const int nearest =
                        d + 1 < divers.size() ? divers[d + 1] : (next < n ? next : -1);
                    if (nearest == -1 || !view.prefers(divers[d], nearest, divers[d]))
                        invariant = false;
                }
            };
            dive(view, sink, audit);
            CHECK(invariant);
        }
    }
}

TEST_CASE("ttc is individually rational and Pareto-optimal on random markets") {
    for (int n : {2, 4, 6, 9}) {
        for (int k = 0; k < 150; ++k) {
            const Instance instance = gen_random_sp(n, 11000 * n + k);
            const Allocation alloc = ttc(instance);
            for (Agent a = 0; a < n; ++a) {
                CHECK_FALSE(instance.preference(a).prefers(instance.endowment().of_agent(a),
                                                           alloc.of_agent(a)));
            }
            CHECK(cycle_check_po(with_endowment(instance, alloc)).po);
        }
    }
}

TEST_CASE("worst-case family: quadratic crawler, linear diver, exact totals") {
    for (int n : {2, 5, 16, 100, 1000}) {
        const WorstCaseView view(n);
        CountingSink crawl_bits(n);
        const std::vector<EnginePick> picks = crawl(view, crawl_bits);
        CHECK(static_cast<int>(picks.size()) == n);
        const std::int64_t m = n;
        CHECK(crawl_bits.total_bits() == m * (m - 1) / 2 + m * designation_bits(n));
        CHECK(crawl_bits.total_bits() <= crawler_bound(n));
        CHECK(crawl_bits.events() == m * (m + 1) / 2);
        // Everyone ends up with her own resource: the endowment was optimal.
        for (const EnginePick& pick : picks) CHECK(pick.agent == pick.resource);

        CountingSink dive_bits(n);
        const DiveOutcome outcome = dive(view, dive_bits);
        CHECK(outcome.po);
        CHECK(dive_bits.total_bits() == 3 * m - 1);
    }

    // The materialized form goes through the public mechanisms.
    const Instance instance = gen_crawler_worstcase(9);
    const CrawlerResult result = crawler(instance);
    CHECK(result.allocation() == instance.endowment());
    CHECK(result.transcript.total_bits() == 36 + 9 * designation_bits(9));
    CHECK(diver(instance).verdict.po);
}

TEST_CASE("scrambled axes and endowments translate back to caller labels") {
    RawInstance raw;
    raw.n = 4;
    raw.axis = {3, 1, 4, 2};
    raw.preferences = {
        {1, 4, 2, 3},
        {3, 1, 4, 2},
        {2, 4, 1, 3},
        {4, 1, 3, 2},
    };
    raw.endowment = {2, 4, 1, 3};
    const Instance instance = validate(raw);

    const CrawlerResult result = crawler(instance);
    for (Agent a = 0; a < 4; ++a) {
        const Resource got = result.allocation().of_agent(a);
        CHECK_FALSE(instance.preference(a).prefers(instance.endowment().of_agent(a), got));
    }
    CHECK(cycle_check_po(with_endowment(instance, result.allocation())).po);
    for (const QueryEvent& event : result.transcript.events()) {
        CHECK(event.agent >= 0);
        CHECK(event.agent < 4);
        if (event.answer == Answer::Designate) {
            CHECK(event.designated >= 0);
            CHECK(event.designated < 4);
        }
    }

    const DiverResult dive_result = diver(instance);
    CHECK(dive_result.verdict.po == cycle_check_po(instance).po);
    if (!dive_result.verdict.po) check_witness(instance, dive_result.verdict.witness);
}
