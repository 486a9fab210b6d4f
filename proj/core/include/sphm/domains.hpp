#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sphm/types.hpp"

// Single-peakedness recognition and the instance families used throughout
// the tests and benchmarks: uniformly random single-peaked profiles,
// consensual (all-agree) profiles, near-consensual mixed profiles that are
// never Pareto-optimal, and the family driving the crawler to its quadratic
// worst case.

namespace sphm {

// Deterministic, portable randomness. std::mt19937_64 is pinned by the
// standard, so seeds reproduce across platforms and standard libraries;
// std::uniform_int_distribution is implementation-defined and is avoided in
// favor of rejection sampling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound);
    // Fair bit.
    bool coin() { return (gen_() & 1u) != 0; }

private:
    std::mt19937_64 gen_;
};

struct SinglePeakedResult {
    bool single_peaked = true;
    // When violated: `farther` is ranked above `closer` although `closer`
    // lies strictly between the peak and `farther` on the axis.
    Resource closer = -1;
    Resource farther = -1;

    explicit operator bool() const { return single_peaked; }
};

// Walking outward from the peak, preference must fall off monotonically on
// both flanks; equivalently the ranking is a merge of the two flank
// sequences. Linear time.
SinglePeakedResult is_single_peaked(const PreferenceOrder& order, const Axis& axis);

// One order drawn uniformly from the 2^(n-1) orders single-peaked w.r.t. the
// identity axis: built worst-to-best, each step taking the leftmost or the
// rightmost unplaced resource on a fair coin.
PreferenceOrder random_sp_order(int n, Rng& rng);

// All 2^(n-1) orders single-peaked w.r.t. the identity axis, in a fixed
// deterministic order. Guarded for n <= 20.
std::vector<PreferenceOrder> all_sp_orders(int n);

// Identity axis, each agent an independent random_sp_order, endowment a
// uniform random permutation. Same (n, seed) gives the identical instance.
Instance gen_random_sp(int n, std::uint64_t seed);

// All n agents share `order` (single-peaked w.r.t. the identity axis, or
// NotSinglePeaked is thrown); agent i holds resource i. Such an endowment is
// Pareto-optimal: every envy points the same way along the shared ranking,
// so no trading cycle is possible.
Instance gen_consensual(const PreferenceOrder& order);

// Cross two distinct consensual instances: find the first resource pair
// (r_p, r_q), p < q lexicographically, that the two shared orders rank
// oppositely — named so that left ranks r_p above r_q — and hand the holder
// of r_p the right order while everyone else keeps the left one. The holders
// of r_p and r_q then each prefer the other's resource: the endowment is
// never Pareto-optimal. Throws ProfilesIdentical when there is no such pair.
Instance gen_fooling_mixed(const Instance& left, const Instance& right);

// The family the crawler is slowest on, in implicit form: identity axis and
// endowment; agent i's top is the resource on her right (the last agent
// likes her own), completed by descending the right flank then the left.
// Every screening pass traverses all remaining agents, so the crawler asks
// n(n+1)/2 questions, while the endowment itself is already Pareto-optimal.
// O(1) memory; usable directly as the engine view at any size.
class WorstCaseView {
public:
    explicit WorstCaseView(int n) : n_(n) {}

    int size() const { return n_; }
    int peak(Agent a) const { return a + 1 < n_ ? a + 1 : n_ - 1; }
    int rank(Agent a, Resource r) const {
        const int p = peak(a);
        return r >= p ? r - p : n_ - 1 - r;
    }
    bool prefers(Agent a, Resource r, Resource s) const {
        return rank(a, r) < rank(a, s);
    }

private:
    int n_ = 0;
};

// WorstCaseView materialized as a validated Instance; n >= 2.
Instance gen_crawler_worstcase(int n);

}  // namespace sphm
