#include "sphm/domains.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace sphm {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // Rejection from the top of the 64-bit range kills modulo bias.
    const std::uint64_t remainder = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = gen_();
        if (remainder == 0 || x < 0 - remainder) return x % bound;
    }
}

SinglePeakedResult is_single_peaked(const PreferenceOrder& order, const Axis& axis) {
    const int n = axis.size();
    const int peak = order.peak();
    int left = peak - 1;   // next unvisited axis position on the left flank
    int right = peak + 1;  // ... and on the right flank
    for (int step = 1; step < n; ++step) {
        Resource take;
        if (left < 0) {
            take = axis.at(right++);
        } else if (right >= n) {
            take = axis.at(left--);
        } else {
            const Resource l = axis.at(left);
            const Resource r = axis.at(right);
            if (order.prefers(l, r)) {
                take = l;
                --left;
            } else {
                take = r;
                ++right;
            }
        }
        if (order.rank_of(take) != step) {
            // The rank-`step` resource skips past its flank's frontier; its
            // axis neighbor toward the peak is still unvisited yet ranked
            // lower.
            const Resource farther = order.ranking()[step];
            const int fpos = axis.position_of(farther);
            const Resource closer = fpos < peak ? axis.at(fpos + 1) : axis.at(fpos - 1);
            return {false, closer, farther};
        }
    }
    return {};
}

PreferenceOrder random_sp_order(int n, Rng& rng) {
    std::vector<Resource> ranking(n);
    int lo = 0, hi = n - 1;
    for (int rank = n - 1; rank >= 1; --rank)
        ranking[rank] = rng.coin() ? lo++ : hi--;
    ranking[0] = lo;  // lo == hi: the peak
    return PreferenceOrder::over(std::move(ranking), Axis::identity(n));
}

std::vector<PreferenceOrder> all_sp_orders(int n) {
    if (n > 20) throw InstanceTooLarge(n, 20);
    const Axis axis = Axis::identity(n);
    std::vector<PreferenceOrder> orders;
    orders.reserve(std::size_t{1} << (n - 1));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<Resource> ranking(n);
        int lo = 0, hi = n - 1;
        for (int rank = n - 1; rank >= 1; --rank)
            ranking[rank] = ((mask >> (n - 1 - rank)) & 1u) ? lo++ : hi--;
        ranking[0] = lo;
        orders.push_back(PreferenceOrder::over(std::move(ranking), axis));
    }
    return orders;
}

Instance gen_random_sp(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<PreferenceOrder> profile;
    profile.reserve(n);
    for (Agent a = 0; a < n; ++a) profile.push_back(random_sp_order(n, rng));

    std::vector<Resource> endowment(n);
    std::iota(endowment.begin(), endowment.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(endowment[i], endowment[rng.below(static_cast<std::uint64_t>(i) + 1)]);

    // The construction is single-peaked by construction; assemble re-checks.
    return Instance::assemble(Axis::identity(n), std::move(profile),
                              Allocation::of(std::move(endowment)));
}

Instance gen_consensual(const PreferenceOrder& order) {
    const int n = order.size();
    std::vector<PreferenceOrder> profile(n, order);
    return Instance::assemble(Axis::identity(n), std::move(profile),
                              Allocation::identity(n));
}

Instance gen_fooling_mixed(const Instance& left, const Instance& right) {
    if (left.n() != right.n())
        throw Error("the two consensual instances must have the same size");
    const int n = left.n();
    const PreferenceOrder& a = left.preference(0);
    const PreferenceOrder& b = right.preference(0);
    for (Agent i = 1; i < n; ++i)
        if (left.preference(i) != a || right.preference(i) != b)
            throw Error("gen_fooling_mixed needs consensual inputs");

    Resource p = -1, q = -1;
    for (Resource r = 0; r < n && p < 0; ++r)
        for (Resource s = r + 1; s < n; ++s)
            if (a.prefers(r, s) != b.prefers(r, s)) {
                p = r;
                q = s;
                break;
            }
    if (p < 0)
        throw ProfilesIdentical("the two shared orders rank every resource pair alike");
    if (!a.prefers(p, q)) std::swap(p, q);  // left ranks r_p above r_q

    std::vector<PreferenceOrder> profile(n, a);
    profile[left.endowment().holder_of(p)] = b;
    return Instance::assemble(Axis::identity(n), std::move(profile),
                              Allocation::identity(n));
}

Instance gen_crawler_worstcase(int n) {
    if (n < 2) throw Error("the crawler worst-case family needs at least 2 agents");
    const WorstCaseView view(n);
    const Axis axis = Axis::identity(n);
    std::vector<PreferenceOrder> profile;
    profile.reserve(n);
    for (Agent a = 0; a < n; ++a) {
        std::vector<Resource> ranking(n);
        for (Resource r = 0; r < n; ++r) ranking[view.rank(a, r)] = r;
        profile.push_back(PreferenceOrder::over(std::move(ranking), axis));
    }
    return Instance::assemble(axis, std::move(profile), Allocation::identity(n));
}

}  // namespace sphm
