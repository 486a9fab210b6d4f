#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Empirical growth measurement for the two protocols: runs them over
// doubling market sizes, times each point (median of repetitions on a
// monotonic clock, short runs batched for resolution), records the exact
// transcript bit totals, and fits log time against log n by least squares.
// The crawler's fitted exponent lands near 2 on the worst-case family and
// the diver's near 1; worst-case crawler bits grow close to 4x per doubling.

namespace sphm {

struct ScalingConfig {
    int min_n = 1000;
    int max_n = 64000;        // sizes: min_n, 2*min_n, ... while <= max_n
    int repetitions = 5;      // median across these
    std::string family = "worstcase";  // "worstcase" or "random"
    std::uint64_t seed = 0;            // used by the random family
};

struct ScalingRow {
    std::string family;
    int n = 0;
    std::string mechanism;  // "crawler" or "diver"
    double seconds = 0;     // median wall time of one run
    std::int64_t bits = 0;  // transcript total
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    // Least-squares slope of log(seconds) vs log(n) per mechanism.
    double crawler_exponent = 0;
    double diver_exponent = 0;
};

// The random family caps n at this value: its dense rank tables cost
// O(n^2) memory, unlike the implicit worst-case family.
int random_family_max_n();

ScalingReport run_scaling(const ScalingConfig& config = {});

// Whitespace-aligned table plus one fitted-exponent line per mechanism.
std::string format_report(const ScalingReport& report);

}  // namespace sphm
