#include "sphm/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "sphm/domains.hpp"
#include "sphm/engine.hpp"

namespace sphm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Times one run of `work`, batching runs until a measurement spans at least
// 10 ms so clock resolution cannot dominate, then takes the median of
// `repetitions` measurements.
template <typename Work>
double median_run_seconds(int repetitions, Work&& work) {
    constexpr double kMinMeasure = 0.01;
    int batch = 1;
    for (;;) {
        const auto start = Clock::now();
        for (int k = 0; k < batch; ++k) work();
        const double elapsed = seconds_since(start);
        if (elapsed >= kMinMeasure || batch >= (1 << 20)) break;
        batch *= 2;
    }
    std::vector<double> times(repetitions);
    for (double& t : times) {
        const auto start = Clock::now();
        for (int k = 0; k < batch; ++k) work();
        t = seconds_since(start) / batch;
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

// Slope of the least-squares line through (log n, log t).
double fitted_exponent(const std::vector<ScalingRow>& rows, const std::string& mechanism) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (const ScalingRow& row : rows) {
        if (row.mechanism != mechanism || row.seconds <= 0) continue;
        const double x = std::log(static_cast<double>(row.n));
        const double y = std::log(row.seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2) return 0;
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

template <PreferenceView V>
void bench_point(const V& view, const ScalingConfig& config, const std::string& family,
                 int n, std::vector<ScalingRow>& rows) {
    CountingSink crawler_bits(n);
    crawl(view, crawler_bits);
    const double crawler_time = median_run_seconds(config.repetitions, [&] {
        CountingSink sink(n);
        crawl(view, sink);
    });
    rows.push_back({family, n, "crawler", crawler_time, crawler_bits.total_bits()});

    CountingSink diver_bits(n);
    dive(view, diver_bits);
    const double diver_time = median_run_seconds(config.repetitions, [&] {
        CountingSink sink(n);
        dive(view, sink);
    });
    rows.push_back({family, n, "diver", diver_time, diver_bits.total_bits()});
}

}  // namespace

int random_family_max_n() {
    return 8192;
}

ScalingReport run_scaling(const ScalingConfig& config) {
    if (config.family != "worstcase" && config.family != "random")
        throw Error("unknown benchmark family '" + config.family + "'");
    if (config.min_n < 2 || config.max_n < config.min_n)
        throw Error("benchmark sizes must satisfy 2 <= min_n <= max_n");

    ScalingReport report;
    for (int n = config.min_n; n <= config.max_n; n *= 2) {
        if (config.family == "worstcase") {
            bench_point(WorstCaseView(n), config, config.family, n, report.rows);
        } else {
            if (n > random_family_max_n()) break;  // dense rank tables: O(n^2) memory
            const NormalizeResult norm = normalize(gen_random_sp(n, config.seed));
            bench_point(DenseView(norm.instance), config, config.family, n, report.rows);
        }
    }
    report.crawler_exponent = fitted_exponent(report.rows, "crawler");
    report.diver_exponent = fitted_exponent(report.rows, "diver");
    return report;
}

std::string format_report(const ScalingReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(10) << "family" << std::right << std::setw(8) << "n"
        << "  " << std::left << std::setw(8) << "mech" << std::right << std::setw(14)
        << "seconds" << std::setw(14) << "bits" << '\n';
    for (const ScalingRow& row : report.rows) {
        out << std::left << std::setw(10) << row.family << std::right << std::setw(8)
            << row.n << "  " << std::left << std::setw(8) << row.mechanism << std::right
            << std::setw(14) << std::fixed << std::setprecision(6) << row.seconds
            << std::setw(14) << row.bits << '\n';
    }
    out << std::setprecision(2);
    out << "fit crawler exponent " << report.crawler_exponent << '\n';
    out << "fit diver exponent " << report.diver_exponent << '\n';
    return out.str();
}

}  // namespace sphm
