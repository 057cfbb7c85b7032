// Wall-clock harness demonstrating that realize() is linear in n.
#ifndef TRIMULTI_BENCH_HPP
#define TRIMULTI_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "trimulti/construct.hpp"
#include "trimulti/generate.hpp"

namespace trimulti {

struct BenchReport {
    std::int64_t n = 0;
    std::int64_t trials = 0;
    double median_seconds = 0.0;
    double total_seconds = 0.0;
    std::int64_t max_edge_count = 0;
    double edges_per_second = 0.0;
};

// Times realize() (construction + verification, generation excluded) over
// `trials` generated sequences of length n with degrees in [4, 50].
inline BenchReport bench_realize(std::int64_t n, std::int64_t trials, std::uint64_t seed = 1) {
    if (trials <= 0) throw Error(errc::empty_benchmark, "benchmark needs at least one trial");

    std::vector<double> seconds;
    seconds.reserve(static_cast<std::size_t>(trials));
    BenchReport report;
    report.n = n;
    report.trials = trials;
    std::int64_t total_edges = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        DegreeSequence seq = generate_valid_sequence(seed + static_cast<std::uint64_t>(t), n, n, 4, 50);
        const auto start = std::chrono::steady_clock::now();
        Realization r = realize(seq);
        const auto stop = std::chrono::steady_clock::now();
        seconds.push_back(std::chrono::duration<double>(stop - start).count());
        const auto edge_count = static_cast<std::int64_t>(r.graph.edges().size());
        report.max_edge_count = std::max(report.max_edge_count, edge_count);
        total_edges += edge_count;
    }
    std::sort(seconds.begin(), seconds.end());
    const std::size_t mid = seconds.size() / 2;
    report.median_seconds =
        seconds.size() % 2 == 1 ? seconds[mid] : (seconds[mid - 1] + seconds[mid]) / 2.0;
    for (double s : seconds) report.total_seconds += s;
    report.edges_per_second =
        report.total_seconds > 0.0 ? static_cast<double>(total_edges) / report.total_seconds : 0.0;
    return report;
}

}  // namespace trimulti

#endif
