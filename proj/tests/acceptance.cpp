// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line each. Exit status is the number of failures.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trimulti/bench.hpp"
#include "trimulti/construct.hpp"
#include "trimulti/degree_sequence.hpp"
#include "trimulti/generate.hpp"
#include "trimulti/oracle.hpp"

using namespace trimulti;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << " s";
    return out.str();
}

// Criterion 1: 10,000 generated valid sequences, n in [3,200], degrees in
// [4,50], seeds 1..10000; realize must succeed on all of them with exact
// degrees and triangular output, in under 10 seconds.
Outcome soundness_sweep() {
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
        const DegreeSequence seq = generate_valid_sequence(seed, 3, 200, 4, 50);
        const Realization r = realize(seq);
        if (degree_sequence_of(r.graph) != seq.degrees())
            return {false, "degree mismatch at seed " + std::to_string(seed)};
        if (!check_triangular(r.graph).is_triangular)
            return {false, "non-triangular output at seed " + std::to_string(seed)};
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) return {false, "took " + fmt_seconds(elapsed) + ", budget 10 s"};
    return {true, "10000 sequences in " + fmt_seconds(elapsed)};
}

struct BranchFixture {
    Branch branch;
    std::vector<std::int64_t> degrees;
};

std::vector<std::int64_t> generated_fixture(std::int64_t n, std::int64_t deg_max,
                                            std::int64_t wanted_alternating) {
    for (std::uint64_t seed = 1; seed <= 50000; ++seed) {
        const DegreeSequence seq = generate_valid_sequence(seed, n, n, 4, deg_max);
        if (alternating_sum(seq) == wanted_alternating) return seq.degrees();
    }
    return {};
}

// Criterion 2: fixed fixtures hit every reachable certificate branch; each
// output verifies and its certificate replays bit-identically.
Outcome branch_coverage() {
    std::vector<BranchFixture> fixtures = {
        {Branch::fan_odd, {4, 4, 4}},
        {Branch::fan_even_k1, {6, 4, 4, 4}},
        {Branch::fan_even_kgt1, {15, 5, 4, 4, 4, 4}},
        {Branch::cycle_square_odd, {4, 4, 4, 4, 4}},
        {Branch::cycle_square_d0, {5, 5, 4, 4, 4, 4}},
        {Branch::cycle_square_d2, {6, 4, 4, 4, 4, 4}},
        {Branch::cycle_square_d4, generated_fixture(6, 12, 4)},
        {Branch::small_n4_d0, {4, 4, 4, 4}},
        {Branch::split_odd, {6, 4, 4, 4, 4, 4, 4, 4, 4}},
        {Branch::split_even, generated_fixture(10, 20, 6)},
    };
    for (const BranchFixture& fixture : fixtures) {
        if (fixture.degrees.empty())
            return {false, std::string("no generated fixture found for ") +
                               std::string(branch_name(fixture.branch))};
        const DegreeSequence seq = canonicalize(fixture.degrees);
        const Realization r = realize(seq);
        if (r.certificate.branch != fixture.branch)
            return {false, std::string("expected ") + std::string(branch_name(fixture.branch)) +
                               ", got " + std::string(branch_name(r.certificate.branch))};
        if (degree_sequence_of(r.graph) != seq.degrees() || !check_triangular(r.graph).is_triangular)
            return {false, std::string("fixture failed verification for ") +
                               std::string(branch_name(fixture.branch))};
        if (replay(r.certificate, seq) != r.graph)
            return {false, std::string("replay differs for ") + std::string(branch_name(fixture.branch))};
    }
    return {true, "10 branches hit, verified, and replayed"};
}

void enumerate_descending(std::int64_t n, std::int64_t max_value,
                          std::vector<std::int64_t>& current,
                          const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    if (static_cast<std::int64_t>(current.size()) == n) {
        visit(current);
        return;
    }
    for (std::int64_t value = std::min<std::int64_t>(max_value, 6); value >= 4; --value) {
        current.push_back(value);
        enumerate_descending(n, value, current, visit);
        current.pop_back();
    }
}

// Criterion 3: for every descending sequence with 3 <= n <= 5 and degrees in
// [4,6], realize succeeds iff conditions (i)-(iii) hold iff the exhaustive
// oracle finds a triangular realization. Budget 60 seconds.
Outcome iff_small_scale() {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    std::int64_t count = 0;
    for (std::int64_t n = 3; n <= 5 && failure.empty(); ++n) {
        std::vector<std::int64_t> current;
        enumerate_descending(n, 6, current, [&](const std::vector<std::int64_t>& degrees) {
            if (!failure.empty()) return;
            ++count;
            const DegreeSequence seq = canonicalize(degrees);
            const bool conditions = check_triangular_conditions(seq).triangular_conditions_ok();
            bool realized = false;
            try {
                const Realization r = realize(seq);
                realized = degree_sequence_of(r.graph) == seq.degrees() &&
                           check_triangular(r.graph).is_triangular;
            } catch (const NotRealizableError&) {
                realized = false;
            }
            const bool oracle_exists = exists_triangular_realization(seq.degrees()).exists;
            if (realized != conditions || conditions != oracle_exists) {
                std::ostringstream what;
                what << "divergence at (";
                for (std::size_t i = 0; i < degrees.size(); ++i) what << (i ? "," : "") << degrees[i];
                what << "): realize=" << realized << " conditions=" << conditions
                     << " oracle=" << oracle_exists;
                failure = what.str();
            }
        });
    }
    if (!failure.empty()) return {false, failure};
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) return {false, "took " + fmt_seconds(elapsed) + ", budget 60 s"};
    return {true, std::to_string(count) + " sequences agree in " + fmt_seconds(elapsed)};
}

// Criterion 4: the all-threes census up to n = 8 matches divisibility by 4.
// Budget 120 seconds.
Outcome proposition_reproduction() {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = proposition_census(8);
    if (rows.size() != 6) return {false, "expected 6 census rows"};
    for (const CensusRow& row : rows) {
        const bool expected = row.n % 4 == 0;
        if (row.exists != expected)
            return {false, "census disagrees at n = " + std::to_string(row.n)};
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 120.0) return {false, "took " + fmt_seconds(elapsed) + ", budget 120 s"};
    return {true, "exists exactly for n in {4, 8} in " + fmt_seconds(elapsed)};
}

// Criterion 5: Erdos-Gallai agrees with the exhaustive simple-graph search
// on 500 random sequences with n <= 7 and degrees in [1,6].
Outcome erdos_gallai_agreement() {
    std::mt19937_64 rng(500500);
    for (int trial = 0; trial < 500; ++trial) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 7);
        std::vector<std::int64_t> degrees(static_cast<std::size_t>(n));
        for (auto& d : degrees) d = 1 + static_cast<std::int64_t>(rng() % 6);
        const DegreeSequence seq = canonicalize(degrees);
        const bool graphical = check_erdos_gallai(seq).erdos_gallai_ok.value();
        const bool found = exists_simple_realization(seq.degrees()).exists;
        if (graphical != found) {
            std::ostringstream what;
            what << "divergence at trial " << trial << " (";
            for (std::size_t i = 0; i < seq.degrees().size(); ++i)
                what << (i ? "," : "") << seq.degrees()[i];
            what << ")";
            return {false, what.str()};
        }
    }
    return {true, "500 sequences agree"};
}

// Criterion 6: 200 sequences violating exactly one of parity or the d1
// bound; the oracle must report non-existence for every one.
Outcome lemma3_necessity() {
    std::mt19937_64 rng(360360);
    int parity_cases = 0, bound_cases = 0;
    int guard = 0;
    while (parity_cases + bound_cases < 200) {
        if (++guard > 200000) return {false, "could not generate enough violating sequences"};
        const std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 3);
        std::vector<std::int64_t> degrees(static_cast<std::size_t>(n));
        for (auto& d : degrees) d = 1 + static_cast<std::int64_t>(rng() % 6);
        std::sort(degrees.begin(), degrees.end(), std::greater<>());
        std::int64_t sum = 0;
        for (auto d : degrees) sum += d;
        const bool parity_bad = sum % 2 != 0;
        const bool bound_bad = degrees.front() > sum - degrees.front() - (n - 1);
        if (parity_bad == bound_bad) continue;  // want exactly one violation
        if (parity_bad && parity_cases >= 100) continue;
        if (bound_bad && bound_cases >= 100) continue;
        const OracleResult result = exists_triangular_realization(degrees);
        if (result.exists) {
            std::ostringstream what;
            what << "oracle found a realization for a violating sequence (";
            for (std::size_t i = 0; i < degrees.size(); ++i) what << (i ? "," : "") << degrees[i];
            what << ")";
            return {false, what.str()};
        }
        (parity_bad ? parity_cases : bound_cases) += 1;
    }
    return {true, "100 parity-violating + 100 bound-violating sequences all non-realizable"};
}

// Criterion 7: realize at n = 10^6 has median time under a second and never
// emits more than 2n + 1 edges.
Outcome performance() {
    const std::int64_t n = 1000000;
    const BenchReport report = bench_realize(n, 3);
    if (report.median_seconds >= 1.0)
        return {false, "median " + fmt_seconds(report.median_seconds) + ", budget 1 s"};
    if (report.max_edge_count > 2 * n + 1)
        return {false, "emitted " + std::to_string(report.max_edge_count) + " edges, cap " +
                           std::to_string(2 * n + 1)};
    std::ostringstream detail;
    detail.precision(3);
    detail << std::fixed << "median " << report.median_seconds << " s, max edges "
           << report.max_edge_count << " <= " << 2 * n + 1;
    return {true, detail.str()};
}

}  // namespace

int main() {
    struct Entry {
        const char* label;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria = {
        {"criterion 1: soundness sweep", soundness_sweep},
        {"criterion 2: branch coverage", branch_coverage},
        {"criterion 3: iff at small scale", iff_small_scale},
        {"criterion 4: proposition reproduction", proposition_reproduction},
        {"criterion 5: Erdos-Gallai agreement", erdos_gallai_agreement},
        {"criterion 6: necessity of the conditions", lemma3_necessity},
        {"criterion 7: linear-time performance", performance},
    };

    int failures = 0;
    for (const Entry& entry : criteria) {
        Outcome outcome;
        try {
            outcome = entry.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (outcome.pass ? "PASS " : "FAIL ") << entry.label << ": " << outcome.detail
                  << "\n";
        if (!outcome.pass) ++failures;
    }
    return failures;
}
