#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "trimulti/degree_sequence.hpp"
#include "trimulti/oracle.hpp"

using namespace trimulti;

namespace {

std::vector<std::int64_t> random_descending(std::mt19937_64& rng, std::int64_t n, std::int64_t lo,
                                            std::int64_t hi) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(n));
    for (auto& value : d) value = lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

}  // namespace

TEST_CASE("canonicalize sorts descending and records provenance") {
    const DegreeSequence seq = canonicalize({4, 6, 5});
    CHECK(seq.degrees() == std::vector<std::int64_t>{6, 5, 4});
    CHECK(seq.sorted_to_original() == std::vector<std::int64_t>{2, 3, 1});
    CHECK(seq.original_order() == std::vector<std::int64_t>{4, 6, 5});
}

TEST_CASE("canonicalize is stable for equal values") {
    const DegreeSequence seq = canonicalize({4, 4, 4});
    CHECK(seq.degrees() == std::vector<std::int64_t>{4, 4, 4});
    CHECK(seq.sorted_to_original() == std::vector<std::int64_t>{1, 2, 3});
    CHECK(seq.is_identity_order());
}

TEST_CASE("canonicalize rejects bad input") {
    CHECK_THROWS_WITH_AS(canonicalize({4, -1}), "negative degree at position 2", Error);
    try {
        canonicalize({4, -1});
    } catch (const Error& e) {
        CHECK(e.code() == errc::negative_entry);
        CHECK(e.detail() == 2);
    }
    CHECK_THROWS_AS(canonicalize({}), Error);
    try {
        canonicalize({});
    } catch (const Error& e) {
        CHECK(e.code() == errc::empty_input);
    }
}

TEST_CASE("canonicalize rejects sums at 2^62") {
    const std::int64_t huge = std::int64_t{1} << 61;
    try {
        canonicalize({huge, huge});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::overflow);
    }
}

TEST_CASE("alternating sum fixtures") {
    CHECK(alternating_sum(canonicalize({4, 4, 4})) == 4);
    CHECK(alternating_sum(canonicalize({4, 4, 4, 4})) == 0);
    CHECK(alternating_sum(canonicalize({15, 5, 4, 4, 4, 4})) == 10);
}

TEST_CASE("alternating sum parity and non-negativity on descending input") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 500; ++trial) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 12);
        const auto d = random_descending(rng, n, 0, 30);
        const DegreeSequence seq = canonicalize(d);
        const std::int64_t big_d = alternating_sum(seq);
        std::int64_t sum = 0;
        for (auto value : d) sum += value;
        CHECK(((big_d % 2 + 2) % 2) == sum % 2);
        CHECK(big_d >= 0);
        if (n % 2 == 1) CHECK(big_d >= d.back());
    }
}

TEST_CASE("triangular conditions fixtures") {
    const auto all_true = check_triangular_conditions(canonicalize({4, 4, 4}));
    CHECK(all_true.triangular_conditions_ok());
    CHECK_FALSE(all_true.erdos_gallai_ok.has_value());

    const auto odd_sum = check_triangular_conditions(canonicalize({13, 4, 4, 4}));
    CHECK_FALSE(odd_sum.parity_ok);

    const auto hub_too_big = check_triangular_conditions(canonicalize({10, 4, 4, 4}));
    CHECK(hub_too_big.parity_ok);
    CHECK_FALSE(hub_too_big.d1_bound_ok);

    const auto too_short = check_triangular_conditions(canonicalize({6, 6}));
    CHECK_FALSE(too_short.min_degree_ok);
}

TEST_CASE("triangular conditions are pure") {
    const DegreeSequence seq = canonicalize({8, 6, 4, 4});
    CHECK(check_triangular_conditions(seq) == check_triangular_conditions(seq));
}

TEST_CASE("Erdos-Gallai fixtures") {
    CHECK(check_erdos_gallai(canonicalize({3, 3, 3, 3})).erdos_gallai_ok == true);
    CHECK(check_erdos_gallai(canonicalize({4, 4, 4, 4, 4})).erdos_gallai_ok == true);

    // Expected values frozen from the exhaustive simple-graph search: no
    // simple graph on 4 labelled vertices has degrees (3,3,1,1).
    CHECK_FALSE(exists_simple_realization(std::vector<std::int64_t>{3, 3, 1, 1}).exists);
    const auto report = check_erdos_gallai(canonicalize({3, 3, 1, 1}));
    CHECK(report.erdos_gallai_ok == false);
    CHECK(report.failing_k == 2);
}

TEST_CASE("Erdos-Gallai parity bullet reports failing_k = 0") {
    const auto report = check_erdos_gallai(canonicalize({3, 3, 3}));
    CHECK(report.erdos_gallai_ok == false);
    CHECK(report.failing_k == 0);
}

TEST_CASE("Erdos-Gallai rejects zero degrees; strip_zeros is the caller's tool") {
    CHECK_THROWS_AS(check_erdos_gallai(canonicalize({2, 2, 0})), Error);
    try {
        check_erdos_gallai(canonicalize({2, 2, 0}));
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_degree_present);
    }
    const auto stripped = strip_zeros(std::vector<std::int64_t>{2, 0, 2, 0});
    CHECK(stripped == std::vector<std::int64_t>{2, 2});
}

namespace {

void for_each_descending(std::vector<std::int64_t>& current, std::int64_t n, std::int64_t max_value,
                         const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    if (static_cast<std::int64_t>(current.size()) == n) {
        visit(current);
        return;
    }
    for (std::int64_t v = max_value; v >= 1; --v) {
        current.push_back(v);
        for_each_descending(current, n, v, visit);
        current.pop_back();
    }
}

}  // namespace

TEST_CASE("Erdos-Gallai agrees with the exhaustive simple-graph oracle on every n <= 7") {
    std::int64_t checked = 0;
    for (std::int64_t n = 1; n <= 7; ++n) {
        std::vector<std::int64_t> current;
        for_each_descending(current, n, 6, [&](const std::vector<std::int64_t>& degrees) {
            const DegreeSequence seq = canonicalize(degrees);
            const bool graphical = check_erdos_gallai(seq).erdos_gallai_ok.value();
            CHECK(graphical == exists_simple_realization(seq.degrees()).exists);
            ++checked;
        });
    }
    CHECK(checked == 1715);  // multisets of {1..6} of size 1..7
}
