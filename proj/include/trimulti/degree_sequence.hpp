// Sequence-level machinery: canonicalized degree sequences, the alternating
// sum that drives construction dispatch, and the sequence predicates
// (triangular-multigraph necessary conditions, Erdos-Gallai).
#ifndef TRIMULTI_DEGREE_SEQUENCE_HPP
#define TRIMULTI_DEGREE_SEQUENCE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trimulti/errors.hpp"

namespace trimulti {

// Degree sums at or above this are rejected so that every downstream sum
// (including the Erdos-Gallai right-hand sides) stays inside int64.
inline constexpr std::int64_t max_degree_sum = std::int64_t{1} << 62;

// A non-increasing degree sequence plus the permutation back to the order
// the caller supplied it in. Construction canonicalizes; instances are
// immutable afterwards and safe to share across threads.
class DegreeSequence {
public:
    // Sorts descending (stable, so ties keep their input order), records the
    // provenance permutation, and validates entries.
    explicit DegreeSequence(std::vector<std::int64_t> raw) {
        if (raw.empty()) throw Error(errc::empty_input, "degree sequence is empty");
        std::vector<std::pair<std::int64_t, std::int64_t>> tagged;
        tagged.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] < 0)
                throw Error(errc::negative_entry, "negative degree at position " + std::to_string(i + 1),
                            static_cast<std::int64_t>(i + 1));
            sum_ += raw[i];
            if (sum_ >= max_degree_sum) throw Error(errc::overflow, "degree sum exceeds 2^62");
            tagged.emplace_back(raw[i], static_cast<std::int64_t>(i + 1));
        }
        std::stable_sort(tagged.begin(), tagged.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        degrees_.reserve(tagged.size());
        perm_.reserve(tagged.size());
        for (const auto& [degree, original_position] : tagged) {
            degrees_.push_back(degree);
            perm_.push_back(original_position);
        }
    }

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(degrees_.size()); }
    const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
    std::int64_t sum() const noexcept { return sum_; }

    // perm: sorted position (0-based here, 1-based values) -> original input position.
    const std::vector<std::int64_t>& sorted_to_original() const noexcept { return perm_; }

    bool is_identity_order() const noexcept {
        for (std::size_t i = 0; i < perm_.size(); ++i)
            if (perm_[i] != static_cast<std::int64_t>(i + 1)) return false;
        return true;
    }

    // Degrees in the order the caller originally supplied them.
    std::vector<std::int64_t> original_order() const {
        std::vector<std::int64_t> out(degrees_.size());
        for (std::size_t i = 0; i < degrees_.size(); ++i) out[perm_[i] - 1] = degrees_[i];
        return out;
    }

    bool operator==(const DegreeSequence& other) const = default;

private:
    std::vector<std::int64_t> degrees_;
    std::vector<std::int64_t> perm_;
    std::int64_t sum_ = 0;
};

inline DegreeSequence canonicalize(std::vector<std::int64_t> raw) { return DegreeSequence(std::move(raw)); }

// Entries equal to zero removed, order otherwise preserved. Callers that
// want the Erdos-Gallai check on zero-padded input strip first.
inline std::vector<std::int64_t> strip_zeros(std::span<const std::int64_t> degrees) {
    std::vector<std::int64_t> out;
    out.reserve(degrees.size());
    for (std::int64_t d : degrees)
        if (d != 0) out.push_back(d);
    return out;
}

// D = d1 - d2 + d3 - ... ; non-negative for descending input, and congruent
// to the plain sum mod 2.
inline std::int64_t alternating_sum(std::span<const std::int64_t> degrees) noexcept {
    std::int64_t acc = 0;
    std::int64_t sign = 1;
    for (std::int64_t d : degrees) {
        acc += sign * d;
        sign = -sign;
    }
    return acc;
}

inline std::int64_t alternating_sum(const DegreeSequence& seq) noexcept {
    return alternating_sum(seq.degrees());
}

// Pass/fail per sequence-level condition. failing_k is present iff the
// Erdos-Gallai verdict is present and false: 0 means the parity bullet
// failed, otherwise it is the smallest violating k.
struct ValidationReport {
    bool ordering_ok = false;
    bool parity_ok = false;
    bool d1_bound_ok = false;
    bool min_degree_ok = false;
    std::optional<bool> erdos_gallai_ok;
    std::optional<std::int64_t> failing_k;

    bool triangular_conditions_ok() const noexcept { return ordering_ok && parity_ok && d1_bound_ok && min_degree_ok; }

    bool operator==(const ValidationReport& other) const = default;
};

// Conditions (i)-(iii) for triangular multigraph degree sequences:
// descending order (guaranteed by the type), even sum, d1 <= sum_{i>=2}(d_i - 1),
// and minimum degree 4 with n >= 3.
inline ValidationReport check_triangular_conditions(const DegreeSequence& seq) {
    ValidationReport report;
    report.ordering_ok = true;
    report.parity_ok = seq.sum() % 2 == 0;
    const std::int64_t d1 = seq.degrees().front();
    report.d1_bound_ok = d1 <= seq.sum() - d1 - (seq.size() - 1);
    report.min_degree_ok = seq.size() >= 3 && seq.degrees().back() >= 4;
    return report;
}

// Erdos-Gallai: even sum, and sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)
// for every k. Zeros are rejected; the theorem is stated for positive integers.
inline ValidationReport check_erdos_gallai(const DegreeSequence& seq) {
    const auto& d = seq.degrees();
    const std::int64_t n = seq.size();
    if (d.back() < 1) throw Error(errc::zero_degree_present, "Erdos-Gallai check requires positive degrees");

    ValidationReport report = check_triangular_conditions(seq);
    if (seq.sum() % 2 != 0) {
        report.erdos_gallai_ok = false;
        report.failing_k = 0;
        return report;
    }

    std::vector<std::int64_t> prefix(n + 1, 0);
    for (std::int64_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];

    for (std::int64_t k = 1; k <= n; ++k) {
        // First index (1-based) past k whose degree is <= k; before it each
        // term of the min-sum contributes k, after it the degrees themselves.
        auto it = std::partition_point(d.begin() + k, d.end(),
                                       [k](std::int64_t value) { return value > k; });
        const std::int64_t j = it - d.begin();  // 0-based count of entries > k within (k, n]
        const std::int64_t rhs = k * (k - 1) + k * (j - k) + (prefix[n] - prefix[j]);
        if (prefix[k] > rhs) {
            report.erdos_gallai_ok = false;
            report.failing_k = k;
            return report;
        }
    }
    report.erdos_gallai_ok = true;
    return report;
}

}  // namespace trimulti

#endif
