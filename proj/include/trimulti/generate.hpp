// Deterministic random test vectors: sequences satisfying the triangular
// multigraph conditions, sampled then repaired (parity) and filtered
// (d1 bound). Uses mt19937_64 with modulo reduction so a seed produces the
// same sequence on every platform.
#ifndef TRIMULTI_GENERATE_HPP
#define TRIMULTI_GENERATE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "trimulti/degree_sequence.hpp"
#include "trimulti/errors.hpp"

namespace trimulti {

namespace detail {

inline std::int64_t bounded(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

inline constexpr int generate_retry_budget = 10000;

inline DegreeSequence generate_valid_sequence(std::uint64_t seed, std::int64_t n_min, std::int64_t n_max,
                                              std::int64_t degree_min, std::int64_t degree_max) {
    if (n_min < 1 || n_min > n_max)
        throw Error(errc::precondition_violated, "empty or invalid n range");
    if (degree_min > degree_max)
        throw Error(errc::precondition_violated, "empty degree range");
    if (degree_min < 4)
        throw Error(errc::precondition_violated, "degree range minimum must be at least 4");

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < generate_retry_budget; ++attempt) {
        const std::int64_t n = detail::bounded(rng, n_min, n_max);
        std::vector<std::int64_t> degrees(static_cast<std::size_t>(n));
        std::int64_t sum = 0;
        for (auto& d : degrees) {
            d = detail::bounded(rng, degree_min, degree_max);
            sum += d;
        }
        std::sort(degrees.begin(), degrees.end(), std::greater<>());
        if (sum % 2 != 0) {
            degrees.front() += 1;  // largest entry stays largest, order intact
            sum += 1;
        }
        if (n < 3) continue;
        if (degrees.front() > sum - degrees.front() - (n - 1)) continue;
        return canonicalize(std::move(degrees));
    }
    throw Error(errc::retry_budget_exceeded, "no valid sequence found within the retry budget");
}

}  // namespace trimulti

#endif
