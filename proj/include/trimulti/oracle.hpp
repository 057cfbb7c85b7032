// Desk-scale ground truth: exhaustive search over edge-multiplicity
// assignments for triangular-multigraph and simple-graph realizations,
// plus the all-threes census.
#ifndef TRIMULTI_ORACLE_HPP
#define TRIMULTI_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trimulti/multigraph.hpp"

namespace trimulti {

struct OracleLimits {
    std::int64_t max_n = 6;
    std::int64_t max_degree_sum = 40;
    // Cooperative cancellation, checked between search nodes.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct OracleResult {
    bool exists = false;
    std::optional<Multigraph> witness;
    std::uint64_t nodes_explored = 0;
    std::int64_t bound_used = 0;  // largest per-pair multiplicity cap min(d_u, d_v)
};

namespace detail {

// Depth-first search over multiplicity assignments to vertex pairs in
// lexicographic order. Each pair {u,v} ranges over 0..min(d_u, d_v); a
// branch survives only if every vertex can still absorb its remaining
// degree within the caps of its unassigned pairs. The first full
// assignment that passes the leaf predicate wins, so results are
// deterministic, and exhaustion is genuine because no realization can
// exceed the per-pair cap.
class RealizationSearch {
public:
    RealizationSearch(std::span<const std::int64_t> degrees, bool simple, bool need_triangular,
                      std::optional<std::chrono::steady_clock::time_point> deadline)
        : n_(static_cast<int>(degrees.size())),
          need_triangular_(need_triangular),
          deadline_(deadline) {
        remaining_.assign(degrees.begin(), degrees.end());
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v) {
                std::int64_t cap = std::min(remaining_[u - 1], remaining_[v - 1]);
                if (simple) cap = std::min<std::int64_t>(cap, 1);
                pairs_.push_back({u, v});
                caps_.push_back(cap);
            }
        assignment_.assign(pairs_.size(), 0);
        capacity_.assign(n_, 0);
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            capacity_[pairs_[p].first - 1] += caps_[p];
            capacity_[pairs_[p].second - 1] += caps_[p];
        }
    }

    OracleResult run() {
        OracleResult result;
        result.bound_used = caps_.empty() ? 0 : *std::max_element(caps_.begin(), caps_.end());
        std::int64_t total = 0;
        for (std::int64_t r : remaining_) total += r;
        if (total % 2 != 0) return result;  // handshake parity
        for (int v = 0; v < n_; ++v)
            if (remaining_[v] > capacity_[v]) return result;
        if (search(0)) {
            MultigraphBuilder builder(n_);
            for (std::size_t p = 0; p < pairs_.size(); ++p)
                if (assignment_[p] > 0) builder.add(pairs_[p].first, pairs_[p].second, assignment_[p]);
            result.exists = true;
            result.witness = builder.build();
            self_check(*result.witness);
        }
        result.nodes_explored = nodes_;
        return result;
    }

private:
    bool search(std::size_t p) {
        ++nodes_;
        if (deadline_ && (nodes_ & 1023) == 0 &&
            std::chrono::steady_clock::now() > *deadline_)
            throw Error(errc::limit_exceeded, "oracle search deadline exceeded");
        if (p == pairs_.size()) return leaf_is_goal();
        const int u = pairs_[p].first - 1;
        const int v = pairs_[p].second - 1;
        capacity_[u] -= caps_[p];
        capacity_[v] -= caps_[p];
        const std::int64_t lo = std::max<std::int64_t>(
            {0, remaining_[u] - capacity_[u], remaining_[v] - capacity_[v]});
        const std::int64_t hi = std::min({caps_[p], remaining_[u], remaining_[v]});
        for (std::int64_t m = lo; m <= hi; ++m) {
            assignment_[p] = m;
            remaining_[u] -= m;
            remaining_[v] -= m;
            const bool found = search(p + 1);
            remaining_[u] += m;
            remaining_[v] += m;
            if (found) return true;
        }
        assignment_[p] = 0;
        capacity_[u] += caps_[p];
        capacity_[v] += caps_[p];
        return false;
    }

    bool leaf_is_goal() const {
        for (int v = 0; v < n_; ++v) assert(remaining_[v] == 0);
        if (!need_triangular_) return true;
        std::array<std::uint16_t, 16> adjacent{};
        for (std::size_t p = 0; p < pairs_.size(); ++p)
            if (assignment_[p] > 0) {
                adjacent[pairs_[p].first - 1] |= std::uint16_t{1} << (pairs_[p].second - 1);
                adjacent[pairs_[p].second - 1] |= std::uint16_t{1} << (pairs_[p].first - 1);
            }
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            if (assignment_[p] == 0) continue;
            // Neighbor masks never include the vertex itself, so any common
            // bit is a genuine third vertex.
            if ((adjacent[pairs_[p].first - 1] & adjacent[pairs_[p].second - 1]) == 0) return false;
        }
        return true;
    }

    // remaining_ is restored on unwind even for the successful branch, so at
    // self-check time it holds the original target degrees again.
    void self_check(const Multigraph& witness) const {
        for (std::int64_t v = 1; v <= n_; ++v)
            if (witness.degree(v) != remaining_[v - 1])
                throw Error(errc::internal_verifier, "oracle witness degree mismatch");
        if (need_triangular_ && !check_triangular(witness).is_triangular)
            throw Error(errc::internal_verifier, "oracle witness is not triangular");
    }

    int n_;
    bool need_triangular_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<std::int64_t> remaining_;   // degree still to place per vertex
    std::vector<std::int64_t> capacity_;    // cap sum of unassigned pairs per vertex
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::int64_t> caps_;
    std::vector<std::int64_t> assignment_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline OracleResult exists_triangular_realization(std::span<const std::int64_t> degrees,
                                                  const OracleLimits& limits = {}) {
    const std::int64_t n = static_cast<std::int64_t>(degrees.size());
    // 16 is the representation ceiling (per-vertex adjacency bitmasks); the
    // configured limit can only lower it.
    const std::int64_t effective_max_n = std::min<std::int64_t>(limits.max_n, 16);
    if (n > effective_max_n)
        throw Error(errc::limit_exceeded, "oracle limit: n = " + std::to_string(n) + " exceeds " +
                                              std::to_string(effective_max_n));
    std::int64_t total = 0;
    for (std::int64_t d : degrees) {
        if (d < 1) throw Error(errc::precondition_violated, "oracle requires degrees >= 1");
        total += d;
    }
    if (total > limits.max_degree_sum)
        throw Error(errc::limit_exceeded, "oracle limit: degree sum " + std::to_string(total) +
                                              " exceeds " + std::to_string(limits.max_degree_sum));
    detail::RealizationSearch search(degrees, /*simple=*/false, /*need_triangular=*/true,
                                     limits.deadline);
    return search.run();
}

// Simple-graph realizability (0/1 multiplicities, no triangularity demand):
// exists iff the sequence is graphical. Hard cap n <= 8.
inline OracleResult exists_simple_realization(
    std::span<const std::int64_t> degrees,
    std::optional<std::chrono::steady_clock::time_point> deadline = {}) {
    const std::int64_t n = static_cast<std::int64_t>(degrees.size());
    if (n > 8)
        throw Error(errc::limit_exceeded, "oracle limit: n = " + std::to_string(n) + " exceeds 8");
    for (std::int64_t d : degrees)
        if (d < 0) throw Error(errc::precondition_violated, "oracle requires degrees >= 0");
    detail::RealizationSearch search(degrees, /*simple=*/true, /*need_triangular=*/false, deadline);
    return search.run();
}

struct CensusRow {
    std::int64_t n = 0;
    bool exists = false;
    std::uint64_t nodes_explored = 0;
};

// For 3 <= n <= n_max, does (3, 3, ..., 3) of length n admit a triangular
// multigraph? Odd-sum lengths are settled by parity without searching.
inline std::vector<CensusRow> proposition_census(std::int64_t n_max, const OracleLimits& limits = {}) {
    if (n_max > 8) throw Error(errc::limit_exceeded, "census limit: n_max exceeds 8");
    std::vector<CensusRow> rows;
    for (std::int64_t n = 3; n <= n_max; ++n) {
        if ((3 * n) % 2 != 0) {
            rows.push_back({n, false, 0});
            continue;
        }
        std::vector<std::int64_t> degrees(n, 3);
        OracleLimits census_limits = limits;
        census_limits.max_n = std::max<std::int64_t>(census_limits.max_n, 8);
        census_limits.max_degree_sum = std::max<std::int64_t>(census_limits.max_degree_sum, 3 * n);
        OracleResult result = exists_triangular_realization(degrees, census_limits);
        rows.push_back({n, result.exists, result.nodes_explored});
    }
    return rows;
}

}  // namespace trimulti

#endif
