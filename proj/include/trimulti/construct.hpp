// The triangular-multigraph constructions: fan, cycle-square, the n=3/4
// cases, the a/b-sequence split, the realize() dispatcher, and certificate
// replay. Every constructor emits the graph together with a certificate
// (branch + parameters) from which the graph can be rebuilt deterministically.
#ifndef TRIMULTI_CONSTRUCT_HPP
#define TRIMULTI_CONSTRUCT_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trimulti/degree_sequence.hpp"
#include "trimulti/errors.hpp"
#include "trimulti/multigraph.hpp"

namespace trimulti {

enum class Branch {
    fan_odd,
    fan_even_k1,
    fan_even_kgt1,
    cycle_square_odd,
    cycle_square_d0,
    cycle_square_d2,
    cycle_square_d4,
    small_n3,
    small_n4_d0,
    split_odd,
    split_even,
};

inline std::string_view branch_name(Branch branch) {
    switch (branch) {
        case Branch::fan_odd: return "FanOdd";
        case Branch::fan_even_k1: return "FanEvenK1";
        case Branch::fan_even_kgt1: return "FanEvenKGt1";
        case Branch::cycle_square_odd: return "CycleSquareOdd";
        case Branch::cycle_square_d0: return "CycleSquareD0";
        case Branch::cycle_square_d2: return "CycleSquareD2";
        case Branch::cycle_square_d4: return "CycleSquareD4";
        case Branch::small_n3: return "SmallN3";
        case Branch::small_n4_d0: return "SmallN4D0";
        case Branch::split_odd: return "SplitOdd";
        case Branch::split_even: return "SplitEven";
    }
    return "?";
}

inline std::optional<Branch> branch_from_name(std::string_view name) {
    for (Branch b : {Branch::fan_odd, Branch::fan_even_k1, Branch::fan_even_kgt1,
                     Branch::cycle_square_odd, Branch::cycle_square_d0, Branch::cycle_square_d2,
                     Branch::cycle_square_d4, Branch::small_n3, Branch::small_n4_d0,
                     Branch::split_odd, Branch::split_even}) {
        if (branch_name(b) == name) return b;
    }
    return std::nullopt;
}

// Parameters a construction committed to. Which optionals are present is
// determined by the branch: fan branches carry block_index/delta (and
// alpha/beta in the even k=1 case) plus the adjusted degrees that located
// the block; cycle-square branches carry the reduced degrees d_i - 4 and
// their suffix alternating sums; split branches carry block_index only.
struct ConstructionParams {
    std::int64_t alternating = 0;  // serialized as "D"
    std::optional<std::int64_t> block_index;
    std::optional<std::int64_t> delta;
    std::optional<std::int64_t> alpha;
    std::optional<std::int64_t> beta;
    std::vector<std::int64_t> adjusted_degrees;                 // "dbar"
    std::optional<std::vector<std::int64_t>> reduced_degrees;   // "dprime"
    std::optional<std::vector<std::int64_t>> suffix_sums;       // "Dsuffix", positions 2..n

    bool operator==(const ConstructionParams&) const = default;
};

// The two sub-sequences of a split construction: the fan side covers the
// shared vertex plus the tail, the cycle-square side the shared vertex plus
// everything before the tail.
struct SplitParts {
    std::vector<std::int64_t> fan_sequence;    // serialized as "a_seq"
    std::vector<std::int64_t> cycle_sequence;  // "b_seq"
    std::int64_t shared_vertex = 1;
    std::int64_t tail_start = 0;

    bool operator==(const SplitParts&) const = default;
};

struct ConstructionCertificate {
    Branch branch = Branch::fan_odd;
    ConstructionParams params;
    std::optional<SplitParts> split;

    bool operator==(const ConstructionCertificate&) const = default;
};

struct Construction {
    Multigraph graph;
    ConstructionCertificate certificate;
};

class NotRealizableError : public Error {
public:
    explicit NotRealizableError(ValidationReport report)
        : Error(errc::not_realizable, "sequence is not realizable as a triangular multigraph"),
          report_(report) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

namespace detail {

inline void require(bool ok, const char* which) {
    if (!ok) throw Error(errc::precondition_violated, std::string("precondition violated: ") + which);
}

// Positions 2..n must be descending with minimum 4; position 1 is exempt
// (the lemmas do not assume d1 is the largest term) but must be >= 0.
inline void check_relaxed_ordering(std::span<const std::int64_t> d) {
    require(!d.empty() && d[0] >= 0, "d1_nonnegative");
    for (std::size_t i = 2; i < d.size(); ++i) require(d[i - 1] >= d[i], "tail_descending");
    if (d.size() >= 2) require(d.back() >= 4, "tail_min_degree");
}

inline std::int64_t sum_of(std::span<const std::int64_t> d) {
    std::int64_t total = 0;
    for (std::int64_t value : d) total += value;
    return total;
}

// Smallest block index k with prefix(k-1) <= target <= prefix(k); returns
// {k, delta = target - prefix(k-1)}. Entries are the adjusted degrees, all
// positive, so the smallest k with prefix(k) >= target works.
inline std::pair<std::int64_t, std::int64_t> locate_block(std::span<const std::int64_t> adjusted,
                                                          std::int64_t target) {
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i < adjusted.size(); ++i) {
        if (prefix + adjusted[i] >= target)
            return {static_cast<std::int64_t>(i + 1), target - prefix};
        prefix += adjusted[i];
    }
    throw Error(errc::internal_verifier, "fan block index not found");
}

// Fan edge emitters. Degrees are 1-based through at(); position 1 is the
// hub. Each emitter realizes deg(v_i) = d_i exactly and leaves positive
// multiplicity only on hub spokes and the designated rim edges.

inline void emit_fan_odd(MultigraphBuilder& builder, std::span<const std::int64_t> d,
                         std::int64_t k, std::int64_t delta) {
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    builder.reserve(static_cast<std::size_t>(2 * n));
    auto at = [&](std::int64_t i) { return d[static_cast<std::size_t>(i - 1)]; };
    for (std::int64_t i = 1; i <= (n - 1) / 2; ++i) {
        const std::int64_t hi = n - 2 * i + 2;
        const std::int64_t lo = n - 2 * i + 1;
        if (i < k) {
            builder.add(1, hi, at(hi) - 1);
            builder.add(1, lo, at(lo) - 1);
            builder.add(lo, hi, 1);
        } else if (i > k) {
            builder.add(1, hi, 1);
            builder.add(1, lo, 1 + at(lo) - at(hi));
            builder.add(lo, hi, at(hi) - 1);
        } else {
            builder.add(1, hi, 1 + delta);
            builder.add(1, lo, 1 + delta + at(lo) - at(hi));
            builder.add(lo, hi, at(hi) - 1 - delta);
        }
    }
}

inline void emit_fan_even_k1(MultigraphBuilder& builder, std::span<const std::int64_t> d,
                             std::int64_t alpha, std::int64_t beta) {
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    builder.reserve(static_cast<std::size_t>(2 * n));
    auto at = [&](std::int64_t i) { return d[static_cast<std::size_t>(i - 1)]; };
    builder.add(1, n, 2 + alpha);
    builder.add(1, n - 1, 1 + alpha + beta);
    builder.add(1, n - 2, at(n - 2) - at(n - 1) + at(n) - 1 + beta);
    builder.add(n - 1, n, at(n) - 2 - alpha);
    builder.add(n - 2, n - 1, at(n - 1) - at(n) + 1 - beta);
    for (std::int64_t i = 2; i <= (n - 2) / 2; ++i) {
        const std::int64_t hi = n - 2 * i + 1;
        const std::int64_t lo = n - 2 * i;
        builder.add(1, hi, 1);
        builder.add(1, lo, 1 + at(lo) - at(hi));
        builder.add(lo, hi, at(hi) - 1);
    }
}

inline void emit_fan_even_kgt1(MultigraphBuilder& builder, std::span<const std::int64_t> d,
                               std::int64_t k, std::int64_t delta) {
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    builder.reserve(static_cast<std::size_t>(2 * n));
    auto at = [&](std::int64_t i) { return d[static_cast<std::size_t>(i - 1)]; };
    builder.add(1, n, at(n) - 1);
    builder.add(1, n - 1, at(n - 1) - 2);
    builder.add(1, n - 2, at(n - 2) - 1);
    builder.add(n - 1, n, 1);
    builder.add(n - 2, n - 1, 1);
    for (std::int64_t i = 2; i <= (n - 2) / 2; ++i) {
        const std::int64_t hi = n - 2 * i + 1;
        const std::int64_t lo = n - 2 * i;
        if (i < k) {
            builder.add(1, hi, at(hi) - 1);
            builder.add(1, lo, at(lo) - 1);
            builder.add(lo, hi, 1);
        } else if (i > k) {
            builder.add(1, hi, 1);
            builder.add(1, lo, 1 + at(lo) - at(hi));
            builder.add(lo, hi, at(hi) - 1);
        } else {
            builder.add(1, hi, 1 + delta);
            builder.add(1, lo, 1 + delta + at(lo) - at(hi));
            builder.add(lo, hi, at(hi) - 1 - delta);
        }
    }
}

// Cycle-square edge emitter: length-n cycle with m(v_i, v_{i+1}) = 1 + D_{i+1},
// m(v_n, v_1) = 1, all distance-2 chords at multiplicity 1, then the branch
// patch around v_1. suffix[i] holds D_i for 2 <= i <= n (index 1-based).
inline void emit_cycle_square(MultigraphBuilder& builder, std::int64_t n,
                              std::span<const std::int64_t> suffix, Branch branch) {
    builder.reserve(static_cast<std::size_t>(2 * n + 5));
    auto suffix_at = [&](std::int64_t i) { return suffix[static_cast<std::size_t>(i - 2)]; };
    for (std::int64_t i = 1; i <= n - 1; ++i) builder.add(i, i + 1, 1 + suffix_at(i + 1));
    builder.add(n, 1, 1);
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t j = i + 2 > n ? i + 2 - n : i + 2;
        builder.add(i, j, 1);
    }
    if (branch == Branch::cycle_square_d2) {
        builder.add(1, 2, 1);
        builder.add(1, n, 1);
        builder.add(2, n, -1);
    } else if (branch == Branch::cycle_square_d4) {
        builder.add(1, 2, 2);
        builder.add(1, n, 1);
        builder.add(1, 4, 1);
        builder.add(2, n, -1);
        builder.add(2, 4, -1);
    }
}

inline void emit_small_n4_d0(MultigraphBuilder& builder, std::span<const std::int64_t> d) {
    builder.add(1, 2, d[0] - 2);
    builder.add(3, 4, d[2] - 2);
    builder.add(1, 3, 1);
    builder.add(1, 4, 1);
    builder.add(2, 3, 1);
    builder.add(2, 4, 1);
}

}  // namespace detail

// Fan construction. Requires n >= 3, descending tail with minimum 4, even
// sum, d1 <= sum_{i>=2}(d_i - 1), and D >= n - 2. Position 1 becomes the hub.
inline Construction construct_fan(std::span<const std::int64_t> degrees) {
    const std::int64_t n = static_cast<std::int64_t>(degrees.size());
    detail::require(n >= 3, "fan_n_at_least_3");
    detail::check_relaxed_ordering(degrees);
    const std::int64_t total = detail::sum_of(degrees);
    detail::require(total % 2 == 0, "fan_parity");
    const std::int64_t d1 = degrees[0];
    detail::require(d1 <= total - d1 - (n - 1), "fan_d1_bound");
    const std::int64_t big_d = alternating_sum(degrees);
    detail::require(big_d >= n - 2, "fan_alternating_sum");
    auto at = [&](std::int64_t i) { return degrees[static_cast<std::size_t>(i - 1)]; };

    MultigraphBuilder builder(n);
    ConstructionParams params;
    params.alternating = big_d;
    Branch branch;

    if (n % 2 == 1) {
        // D is even and at least n - 2, so at least n - 1 here.
        const std::int64_t target = (big_d - (n - 1)) / 2;
        std::vector<std::int64_t> adjusted;
        adjusted.reserve((n - 1) / 2);
        for (std::int64_t i = 1; i <= (n - 1) / 2; ++i) adjusted.push_back(at(n + 2 - 2 * i) - 2);
        const auto [k, delta] = detail::locate_block(adjusted, target);
        detail::emit_fan_odd(builder, degrees, k, delta);
        branch = Branch::fan_odd;
        params.block_index = k;
        params.delta = delta;
        params.adjusted_degrees = std::move(adjusted);
    } else {
        // Parity strengthens the bound for even n; the formulas rely on it.
        assert(d1 <= total - d1 - n);
        const std::int64_t target = (big_d - (n - 2)) / 2;
        std::vector<std::int64_t> adjusted;
        adjusted.reserve((n - 2) / 2);
        adjusted.push_back(at(n - 1) - 3);
        for (std::int64_t i = 2; i <= (n - 2) / 2; ++i) adjusted.push_back(at(n + 1 - 2 * i) - 2);
        const auto [k, delta] = detail::locate_block(adjusted, target);
        params.block_index = k;
        params.delta = delta;
        params.adjusted_degrees = std::move(adjusted);
        if (k == 1) {
            const std::int64_t alpha = std::min(delta, at(n) - 3);
            const std::int64_t beta = delta - alpha;
            detail::emit_fan_even_k1(builder, degrees, alpha, beta);
            branch = Branch::fan_even_k1;
            params.alpha = alpha;
            params.beta = beta;
        } else {
            detail::emit_fan_even_kgt1(builder, degrees, k, delta);
            branch = Branch::fan_even_kgt1;
        }
    }
    return {builder.build(), {branch, std::move(params), std::nullopt}};
}

namespace detail {

struct CycleSquareParams {
    Branch branch = Branch::cycle_square_odd;
    std::int64_t alternating = 0;
    std::vector<std::int64_t> reduced;  // d_i - 4
    std::vector<std::int64_t> suffix;   // D_i for 2 <= i <= n
};

inline CycleSquareParams derive_cycle_square_params(std::span<const std::int64_t> degrees) {
    const std::int64_t n = static_cast<std::int64_t>(degrees.size());
    require(n >= 5, "cycle_square_n_at_least_5");
    check_relaxed_ordering(degrees);
    CycleSquareParams out;
    out.alternating = alternating_sum(degrees);
    if (n % 2 == 1)
        require(out.alternating == 4, "cycle_square_alternating_sum");
    else
        require(out.alternating == 0 || out.alternating == 2 || out.alternating == 4,
                "cycle_square_alternating_sum");

    out.reduced.reserve(static_cast<std::size_t>(n));
    for (std::int64_t d : degrees) out.reduced.push_back(d - 4);
    // suffix[i-2] = D_i = sum_{j>=i} (-1)^(j-i) (d_j - 4), for 2 <= i <= n.
    out.suffix.assign(static_cast<std::size_t>(n - 1), 0);
    std::int64_t running = 0;
    for (std::int64_t i = n; i >= 2; --i) {
        running = out.reduced[static_cast<std::size_t>(i - 1)] - running;
        out.suffix[static_cast<std::size_t>(i - 2)] = running;
    }

    if (n % 2 == 1)
        out.branch = Branch::cycle_square_odd;
    else if (out.alternating == 0)
        out.branch = Branch::cycle_square_d0;
    else if (out.alternating == 2)
        out.branch = Branch::cycle_square_d2;
    else
        out.branch = Branch::cycle_square_d4;
    return out;
}

}  // namespace detail

// Cycle-square construction. Requires n >= 5, descending tail with minimum 4,
// and D = 4 for odd n or D in {0, 2, 4} for even n.
inline Construction construct_cycle_square(std::span<const std::int64_t> degrees) {
    detail::CycleSquareParams derived = detail::derive_cycle_square_params(degrees);
    const std::int64_t n = static_cast<std::int64_t>(degrees.size());
    MultigraphBuilder builder(n);
    detail::emit_cycle_square(builder, n, derived.suffix, derived.branch);

    ConstructionParams params;
    params.alternating = derived.alternating;
    params.reduced_degrees = std::move(derived.reduced);
    params.suffix_sums = std::move(derived.suffix);
    return {builder.build(), {derived.branch, std::move(params), std::nullopt}};
}

// n = 3 or 4 under conditions (i)-(iii). n = 3 and n = 4 with D >= 2 reduce
// to the fan (and keep its certificate branch); n = 4 with D = 0 forces
// d1 = d2, d3 = d4 and gets the doubled-edge K4 shape.
inline Construction construct_small_n(const DegreeSequence& seq) {
    const std::int64_t n = seq.size();
    detail::require(n == 3 || n == 4, "small_n_size");
    const ValidationReport report = check_triangular_conditions(seq);
    detail::require(report.parity_ok, "small_n_parity");
    detail::require(report.d1_bound_ok, "small_n_d1_bound");
    detail::require(report.min_degree_ok, "small_n_min_degree");

    const std::int64_t big_d = alternating_sum(seq);
    if (n == 3 || big_d >= 2) return construct_fan(seq.degrees());

    assert(big_d == 0);
    MultigraphBuilder builder(4);
    detail::emit_small_n4_d0(builder, seq.degrees());
    ConstructionParams params;
    params.alternating = 0;
    return {builder.build(), {Branch::small_n4_d0, std::move(params), std::nullopt}};
}

struct SplitSequences {
    std::vector<std::int64_t> fan_sequence;    // (a_1, d_tail..d_n), alternating sum 2k
    std::vector<std::int64_t> cycle_sequence;  // (b_1, d_2..d_{tail-1}), alternating sum 4
    std::int64_t tail_pair_count = 0;          // k = (D - 4) / 2
    std::int64_t tail_start = 0;
};

// The intermediate case 6 <= D <= n - 3 (which forces n >= 9): peel off the
// last 2k (odd n) or 2k + 1 (even n) degrees for a fan sharing v_1 with a
// cycle-square on the rest. a_1 + b_1 = d_1 by construction.
inline SplitSequences split_sequences(const DegreeSequence& seq) {
    const std::int64_t n = seq.size();
    const ValidationReport report = check_triangular_conditions(seq);
    detail::require(report.parity_ok, "split_parity");
    detail::require(report.d1_bound_ok, "split_d1_bound");
    detail::require(report.min_degree_ok, "split_min_degree");
    const std::int64_t big_d = alternating_sum(seq);
    detail::require(big_d >= 6 && big_d <= n - 3, "split_alternating_sum_range");

    const auto& d = seq.degrees();
    auto at = [&](std::int64_t i) { return d[static_cast<std::size_t>(i - 1)]; };
    const std::int64_t k = (big_d - 4) / 2;
    const std::int64_t tail_start = n % 2 == 1 ? n - 2 * k + 1 : n - 2 * k;

    SplitSequences parts;
    parts.tail_pair_count = k;
    parts.tail_start = tail_start;

    std::int64_t fan_head = 2 * k;
    for (std::int64_t i = tail_start; i <= n; ++i) fan_head += (i % 2 == 0 ? at(i) : -at(i));
    parts.fan_sequence.push_back(fan_head);
    for (std::int64_t i = tail_start; i <= n; ++i) parts.fan_sequence.push_back(at(i));

    std::int64_t cycle_head = 4;
    for (std::int64_t i = 2; i < tail_start; ++i) cycle_head += (i % 2 == 0 ? at(i) : -at(i));
    parts.cycle_sequence.push_back(cycle_head);
    for (std::int64_t i = 2; i < tail_start; ++i) parts.cycle_sequence.push_back(at(i));

    assert(fan_head + cycle_head == d.front());
    return parts;
}

namespace detail {

// Fan-side vertices map to v_1 plus the tail positions; the cycle side keeps
// its labels 1..tail_start-1, so v_1 is the single shared vertex.
inline std::vector<std::int64_t> fan_relabel_map(std::int64_t fan_size, std::int64_t tail_start) {
    std::vector<std::int64_t> map(static_cast<std::size_t>(fan_size));
    map[0] = 1;
    for (std::int64_t j = 2; j <= fan_size; ++j)
        map[static_cast<std::size_t>(j - 1)] = tail_start + j - 2;
    return map;
}

// The union of the fan part (labels moved to v_1 plus the tail) and the
// cycle-square part (labels kept), assembled in one build. The two parts
// touch disjoint vertex pairs and share only v_1, so summing contributions
// in a single builder is the union at the shared vertex.
inline Multigraph assemble_split_graph(std::span<const std::int64_t> fan_sequence,
                                       std::span<const std::int64_t> cycle_sequence,
                                       std::int64_t tail_start) {
    const std::int64_t n =
        static_cast<std::int64_t>(fan_sequence.size() + cycle_sequence.size()) - 1;
    Construction fan_part = construct_fan(fan_sequence);
    CycleSquareParams cycle = derive_cycle_square_params(cycle_sequence);
    MultigraphBuilder builder(n);
    builder.reserve(static_cast<std::size_t>(2 * n + 5));
    emit_cycle_square(builder, static_cast<std::int64_t>(cycle_sequence.size()), cycle.suffix,
                      cycle.branch);
    const auto map =
        fan_relabel_map(static_cast<std::int64_t>(fan_sequence.size()), tail_start);
    for (const Edge& e : fan_part.graph.edges())
        builder.add(map[static_cast<std::size_t>(e.u - 1)], map[static_cast<std::size_t>(e.v - 1)],
                    e.multiplicity);
    return builder.build();
}

inline Construction construct_split(const DegreeSequence& seq) {
    SplitSequences parts = split_sequences(seq);
    Multigraph graph =
        assemble_split_graph(parts.fan_sequence, parts.cycle_sequence, parts.tail_start);

    ConstructionParams params;
    params.alternating = alternating_sum(seq);
    params.block_index = parts.tail_pair_count;
    SplitParts split{std::move(parts.fan_sequence), std::move(parts.cycle_sequence), 1,
                     parts.tail_start};
    const Branch branch = seq.size() % 2 == 1 ? Branch::split_odd : Branch::split_even;
    return {std::move(graph), {branch, std::move(params), std::move(split)}};
}

inline void verify_construction(const Multigraph& graph, std::span<const std::int64_t> degrees) {
    if (graph.vertex_count() != static_cast<std::int64_t>(degrees.size()))
        throw Error(errc::internal_verifier, "constructed graph has wrong vertex count");
    for (std::int64_t v = 1; v <= graph.vertex_count(); ++v)
        if (graph.degree(v) != degrees[static_cast<std::size_t>(v - 1)])
            throw Error(errc::internal_verifier, "constructed graph has wrong degree at vertex " + std::to_string(v));
    if (!check_triangular(graph).is_triangular)
        throw Error(errc::internal_verifier, "constructed graph is not triangular");
}

inline Multigraph apply_original_labels(Multigraph graph, const DegreeSequence& seq) {
    if (seq.is_identity_order()) return graph;
    return relabel(graph, seq.sorted_to_original());
}

}  // namespace detail

struct Realization {
    Multigraph graph;
    ConstructionCertificate certificate;
};

// Theorem-level dispatcher: rejects sequences failing conditions (i)-(iii),
// then routes n <= 4 to the small cases, D <= 4 to the cycle-square,
// D >= n - 2 to the fan, and the remaining 6 <= D <= n - 3 window to the
// split. The output is re-verified (exact degrees, triangularity) and
// relabelled back to the caller's original input order.
inline Realization realize(const DegreeSequence& seq) {
    const ValidationReport report = check_triangular_conditions(seq);
    if (!report.triangular_conditions_ok()) throw NotRealizableError(report);

    const std::int64_t n = seq.size();
    const std::int64_t big_d = alternating_sum(seq);
    Construction built = [&] {
        if (n <= 4) return construct_small_n(seq);
        if (big_d <= 4) return construct_cycle_square(seq.degrees());
        if (big_d >= n - 2) return construct_fan(seq.degrees());
        return detail::construct_split(seq);
    }();

    detail::verify_construction(built.graph, seq.degrees());
    Multigraph out = detail::apply_original_labels(std::move(built.graph), seq);
    return {std::move(out), std::move(built.certificate)};
}

// Rebuilds a graph from branch + recorded parameters without re-deriving
// them; bit-identical to the graph the certificate was issued for.
inline Multigraph replay(const ConstructionCertificate& certificate, const DegreeSequence& seq) {
    const std::int64_t n = seq.size();
    const auto& degrees = seq.degrees();
    auto replay_mismatch = [] { return Error(errc::precondition_violated, "certificate does not match sequence"); };

    Multigraph graph;
    switch (certificate.branch) {
        case Branch::fan_odd: {
            if (n % 2 == 0 || !certificate.params.block_index || !certificate.params.delta) throw replay_mismatch();
            MultigraphBuilder builder(n);
            detail::emit_fan_odd(builder, degrees, *certificate.params.block_index, *certificate.params.delta);
            graph = builder.build();
            break;
        }
        case Branch::fan_even_k1: {
            if (n % 2 == 1 || !certificate.params.alpha || !certificate.params.beta) throw replay_mismatch();
            MultigraphBuilder builder(n);
            detail::emit_fan_even_k1(builder, degrees, *certificate.params.alpha, *certificate.params.beta);
            graph = builder.build();
            break;
        }
        case Branch::fan_even_kgt1: {
            if (n % 2 == 1 || !certificate.params.block_index || !certificate.params.delta) throw replay_mismatch();
            MultigraphBuilder builder(n);
            detail::emit_fan_even_kgt1(builder, degrees, *certificate.params.block_index, *certificate.params.delta);
            graph = builder.build();
            break;
        }
        case Branch::cycle_square_odd:
        case Branch::cycle_square_d0:
        case Branch::cycle_square_d2:
        case Branch::cycle_square_d4: {
            if (!certificate.params.suffix_sums ||
                static_cast<std::int64_t>(certificate.params.suffix_sums->size()) != n - 1)
                throw replay_mismatch();
            MultigraphBuilder builder(n);
            detail::emit_cycle_square(builder, n, *certificate.params.suffix_sums, certificate.branch);
            graph = builder.build();
            break;
        }
        case Branch::small_n3: {
            // Never emitted by the constructors (n = 3 reduces to the fan);
            // accepted here so the branch vocabulary stays complete.
            if (n != 3) throw replay_mismatch();
            graph = construct_fan(degrees).graph;
            break;
        }
        case Branch::small_n4_d0: {
            if (n != 4) throw replay_mismatch();
            MultigraphBuilder builder(4);
            detail::emit_small_n4_d0(builder, degrees);
            graph = builder.build();
            break;
        }
        case Branch::split_odd:
        case Branch::split_even: {
            if (!certificate.split) throw replay_mismatch();
            const SplitParts& split = *certificate.split;
            graph = detail::assemble_split_graph(split.fan_sequence, split.cycle_sequence,
                                                 split.tail_start);
            break;
        }
    }
    return detail::apply_original_labels(std::move(graph), seq);
}

}  // namespace trimulti

#endif
