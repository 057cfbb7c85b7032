// Loopless multigraph value type (unordered pairs -> positive multiplicities)
// and the independent verifiers every constructor output is checked against.
#ifndef TRIMULTI_MULTIGRAPH_HPP
#define TRIMULTI_MULTIGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trimulti/errors.hpp"

namespace trimulti {

// One stored edge; u < v always, multiplicity >= 1.
struct Edge {
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::int64_t multiplicity = 0;

    auto operator<=>(const Edge&) const = default;
};

class MultigraphBuilder;

// Immutable once built. Vertices are labelled 1..n; an absent pair means
// multiplicity 0; loops are unrepresentable.
class Multigraph {
public:
    Multigraph() = default;

    std::int64_t vertex_count() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::int64_t degree(std::int64_t v) const {
        if (v < 1 || v > n_) throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
        return degree_[v - 1];
    }

    // (neighbor, multiplicity) pairs, ascending by neighbor.
    std::span<const std::pair<std::int64_t, std::int64_t>> neighbors(std::int64_t v) const {
        if (v < 1 || v > n_) throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
        return {adjacency_.data() + offsets_[v - 1], adjacency_.data() + offsets_[v]};
    }

    std::int64_t multiplicity(std::int64_t u, std::int64_t v) const {
        if (u == v) return 0;
        auto span = neighbors(u).size() <= neighbors(v).size() ? neighbors(u) : neighbors(v);
        const std::int64_t other = neighbors(u).size() <= neighbors(v).size() ? v : u;
        auto it = std::lower_bound(span.begin(), span.end(), other,
                                   [](const auto& entry, std::int64_t key) { return entry.first < key; });
        if (it != span.end() && it->first == other) return it->second;
        return 0;
    }

    bool operator==(const Multigraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    friend class MultigraphBuilder;

    std::int64_t n_ = 0;
    std::vector<Edge> edges_;  // sorted by (u, v)
    std::vector<std::int64_t> degree_;
    std::vector<std::size_t> offsets_;
    std::vector<std::pair<std::int64_t, std::int64_t>> adjacency_;
};

// Accumulates signed multiplicity contributions per unordered pair; build()
// merges them, drops pairs that cancel to zero, and indexes the result.
class MultigraphBuilder {
public:
    explicit MultigraphBuilder(std::int64_t n) : n_(n) {
        if (n < 0) throw Error(errc::precondition_violated, "negative vertex count");
    }

    MultigraphBuilder& reserve(std::size_t edge_count) {
        pending_.reserve(edge_count);
        return *this;
    }

    MultigraphBuilder& add(std::int64_t u, std::int64_t v, std::int64_t multiplicity) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw Error(errc::vertex_out_of_range, "edge endpoint out of range");
        if (u == v) throw Error(errc::precondition_violated, "loop edge rejected");
        if (u > v) std::swap(u, v);
        pending_.push_back({u, v, multiplicity});
        return *this;
    }

    Multigraph build() {
        // Counting sort by u (u is bounded by n), then each u-segment by v;
        // comparison-sorting millions of edges is the hot spot otherwise.
        const std::size_t m = pending_.size();
        std::vector<std::size_t> segment(static_cast<std::size_t>(n_) + 2, 0);
        for (const Edge& e : pending_) ++segment[static_cast<std::size_t>(e.u) + 1];
        for (std::size_t i = 1; i < segment.size(); ++i) segment[i] += segment[i - 1];
        std::vector<Edge> by_u(m);
        {
            std::vector<std::size_t> cursor(segment.begin(), segment.end() - 1);
            for (const Edge& e : pending_) by_u[cursor[static_cast<std::size_t>(e.u)]++] = e;
        }
        pending_.clear();
        pending_.shrink_to_fit();
        for (std::int64_t u = 1; u <= n_; ++u)
            std::sort(by_u.begin() + static_cast<std::ptrdiff_t>(segment[static_cast<std::size_t>(u)]),
                      by_u.begin() + static_cast<std::ptrdiff_t>(segment[static_cast<std::size_t>(u) + 1]),
                      [](const Edge& a, const Edge& b) { return a.v < b.v; });

        Multigraph g;
        g.n_ = n_;
        g.edges_.reserve(m);
        for (std::size_t i = 0; i < m;) {
            Edge merged = by_u[i];
            std::size_t j = i + 1;
            while (j < m && by_u[j].u == merged.u && by_u[j].v == merged.v) {
                merged.multiplicity += by_u[j].multiplicity;
                ++j;
            }
            if (merged.multiplicity < 0)
                throw Error(errc::precondition_violated, "negative multiplicity after merging");
            if (merged.multiplicity > 0) g.edges_.push_back(merged);
            i = j;
        }

        g.degree_.assign(n_, 0);
        std::vector<std::size_t> counts(n_ + 1, 0);
        for (const Edge& e : g.edges_) {
            g.degree_[e.u - 1] += e.multiplicity;
            g.degree_[e.v - 1] += e.multiplicity;
            ++counts[e.u];
            ++counts[e.v];
        }
        g.offsets_.assign(n_ + 1, 0);
        for (std::int64_t v = 1; v <= n_; ++v) g.offsets_[v] = g.offsets_[v - 1] + counts[v];
        g.adjacency_.resize(g.offsets_[n_]);
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        // Edges are sorted by (u, v), so every adjacency list comes out
        // ascending: all backward entries of a vertex precede its forward ones.
        for (const Edge& e : g.edges_) {
            g.adjacency_[cursor[e.u - 1]++] = {e.v, e.multiplicity};
            g.adjacency_[cursor[e.v - 1]++] = {e.u, e.multiplicity};
        }
        return g;
    }

private:
    std::int64_t n_;
    std::vector<Edge> pending_;
};

inline std::int64_t degree(const Multigraph& g, std::int64_t v) { return g.degree(v); }

// Degrees in vertex order 1..n (not sorted).
inline std::vector<std::int64_t> degree_sequence_of(const Multigraph& g) {
    std::vector<std::int64_t> out;
    out.reserve(g.vertex_count());
    for (std::int64_t v = 1; v <= g.vertex_count(); ++v) out.push_back(g.degree(v));
    return out;
}

struct TriangularityReport {
    bool is_triangular = false;
    std::optional<std::pair<std::int64_t, std::int64_t>> uncovered_edge;
};

// Every positive edge {u,v} needs a third vertex adjacent to both; the
// verdict only depends on which pairs are positive, never on how positive.
// Walks the smaller adjacency list per edge, so fan-shaped graphs stay O(n log n).
inline TriangularityReport check_triangular(const Multigraph& g) {
    for (const Edge& e : g.edges()) {
        auto span_u = g.neighbors(e.u);
        auto span_v = g.neighbors(e.v);
        const bool u_smaller = span_u.size() <= span_v.size();
        auto probe = u_smaller ? span_u : span_v;
        const std::int64_t other = u_smaller ? e.v : e.u;
        bool covered = false;
        for (const auto& [w, mult] : probe) {
            if (w == other) continue;
            if (g.multiplicity(other, w) >= 1) {
                covered = true;
                break;
            }
        }
        if (!covered) return {false, std::pair{e.u, e.v}};
    }
    return {true, std::nullopt};
}

// Rewrites vertex labels through `mapping` (1-based old -> new, injective).
// The result has max(mapped label) vertices unless a larger count is given.
inline Multigraph relabel(const Multigraph& g, std::span<const std::int64_t> mapping,
                          std::int64_t vertex_count = 0) {
    if (static_cast<std::int64_t>(mapping.size()) != g.vertex_count())
        throw Error(errc::precondition_violated, "relabel mapping size mismatch");
    std::int64_t n_new = vertex_count;
    for (std::int64_t image : mapping) {
        if (image < 1) throw Error(errc::precondition_violated, "relabel image out of range");
        n_new = std::max(n_new, image);
    }
    std::vector<std::int64_t> sorted(mapping.begin(), mapping.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(errc::precondition_violated, "relabel mapping not injective");
    MultigraphBuilder builder(n_new);
    builder.reserve(g.edges().size());
    for (const Edge& e : g.edges()) builder.add(mapping[e.u - 1], mapping[e.v - 1], e.multiplicity);
    return builder.build();
}

// Union of g1 with a relabelled g2, summing multiplicities. The images of
// g2's vertices must meet {1..g1.n} in exactly one vertex, whose degree ends
// up as the sum of its degrees on both sides.
inline Multigraph union_on_shared_vertex(const Multigraph& g1, const Multigraph& g2,
                                         std::span<const std::int64_t> relabel2) {
    if (static_cast<std::int64_t>(relabel2.size()) != g2.vertex_count())
        throw Error(errc::precondition_violated, "relabel mapping size mismatch");
    std::int64_t n = g1.vertex_count();
    std::int64_t shared = 0;
    std::vector<std::int64_t> sorted(relabel2.begin(), relabel2.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(errc::precondition_violated, "relabel mapping not injective");
    for (std::int64_t image : relabel2) {
        if (image < 1) throw Error(errc::precondition_violated, "relabel image out of range");
        if (image <= g1.vertex_count()) ++shared;
        n = std::max(n, image);
    }
    if (shared != 1)
        throw Error(errc::shared_vertex_count_not_one,
                    "graphs share " + std::to_string(shared) + " vertices, expected exactly 1");
    MultigraphBuilder builder(n);
    builder.reserve(g1.edges().size() + g2.edges().size());
    for (const Edge& e : g1.edges()) builder.add(e.u, e.v, e.multiplicity);
    for (const Edge& e : g2.edges()) builder.add(relabel2[e.u - 1], relabel2[e.v - 1], e.multiplicity);
    return builder.build();
}

}  // namespace trimulti

#endif
