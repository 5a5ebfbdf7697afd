#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mbs/errors.hpp"
#include "mbs/graph.hpp"
#include "mbs/metric_space.hpp"
#include "mbs/rational.hpp"
#include "mbs/weighted_graph.hpp"

namespace mbs {

// Canonical collinear triple {x, y, z}: y lies between x and z, with x < z.
// Symmetric duplicates and trivial triples are never stored.
using Triple = std::array<int, 3>;

inline Triple canonical_triple(int x, int y, int z) {
    return x < z ? Triple{x, y, z} : Triple{z, y, x};
}

class BetweennessStructure {
public:
    BetweennessStructure(int n, std::vector<Triple> raw) : n_(n) {
        if (n <= 0) throw InvalidGraph("point count must be positive");
        triples_.reserve(raw.size());
        for (const auto& t : raw) {
            const auto [x, y, z] = t;
            if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n)
                throw InvalidGraph("triple point out of range");
            if (x == y || y == z || x == z)
                throw DegenerateTriple("triple with repeated points: " + std::to_string(x) + " " +
                                       std::to_string(y) + " " + std::to_string(z));
            triples_.push_back(canonical_triple(x, y, z));
        }
        std::sort(triples_.begin(), triples_.end());
        triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
        // Trichotomy: at most one middle per 3-point set.
        for (std::size_t i = 0; i + 1 < triples_.size(); ++i)
            for (std::size_t j = i + 1; j < triples_.size(); ++j) {
                if (!same_point_set(triples_[i], triples_[j])) continue;
                throw TrichotomyViolation("two middles for one point set: {" +
                                          std::to_string(triples_[i][0]) + "," +
                                          std::to_string(triples_[i][1]) + "," +
                                          std::to_string(triples_[i][2]) + "}");
            }
    }

    int point_count() const { return n_; }
    const std::vector<Triple>& triples() const { return triples_; }

    // True iff y lies between x and z. False on repeated points: trivial
    // betweennesses are implied, not stored.
    bool between(int x, int y, int z) const {
        if (x == y || y == z || x == z) return false;
        const Triple t = canonical_triple(x, y, z);
        return std::binary_search(triples_.begin(), triples_.end(), t);
    }

    bool operator==(const BetweennessStructure& other) const {
        return n_ == other.n_ && triples_ == other.triples_;
    }

private:
    static bool same_point_set(const Triple& a, const Triple& b) {
        std::array<int, 3> sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa == sb;
    }

    int n_;
    std::vector<Triple> triples_;
};

inline BetweennessStructure betweenness_of_metric(const MetricSpace& m) {
    const int n = m.point_count();
    std::vector<Triple> triples;
    for (int x = 0; x < n; ++x)
        for (int z = x + 1; z < n; ++z)
            for (int y = 0; y < n; ++y) {
                if (y == x || y == z) continue;
                if (m.distance(x, z) == m.distance(x, y) + m.distance(y, z))
                    triples.push_back({x, y, z});
            }
    return BetweennessStructure(n, std::move(triples));
}

inline BetweennessStructure betweenness_of_graph(const Graph& g) {
    return betweenness_of_metric(graph_metric(g));
}

inline BetweennessStructure betweenness_of_weighted(const WeightedGraph& w) {
    return betweenness_of_metric(weighted_graph_metric(w));
}

// Edge {x,z} iff no third point lies between x and z.
inline Graph adjacency_graph(const BetweennessStructure& b) {
    const int n = b.point_count();
    std::vector<bool> blocked(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    for (const auto& [x, y, z] : b.triples())
        blocked[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(z)] = true;
    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x)
        for (int z = x + 1; z < n; ++z)
            if (!blocked[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(z)])
                edges.push_back({x, z});
    return Graph(n, std::move(edges));
}

namespace detail {
inline std::vector<int> checked_subset(int n, std::vector<int> ys) {
    if (ys.empty()) throw EmptySubset("empty point subset");
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (int y : ys)
        if (y < 0 || y >= n) throw InvalidGraph("subset point out of range: " + std::to_string(y));
    return ys;
}

// Triples of b lying inside Y, still in the ambient labels.
inline std::vector<Triple> triples_within(const BetweennessStructure& b,
                                          const std::vector<int>& sorted_ys) {
    std::vector<Triple> out;
    for (const auto& t : b.triples()) {
        const bool inside =
            std::binary_search(sorted_ys.begin(), sorted_ys.end(), t[0]) &&
            std::binary_search(sorted_ys.begin(), sorted_ys.end(), t[1]) &&
            std::binary_search(sorted_ys.begin(), sorted_ys.end(), t[2]);
        if (inside) out.push_back(t);
    }
    return out;
}
}  // namespace detail

// Restriction B|_Y, relabeled 0..|Y|-1 preserving order.
inline BetweennessStructure substructure(const BetweennessStructure& b, std::vector<int> ys) {
    const auto sorted = detail::checked_subset(b.point_count(), std::move(ys));
    auto rank = [&](int v) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    };
    std::vector<Triple> triples;
    for (const auto& t : detail::triples_within(b, sorted))
        triples.push_back(canonical_triple(rank(t[0]), rank(t[1]), rank(t[2])));
    return BetweennessStructure(static_cast<int>(sorted.size()), std::move(triples));
}

// A <= B in the paper's ordering iff alpha contains beta.
inline bool is_extension(const BetweennessStructure& a, const BetweennessStructure& b) {
    if (a.point_count() != b.point_count())
        throw SizeMismatch("structures have different point counts");
    return std::includes(a.triples().begin(), a.triples().end(), b.triples().begin(),
                         b.triples().end());
}

// Betweenness structure of the path graph visiting `order`, in ambient labels.
inline std::vector<Triple> ordered_triples(const std::vector<int>& order) {
    std::vector<Triple> out;
    const int l = static_cast<int>(order.size());
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            for (int k = j + 1; k < l; ++k)
                out.push_back(canonical_triple(order[static_cast<std::size_t>(i)],
                                               order[static_cast<std::size_t>(j)],
                                               order[static_cast<std::size_t>(k)]));
    std::sort(out.begin(), out.end());
    return out;
}

// If B|_Y is an ordered substructure, returns the ordering y1..yl (direction
// normalized so the first point is smaller than the last). The endpoint
// selection and middle-count sort are only a guess; the candidate is verified
// exactly before being returned.
inline std::optional<std::vector<int>> is_ordered(const BetweennessStructure& b,
                                                  std::vector<int> ys) {
    const auto sorted = detail::checked_subset(b.point_count(), std::move(ys));
    const int l = static_cast<int>(sorted.size());
    if (l <= 2) return sorted;

    auto inner = detail::triples_within(b, sorted);
    std::sort(inner.begin(), inner.end());

    std::vector<int> endpoints;
    for (int y : sorted) {
        const bool is_middle =
            std::any_of(inner.begin(), inner.end(), [&](const Triple& t) { return t[1] == y; });
        if (!is_middle) endpoints.push_back(y);
    }
    if (endpoints.size() != 2) return std::nullopt;

    const int e = endpoints.front();
    std::vector<std::pair<int, int>> ranked;  // (middle count from e, point)
    for (int y : sorted) {
        if (y == e) continue;
        int count = 0;
        for (int z : sorted)
            if (z != e && z != y && b.between(e, z, y)) ++count;
        ranked.push_back({count, y});
    }
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t i = 0; i + 1 < ranked.size(); ++i)
        if (ranked[i].first == ranked[i + 1].first) return std::nullopt;

    std::vector<int> order{e};
    for (const auto& [count, y] : ranked) order.push_back(y);
    if (ordered_triples(order) != inner) return std::nullopt;
    if (order.front() > order.back()) std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace mbs
