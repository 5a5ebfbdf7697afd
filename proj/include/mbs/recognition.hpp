#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "mbs/errors.hpp"
#include "mbs/geodesics.hpp"
#include "mbs/graph.hpp"
#include "mbs/metric_space.hpp"

namespace mbs {

namespace detail {

inline bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

inline int induced_edge_count(const Graph& g, const std::vector<int>& vs) {
    int count = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) ++count;
    return count;
}

// Is G[S] a single cycle? Every member has induced degree 2 and S is connected.
inline bool induces_cycle(const Graph& g, std::uint32_t mask) {
    std::vector<int> vs;
    for (std::uint32_t m = mask; m; m &= m - 1) vs.push_back(__builtin_ctz(m));
    if (vs.size() < 3) return false;
    for (int v : vs)
        if (__builtin_popcount(g.neighbor_mask(v) & mask) != 2) return false;
    std::uint32_t seen = 1u << vs[0];
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t m = frontier; m; m &= m - 1)
            next |= g.neighbor_mask(__builtin_ctz(m)) & mask;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == mask;
}

inline std::vector<int> cycle_order(const Graph& g, std::uint32_t mask) {
    std::vector<int> order{__builtin_ctz(mask)};
    std::uint32_t seen = 1u << order[0];
    while (true) {
        const std::uint32_t next = g.neighbor_mask(order.back()) & mask & ~seen;
        if (!next) break;
        order.push_back(__builtin_ctz(next));
        seen |= 1u << order.back();
    }
    return order;
}

}  // namespace detail

// Smallest (by size, then lexicographic vertex set) induced cycle of length at
// least min_len, returned in cycle order. Also the naive chordality oracle.
inline std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int min_len = 4) {
    const int n = g.vertex_count();
    for (int size = min_len; size <= n; ++size) {
        std::optional<std::uint32_t> best;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            if (!detail::induces_cycle(g, mask)) continue;
            best = mask;
            break;  // masks ascend lexicographically from the low vertices
        }
        if (best) return detail::cycle_order(g, *best);
    }
    return std::nullopt;
}

// Every block (2-connected component) must be a clique. Witness: the vertex
// set of the first offending block.
inline bool is_block_graph(const Graph& g, std::vector<int>* witness = nullptr) {
    if (!g.is_connected()) throw DisconnectedGraph("block graph test needs a connected graph");
    for (const auto& block : g.blocks()) {
        if (detail::is_clique(g, block)) continue;
        if (witness != nullptr) *witness = block;
        return false;
    }
    return true;
}

// Chordality by simplicial elimination; the witness is an induced long cycle.
inline bool is_chordal(const Graph& g, std::vector<int>* witness = nullptr) {
    const int n = g.vertex_count();
    std::uint32_t alive = (n >= 32 ? ~0u : (1u << n) - 1u);
    for (int removed = 0; removed < n; ++removed) {
        bool found = false;
        for (std::uint32_t m = alive; m && !found; m &= m - 1) {
            const int v = __builtin_ctz(m);
            std::vector<int> nbrs;
            for (std::uint32_t nm = g.neighbor_mask(v) & alive; nm; nm &= nm - 1)
                nbrs.push_back(__builtin_ctz(nm));
            if (detail::is_clique(g, nbrs)) {
                alive &= ~(1u << v);
                found = true;
            }
        }
        if (!found) {
            if (witness != nullptr) {
                auto cycle = find_induced_cycle(g, 4);
                if (cycle) *witness = *cycle;
            }
            return false;
        }
    }
    return true;
}

// Induced 4-cycle with one chord. Witness: its four vertices, sorted.
inline bool has_diamond(const Graph& g, std::array<int, 4>* witness = nullptr) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const std::vector<int> vs{a, b, c, d};
                    if (detail::induced_edge_count(g, vs) != 5) continue;
                    if (witness != nullptr) *witness = {a, b, c, d};
                    return true;
                }
    return false;
}

// Straight from the characterization: every induced path must be a geodesic.
inline bool is_distance_hereditary(const Graph& g, Path* witness = nullptr) {
    if (!g.is_connected())
        throw DisconnectedGraph("distance-hereditary test needs a connected graph");
    const MetricSpace dist = graph_metric(g);
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (const auto& p : induced_paths(g, x, y))
                if (Rational(p.length()) != dist.distance(x, y)) {
                    if (witness != nullptr) *witness = p;
                    return false;
                }
    return true;
}

// General form: an explicit connected subgraph, given by its vertices (in
// ambient labels) and a subset of the ambient edges on them.
inline bool is_isometric_subgraph(const Graph& g, std::vector<int> vertices,
                                  const std::vector<Edge>& sub_edges) {
    if (!g.is_connected()) throw DisconnectedGraph("ambient graph must be connected");
    if (vertices.empty()) throw EmptySubset("empty vertex subset");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    auto rank = [&](int v) {
        const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v)
            throw InvalidGraph("subgraph edge endpoint outside the vertex set");
        return static_cast<int>(it - vertices.begin());
    };
    std::vector<Edge> relabeled;
    for (const Edge& e : sub_edges) {
        if (!g.has_edge(e.first, e.second))
            throw InvalidGraph("subgraph edge is not an ambient edge");
        relabeled.push_back(make_edge(rank(e.first), rank(e.second)));
    }
    const Graph sub(static_cast<int>(vertices.size()), std::move(relabeled));
    if (!sub.is_connected()) throw DisconnectedSubgraph("subgraph is not connected");
    const MetricSpace inner = graph_metric(sub);
    const MetricSpace ambient = graph_metric(g);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (inner.distance(static_cast<int>(i), static_cast<int>(j)) !=
                ambient.distance(vertices[i], vertices[j]))
                return false;
    return true;
}

// Distances inside the induced subgraph must match the ambient distances.
inline bool is_isometric_subgraph(const Graph& g, std::vector<int> us) {
    if (!g.is_connected()) throw DisconnectedGraph("ambient graph must be connected");
    if (us.empty()) throw EmptySubset("empty vertex subset");
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end()), us.end());
    for (int u : us)
        if (u < 0 || u >= g.vertex_count()) throw InvalidGraph("subset vertex out of range");
    std::vector<Edge> sub_edges;
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = i + 1; j < us.size(); ++j)
            if (g.has_edge(us[i], us[j]))
                sub_edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    const Graph sub(static_cast<int>(us.size()), std::move(sub_edges));
    if (!sub.is_connected()) throw DisconnectedSubgraph("induced subgraph is not connected");
    const MetricSpace inner = graph_metric(sub);
    const MetricSpace ambient = graph_metric(g);
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = i + 1; j < us.size(); ++j)
            if (inner.distance(static_cast<int>(i), static_cast<int>(j)) !=
                ambient.distance(us[i], us[j]))
                return false;
    return true;
}

// Labeled hole for the two-representation construction: an induced C4 or
// diamond with {x,y} a non-edge and {x,u} an edge. Subsets are scanned
// lexicographically and the smallest admissible labels win.
struct FourPointWitness {
    int x, y, u, v;
    bool diamond;
};

inline std::optional<FourPointWitness> find_c4_or_diamond(const Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const std::vector<int> vs{a, b, c, d};
                    const int edges = detail::induced_edge_count(g, vs);
                    const std::uint32_t mask =
                        (1u << a) | (1u << b) | (1u << c) | (1u << d);
                    const bool c4 = edges == 4 && detail::induces_cycle(g, mask);
                    const bool diamond = edges == 5;
                    if (!c4 && !diamond) continue;
                    for (int x : vs) {
                        std::vector<int> non_neighbors;
                        for (int y : vs)
                            if (y != x && !g.has_edge(x, y)) non_neighbors.push_back(y);
                        if (non_neighbors.empty()) continue;
                        const int y = non_neighbors.front();
                        std::vector<int> rest;
                        for (int u : vs)
                            if (u != x && u != y) rest.push_back(u);
                        return FourPointWitness{x, y, rest[0], rest[1], diamond};
                    }
                }
    return std::nullopt;
}

// Verdicts plus certificates; every witness validates against the graph.
struct ClassReport {
    bool is_block_graph = false;
    bool is_chordal = false;
    bool has_diamond = false;
    bool is_distance_hereditary = false;
    std::optional<std::vector<int>> non_clique_block;
    std::optional<std::vector<int>> induced_cycle;
    std::optional<std::array<int, 4>> diamond;
    std::optional<Path> non_geodesic_induced_path;
};

inline ClassReport classify(const Graph& g) {
    ClassReport report;
    std::vector<int> block_witness;
    report.is_block_graph = is_block_graph(g, &block_witness);
    if (!report.is_block_graph) report.non_clique_block = block_witness;
    std::vector<int> cycle_witness;
    report.is_chordal = is_chordal(g, &cycle_witness);
    if (!report.is_chordal) report.induced_cycle = cycle_witness;
    std::array<int, 4> diamond_witness{};
    report.has_diamond = has_diamond(g, &diamond_witness);
    if (report.has_diamond) report.diamond = diamond_witness;
    Path path_witness;
    report.is_distance_hereditary = is_distance_hereditary(g, &path_witness);
    if (!report.is_distance_hereditary) report.non_geodesic_induced_path = path_witness;
    return report;
}

}  // namespace mbs
