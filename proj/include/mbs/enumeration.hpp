#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mbs/betweenness.hpp"
#include "mbs/errors.hpp"
#include "mbs/graph.hpp"
#include "mbs/metrizability.hpp"
#include "mbs/parallel.hpp"
#include "mbs/recognition.hpp"

namespace mbs {

// All representations of a small graph. The flags are always derived from the
// representation list.
struct RepresentationReport {
    Graph graph;
    std::vector<BetweennessStructure> representations;

    int count() const { return static_cast<int>(representations.size()); }

    bool bounds_below() const {
        const BetweennessStructure graphic = betweenness_of_graph(graph);
        return std::all_of(representations.begin(), representations.end(),
                           [&](const BetweennessStructure& b) { return is_extension(graphic, b); });
    }

    bool bounds_above() const {
        const BetweennessStructure graphic = betweenness_of_graph(graph);
        return std::all_of(representations.begin(), representations.end(),
                           [&](const BetweennessStructure& b) { return is_extension(b, graphic); });
    }

    bool is_uniquely_representable() const { return count() == 1; }
};

struct EnumerationOptions {
    // Number of search-tree state assignments allowed; mandatory guard at
    // n = 6 where the raw space is 4^20.
    std::optional<std::uint64_t> node_budget;
    // Worker threads for the subtree split; 0 = hardware, 1 = serial. The
    // representation set is a deterministic union either way.
    unsigned workers = 1;
};

namespace detail {

// One state per 3-subset: no collinearity or one of the three middles.
enum : int { kUnassigned = -1, kNoMiddle = 0 };

struct RepresentationSearch {
    explicit RepresentationSearch(const Graph& graph, EnumerationOptions options)
        : g(graph), opts(options), n(graph.vertex_count()) {
        const int pairs = n * (n - 1) / 2;
        middle_count.assign(static_cast<std::size_t>(pairs), 0);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) subsets.push_back({a, b, c});
        state.assign(subsets.size(), kUnassigned);
        subset_index.assign(static_cast<std::size_t>(n * n * n), -1);
        for (std::size_t t = 0; t < subsets.size(); ++t) {
            const auto [a, b, c] = subsets[t];
            subset_index[flat(a, b, c)] = static_cast<int>(t);
        }
        // State k (1..3) makes the k-th smallest point the middle; allowed
        // only when the outer pair is a non-edge.
        allowed.assign(subsets.size(), 0);
        for (std::size_t t = 0; t < subsets.size(); ++t) {
            const auto [a, b, c] = subsets[t];
            int mask = 1 << kNoMiddle;
            if (!g.has_edge(b, c)) mask |= 1 << 1;
            if (!g.has_edge(a, c)) mask |= 1 << 2;
            if (!g.has_edge(a, b)) mask |= 1 << 3;
            allowed[t] = mask;
        }
        last_subset_of_pair.assign(static_cast<std::size_t>(pairs), -1);
        for (std::size_t t = 0; t < subsets.size(); ++t) {
            const auto [a, b, c] = subsets[t];
            for (auto [u, v] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}})
                last_subset_of_pair[static_cast<std::size_t>(pair_index(n, u, v))] =
                    static_cast<int>(t);
        }
    }

    std::vector<BetweennessStructure> run(std::atomic<std::uint64_t>& node_counter) {
        nodes = &node_counter;
        results.clear();
        unsigned workers = opts.workers == 0
                               ? std::max(1u, std::thread::hardware_concurrency())
                               : opts.workers;
        // Split on the first three 3-subsets: up to 64 independent subtrees.
        const std::size_t prefix_len = (workers > 1 && subsets.size() > 4) ? 3 : 0;
        if (prefix_len == 0) {
            dfs(0);
        } else {
            std::vector<std::vector<int>> prefixes;
            collect_prefixes(0, prefix_len, prefixes);
            std::vector<std::vector<BetweennessStructure>> slots(prefixes.size());
            parallel_for(
                prefixes.size(),
                [&](std::size_t i) {
                    RepresentationSearch worker(g, opts);
                    worker.nodes = &node_counter;
                    for (std::size_t t = 0; t < prefixes[i].size(); ++t)
                        worker.replay(t, prefixes[i][static_cast<std::size_t>(t)]);
                    worker.dfs(prefix_len);
                    slots[i] = std::move(worker.results);
                },
                workers);
            for (auto& slot : slots)
                for (auto& b : slot) results.push_back(std::move(b));
        }
        std::sort(results.begin(), results.end(),
                  [](const BetweennessStructure& a, const BetweennessStructure& b) {
                      return a.triples() < b.triples();
                  });
        return std::move(results);
    }

    std::size_t flat(int a, int b, int c) const {
        return (static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(b)) *
                   static_cast<std::size_t>(n) +
               static_cast<std::size_t>(c);
    }

    // True iff the current partial assignment makes y the middle of {x, z}.
    bool assigned_between(int x, int y, int z) const {
        std::array<int, 3> s{x, y, z};
        std::sort(s.begin(), s.end());
        const int t = subset_index[flat(s[0], s[1], s[2])];
        const int st = state[static_cast<std::size_t>(t)];
        if (st <= kNoMiddle) return false;
        return s[static_cast<std::size_t>(st - 1)] == y;
    }

    // Middle of {x,z} within a quad; kUnassigned when the subset is open.
    int middle_state_of(int a, int b, int c) const {
        std::array<int, 3> s{a, b, c};
        std::sort(s.begin(), s.end());
        const int t = subset_index[flat(s[0], s[1], s[2])];
        return state[static_cast<std::size_t>(t)];
    }

    // Sound inference for metric betweenness:
    //   (x y z) and (x z w)  imply  (x y w) and (y z w).
    // Any assigned conclusion that contradicts the implication kills the
    // branch. Only quads touching the subset just assigned need a re-check.
    bool quad_consistent(std::size_t t) const {
        const auto [a, b, c] = subsets[t];
        for (int w = 0; w < n; ++w) {
            if (w == a || w == b || w == c) continue;
            const int quad[4] = {a, b, c, w};
            for (int xi = 0; xi < 4; ++xi)
                for (int yi = 0; yi < 4; ++yi) {
                    if (yi == xi) continue;
                    for (int zi = 0; zi < 4; ++zi) {
                        if (zi == xi || zi == yi) continue;
                        const int wi = 6 - xi - yi - zi;
                        const int x = quad[xi], y = quad[yi], z = quad[zi], v = quad[wi];
                        if (!assigned_between(x, y, z) || !assigned_between(x, z, v)) continue;
                        // Conclusions: (x y v) and (y z v).
                        if (middle_state_of(x, y, v) != kUnassigned && !assigned_between(x, y, v))
                            return false;
                        if (middle_state_of(y, z, v) != kUnassigned && !assigned_between(y, z, v))
                            return false;
                    }
                }
        }
        return true;
    }

    int touched_pair(std::size_t t, int s) const {
        const auto [a, b, c] = subsets[t];
        if (s == 1) return pair_index(n, b, c);
        if (s == 2) return pair_index(n, a, c);
        if (s == 3) return pair_index(n, a, b);
        return -1;
    }

    // Bookkeeping plus pruning for one assignment; false means pruned, with
    // the state rolled back.
    bool try_assign(std::size_t t, int s) {
        if (opts.node_budget) {
            const std::uint64_t seen = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
            if (seen > *opts.node_budget)
                throw BudgetExceeded("representation search exceeded its node budget after " +
                                         std::to_string(seen - 1) + " nodes",
                                     seen - 1);
        }
        state[t] = s;
        const int touched = touched_pair(t, s);
        if (touched >= 0) ++middle_count[static_cast<std::size_t>(touched)];
        // Every non-edge needs a middle once its last subset is decided.
        const auto [a, b, c] = subsets[t];
        bool ok = true;
        for (auto [u, v] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
            const int pi = pair_index(n, u, v);
            if (last_subset_of_pair[static_cast<std::size_t>(pi)] == static_cast<int>(t) &&
                !g.has_edge(u, v) && middle_count[static_cast<std::size_t>(pi)] == 0)
                ok = false;
        }
        if (ok) ok = quad_consistent(t);
        if (!ok) {
            if (touched >= 0) --middle_count[static_cast<std::size_t>(touched)];
            state[t] = kUnassigned;
        }
        return ok;
    }

    void unassign(std::size_t t) {
        const int touched = touched_pair(t, state[t]);
        if (touched >= 0) --middle_count[static_cast<std::size_t>(touched)];
        state[t] = kUnassigned;
    }

    // Re-applies a prefix assignment that already passed the checks.
    void replay(std::size_t t, int s) {
        state[t] = s;
        const int touched = touched_pair(t, s);
        if (touched >= 0) ++middle_count[static_cast<std::size_t>(touched)];
    }

    void dfs(std::size_t t) {
        if (t == subsets.size()) {
            finalize();
            return;
        }
        for (int s = 0; s <= 3; ++s) {
            if (!((allowed[t] >> s) & 1)) continue;
            if (!try_assign(t, s)) continue;
            dfs(t + 1);
            unassign(t);
        }
    }

    void collect_prefixes(std::size_t t, std::size_t depth, std::vector<std::vector<int>>& out) {
        if (t == depth) {
            out.push_back(std::vector<int>(state.begin(),
                                           state.begin() + static_cast<std::ptrdiff_t>(depth)));
            return;
        }
        for (int s = 0; s <= 3; ++s) {
            if (!((allowed[t] >> s) & 1)) continue;
            if (!try_assign(t, s)) continue;
            collect_prefixes(t + 1, depth, out);
            unassign(t);
        }
    }

    void finalize() {
        std::vector<Triple> triples;
        for (std::size_t t = 0; t < subsets.size(); ++t) {
            if (state[t] <= kNoMiddle) continue;
            const auto [a, b, c] = subsets[t];
            const std::array<int, 3> s{a, b, c};
            const int mid = s[static_cast<std::size_t>(state[t] - 1)];
            std::array<int, 2> outer{};
            int oi = 0;
            for (int v : s)
                if (v != mid) outer[static_cast<std::size_t>(oi++)] = v;
            triples.push_back(canonical_triple(outer[0], mid, outer[1]));
        }
        BetweennessStructure candidate(n, std::move(triples));
        if (!is_metrizable(candidate)) return;
        if (!(adjacency_graph(candidate) == g))
            throw std::logic_error("search produced a candidate with the wrong adjacency graph");
        results.push_back(std::move(candidate));
    }

    static int pair_index(int n, int x, int y) { return detail::pair_index(n, x, y); }

    const Graph& g;
    EnumerationOptions opts;
    int n;
    std::vector<std::array<int, 3>> subsets;
    std::vector<int> state;
    std::vector<int> subset_index;
    std::vector<int> allowed;
    std::vector<int> last_subset_of_pair;
    std::vector<int> middle_count;
    std::vector<BetweennessStructure> results;
    std::atomic<std::uint64_t>* nodes = nullptr;
};

}  // namespace detail

// Depth-first assignment over 3-subsets with edge, non-edge and inference
// pruning; exact LP metrizability finalizes every surviving assignment.
inline RepresentationReport enumerate_representations(const Graph& g,
                                                      EnumerationOptions options = {}) {
    if (!g.is_connected()) throw DisconnectedGraph("representations of a disconnected graph");
    if (g.vertex_count() > 6) throw TooLarge("representation search is limited to 6 vertices");
    detail::RepresentationSearch search(g, options);
    std::atomic<std::uint64_t> node_counter{0};
    RepresentationReport report{g, search.run(node_counter)};
    const BetweennessStructure graphic = betweenness_of_graph(g);
    const bool graphic_found =
        std::any_of(report.representations.begin(), report.representations.end(),
                    [&](const BetweennessStructure& b) { return b == graphic; });
    if (!graphic_found)
        throw std::logic_error("the graphic structure must appear among the representations");
    return report;
}

// All 2^C(n,2) labeled graphs on n vertices filtered to the connected ones, in
// edge-mask order.
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1ull) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

inline void for_each_connected_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw TooLarge("labeled enumeration is limited to 7 vertices");
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (g.is_connected()) fn(g);
    }
}

inline std::vector<Graph> connected_labeled_graphs(int n) {
    if (n > 6) throw TooLarge("materialized enumeration is limited to 6 vertices");
    std::vector<Graph> out;
    for_each_connected_labeled_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

// One falsifying graph with the reason, enough to replay the failure.
struct Counterexample {
    Graph graph;
    std::string reason;
};

struct VerdictTable {
    int max_n = 0;
    std::uint64_t graphs_checked = 0;
    std::vector<std::pair<int, std::uint64_t>> checked_per_order;
    std::vector<Counterexample> counterexamples;

    bool verified() const { return counterexamples.empty(); }
};

namespace detail {

template <typename Check>
VerdictTable sweep_connected_graphs(int max_n, unsigned workers, Check&& check) {
    if (max_n > 5) throw TooLarge("theorem sweeps are limited to 5 vertices");
    VerdictTable table;
    table.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Graph> graphs = connected_labeled_graphs(n);
        std::vector<std::optional<Counterexample>> slots(graphs.size());
        parallel_for(
            graphs.size(),
            [&](std::size_t i) { slots[i] = check(graphs[i]); },
            workers);
        for (auto& slot : slots)
            if (slot) table.counterexamples.push_back(std::move(*slot));
        table.graphs_checked += graphs.size();
        table.checked_per_order.push_back({n, graphs.size()});
    }
    return table;
}

}  // namespace detail

// Bounding representations from below must coincide with distance-hereditary.
inline VerdictTable verify_theorem1(int max_n, unsigned workers = 0) {
    return detail::sweep_connected_graphs(
        max_n, workers, [](const Graph& g) -> std::optional<Counterexample> {
            const bool below = enumerate_representations(g).bounds_below();
            const bool dh = is_distance_hereditary(g);
            if (below == dh) return std::nullopt;
            return Counterexample{g, below ? "bounds below but is not distance-hereditary"
                                           : "distance-hereditary but does not bound below"};
        });
}

// Unique representability, block graphs, and bounding from above coincide.
inline VerdictTable verify_theorem2(int max_n, unsigned workers = 0) {
    return detail::sweep_connected_graphs(
        max_n, workers, [](const Graph& g) -> std::optional<Counterexample> {
            const RepresentationReport report = enumerate_representations(g);
            const bool unique = report.is_uniquely_representable();
            const bool block = is_block_graph(g);
            const bool above = report.bounds_above();
            if (unique == block && block == above) return std::nullopt;
            return Counterexample{g, "unique=" + std::to_string(unique) +
                                         " block=" + std::to_string(block) +
                                         " bounds_above=" + std::to_string(above)};
        });
}

// Dress: trees have exactly one representation.
inline VerdictTable verify_dress(int max_n, unsigned workers = 0) {
    return detail::sweep_connected_graphs(
        max_n, workers, [](const Graph& g) -> std::optional<Counterexample> {
            if (g.edge_count() != g.vertex_count() - 1) return std::nullopt;  // not a tree
            const int count = enumerate_representations(g).count();
            if (count == 1) return std::nullopt;
            return Counterexample{g, "tree with " + std::to_string(count) + " representations"};
        });
}

}  // namespace mbs
