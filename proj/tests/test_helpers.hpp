#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "mbs/betweenness.hpp"
#include "mbs/geodesics.hpp"
#include "mbs/graph.hpp"
#include "mbs/metric_space.hpp"
#include "mbs/rational.hpp"
#include "mbs/weighted_graph.hpp"

namespace mbs::testing {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random spanning tree plus a coin flip per leftover pair.
inline Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob = 0.35) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back(make_edge(v, pick(rng, 0, v - 1)));
    std::bernoulli_distribution coin(extra_edge_prob);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (std::find(edges.begin(), edges.end(), make_edge(u, v)) != edges.end()) continue;
            if (coin(rng)) edges.push_back({u, v});
        }
    return Graph(n, std::move(edges));
}

inline Graph random_tree(Rng& rng, int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back(make_edge(v, pick(rng, 0, v - 1)));
    return Graph(n, std::move(edges));
}

// Weights drawn from a small discrete set in [1/2, 2]; the repeated values
// make betweenness equalities common enough to be interesting.
inline Rational random_weight(Rng& rng) {
    static const Rational values[] = {Rational(1, 2), Rational(3, 4), Rational(1),
                                      Rational(5, 4), Rational(3, 2), Rational(2)};
    return values[static_cast<std::size_t>(pick(rng, 0, 5))];
}

inline WeightedGraph random_weighted_graph(Rng& rng, int n, double extra_edge_prob = 0.35) {
    Graph g = random_connected_graph(rng, n, extra_edge_prob);
    std::vector<Rational> weights;
    weights.reserve(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) weights.push_back(random_weight(rng));
    return WeightedGraph(std::move(g), std::move(weights));
}

// Any finite metric arises from a weighted complete graph.
inline MetricSpace random_metric(Rng& rng, int n) {
    if (n == 1) return MetricSpace(1, {Rational(0)});
    Graph g = Graph::complete(n);
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < g.edges().size(); ++i) weights.push_back(random_weight(rng));
    return weighted_graph_metric(WeightedGraph(std::move(g), std::move(weights)));
}

inline WeightedGraph random_tight_weighted_graph(Rng& rng, int n) {
    // Rejection sampling; unit weights are tight, so this terminates.
    for (int attempt = 0; attempt < 500; ++attempt) {
        WeightedGraph w = random_weighted_graph(rng, n);
        if (is_tight(w)) return w;
    }
    return WeightedGraph::unit(random_connected_graph(rng, n));
}

}  // namespace mbs::testing
