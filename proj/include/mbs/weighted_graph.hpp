#pragma once

#include <utility>
#include <vector>

#include "mbs/errors.hpp"
#include "mbs/graph.hpp"
#include "mbs/metric_space.hpp"
#include "mbs/rational.hpp"

namespace mbs {

// Connected graph with positive exact-rational edge weights.
class WeightedGraph {
public:
    // `weights` is parallel to g.edges() (the canonical sorted edge list).
    WeightedGraph(Graph g, std::vector<Rational> weights)
        : g_(std::move(g)), w_(std::move(weights)) {
        if (!g_.is_connected()) throw DisconnectedGraph("weighted graph must be connected");
        if (w_.size() != g_.edges().size())
            throw InvalidWeight("weight count does not match edge count");
        for (const auto& w : w_)
            if (w <= 0) throw InvalidWeight("edge weights must be positive");
    }

    static WeightedGraph unit(Graph g) {
        std::vector<Rational> w(g.edges().size(), Rational(1));
        return WeightedGraph(std::move(g), std::move(w));
    }

    const Graph& graph() const { return g_; }
    const std::vector<Rational>& weights() const { return w_; }

    const Rational& weight(int u, int v) const {
        const Edge e = make_edge(u, v);
        const auto& es = g_.edges();
        const auto it = std::lower_bound(es.begin(), es.end(), e);
        if (it == es.end() || *it != e)
            throw InvalidWeight("no edge " + std::to_string(u) + " " + std::to_string(v));
        return w_[static_cast<std::size_t>(it - es.begin())];
    }

    Rational path_weight(const Path& p) const {
        Rational total(0);
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
            total += weight(p.vertices[i], p.vertices[i + 1]);
        return total;
    }

    bool operator==(const WeightedGraph& other) const {
        return g_ == other.g_ && w_ == other.w_;
    }

private:
    Graph g_;
    std::vector<Rational> w_;
};

// Weighted shortest-path metric, Floyd-Warshall in exact arithmetic.
inline MetricSpace weighted_graph_metric(const WeightedGraph& w) {
    const Graph& g = w.graph();
    const int n = g.vertex_count();
    // Positive weights and connectivity make every distance finite; seed with
    // the sum of all weights plus one as infinity.
    Rational inf(1);
    for (const auto& x : w.weights()) inf += x;
    std::vector<Rational> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), inf);
    auto at = [&](int x, int y) -> Rational& {
        return d[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(y)];
    };
    for (int v = 0; v < n; ++v) at(v, v) = 0;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        at(edges[i].first, edges[i].second) = w.weights()[i];
        at(edges[i].second, edges[i].first) = w.weights()[i];
    }
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (at(x, k) + at(k, y) < at(x, y)) at(x, y) = at(x, k) + at(k, y);
    return MetricSpace(n, std::move(d));
}

}  // namespace mbs
