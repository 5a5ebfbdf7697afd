#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mbs/errors.hpp"
#include "mbs/graph.hpp"
#include "mbs/rational.hpp"

namespace mbs {

// Finite metric space: an n x n exact-rational distance matrix.
class MetricSpace {
public:
    MetricSpace(int n, std::vector<Rational> d) : n_(n), d_(std::move(d)) {
        if (n <= 0) throw InvalidMetric("point count must be positive");
        if (d_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw InvalidMetric("distance matrix has wrong shape");
        for (int x = 0; x < n; ++x) {
            if (at(x, x) != 0) throw InvalidMetric("nonzero diagonal at " + std::to_string(x));
            for (int y = x + 1; y < n; ++y) {
                if (at(x, y) != at(y, x))
                    throw InvalidMetric("asymmetric at " + std::to_string(x) + "," + std::to_string(y));
                if (at(x, y) <= 0)
                    throw InvalidMetric("nonpositive distance at " + std::to_string(x) + "," +
                                       std::to_string(y));
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (at(x, z) > at(x, y) + at(y, z))
                        throw InvalidMetric("triangle inequality fails on " + std::to_string(x) + "," +
                                           std::to_string(y) + "," + std::to_string(z));
    }

    int point_count() const { return n_; }

    const Rational& distance(int x, int y) const { return at(x, y); }

    bool operator==(const MetricSpace& other) const {
        return n_ == other.n_ && d_ == other.d_;
    }

private:
    const Rational& at(int x, int y) const {
        return d_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(y)];
    }

    int n_;
    std::vector<Rational> d_;
};

// Restriction to a nonempty point subset, relabeled 0..|Y|-1 preserving order.
inline MetricSpace subspace(const MetricSpace& m, std::vector<int> ys) {
    if (ys.empty()) throw EmptySubset("subspace of empty point set");
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const int k = static_cast<int>(ys.size());
    std::vector<Rational> d(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            d[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] =
                m.distance(ys[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)]);
    return MetricSpace(k, std::move(d));
}

// Hop-count shortest-path metric of a connected graph.
inline MetricSpace graph_metric(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph("graph metric of a disconnected graph");
    const int n = g.vertex_count();
    std::vector<Rational> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (std::uint32_t m = g.neighbor_mask(v); m; m &= m - 1) {
                const int w = __builtin_ctz(m);
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (int t = 0; t < n; ++t)
            d[static_cast<std::size_t>(s) * static_cast<std::size_t>(n) + static_cast<std::size_t>(t)] =
                dist[static_cast<std::size_t>(t)];
    }
    return MetricSpace(n, std::move(d));
}

}  // namespace mbs
