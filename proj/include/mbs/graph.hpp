#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mbs/errors.hpp"

namespace mbs {

using Edge = std::pair<int, int>;  // stored with first < second

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Finite simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n <= 0) throw InvalidGraph("vertex count must be positive");
        if (n > kMaxVertices) throw InvalidGraph("vertex count exceeds supported maximum");
        adj_.assign(static_cast<std::size_t>(n), 0u);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InvalidGraph("edge endpoint out of range: " + std::to_string(u) + " " +
                                   std::to_string(v));
            if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u));
            if (has_edge(u, v))
                throw InvalidGraph("parallel edge " + std::to_string(u) + " " + std::to_string(v));
            adj_[static_cast<std::size_t>(u)] |= 1u << v;
            adj_[static_cast<std::size_t>(v)] |= 1u << u;
            edges_.push_back(make_edge(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
    }

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const {
        return u != v && (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }
    std::uint32_t neighbor_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return __builtin_popcount(adj_[static_cast<std::size_t>(v)]); }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (std::uint32_t m = neighbor_mask(v); m; m &= m - 1) out.push_back(__builtin_ctz(m));
        return out;
    }

    // Vertices of the component containing `start`, as a bitmask.
    std::uint32_t component_mask(int start) const {
        std::uint32_t seen = 1u << start;
        std::uint32_t frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t m = frontier; m; m &= m - 1)
                next |= adj_[static_cast<std::size_t>(__builtin_ctz(m))];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen;
    }

    bool is_connected() const {
        return component_mask(0) == (n_ >= 32 ? ~0u : (1u << n_) - 1u);
    }

    // Vertex sets of the biconnected components. A bridge forms a 2-vertex
    // block; an isolated vertex contributes nothing.
    std::vector<std::vector<int>> blocks() const {
        BlockState st(n_);
        std::vector<std::vector<int>> out;
        for (int v = 0; v < n_; ++v)
            if (st.num[static_cast<std::size_t>(v)] == -1) block_dfs(v, -1, st, out);
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    static Graph complete(int n) {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e.push_back({u, v});
        return Graph(n, std::move(e));
    }

    static Graph path(int n) {
        std::vector<Edge> e;
        for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
        return Graph(n, std::move(e));
    }

    static Graph cycle(int n) {
        std::vector<Edge> e;
        for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
        e.push_back({0, n - 1});
        return Graph(n, std::move(e));
    }

    static constexpr int kMaxVertices = 31;

private:
    struct BlockState {
        explicit BlockState(int n)
            : num(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0) {}
        std::vector<int> num;
        std::vector<int> low;
        std::vector<Edge> stack;
        int counter = 0;
    };

    void block_dfs(int v, int parent, BlockState& st, std::vector<std::vector<int>>& out) const {
        st.num[static_cast<std::size_t>(v)] = st.low[static_cast<std::size_t>(v)] = st.counter++;
        for (std::uint32_t m = neighbor_mask(v); m; m &= m - 1) {
            const int w = __builtin_ctz(m);
            if (w == parent) continue;
            if (st.num[static_cast<std::size_t>(w)] == -1) {
                st.stack.push_back({v, w});
                block_dfs(w, v, st, out);
                st.low[static_cast<std::size_t>(v)] =
                    std::min(st.low[static_cast<std::size_t>(v)], st.low[static_cast<std::size_t>(w)]);
                if (st.low[static_cast<std::size_t>(w)] >= st.num[static_cast<std::size_t>(v)]) {
                    std::uint32_t members = 0;
                    Edge e;
                    do {
                        e = st.stack.back();
                        st.stack.pop_back();
                        members |= (1u << e.first) | (1u << e.second);
                    } while (e != Edge{v, w});
                    std::vector<int> verts;
                    for (std::uint32_t mm = members; mm; mm &= mm - 1)
                        verts.push_back(__builtin_ctz(mm));
                    out.push_back(std::move(verts));
                }
            } else if (st.num[static_cast<std::size_t>(w)] < st.num[static_cast<std::size_t>(v)]) {
                st.stack.push_back({v, w});
                st.low[static_cast<std::size_t>(v)] =
                    std::min(st.low[static_cast<std::size_t>(v)], st.num[static_cast<std::size_t>(w)]);
            }
        }
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> adj_;
};

// Ordered sequence of distinct vertices; |P| = number of edges.
struct Path {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int source() const { return vertices.front(); }
    int target() const { return vertices.back(); }
    bool operator==(const Path& other) const { return vertices == other.vertices; }
    bool operator<(const Path& other) const { return vertices < other.vertices; }
};

inline bool is_path_of(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const int v = p.vertices[i];
        if (v < 0 || v >= g.vertex_count()) return false;
        if ((seen >> v) & 1u) return false;
        seen |= 1u << v;
        if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
    }
    return true;
}

// A path is induced when non-consecutive vertices are never adjacent.
inline bool is_induced_path_of(const Graph& g, const Path& p) {
    if (!is_path_of(g, p)) return false;
    const auto& vs = p.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 2; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

}  // namespace mbs
