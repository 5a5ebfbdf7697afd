#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mbs/betweenness.hpp"
#include "mbs/errors.hpp"
#include "mbs/geodesics.hpp"
#include "mbs/graph.hpp"
#include "mbs/rational.hpp"
#include "mbs/recognition.hpp"
#include "mbs/weighted_graph.hpp"

namespace mbs {

// A generated weighted graph together with its induced structure and the
// guarantees that were verified while building it.
struct ConstructionResult {
    WeightedGraph weighted;
    BetweennessStructure structure;
    std::vector<std::string> claims;
};

namespace detail {
inline void require_claim(bool ok, const std::string& claim, std::vector<std::string>& claims) {
    if (!ok) throw std::logic_error("construction claim failed: " + claim);
    claims.push_back(claim);
}
}  // namespace detail

// Shrinks the edges of a non-geodesic induced path to eps, unit weight
// elsewhere. The result represents g but is incomparable with B(g).
inline ConstructionResult lemma31_weighting(const Graph& g, const Path& p,
                                            std::optional<Rational> eps_opt = std::nullopt) {
    if (!g.is_connected()) throw DisconnectedGraph("construction needs a connected graph");
    if (!is_induced_path_of(g, p)) throw PathNotInduced("path is not an induced path of the graph");
    const int len = p.length();
    if (len < 1) throw PathNotInduced("path must have at least one edge");
    const MetricSpace dist = graph_metric(g);
    if (Rational(len) == dist.distance(p.source(), p.target()))
        throw PathIsGeodesic("path is a geodesic; the weighting needs a detour");
    // Midpoint of the admissible open interval (0, 1/len).
    const Rational eps = eps_opt.value_or(Rational(1) / Rational(2 * len));
    if (eps <= 0 || eps >= Rational(1) / Rational(len))
        throw BadEpsilon("eps must lie strictly between 0 and 1/" + std::to_string(len));

    std::vector<Rational> weights;
    weights.reserve(g.edges().size());
    std::vector<Edge> path_edges;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        path_edges.push_back(make_edge(p.vertices[i], p.vertices[i + 1]));
    std::sort(path_edges.begin(), path_edges.end());
    for (const Edge& e : g.edges()) {
        const bool on_path = std::binary_search(path_edges.begin(), path_edges.end(), e);
        weights.push_back(on_path ? eps : Rational(1));
    }
    WeightedGraph w(g, std::move(weights));
    BetweennessStructure b = betweenness_of_weighted(w);
    const BetweennessStructure graphic = betweenness_of_graph(g);

    std::vector<std::string> claims;
    detail::require_claim(is_tight(w), "weighted graph is tight", claims);
    detail::require_claim(adjacency_graph(b) == g, "adjacency graph equals the input graph", claims);
    detail::require_claim(!is_extension(b, graphic) && !is_extension(graphic, b),
                          "structure is incomparable with the graphic structure", claims);
    const GeodesicSet geos = weighted_geodesics(w, p.source(), p.target());
    detail::require_claim(geos.paths.size() == 1 && geos.paths.front() == p,
                          "path is the unique geodesic between its endpoints", claims);
    return ConstructionResult{std::move(w), std::move(b), std::move(claims)};
}

// Raises one edge of an induced C4 or diamond to 3/2. Yields a second
// representation of any connected distance-hereditary non-block graph.
inline ConstructionResult step2_weighting(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph("construction needs a connected graph");
    if (!is_distance_hereditary(g))
        throw NotDistanceHereditary("construction needs a distance-hereditary graph");
    if (is_block_graph(g)) throw IsBlockGraph("block graphs are uniquely representable");

    const auto hole = find_c4_or_diamond(g);
    if (!hole) throw std::logic_error("diamond-free chordal graphs are block graphs");
    const int x = hole->x, y = hole->y, u = hole->u;

    const Edge raised = make_edge(x, u);
    std::vector<Rational> weights;
    weights.reserve(g.edges().size());
    for (const Edge& e : g.edges()) weights.push_back(e == raised ? Rational(3, 2) : Rational(1));
    WeightedGraph w(g, std::move(weights));
    BetweennessStructure b = betweenness_of_weighted(w);
    const BetweennessStructure graphic = betweenness_of_graph(g);

    std::vector<std::string> claims;
    detail::require_claim(is_tight(w), "weighted graph is tight", claims);
    detail::require_claim(adjacency_graph(b) == g, "adjacency graph equals the input graph", claims);
    detail::require_claim(graphic.between(x, u, y), "hole middle is collinear in the graphic structure",
                          claims);
    detail::require_claim(!b.between(x, u, y), "hole middle is not collinear in the new structure",
                          claims);
    detail::require_claim(!(b == graphic), "structure differs from the graphic structure", claims);
    return ConstructionResult{std::move(w), std::move(b), std::move(claims)};
}

// The lower-bound family on the balanced complete bipartite graph: one fixed
// vertex per class keeps unit edges, every other edge picks a weight from
// {1, 2}. All resulting structures are distinct representations.
inline std::vector<ConstructionResult> bipartite_family(int n) {
    if (n < 4) throw TooSmall("the bipartite family needs at least 4 vertices");
    const int left = n / 2;
    std::vector<Edge> edges;
    for (int a = 0; a < left; ++a)
        for (int c = left; c < n; ++c) edges.push_back({a, c});
    const Graph g(n, edges);

    // Fixed vertices: the first of each class. Their incident edges stay 1.
    std::vector<std::size_t> free_edges;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].first != 0 && edges[i].second != left) free_edges.push_back(i);

    std::vector<ConstructionResult> family;
    for (std::uint64_t choice = 0; choice < (1ull << free_edges.size()); ++choice) {
        std::vector<Rational> weights(edges.size(), Rational(1));
        for (std::size_t k = 0; k < free_edges.size(); ++k)
            if ((choice >> k) & 1ull) weights[free_edges[k]] = 2;
        WeightedGraph w(g, std::move(weights));
        BetweennessStructure b = betweenness_of_weighted(w);
        std::vector<std::string> claims;
        detail::require_claim(adjacency_graph(b) == g,
                              "adjacency graph equals the complete bipartite graph", claims);
        family.push_back(ConstructionResult{std::move(w), std::move(b), std::move(claims)});
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (family[i].structure == family[j].structure)
                throw std::logic_error("construction claim failed: family structures are distinct");
    for (auto& result : family) result.claims.push_back("distinct from every other family member");
    return family;
}

}  // namespace mbs
