// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mbs/mbs.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace mbs;

namespace {

struct Sweep {
    std::vector<Graph> graphs;                       // all connected, n <= 5
    std::vector<RepresentationReport> reports;       // aligned with graphs
};

Sweep representation_sweep() {
    Sweep sweep;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : connected_labeled_graphs(n)) sweep.graphs.push_back(g);
    sweep.reports.reserve(sweep.graphs.size());
    std::vector<std::optional<RepresentationReport>> slots(sweep.graphs.size());
    parallel_for(sweep.graphs.size(),
                 [&](std::size_t i) { slots[i] = enumerate_representations(sweep.graphs[i]); });
    for (auto& slot : slots) sweep.reports.push_back(std::move(*slot));
    return sweep;
}

// criterion 1 — adjacency fixed point, every connected labeled graph n <= 6
bool adjacency_fixed_point(std::string& detail) {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    for (int n = 1; n <= 6; ++n) {
        const int bits = n * (n - 1) / 2;
        const std::uint64_t total = 1ull << bits;
        const std::size_t chunks = 64;
        std::atomic<std::uint64_t> local_checked{0};
        std::atomic<std::uint64_t> local_violations{0};
        parallel_for(chunks, [&](std::size_t chunk) {
            const std::uint64_t begin = total * chunk / chunks;
            const std::uint64_t end = total * (chunk + 1) / chunks;
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                const Graph g = graph_from_edge_mask(n, mask);
                if (!g.is_connected()) continue;
                ++local_checked;
                if (!(adjacency_graph(betweenness_of_graph(g)) == g)) ++local_violations;
            }
        });
        checked += local_checked;
        violations += local_violations;
    }
    detail = std::to_string(checked) + " graphs, " + std::to_string(violations) + " violations";
    return violations == 0;
}

// criterion 2 — count = 1 <=> block graph <=> bounds above, n <= 5
bool theorem2_sweep(const Sweep& sweep, std::string& detail) {
    std::uint64_t violations = 0;
    for (std::size_t i = 0; i < sweep.graphs.size(); ++i) {
        const bool unique = sweep.reports[i].is_uniquely_representable();
        const bool block = is_block_graph(sweep.graphs[i]);
        const bool above = sweep.reports[i].bounds_above();
        if (!(unique == block && block == above)) ++violations;
    }
    detail = std::to_string(sweep.graphs.size()) + " graphs, " + std::to_string(violations) +
             " counterexamples";
    return violations == 0;
}

// criterion 3 — bounds below <=> distance-hereditary, n <= 5
bool theorem1_sweep(const Sweep& sweep, std::string& detail) {
    std::uint64_t violations = 0;
    for (std::size_t i = 0; i < sweep.graphs.size(); ++i)
        if (sweep.reports[i].bounds_below() != is_distance_hereditary(sweep.graphs[i]))
            ++violations;
    detail = std::to_string(sweep.graphs.size()) + " graphs, " + std::to_string(violations) +
             " counterexamples";
    return violations == 0;
}

// criterion 4 — every labeled tree n <= 5 has exactly one representation
bool dress_trees(const Sweep& sweep, std::string& detail) {
    std::uint64_t trees = 0;
    std::uint64_t violations = 0;
    for (std::size_t i = 0; i < sweep.graphs.size(); ++i) {
        const Graph& g = sweep.graphs[i];
        if (g.edge_count() != g.vertex_count() - 1) continue;
        ++trees;
        if (sweep.reports[i].count() != 1) ++violations;
    }
    detail = std::to_string(trees) + " trees, " + std::to_string(violations) + " violations";
    return violations == 0;
}

// criterion 5 — the bipartite family: 2, 4, 16 distinct representations
bool bipartite_lower_bound(std::string& detail) {
    std::ostringstream info;
    for (int n : {4, 5, 6}) {
        const auto family = bipartite_family(n);  // distinctness verified inside
        const std::uint64_t expected = 1ull << ((n / 2) * ((n + 1) / 2) - n + 1);
        for (const auto& member : family)
            if (!(adjacency_graph(member.structure) == member.weighted.graph())) return false;
        info << "n=" << n << ":" << family.size() << " ";
        if (family.size() != expected) {
            detail = info.str() + "(expected " + std::to_string(expected) + ")";
            return false;
        }
    }
    detail = info.str() + "distinct structures";
    return true;
}

// criterion 6 — the path-shrinking construction on 100 random pairs, n <= 7
bool lemma31_contract(std::string& detail) {
    testing::Rng rng(90061);
    int done = 0;
    int violations = 0;
    while (done < 100) {
        const int n = testing::pick(rng, 5, 7);
        const Graph g = testing::random_connected_graph(rng, n, 0.25);
        const MetricSpace dist = graph_metric(g);
        std::vector<Path> candidates;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (const auto& p : induced_paths(g, x, y))
                    if (Rational(p.length()) > dist.distance(x, y)) candidates.push_back(p);
        if (candidates.empty()) continue;
        const Path& p = candidates[static_cast<std::size_t>(
            testing::pick(rng, 0, static_cast<int>(candidates.size()) - 1))];
        ++done;
        // lemma31_weighting verifies G(B)=g, incomparability and uniqueness,
        // and throws if any claim fails.
        try {
            const ConstructionResult result = lemma31_weighting(g, p);
            const BetweennessStructure graphic = betweenness_of_graph(g);
            if (!(adjacency_graph(result.structure) == g) ||
                is_extension(result.structure, graphic) ||
                is_extension(graphic, result.structure))
                ++violations;
        } catch (const std::exception&) {
            ++violations;
        }
    }
    detail = "100 samples, " + std::to_string(violations) + " violations";
    return violations == 0;
}

// criterion 7 — tight <=> adjacency fixed, 500 random weighted graphs n <= 6
bool tightness_equivalence(std::string& detail) {
    testing::Rng rng(90071);
    std::vector<WeightedGraph> samples;
    samples.reserve(500);
    for (int round = 0; round < 500; ++round)
        samples.push_back(testing::random_weighted_graph(rng, testing::pick(rng, 2, 6)));
    std::atomic<int> violations{0};
    std::atomic<int> tight_count{0};
    parallel_for(samples.size(), [&](std::size_t i) {
        const bool tight = is_tight(samples[i]);
        if (tight) ++tight_count;
        const bool fixed =
            adjacency_graph(betweenness_of_weighted(samples[i])) == samples[i].graph();
        if (tight != fixed) ++violations;
    });
    detail = "500 samples (" + std::to_string(tight_count) + " tight), " +
             std::to_string(violations) + " violations";
    return violations == 0;
}

// criterion 8 — the six geodesic statements
bool prop24_suite(const Sweep& sweep, std::string& detail) {
    std::atomic<std::uint64_t> violations{0};

    // Points 1-5 for the graphic structure of every connected graph n <= 5.
    parallel_for(sweep.graphs.size(), [&](std::size_t i) {
        const WeightedGraph w = WeightedGraph::unit(sweep.graphs[i]);
        if (!check_prop24(betweenness_of_graph(sweep.graphs[i]), &w).all_passed()) ++violations;
    });

    // Points 1-5 for 100 random tight weighted graphs n <= 5.
    testing::Rng rng(90081);
    std::vector<WeightedGraph> samples;
    samples.reserve(100);
    for (int round = 0; round < 100; ++round)
        samples.push_back(testing::random_tight_weighted_graph(rng, testing::pick(rng, 2, 5)));
    parallel_for(samples.size(), [&](std::size_t i) {
        if (!check_prop24(betweenness_of_weighted(samples[i]), &samples[i]).all_passed())
            ++violations;
    });

    // Point 6 on every representation pair produced by criterion 2.
    std::atomic<std::uint64_t> pairs_checked{0};
    parallel_for(sweep.graphs.size(), [&](std::size_t gi) {
        const auto& reps = sweep.reports[gi].representations;
        if (reps.size() < 2) return;
        const int n = sweep.graphs[gi].vertex_count();
        // All-pairs geodesic path sets per representation, computed once.
        std::vector<std::vector<std::vector<Path>>> geos(reps.size());
        for (std::size_t r = 0; r < reps.size(); ++r) {
            geos[r].reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x)
                for (int z = 0; z < n; ++z)
                    geos[r].push_back(structure_geodesics(reps[r], x, z).paths);
        }
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = 0; b < reps.size(); ++b) {
                bool survive = true;
                for (std::size_t pair = 0; pair < geos[b].size() && survive; ++pair)
                    for (const auto& p : geos[b][pair])
                        if (std::find(geos[a][pair].begin(), geos[a][pair].end(), p) ==
                            geos[a][pair].end()) {
                            survive = false;
                            break;
                        }
                if (is_extension(reps[a], reps[b]) != survive) ++violations;
                ++pairs_checked;
            }
    });

    detail = std::to_string(sweep.graphs.size()) + " graphic + 100 weighted structures, " +
             std::to_string(pairs_checked.load()) + " representation pairs, " +
             std::to_string(violations.load()) + " violations";
    return violations == 0;
}

// criterion 9 — LP vs brute force on all candidate relations over 4 points
bool metrizability_oracle_agreement(std::string& detail) {
    std::vector<std::array<int, 3>> subsets{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    std::atomic<int> disagreements{0};
    std::atomic<int> bad_witnesses{0};
    std::atomic<int> metrizable{0};
    parallel_for(256, [&](std::size_t code) {
        std::uint64_t rest = code;
        std::vector<Triple> triples;
        for (const auto& [a, b, c] : subsets) {
            const int state = static_cast<int>(rest & 3ull);
            rest >>= 2;
            if (state == 1) triples.push_back(canonical_triple(b, a, c));
            if (state == 2) triples.push_back(canonical_triple(a, b, c));
            if (state == 3) triples.push_back(canonical_triple(a, c, b));
        }
        const BetweennessStructure b(4, std::move(triples));
        const auto lp = is_metrizable(b);
        const auto bf = brute_force_metrizable(b, 6);
        if (lp.has_value() != bf.has_value()) ++disagreements;
        if (lp) {
            ++metrizable;
            if (!(betweenness_of_metric(*lp) == b)) ++bad_witnesses;
        }
        if (bf && !(betweenness_of_metric(*bf) == b)) ++bad_witnesses;
    });
    detail = "256 candidates (" + std::to_string(metrizable) + " metrizable), " +
             std::to_string(disagreements) + " disagreements, " + std::to_string(bad_witnesses) +
             " bad witnesses";
    return disagreements == 0 && bad_witnesses == 0;
}

// criterion 10 — pruned and unpruned enumeration agree on every n = 4 graph
bool pruning_soundness(std::string& detail) {
    const auto graphs = connected_labeled_graphs(4);
    std::atomic<std::uint64_t> mismatches{0};
    parallel_for(graphs.size(), [&](std::size_t i) {
        const RepresentationReport pruned = enumerate_representations(graphs[i]);
        if (!(pruned.representations == testing::unpruned_representations(graphs[i])))
            ++mismatches;
    });
    detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(mismatches.load()) +
             " mismatching sets";
    return mismatches == 0;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const auto suite_start = clock::now();

    std::cout << "enumerating representations of every connected graph up to 5 vertices...\n";
    const Sweep sweep = representation_sweep();

    struct Criterion {
        int id;
        std::string label;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "adjacency fixed point G(B(g)) = g, n <= 6", adjacency_fixed_point},
        {2, "unique <=> block graph <=> bounds above, n <= 5",
         [&](std::string& d) { return theorem2_sweep(sweep, d); }},
        {3, "bounds below <=> distance-hereditary, n <= 5",
         [&](std::string& d) { return theorem1_sweep(sweep, d); }},
        {4, "trees are uniquely representable, n <= 5",
         [&](std::string& d) { return dress_trees(sweep, d); }},
        {5, "bipartite family sizes 2 / 4 / 16", bipartite_lower_bound},
        {6, "path-shrinking construction contract, 100 samples", lemma31_contract},
        {7, "tight <=> adjacency fixed, 500 samples", tightness_equivalence},
        {8, "geodesic statements (points 1-6)",
         [&](std::string& d) { return prop24_suite(sweep, d); }},
        {9, "metrizability LP vs brute force, 256 candidates", metrizability_oracle_agreement},
        {10, "pruned = unpruned representation sets, n = 4", pruning_soundness},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto seconds =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count() /
            1000.0;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << criterion.id << "  "
                  << criterion.label << "  [" << detail << "]  " << std::fixed
                  << std::setprecision(1) << seconds << "s\n";
        if (!ok) ++failures;
    }

    const auto total =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - suite_start).count() /
        1000.0;
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " FAILED")
              << " in " << std::fixed << std::setprecision(1) << total << "s\n";
    return failures == 0 ? 0 : 1;
}
