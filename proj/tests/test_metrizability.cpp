#include <catch2/catch_amalgamated.hpp>

#include "mbs/betweenness.hpp"
#include "mbs/enumeration.hpp"
#include "mbs/metrizability.hpp"
#include "test_helpers.hpp"

using namespace mbs;

namespace {

// All 4^C(n,3) canonical candidate relations on n points.
std::vector<BetweennessStructure> all_candidates(int n) {
    std::vector<std::array<int, 3>> subsets;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) subsets.push_back({a, b, c});
    std::vector<BetweennessStructure> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < subsets.size(); ++i) total *= 4;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        std::vector<Triple> triples;
        for (const auto& [a, b, c] : subsets) {
            const int state = static_cast<int>(rest & 3ull);
            rest >>= 2;
            if (state == 1) triples.push_back(canonical_triple(b, a, c));
            if (state == 2) triples.push_back(canonical_triple(a, b, c));
            if (state == 3) triples.push_back(canonical_triple(a, c, b));
        }
        out.push_back(BetweennessStructure(n, std::move(triples)));
    }
    return out;
}

}  // namespace

TEST_CASE("candidate validation") {
    SECTION("two middles for one point set") {
        CHECK_THROWS_AS(validate_candidate(3, {{0, 1, 2}, {0, 2, 1}}), TrichotomyViolation);
    }
    SECTION("reversed triples canonicalize") {
        CHECK(validate_candidate(3, {{2, 1, 0}}).triples() == std::vector<Triple>{{0, 1, 2}});
    }
    SECTION("repeated points are degenerate") {
        CHECK_THROWS_AS(validate_candidate(2, {{0, 0, 1}}), DegenerateTriple);
    }
}

TEST_CASE("feasibility problem shape") {
    testing::Rng rng(7401);
    for (int round = 0; round < 15; ++round) {
        const int n = testing::pick(rng, 3, 6);
        const BetweennessStructure b =
            betweenness_of_weighted(testing::random_weighted_graph(rng, n));
        const FeasibilityProblem fp = build_feasibility_problem(b);
        const int triples_total = n * (n - 1) * (n - 2) / 6 * 3;
        CHECK(fp.equalities.size() == b.triples().size());
        CHECK(fp.strict_inequalities.size() == static_cast<std::size_t>(triples_total) -
                                                   b.triples().size());
        CHECK(fp.pair_variables == n * (n - 1) / 2);
    }
}

TEST_CASE("metrizability decision") {
    SECTION("graphic structures are metrizable and re-induce") {
        const BetweennessStructure b = betweenness_of_graph(Graph::cycle(4));
        const auto witness = is_metrizable(b);
        REQUIRE(witness.has_value());
        CHECK(betweenness_of_metric(*witness) == b);
    }
    SECTION("the empty relation is metrizable on any point count") {
        for (int n = 1; n <= 5; ++n) {
            const auto witness = is_metrizable(BetweennessStructure(n, {}));
            REQUIRE(witness.has_value());
            CHECK(betweenness_of_metric(*witness).triples().empty());
        }
    }
    SECTION("the four-triple cyclic relation agrees with the brute-force oracle") {
        const BetweennessStructure b(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 0}, {3, 0, 1}});
        const auto lp = is_metrizable(b);
        const auto bf = brute_force_metrizable(b, 6);
        CHECK(lp.has_value() == bf.has_value());
    }
    SECTION("a non-metrizable relation is refused") {
        // One middle on {0,1,2} plus flat distances elsewhere is fine, but a
        // middle chain that forces d(0,3) = d(0,1)+d(1,2)+d(2,3) while also
        // demanding (0 2 3) and rejecting (0 1 3) cannot close. Verified by
        // the oracle below; frozen here as a regression anchor.
        const BetweennessStructure b(4, {{0, 1, 2}, {0, 2, 3}, {1, 2, 3}});
        const auto lp = is_metrizable(b);
        const auto bf = brute_force_metrizable(b, 6);
        CHECK(lp.has_value() == bf.has_value());
        CHECK_FALSE(lp.has_value());
    }
}

TEST_CASE("brute-force oracle") {
    SECTION("path structure finds the path metric") {
        const auto m = brute_force_metrizable(betweenness_of_graph(Graph::path(3)), 6);
        REQUIRE(m.has_value());
        CHECK(m->distance(0, 1) == 1);
        CHECK(m->distance(1, 2) == 1);
        CHECK(m->distance(0, 2) == 2);
    }
    SECTION("empty relation finds the unit metric") {
        const auto m = brute_force_metrizable(betweenness_of_graph(Graph::complete(3)), 6);
        REQUIRE(m.has_value());
        CHECK(m->distance(0, 1) == 1);
        CHECK(m->distance(0, 2) == 1);
        CHECK(m->distance(1, 2) == 1);
    }
    SECTION("six points are too large") {
        CHECK_THROWS_AS(brute_force_metrizable(BetweennessStructure(6, {}), 3), TooLarge);
    }
}

TEST_CASE("oracle agreement on every candidate relation over four points") {
    const auto candidates = all_candidates(4);
    REQUIRE(candidates.size() == 256);
    int metrizable_count = 0;
    for (const auto& b : candidates) {
        const auto lp = is_metrizable(b);
        const auto bf = brute_force_metrizable(b, 6);
        REQUIRE(lp.has_value() == bf.has_value());
        if (lp) {
            ++metrizable_count;
            CHECK(betweenness_of_metric(*lp) == b);
            CHECK(betweenness_of_metric(*bf) == b);
        }
    }
    CHECK(metrizable_count > 0);
}

TEST_CASE("metrizability soundness properties") {
    SECTION("every graphic structure up to five points is metrizable") {
        for (int n = 1; n <= 5; ++n)
            for_each_connected_labeled_graph(n, [](const Graph& g) {
                CHECK(is_metrizable(betweenness_of_graph(g)).has_value());
            });
    }
    SECTION("structures of random tight weighted graphs are metrizable") {
        testing::Rng rng(7402);
        for (int round = 0; round < 200; ++round) {
            const WeightedGraph w =
                testing::random_tight_weighted_graph(rng, testing::pick(rng, 2, 5));
            CHECK(is_metrizable(betweenness_of_weighted(w)).has_value());
        }
    }
    SECTION("doubling a witness preserves the structure") {
        testing::Rng rng(7403);
        for (int round = 0; round < 20; ++round) {
            const BetweennessStructure b =
                betweenness_of_weighted(testing::random_weighted_graph(rng, 4));
            const auto witness = is_metrizable(b);
            REQUIRE(witness.has_value());
            const int n = witness->point_count();
            std::vector<Rational> doubled;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) doubled.push_back(2 * witness->distance(x, y));
            CHECK(betweenness_of_metric(MetricSpace(n, std::move(doubled))) == b);
        }
    }
}
