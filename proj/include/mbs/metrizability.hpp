#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mbs/betweenness.hpp"
#include "mbs/errors.hpp"
#include "mbs/metric_space.hpp"
#include "mbs/rational.hpp"
#include "mbs/simplex.hpp"

namespace mbs {

// Canonicalizes a raw candidate relation, rejecting degenerate triples and
// trichotomy violations. The BetweennessStructure constructor enforces both.
inline BetweennessStructure validate_candidate(int n, std::vector<Triple> raw) {
    return BetweennessStructure(n, std::move(raw));
}

// The LP encoding of "is induced by some metric": one distance variable per
// unordered pair plus a shared strictness slack.
struct FeasibilityProblem {
    int point_count = 0;
    int pair_variables = 0;
    std::vector<Triple> equalities;            // triples in beta
    std::vector<Triple> strict_inequalities;   // candidate middles not in beta
};

inline FeasibilityProblem build_feasibility_problem(const BetweennessStructure& b) {
    FeasibilityProblem fp;
    const int n = b.point_count();
    fp.point_count = n;
    fp.pair_variables = n * (n - 1) / 2;
    for (int x = 0; x < n; ++x)
        for (int z = x + 1; z < n; ++z)
            for (int y = 0; y < n; ++y) {
                if (y == x || y == z) continue;
                if (b.between(x, y, z))
                    fp.equalities.push_back({x, y, z});
                else
                    fp.strict_inequalities.push_back({x, y, z});
            }
    return fp;
}

namespace detail {
inline int pair_index(int n, int x, int y) {
    if (x > y) std::swap(x, y);
    // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return x * n - x * (x + 1) / 2 + (y - x - 1);
}
}  // namespace detail

// Decides metrizability by maximizing the shared slack eps subject to
//   d(x,z) = d(x,y) + d(y,z)        for (x y z) in beta
//   d(x,z) + eps <= d(x,y) + d(y,z) for every other candidate middle
//   d >= 1 on every pair, eps <= 1.
// Metrizable iff the optimum eps is positive; the returned witness is checked
// to re-induce b exactly. Substituting d = u + 1 and eps = 1 - s turns this
// into min s over nonnegative variables.
inline std::optional<MetricSpace> is_metrizable(const BetweennessStructure& b) {
    const int n = b.point_count();
    if (n == 1) return MetricSpace(1, {Rational(0)});

    const FeasibilityProblem fp = build_feasibility_problem(b);
    const int vars = fp.pair_variables + 1;  // u pairs then s
    const int s_col = fp.pair_variables;

    LpProblem lp;
    lp.num_vars = vars;
    lp.objective.assign(static_cast<std::size_t>(vars), Rational(0));
    lp.objective[static_cast<std::size_t>(s_col)] = 1;

    auto triple_row = [&](const Triple& t) {
        std::vector<Rational> row(static_cast<std::size_t>(vars), Rational(0));
        const auto [x, y, z] = t;
        row[static_cast<std::size_t>(detail::pair_index(n, x, z))] += 1;
        row[static_cast<std::size_t>(detail::pair_index(n, x, y))] -= 1;
        row[static_cast<std::size_t>(detail::pair_index(n, y, z))] -= 1;
        return row;
    };
    for (const auto& t : fp.equalities) {
        lp.rows.push_back(triple_row(t));
        lp.rhs.push_back(Rational(1));
        lp.row_types.push_back(RowType::Equal);
    }
    for (const auto& t : fp.strict_inequalities) {
        auto row = triple_row(t);
        row[static_cast<std::size_t>(s_col)] -= 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rational(0));
        lp.row_types.push_back(RowType::LessEqual);
    }

    const LpSolution sol = lp_minimize(lp);
    if (sol.status == LpStatus::Infeasible) return std::nullopt;
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("metrizability LP cannot be unbounded");
    if (sol.objective >= 1) return std::nullopt;  // eps = 1 - s stays <= 0

    std::vector<Rational> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const Rational value =
                sol.values[static_cast<std::size_t>(detail::pair_index(n, x, y))] + 1;
            d[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
                value;
            d[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)] =
                value;
        }
    MetricSpace witness(n, std::move(d));
    if (!(betweenness_of_metric(witness) == b))
        throw std::logic_error("metrizability witness does not re-induce the structure");
    return witness;
}

namespace detail {

// DFS over pair values in (0,1),(0,2),(1,2),(0,3),... order; a triple is
// checked the moment its last pair gets a value.
inline bool brute_force_dfs(const BetweennessStructure& b, int n, int max_entry,
                            std::vector<std::vector<int>>& d, int i, int j) {
    if (j == n) {
        return true;
    }
    const auto [next_i, next_j] = (i + 1 == j) ? std::pair<int, int>{0, j + 1}
                                               : std::pair<int, int>{i + 1, j};
    for (int value = 1; value <= max_entry; ++value) {
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
        d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = value;
        bool ok = true;
        for (int a = 0; a < i && ok; ++a) {
            // Triple {a, i, j} is now fully assigned.
            const int dij = value;
            const int dai = d[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
            const int daj = d[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
            struct Check {
                int x, y, z, lhs, rhs;
            };
            const Check checks[3] = {
                {a, i, j, daj, dai + dij},  // i between a and j
                {a, j, i, dai, daj + dij},  // j between a and i
                {i, a, j, dij, dai + daj},  // a between i and j
            };
            for (const auto& c : checks) {
                if (b.between(c.x, c.y, c.z)) {
                    if (c.lhs != c.rhs) ok = false;
                } else {
                    if (c.lhs >= c.rhs) ok = false;  // triangle plus strictness
                }
            }
        }
        if (ok && brute_force_dfs(b, n, max_entry, d, next_i, next_j)) return true;
    }
    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 0;
    return false;
}

}  // namespace detail

// Independent oracle: exhaustive search over symmetric integer matrices with
// entries in 1..max_entry. Desk scale only.
inline std::optional<MetricSpace> brute_force_metrizable(const BetweennessStructure& b,
                                                         int max_entry) {
    const int n = b.point_count();
    if (n > 5) throw TooLarge("brute-force metrizability is limited to 5 points");
    if (max_entry < 1) throw std::invalid_argument("max_entry must be positive");
    if (n == 1) return MetricSpace(1, {Rational(0)});
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
    if (!detail::brute_force_dfs(b, n, max_entry, d, 0, 1)) return std::nullopt;
    std::vector<Rational> flat;
    flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            flat.push_back(Rational(d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]));
    return MetricSpace(n, std::move(flat));
}

}  // namespace mbs
