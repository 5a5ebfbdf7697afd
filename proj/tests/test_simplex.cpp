#include <catch2/catch_amalgamated.hpp>

#include "mbs/rational.hpp"
#include "mbs/simplex.hpp"

using namespace mbs;

namespace {
LpProblem problem(int vars, std::vector<std::vector<int>> rows, std::vector<int> rhs,
                  std::vector<RowType> types, std::vector<int> objective) {
    LpProblem p;
    p.num_vars = vars;
    for (auto& r : rows) {
        std::vector<Rational> row;
        for (int v : r) row.push_back(Rational(v));
        p.rows.push_back(std::move(row));
    }
    for (int v : rhs) p.rhs.push_back(Rational(v));
    p.row_types = std::move(types);
    for (int v : objective) p.objective.push_back(Rational(v));
    return p;
}
}  // namespace

TEST_CASE("simplex solves a textbook maximization") {
    // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6  ->  min -3x - 2y, optimum -12.
    const auto p = problem(2, {{1, 1}, {1, 3}}, {4, 6}, {RowType::LessEqual, RowType::LessEqual},
                           {-3, -2});
    const LpSolution s = lp_minimize(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == -12);
    CHECK(s.values[0] == 4);
    CHECK(s.values[1] == 0);
}

TEST_CASE("simplex handles equality rows") {
    // min x + y s.t. x + 2y = 3, x, y >= 0.
    const auto p = problem(2, {{1, 2}}, {3}, {RowType::Equal}, {1, 1});
    const LpSolution s = lp_minimize(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == Rational(3, 2));
    CHECK(s.values[1] == Rational(3, 2));
}

TEST_CASE("simplex reports infeasibility") {
    // x <= 1 and x = 3 cannot both hold.
    const auto p = problem(1, {{1}, {1}}, {1, 3}, {RowType::LessEqual, RowType::Equal}, {1});
    CHECK(lp_minimize(p).status == LpStatus::Infeasible);
}

TEST_CASE("simplex reports unboundedness") {
    // min -x with only x >= 0.
    const auto p = problem(1, {}, {}, {}, {-1});
    CHECK(lp_minimize(p).status == LpStatus::Unbounded);
}

TEST_CASE("simplex with no constraints minimizes at zero") {
    const auto p = problem(2, {}, {}, {}, {1, 2});
    const LpSolution s = lp_minimize(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == 0);
}

TEST_CASE("simplex survives a degenerate cycling-prone instance") {
    // The classic Beale cycling example; Bland's fallback must terminate.
    LpProblem p;
    p.num_vars = 4;
    auto row = [](std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); };
    p.rows.push_back(row({Rational(1, 4), Rational(-8), Rational(-1), Rational(9)}));
    p.rows.push_back(row({Rational(1, 2), Rational(-12), Rational(-1, 2), Rational(3)}));
    p.rows.push_back(row({Rational(0), Rational(0), Rational(1), Rational(0)}));
    p.rhs = {Rational(0), Rational(0), Rational(1)};
    p.row_types = {RowType::LessEqual, RowType::LessEqual, RowType::LessEqual};
    p.objective = {Rational(-3, 4), Rational(20), Rational(-1, 2), Rational(6)};
    const LpSolution s = lp_minimize(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == Rational(-5, 4));
}

TEST_CASE("simplex with negative right-hand sides") {
    // min x + y s.t. -x - y <= -2  (i.e. x + y >= 2).
    const auto p = problem(2, {{-1, -1}}, {-2}, {RowType::LessEqual}, {1, 1});
    const LpSolution s = lp_minimize(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == 2);
}
