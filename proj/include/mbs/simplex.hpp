#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mbs/rational.hpp"

namespace mbs {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class RowType { Equal, LessEqual };

// min c.x subject to the rows, x >= 0, exact rational arithmetic throughout.
struct LpProblem {
    int num_vars = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<RowType> row_types;
    std::vector<Rational> objective;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> values;
};

// Dense two-phase tableau simplex. Dantzig pricing at first, permanently
// switching to Bland's rule after a fixed number of pivots so termination is
// guaranteed.
class SimplexSolver {
public:
    explicit SimplexSolver(const LpProblem& p) : num_structural_(p.num_vars) {
        const std::size_t m = p.rows.size();
        if (p.rhs.size() != m || p.row_types.size() != m ||
            p.objective.size() != static_cast<std::size_t>(p.num_vars))
            throw std::invalid_argument("inconsistent LP shape");

        int num_slacks = 0;
        for (auto t : p.row_types)
            if (t == RowType::LessEqual) ++num_slacks;
        const int total = p.num_vars + num_slacks;

        tableau_.assign(m, std::vector<Rational>(static_cast<std::size_t>(total) + 1, Rational(0)));
        basis_.assign(m, -1);
        int slack = p.num_vars;
        for (std::size_t r = 0; r < m; ++r) {
            if (p.rows[r].size() != static_cast<std::size_t>(p.num_vars))
                throw std::invalid_argument("inconsistent LP row length");
            for (int j = 0; j < p.num_vars; ++j)
                tableau_[r][static_cast<std::size_t>(j)] = p.rows[r][static_cast<std::size_t>(j)];
            tableau_[r].back() = p.rhs[r];
            if (p.row_types[r] == RowType::LessEqual)
                tableau_[r][static_cast<std::size_t>(slack++)] = 1;
            if (tableau_[r].back() < 0)
                for (auto& coef : tableau_[r]) coef = -coef;
        }
        num_total_ = total;
        objective_ = p.objective;
    }

    LpSolution solve() {
        LpSolution out;
        if (!phase_one()) {
            out.status = LpStatus::Infeasible;
            return out;
        }
        return phase_two();
    }

private:
    // Finds a basic feasible solution via artificial variables.
    bool phase_one() {
        const std::size_t m = tableau_.size();
        // Reuse a slack column as the basis wherever it already is a unit
        // column with nonnegative rhs; add artificials elsewhere.
        std::vector<std::size_t> needs_artificial;
        for (std::size_t r = 0; r < m; ++r) {
            int unit_col = -1;
            for (int j = num_structural_; j < num_total_; ++j) {
                if (tableau_[r][static_cast<std::size_t>(j)] != 1) continue;
                bool elsewhere = false;
                for (std::size_t r2 = 0; r2 < m && !elsewhere; ++r2)
                    if (r2 != r && tableau_[r2][static_cast<std::size_t>(j)] != 0) elsewhere = true;
                if (!elsewhere) {
                    unit_col = j;
                    break;
                }
            }
            if (unit_col >= 0)
                basis_[r] = unit_col;
            else
                needs_artificial.push_back(r);
        }
        first_artificial_ = num_total_;
        if (!needs_artificial.empty()) {
            const int added = static_cast<int>(needs_artificial.size());
            for (std::size_t r = 0; r < m; ++r) {
                auto rhs = tableau_[r].back();
                tableau_[r].pop_back();
                tableau_[r].resize(static_cast<std::size_t>(num_total_ + added), Rational(0));
                tableau_[r].push_back(rhs);
            }
            int col = num_total_;
            for (std::size_t r : needs_artificial) {
                tableau_[r][static_cast<std::size_t>(col)] = 1;
                basis_[r] = col++;
            }
            num_total_ += added;
        }

        // Phase-1 reduced costs: cost 1 on artificials, priced out of the basis.
        cost_row_.assign(static_cast<std::size_t>(num_total_) + 1, Rational(0));
        for (int j = first_artificial_; j < num_total_; ++j)
            cost_row_[static_cast<std::size_t>(j)] = 1;
        for (std::size_t r = 0; r < m; ++r)
            if (basis_[r] >= first_artificial_) subtract_row(r, Rational(1));
        iterate();
        if (cost_row_.back() != 0) return false;

        // Drive leftover artificials out of the basis; a row with no
        // structural coefficients is redundant and gets dropped.
        for (std::size_t r = 0; r < tableau_.size();) {
            if (basis_[r] < first_artificial_) {
                ++r;
                continue;
            }
            int pivot_col = -1;
            for (int j = 0; j < first_artificial_; ++j)
                if (tableau_[r][static_cast<std::size_t>(j)] != 0) {
                    pivot_col = j;
                    break;
                }
            if (pivot_col >= 0) {
                pivot(r, pivot_col);
                ++r;
            } else {
                tableau_.erase(tableau_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
        return true;
    }

    LpSolution phase_two() {
        cost_row_.assign(static_cast<std::size_t>(num_total_) + 1, Rational(0));
        for (int j = 0; j < num_structural_; ++j)
            cost_row_[static_cast<std::size_t>(j)] = objective_[static_cast<std::size_t>(j)];
        for (std::size_t r = 0; r < tableau_.size(); ++r) {
            const int b = basis_[r];
            if (b < num_structural_ && objective_[static_cast<std::size_t>(b)] != 0)
                subtract_row(r, objective_[static_cast<std::size_t>(b)]);
        }
        LpSolution out;
        if (!iterate()) {
            out.status = LpStatus::Unbounded;
            return out;
        }
        out.status = LpStatus::Optimal;
        out.objective = -cost_row_.back();
        out.values.assign(static_cast<std::size_t>(num_structural_), Rational(0));
        for (std::size_t r = 0; r < tableau_.size(); ++r)
            if (basis_[r] < num_structural_)
                out.values[static_cast<std::size_t>(basis_[r])] = tableau_[r].back();
        return out;
    }

    // Returns false on unboundedness.
    bool iterate() {
        constexpr int kBlandAfter = 256;
        for (int iteration = 0;; ++iteration) {
            const bool bland = iteration >= kBlandAfter;
            int entering = -1;
            // Artificials start basic and never re-enter; a feasible point has
            // them all at zero, so the restriction loses nothing.
            for (int j = 0; j < first_artificial_; ++j) {
                const auto& rc = cost_row_[static_cast<std::size_t>(j)];
                if (rc >= 0) continue;
                if (bland) {
                    entering = j;
                    break;
                }
                if (entering == -1 || rc < cost_row_[static_cast<std::size_t>(entering)]) entering = j;
            }
            if (entering == -1) return true;

            int leaving = -1;
            Rational best_ratio;
            for (std::size_t r = 0; r < tableau_.size(); ++r) {
                const auto& coef = tableau_[r][static_cast<std::size_t>(entering)];
                if (coef <= 0) continue;
                const Rational ratio = tableau_[r].back() / coef;
                if (leaving == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leaving == -1) return false;
            pivot(static_cast<std::size_t>(leaving), entering);
        }
    }

    void subtract_row(std::size_t r, const Rational& factor) {
        for (std::size_t j = 0; j < cost_row_.size(); ++j)
            if (tableau_[r][j] != 0) cost_row_[j] -= factor * tableau_[r][j];
    }

    void pivot(std::size_t r, int c) {
        const Rational inv = Rational(1) / tableau_[r][static_cast<std::size_t>(c)];
        for (auto& coef : tableau_[r]) coef *= inv;
        for (std::size_t r2 = 0; r2 < tableau_.size(); ++r2) {
            if (r2 == r) continue;
            const Rational factor = tableau_[r2][static_cast<std::size_t>(c)];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < tableau_[r2].size(); ++j)
                if (tableau_[r][j] != 0) tableau_[r2][j] -= factor * tableau_[r][j];
        }
        const Rational factor = cost_row_[static_cast<std::size_t>(c)];
        if (factor != 0)
            for (std::size_t j = 0; j < cost_row_.size(); ++j)
                if (tableau_[r][j] != 0) cost_row_[j] -= factor * tableau_[r][j];
        basis_[r] = c;
    }

    std::vector<std::vector<Rational>> tableau_;  // rows, rhs in the last column
    std::vector<Rational> cost_row_;
    std::vector<int> basis_;
    std::vector<Rational> objective_;
    int num_structural_ = 0;
    int num_total_ = 0;
    int first_artificial_ = 0;
};

inline LpSolution lp_minimize(const LpProblem& p) { return SimplexSolver(p).solve(); }

}  // namespace mbs
