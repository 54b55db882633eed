#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ies/milp.hpp"

namespace ies {

struct LpOptions {
    double feas_tol = 1e-7;   // primal feasibility on scaled rows
    double opt_tol = 1e-9;    // reduced-cost tolerance on scaled columns
    long max_iterations = 2000000;
    bool scale = true;
};

struct LpResult {
    SolveStatus status = SolveStatus::Limit;
    double objective = 0.0;
    double dual_objective = 0.0;  // weak-duality lower bound from the final basis
    std::vector<double> x;        // structural variables, original units
    long iterations = 0;
    std::string note;
};

/// Dense revised simplex over bounded variables with an explicit basis
/// inverse. Integrality is ignored: binaries are treated as continuous
/// within their bounds. Branch-and-bound drives it through set_bounds()
/// plus resolve_dual(), which warm-starts from the current basis.
///
/// Pivoting is Dantzig with a Bland fallback after a degeneracy streak, so
/// repeated solves of the same data take the same path.
class SimplexSolver {
  public:
    explicit SimplexSolver(const MilpProblem& problem, LpOptions options = LpOptions{});

    /// Bounds in original (unscaled) units. Does not touch the basis.
    void set_bounds(int var, double lower, double upper);
    std::pair<double, double> var_bounds(int var) const;

    /// Cold start: two-phase primal from the slack basis.
    LpResult solve();

    /// Warm re-solve after bound changes. Requires a prior solve() on this
    /// instance; falls back to a cold solve internally if the warm path
    /// degrades numerically.
    LpResult resolve_dual();

    long total_pivots() const { return total_pivots_; }

  private:
    enum State : signed char { kBasic = 0, kAtLower = 1, kAtUpper = 2, kFree = 3 };
    enum class LoopExit { Optimal, Unbounded, Infeasible, IterLimit, Stalled };

    void build(const MilpProblem& problem);
    void reset_to_slack_basis();
    void snap_nonbasic_values();
    void compute_basics();
    bool refactorize();
    void ftran(int col, std::vector<double>& w) const;
    void btran_basic_costs(const std::vector<double>& cb, std::vector<double>& y) const;
    void binv_row(int r, std::vector<double>& rho) const;
    void apply_pivot(int entering, int leaving_row, const std::vector<double>& w);

    double infeasibility_of(int var) const;
    double total_infeasibility() const;
    LoopExit primal_loop(bool phase_one, long iter_budget);
    LoopExit dual_loop(long iter_budget);
    LpResult finish(SolveStatus status, const std::string& note);
    double scaled_objective() const;
    double dual_bound() const;

    const MilpProblem* prob_ = nullptr;
    LpOptions opt_;

    int m_ = 0;        // rows
    int n_struct_ = 0; // structural columns
    int n_ = 0;        // structural + slack columns

    std::vector<std::vector<std::pair<int, double>>> cols_;  // scaled sparse columns
    std::vector<double> lower_, upper_;                      // scaled bounds
    std::vector<double> cost_;                               // scaled objective
    std::vector<double> b_;                                  // scaled rhs
    std::vector<double> row_scale_, col_scale_;

    std::vector<int> basic_;           // row -> variable
    std::vector<int> basic_pos_;       // variable -> row or -1
    std::vector<signed char> state_;
    std::vector<double> x_;            // scaled values
    std::vector<double> binv_;         // m*m, column-major
    bool factorized_ = false;
    long pivots_since_refactor_ = 0;
    long total_pivots_ = 0;
    bool has_solved_ = false;

    // scratch
    std::vector<double> w_, y_, cb_, rhs_;
};

}  // namespace ies
