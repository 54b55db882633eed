#include "ies/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ies {

namespace {
constexpr double kScaleClampLo = 1e-8;
constexpr double kScaleClampHi = 1e8;
constexpr double kPivotTol = 1e-9;
constexpr long kRefactorInterval = 150;

double clamp_scale(double s) {
    if (!std::isfinite(s) || s <= 0.0) return 1.0;
    return std::clamp(s, kScaleClampLo, kScaleClampHi);
}
}  // namespace

SimplexSolver::SimplexSolver(const MilpProblem& problem, LpOptions options)
    : prob_(&problem), opt_(options) {
    build(problem);
}

void SimplexSolver::build(const MilpProblem& problem) {
    m_ = problem.num_constraints();
    n_struct_ = problem.num_variables();
    n_ = n_struct_ + m_;

    // Structural columns from the row-wise problem.
    cols_.assign(static_cast<std::size_t>(n_), {});
    const auto& rows = problem.constraints();
    for (int i = 0; i < m_; ++i)
        for (const auto& t : rows[static_cast<std::size_t>(i)].terms)
            cols_[static_cast<std::size_t>(t.var)].push_back({i, t.coeff});

    // Geometric-mean equilibration of the structural matrix.
    row_scale_.assign(static_cast<std::size_t>(m_), 1.0);
    col_scale_.assign(static_cast<std::size_t>(n_), 1.0);
    if (opt_.scale) {
        for (int round = 0; round < 2; ++round) {
            for (int j = 0; j < n_struct_; ++j) {
                double lo = kInf, hi = 0.0;
                for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)]) {
                    const double v = std::abs(a) * row_scale_[static_cast<std::size_t>(i)] *
                                     col_scale_[static_cast<std::size_t>(j)];
                    if (v > 0.0) { lo = std::min(lo, v); hi = std::max(hi, v); }
                }
                if (hi > 0.0)
                    col_scale_[static_cast<std::size_t>(j)] =
                        clamp_scale(col_scale_[static_cast<std::size_t>(j)] / std::sqrt(lo * hi));
            }
            std::vector<double> rlo(static_cast<std::size_t>(m_), kInf);
            std::vector<double> rhi(static_cast<std::size_t>(m_), 0.0);
            for (int j = 0; j < n_struct_; ++j)
                for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)]) {
                    const double v = std::abs(a) * row_scale_[static_cast<std::size_t>(i)] *
                                     col_scale_[static_cast<std::size_t>(j)];
                    if (v > 0.0) {
                        rlo[static_cast<std::size_t>(i)] = std::min(rlo[static_cast<std::size_t>(i)], v);
                        rhi[static_cast<std::size_t>(i)] = std::max(rhi[static_cast<std::size_t>(i)], v);
                    }
                }
            for (int i = 0; i < m_; ++i)
                if (rhi[static_cast<std::size_t>(i)] > 0.0)
                    row_scale_[static_cast<std::size_t>(i)] = clamp_scale(
                        row_scale_[static_cast<std::size_t>(i)] /
                        std::sqrt(rlo[static_cast<std::size_t>(i)] * rhi[static_cast<std::size_t>(i)]));
        }
    }
    // Slack columns keep coefficient exactly 1 in the scaled system.
    for (int i = 0; i < m_; ++i) {
        col_scale_[static_cast<std::size_t>(n_struct_ + i)] =
            1.0 / row_scale_[static_cast<std::size_t>(i)];
        cols_[static_cast<std::size_t>(n_struct_ + i)] = {{i, 1.0}};
    }
    for (int j = 0; j < n_struct_; ++j)
        for (auto& [i, a] : cols_[static_cast<std::size_t>(j)])
            a *= row_scale_[static_cast<std::size_t>(i)] * col_scale_[static_cast<std::size_t>(j)];

    b_.assign(static_cast<std::size_t>(m_), 0.0);
    for (int i = 0; i < m_; ++i)
        b_[static_cast<std::size_t>(i)] =
            rows[static_cast<std::size_t>(i)].rhs * row_scale_[static_cast<std::size_t>(i)];

    lower_.assign(static_cast<std::size_t>(n_), 0.0);
    upper_.assign(static_cast<std::size_t>(n_), 0.0);
    cost_.assign(static_cast<std::size_t>(n_), 0.0);
    for (int j = 0; j < n_struct_; ++j) {
        const auto& v = problem.variable(j);
        const double cs = col_scale_[static_cast<std::size_t>(j)];
        lower_[static_cast<std::size_t>(j)] = v.lower / cs;
        upper_[static_cast<std::size_t>(j)] = v.upper / cs;
        cost_[static_cast<std::size_t>(j)] = problem.objective()[static_cast<std::size_t>(j)] * cs;
    }
    for (int i = 0; i < m_; ++i) {
        const int j = n_struct_ + i;
        const double rs = row_scale_[static_cast<std::size_t>(i)];
        switch (rows[static_cast<std::size_t>(i)].relation) {
            case Relation::LessEqual:
                lower_[static_cast<std::size_t>(j)] = 0.0;
                upper_[static_cast<std::size_t>(j)] = kInf;
                break;
            case Relation::GreaterEqual:
                lower_[static_cast<std::size_t>(j)] = -kInf;
                upper_[static_cast<std::size_t>(j)] = 0.0;
                break;
            case Relation::Equal:
                lower_[static_cast<std::size_t>(j)] = 0.0;
                upper_[static_cast<std::size_t>(j)] = 0.0;
                break;
        }
        (void)rs;
    }

    basic_.assign(static_cast<std::size_t>(m_), -1);
    basic_pos_.assign(static_cast<std::size_t>(n_), -1);
    state_.assign(static_cast<std::size_t>(n_), kAtLower);
    x_.assign(static_cast<std::size_t>(n_), 0.0);
    binv_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0.0);
    w_.resize(static_cast<std::size_t>(m_));
    y_.resize(static_cast<std::size_t>(m_));
    cb_.resize(static_cast<std::size_t>(m_));
    rhs_.resize(static_cast<std::size_t>(m_));
}

void SimplexSolver::set_bounds(int var, double lower, double upper) {
    const double cs = col_scale_[static_cast<std::size_t>(var)];
    lower_[static_cast<std::size_t>(var)] = lower / cs;
    upper_[static_cast<std::size_t>(var)] = upper / cs;
}

std::pair<double, double> SimplexSolver::var_bounds(int var) const {
    const double cs = col_scale_[static_cast<std::size_t>(var)];
    return {lower_[static_cast<std::size_t>(var)] * cs, upper_[static_cast<std::size_t>(var)] * cs};
}

void SimplexSolver::reset_to_slack_basis() {
    std::fill(basic_pos_.begin(), basic_pos_.end(), -1);
    for (int i = 0; i < m_; ++i) {
        basic_[static_cast<std::size_t>(i)] = n_struct_ + i;
        basic_pos_[static_cast<std::size_t>(n_struct_ + i)] = i;
        state_[static_cast<std::size_t>(n_struct_ + i)] = kBasic;
    }
    for (int j = 0; j < n_struct_; ++j) {
        const double lo = lower_[static_cast<std::size_t>(j)];
        const double hi = upper_[static_cast<std::size_t>(j)];
        if (std::isfinite(lo)) state_[static_cast<std::size_t>(j)] = kAtLower;
        else if (std::isfinite(hi)) state_[static_cast<std::size_t>(j)] = kAtUpper;
        else state_[static_cast<std::size_t>(j)] = kFree;
    }
    std::fill(binv_.begin(), binv_.end(), 0.0);
    for (int i = 0; i < m_; ++i)
        binv_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(i)] = 1.0;
    factorized_ = true;
    pivots_since_refactor_ = 0;
    snap_nonbasic_values();
    compute_basics();
}

void SimplexSolver::snap_nonbasic_values() {
    for (int j = 0; j < n_; ++j) {
        switch (state_[static_cast<std::size_t>(j)]) {
            case kAtLower: x_[static_cast<std::size_t>(j)] = lower_[static_cast<std::size_t>(j)]; break;
            case kAtUpper: x_[static_cast<std::size_t>(j)] = upper_[static_cast<std::size_t>(j)]; break;
            case kFree: x_[static_cast<std::size_t>(j)] = 0.0; break;
            case kBasic: break;
        }
    }
}

void SimplexSolver::compute_basics() {
    rhs_ = b_;
    for (int j = 0; j < n_; ++j) {
        if (state_[static_cast<std::size_t>(j)] == kBasic) continue;
        const double xj = x_[static_cast<std::size_t>(j)];
        if (xj == 0.0) continue;
        for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)])
            rhs_[static_cast<std::size_t>(i)] -= a * xj;
    }
    // x_B = Binv * rhs, accumulated column-wise.
    std::vector<double> xb(static_cast<std::size_t>(m_), 0.0);
    for (int i = 0; i < m_; ++i) {
        const double f = rhs_[static_cast<std::size_t>(i)];
        if (f == 0.0) continue;
        const double* col = &binv_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_)];
        for (int k = 0; k < m_; ++k) xb[static_cast<std::size_t>(k)] += f * col[k];
    }
    for (int k = 0; k < m_; ++k)
        x_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(k)])] = xb[static_cast<std::size_t>(k)];
}

bool SimplexSolver::refactorize() {
    // Dense Gauss-Jordan inverse of the basis matrix with partial pivoting.
    const std::size_t m = static_cast<std::size_t>(m_);
    std::vector<double> a(m * m, 0.0);  // column-major basis matrix
    for (int k = 0; k < m_; ++k)
        for (const auto& [i, v] : cols_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(k)])])
            a[static_cast<std::size_t>(k) * m + static_cast<std::size_t>(i)] = v;

    std::vector<double> inv(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) inv[i * m + i] = 1.0;
    std::vector<int> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i);

    // Row-reduce [M | I] where M is the basis matrix by columns of `a`.
    // a[c*m + r] is M[r][c].
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        double best = std::abs(a[c * m + c]);
        for (std::size_t r = c + 1; r < m; ++r) {
            const double v = std::abs(a[c * m + r]);
            if (v > best) { best = v; piv = r; }
        }
        if (best < 1e-12) return false;
        if (piv != c) {
            for (std::size_t cc = 0; cc < m; ++cc) {
                std::swap(a[cc * m + c], a[cc * m + piv]);
                std::swap(inv[cc * m + c], inv[cc * m + piv]);
            }
        }
        const double d = a[c * m + c];
        const double dinv = 1.0 / d;
        for (std::size_t cc = 0; cc < m; ++cc) {
            a[cc * m + c] *= dinv;
            inv[cc * m + c] *= dinv;
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c) continue;
            const double f = a[c * m + r];
            if (f == 0.0) continue;
            for (std::size_t cc = 0; cc < m; ++cc) {
                a[cc * m + r] -= f * a[cc * m + c];
                inv[cc * m + r] -= f * inv[cc * m + c];
            }
        }
    }
    binv_ = std::move(inv);
    factorized_ = true;
    pivots_since_refactor_ = 0;
    return true;
}

void SimplexSolver::ftran(int col, std::vector<double>& w) const {
    std::fill(w.begin(), w.end(), 0.0);
    for (const auto& [i, a] : cols_[static_cast<std::size_t>(col)]) {
        const double* bc = &binv_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_)];
        for (int k = 0; k < m_; ++k) w[static_cast<std::size_t>(k)] += a * bc[k];
    }
}

void SimplexSolver::btran_basic_costs(const std::vector<double>& cb, std::vector<double>& y) const {
    for (int i = 0; i < m_; ++i) {
        const double* col = &binv_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_)];
        double s = 0.0;
        for (int k = 0; k < m_; ++k) s += cb[static_cast<std::size_t>(k)] * col[k];
        y[static_cast<std::size_t>(i)] = s;
    }
}

void SimplexSolver::binv_row(int r, std::vector<double>& rho) const {
    for (int i = 0; i < m_; ++i)
        rho[static_cast<std::size_t>(i)] =
            binv_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(r)];
}

void SimplexSolver::apply_pivot(int entering, int leaving_row, const std::vector<double>& w) {
    const double wr = w[static_cast<std::size_t>(leaving_row)];
    // Binv <- E * Binv with the elementary transform built from w.
    std::vector<double> wm1 = w;
    wm1[static_cast<std::size_t>(leaving_row)] -= 1.0;
    const double winv = 1.0 / wr;
    for (int c = 0; c < m_; ++c) {
        double* col = &binv_[static_cast<std::size_t>(c) * static_cast<std::size_t>(m_)];
        const double pr = col[leaving_row] * winv;
        if (pr == 0.0) continue;
        for (int k = 0; k < m_; ++k) col[k] -= wm1[static_cast<std::size_t>(k)] * pr;
    }
    const int leaving = basic_[static_cast<std::size_t>(leaving_row)];
    basic_pos_[static_cast<std::size_t>(leaving)] = -1;
    basic_[static_cast<std::size_t>(leaving_row)] = entering;
    basic_pos_[static_cast<std::size_t>(entering)] = leaving_row;
    state_[static_cast<std::size_t>(entering)] = kBasic;
    ++pivots_since_refactor_;
    ++total_pivots_;
}

double SimplexSolver::infeasibility_of(int var) const {
    const double v = x_[static_cast<std::size_t>(var)];
    const double lo = lower_[static_cast<std::size_t>(var)];
    const double hi = upper_[static_cast<std::size_t>(var)];
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0.0;
}

double SimplexSolver::total_infeasibility() const {
    double s = 0.0;
    for (int k = 0; k < m_; ++k) s += infeasibility_of(basic_[static_cast<std::size_t>(k)]);
    return s;
}

SimplexSolver::LoopExit SimplexSolver::primal_loop(bool phase_one, long iter_budget) {
    const double tol = opt_.feas_tol;
    const double dtol = std::max(opt_.opt_tol, 1e-12);
    long no_progress = 0;
    bool bland = false;
    long bland_left = 0;
    double last_goal = std::numeric_limits<double>::infinity();

    for (long iter = 0; iter < iter_budget; ++iter) {
        if (pivots_since_refactor_ >= kRefactorInterval) {
            if (!refactorize()) return LoopExit::Stalled;
            compute_basics();
        }

        // Phase objective and cost vector on the basis.
        double goal = 0.0;
        if (phase_one) {
            for (int k = 0; k < m_; ++k) {
                const int v = basic_[static_cast<std::size_t>(k)];
                const double xv = x_[static_cast<std::size_t>(v)];
                const double lo = lower_[static_cast<std::size_t>(v)];
                const double hi = upper_[static_cast<std::size_t>(v)];
                if (xv < lo - tol) { cb_[static_cast<std::size_t>(k)] = -1.0; goal += lo - xv; }
                else if (xv > hi + tol) { cb_[static_cast<std::size_t>(k)] = 1.0; goal += xv - hi; }
                else cb_[static_cast<std::size_t>(k)] = 0.0;
            }
            if (goal <= tol) return LoopExit::Optimal;  // primal feasible
        } else {
            for (int k = 0; k < m_; ++k)
                cb_[static_cast<std::size_t>(k)] =
                    cost_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(k)])];
            goal = scaled_objective();
        }

        if (goal < last_goal - 1e-12 * (1.0 + std::abs(last_goal))) {
            last_goal = goal;
            no_progress = 0;
            if (bland && --bland_left <= 0) bland = false;
        } else if (++no_progress > std::max<long>(500, m_)) {
            bland = true;
            bland_left = 4L * m_ + 100;
            no_progress = 0;
        }

        btran_basic_costs(cb_, y_);

        // Pricing.
        int entering = -1;
        int sigma = +1;
        double best_score = dtol;
        for (int j = 0; j < n_; ++j) {
            const signed char st = state_[static_cast<std::size_t>(j)];
            if (st == kBasic) continue;
            const double lo = lower_[static_cast<std::size_t>(j)];
            const double hi = upper_[static_cast<std::size_t>(j)];
            if (lo == hi) continue;  // fixed
            double d = phase_one ? 0.0 : cost_[static_cast<std::size_t>(j)];
            for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)])
                d -= y_[static_cast<std::size_t>(i)] * a;
            int dir = 0;
            if (st == kAtLower && d < -dtol) dir = +1;
            else if (st == kAtUpper && d > dtol) dir = -1;
            else if (st == kFree && std::abs(d) > dtol) dir = d < 0.0 ? +1 : -1;
            if (dir == 0) continue;
            if (bland) { entering = j; sigma = dir; break; }
            const double score = std::abs(d);
            if (score > best_score) { best_score = score; entering = j; sigma = dir; }
        }
        if (entering < 0) return phase_one ? LoopExit::Infeasible : LoopExit::Optimal;
        // In phase one LoopExit::Infeasible means: infeasibility minimized but
        // still positive (checked by the caller via total_infeasibility).

        ftran(entering, w_);

        // Ratio test: first blocking bound along the move; entering may also
        // flip to its opposite bound.
        const double span = upper_[static_cast<std::size_t>(entering)] -
                            lower_[static_cast<std::size_t>(entering)];
        double theta = std::isfinite(span) ? span : kInf;
        int block_row = -1;
        double block_target = 0.0;
        double best_piv = 0.0;
        for (int pass = 0; pass < 2; ++pass) {
            // pass 0 finds the minimum ratio; pass 1 re-picks among near-ties
            // by pivot magnitude for stability.
            double theta_min = theta;
            for (int k = 0; k < m_; ++k) {
                const double wk = w_[static_cast<std::size_t>(k)];
                if (std::abs(wk) <= kPivotTol) continue;
                const double delta = -sigma * wk;
                const int v = basic_[static_cast<std::size_t>(k)];
                const double xv = x_[static_cast<std::size_t>(v)];
                const double lo = lower_[static_cast<std::size_t>(v)];
                const double hi = upper_[static_cast<std::size_t>(v)];
                double target;
                if (delta > 0.0) target = (xv < lo) ? lo : hi;
                else target = (xv > hi) ? hi : lo;
                if (!std::isfinite(target)) continue;
                double t = (target - xv) / delta;
                if (t < 0.0) t = 0.0;
                if (pass == 0) {
                    if (t < theta_min) theta_min = t;
                } else {
                    if (t <= theta + 1e-9 * (1.0 + theta)) {
                        const double piv = std::abs(wk);
                        if (block_row < 0 || piv > best_piv + 1e-12 ||
                            (std::abs(piv - best_piv) <= 1e-12 && v < basic_[static_cast<std::size_t>(block_row)])) {
                            block_row = k;
                            block_target = target;
                            best_piv = piv;
                        }
                    }
                }
            }
            if (pass == 0) {
                if (theta_min >= kInf) {
                    if (phase_one) return LoopExit::Stalled;  // cannot happen with finite infeasibility
                    return LoopExit::Unbounded;
                }
                theta = theta_min;
                if (std::isfinite(span) && span <= theta + 1e-12) {
                    // Bound flip wins: no basis change.
                    block_row = -1;
                    break;
                }
            }
        }

        if (block_row < 0) {
            // Bound flip of the entering variable.
            const double step = sigma * span;
            x_[static_cast<std::size_t>(entering)] += step;
            state_[static_cast<std::size_t>(entering)] =
                state_[static_cast<std::size_t>(entering)] == kAtLower ? kAtUpper : kAtLower;
            for (int k = 0; k < m_; ++k) {
                const double wk = w_[static_cast<std::size_t>(k)];
                if (wk == 0.0) continue;
                x_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(k)])] -= step * wk;
            }
            ++total_pivots_;
            continue;
        }

        // Basis change.
        const int leaving = basic_[static_cast<std::size_t>(block_row)];
        const double step = sigma * theta;
        x_[static_cast<std::size_t>(entering)] += step;
        for (int k = 0; k < m_; ++k) {
            const double wk = w_[static_cast<std::size_t>(k)];
            if (wk == 0.0) continue;
            x_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(k)])] -= step * wk;
        }
        x_[static_cast<std::size_t>(leaving)] = block_target;  // land exactly on the bound
        state_[static_cast<std::size_t>(leaving)] =
            (block_target == lower_[static_cast<std::size_t>(leaving)]) ? kAtLower : kAtUpper;
        apply_pivot(entering, block_row, w_);
    }
    return LoopExit::IterLimit;
}

SimplexSolver::LoopExit SimplexSolver::dual_loop(long iter_budget) {
    const double tol = opt_.feas_tol;
    const double dtol = std::max(opt_.opt_tol, 1e-12);

    for (long iter = 0; iter < iter_budget; ++iter) {
        if (pivots_since_refactor_ >= kRefactorInterval) {
            if (!refactorize()) return LoopExit::Stalled;
            compute_basics();
        }

        // Leaving candidate: most infeasible basic.
        int r = -1;
        double worst = tol;
        bool below = false;
        for (int k = 0; k < m_; ++k) {
            const int v = basic_[static_cast<std::size_t>(k)];
            const double xv = x_[static_cast<std::size_t>(v)];
            const double lo = lower_[static_cast<std::size_t>(v)];
            const double hi = upper_[static_cast<std::size_t>(v)];
            if (lo - xv > worst) { worst = lo - xv; r = k; below = true; }
            if (xv - hi > worst) { worst = xv - hi; r = k; below = false; }
        }
        if (r < 0) return LoopExit::Optimal;

        for (int k = 0; k < m_; ++k)
            cb_[static_cast<std::size_t>(k)] =
                cost_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(k)])];
        btran_basic_costs(cb_, y_);
        binv_row(r, rhs_);  // rhs_ reused as the pivot row rho

        int entering = -1, sigma = +1;
        double best_ratio = kInf, best_alpha = 0.0;
        for (int j = 0; j < n_; ++j) {
            const signed char st = state_[static_cast<std::size_t>(j)];
            if (st == kBasic) continue;
            if (lower_[static_cast<std::size_t>(j)] == upper_[static_cast<std::size_t>(j)]) continue;
            double alpha = 0.0;
            for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)])
                alpha += rhs_[static_cast<std::size_t>(i)] * a;
            if (std::abs(alpha) <= kPivotTol) continue;
            int dir;
            if (below) {
                // x_Br must increase: sigma*alpha < 0.
                if (st == kAtLower && alpha < 0.0) dir = +1;
                else if (st == kAtUpper && alpha > 0.0) dir = -1;
                else if (st == kFree) dir = alpha < 0.0 ? +1 : -1;
                else continue;
            } else {
                if (st == kAtLower && alpha > 0.0) dir = +1;
                else if (st == kAtUpper && alpha < 0.0) dir = -1;
                else if (st == kFree) dir = alpha > 0.0 ? +1 : -1;
                else continue;
            }
            double d = cost_[static_cast<std::size_t>(j)];
            for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)])
                d -= y_[static_cast<std::size_t>(i)] * a;
            const double ratio = std::abs(d) / std::abs(alpha);
            if (ratio < best_ratio - 1e-12 ||
                (ratio <= best_ratio + 1e-12 &&
                 (std::abs(alpha) > std::abs(best_alpha) + 1e-12 ||
                  (std::abs(std::abs(alpha) - std::abs(best_alpha)) <= 1e-12 && j < entering)))) {
                best_ratio = ratio;
                best_alpha = alpha;
                entering = j;
                sigma = dir;
            }
        }
        if (entering < 0) return LoopExit::Infeasible;  // dual ray: no primal point

        ftran(entering, w_);
        const double wr = w_[static_cast<std::size_t>(r)];
        if (std::abs(wr) <= kPivotTol) {
            if (!refactorize()) return LoopExit::Stalled;
            compute_basics();
            continue;
        }
        const int leaving = basic_[static_cast<std::size_t>(r)];
        const double bound_hit = below ? lower_[static_cast<std::size_t>(leaving)]
                                       : upper_[static_cast<std::size_t>(leaving)];
        const double t = (x_[static_cast<std::size_t>(leaving)] - bound_hit) / (sigma * wr);
        // Move entering by sigma*|t| so the leaving basic lands on bound_hit.
        const double step = sigma * std::abs(t);
        x_[static_cast<std::size_t>(entering)] += step;
        for (int k = 0; k < m_; ++k) {
            const double wk = w_[static_cast<std::size_t>(k)];
            if (wk == 0.0) continue;
            x_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(k)])] -= step * wk;
        }
        x_[static_cast<std::size_t>(leaving)] = bound_hit;
        state_[static_cast<std::size_t>(leaving)] =
            (bound_hit == lower_[static_cast<std::size_t>(leaving)]) ? kAtLower : kAtUpper;
        apply_pivot(entering, r, w_);
    }
    return LoopExit::IterLimit;
}

double SimplexSolver::scaled_objective() const {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += cost_[static_cast<std::size_t>(j)] * x_[static_cast<std::size_t>(j)];
    return s;
}

double SimplexSolver::dual_bound() const {
    // g(y) = y b + sum_j min over the bound interval of d_j x_j, computed in
    // scaled space (objective values are scale-invariant).
    std::vector<double> cb(static_cast<std::size_t>(m_));
    for (int k = 0; k < m_; ++k)
        cb[static_cast<std::size_t>(k)] = cost_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(k)])];
    std::vector<double> y(static_cast<std::size_t>(m_));
    btran_basic_costs(cb, y);
    double g = 0.0;
    for (int i = 0; i < m_; ++i) g += y[static_cast<std::size_t>(i)] * b_[static_cast<std::size_t>(i)];
    for (int j = 0; j < n_; ++j) {
        if (state_[static_cast<std::size_t>(j)] == kBasic) continue;
        double d = cost_[static_cast<std::size_t>(j)];
        for (const auto& [i, a] : cols_[static_cast<std::size_t>(j)])
            d -= y[static_cast<std::size_t>(i)] * a;
        if (std::abs(d) <= 1e-7) continue;
        const double lo = lower_[static_cast<std::size_t>(j)];
        const double hi = upper_[static_cast<std::size_t>(j)];
        const double pick = d > 0.0 ? lo : hi;
        if (!std::isfinite(pick)) return -kInf;
        g += d * pick;
    }
    return g + prob_->objective_constant();
}

LpResult SimplexSolver::finish(SolveStatus status, const std::string& note) {
    LpResult out;
    out.status = status;
    out.iterations = total_pivots_;
    out.note = note;
    out.x.assign(static_cast<std::size_t>(n_struct_), 0.0);
    for (int j = 0; j < n_struct_; ++j)
        out.x[static_cast<std::size_t>(j)] =
            x_[static_cast<std::size_t>(j)] * col_scale_[static_cast<std::size_t>(j)];
    if (status == SolveStatus::Optimal) {
        out.objective = prob_->objective_value(out.x);
        out.dual_objective = dual_bound();
    }
    return out;
}

LpResult SimplexSolver::solve() {
    reset_to_slack_basis();
    has_solved_ = true;

    LoopExit e = primal_loop(/*phase_one=*/true, opt_.max_iterations);
    if (e == LoopExit::Infeasible) {
        // Pricing found no improving column; accept only after a clean
        // refactorization confirms the infeasibility.
        refactorize();
        compute_basics();
        if (total_infeasibility() > opt_.feas_tol * (1.0 + static_cast<double>(m_)))
            return finish(SolveStatus::Infeasible, "phase-1 minimum positive");
        e = LoopExit::Optimal;
    }
    if (e == LoopExit::IterLimit) return finish(SolveStatus::Limit, "phase-1 iteration limit");
    if (e == LoopExit::Stalled) return finish(SolveStatus::Limit, "phase-1 numerical stall");

    for (int round = 0; round < 4; ++round) {
        e = primal_loop(/*phase_one=*/false, opt_.max_iterations);
        if (e == LoopExit::Unbounded) return finish(SolveStatus::Unbounded, "");
        if (e == LoopExit::IterLimit) return finish(SolveStatus::Limit, "phase-2 iteration limit");
        if (e == LoopExit::Stalled) return finish(SolveStatus::Limit, "phase-2 numerical stall");
        // Validate the claimed optimum on a fresh factorization.
        if (!refactorize()) return finish(SolveStatus::Limit, "singular basis at optimum");
        compute_basics();
        if (total_infeasibility() > opt_.feas_tol * (1.0 + static_cast<double>(m_))) {
            LoopExit r = primal_loop(true, opt_.max_iterations);
            if (r == LoopExit::Infeasible)
                return finish(SolveStatus::Infeasible, "infeasible after cleanup");
            if (r != LoopExit::Optimal) return finish(SolveStatus::Limit, "cleanup failed");
            continue;
        }
        return finish(SolveStatus::Optimal, "");
    }
    return finish(SolveStatus::Limit, "optimum did not stabilize");
}

LpResult SimplexSolver::resolve_dual() {
    if (!has_solved_) return solve();

    snap_nonbasic_values();
    if (!factorized_ && !refactorize()) return solve();
    compute_basics();

    LoopExit e = dual_loop(3L * m_ + 2000);
    if (e == LoopExit::Infeasible) return finish(SolveStatus::Infeasible, "dual ray");
    if (e == LoopExit::Optimal) {
        // The dual loop stops at primal feasibility; polish with the primal
        // loop in case reduced costs drifted, then validate.
        for (int round = 0; round < 3; ++round) {
            LoopExit p = primal_loop(false, opt_.max_iterations);
            if (p == LoopExit::Unbounded) return finish(SolveStatus::Unbounded, "");
            if (p != LoopExit::Optimal) break;
            if (!refactorize()) break;
            compute_basics();
            if (total_infeasibility() <= opt_.feas_tol * (1.0 + static_cast<double>(m_)))
                return finish(SolveStatus::Optimal, "");
            LoopExit d2 = dual_loop(3L * m_ + 2000);
            if (d2 == LoopExit::Infeasible) return finish(SolveStatus::Infeasible, "dual ray");
            if (d2 != LoopExit::Optimal) break;
        }
    }
    // Warm path degraded: cold solve is the safe fallback.
    return solve();
}

}  // namespace ies
