#include "combip/relax.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace combip {

namespace {

constexpr double kInf = 1e30;
constexpr double kFeasTol = 1e-7;
constexpr double kCostTol = 1e-7;
constexpr double kPivotTol = 1e-10;
constexpr int kRefactorEvery = 50;

// Bounded-variable primal simplex over the homogeneous system
//   a_i . x - s_i = 0,   s_i in [lo_i, hi_i],   x_j in [lb_j, ub_j].
// Logical variable s_i carries the row range, so LE/GE/EQ need no cases.
// Phase 1 is the composite (artificial-free) variant: basic variables may sit
// outside their bounds and the cost vector scores the total violation.
class Simplex {
public:
    Simplex(int nstruct, std::vector<double> lb, std::vector<double> ub,
            std::vector<double> cost)
        : n_(nstruct), lb_(std::move(lb)), ub_(std::move(ub)), cost_(std::move(cost)) {
        x_.assign(n_, 0.0);
        state_.assign(n_, 0);
        for (int j = 0; j < n_; ++j) x_[j] = lb_[j];
    }

    void add_row(const std::vector<std::pair<int, double>>& terms, double lo, double hi) {
        rowterms_.push_back(terms);
        rlo_.push_back(lo);
        rhi_.push_back(hi);
        double v = 0;
        for (auto [j, a] : terms) v += a * x_[j];
        basis_.push_back(n_ + m_);  // new logical starts basic at the row value
        x_.push_back(v);
        state_.push_back(2);
        ++m_;
        factored_ = false;
    }

    enum class Status { Optimal, Infeasible, Numerical };

    Status solve() {
        if (m_ == 0) {
            for (int j = 0; j < n_; ++j) {
                state_[j] = cost_[j] > 0 ? 1 : 0;
                x_[j] = state_[j] == 1 ? ub_[j] : lb_[j];
            }
            return Status::Optimal;
        }
        build_columns();
        if (!refactor()) return Status::Numerical;

        const long long bland_after = 10LL * (n_ + 2LL * m_);
        const long long hard_cap = bland_after + 200000 + 40LL * (n_ + m_);
        for (long long iter = 0; iter < hard_cap; ++iter) {
            const bool bland = iter >= bland_after;
            const double infeas = total_infeasibility();
            const bool phase1 = infeas > kFeasTol * (1.0 + m_);

            // Basic cost vector for the current phase.
            Eigen::VectorXd cb(m_);
            for (int i = 0; i < m_; ++i) {
                const int k = basis_[i];
                if (phase1) {
                    if (x_[k] < vlb(k) - kFeasTol)
                        cb[i] = 1.0;   // increasing x_k reduces violation
                    else if (x_[k] > vub(k) + kFeasTol)
                        cb[i] = -1.0;
                    else
                        cb[i] = 0.0;
                } else {
                    cb[i] = vcost(k);
                }
            }
            Eigen::VectorXd y = btran(cb);

            // Pricing.
            int enter = -1;
            double best = bland ? 0.0 : kCostTol;
            int enter_dir = 0;
            for (int k = 0; k < n_ + m_; ++k) {
                if (state_[k] == 2) continue;
                if (vub(k) - vlb(k) < 1e-15) continue;  // fixed, never enters
                const double d = (phase1 ? 0.0 : vcost(k)) - col_dot(k, y);
                int dir = 0;
                if (state_[k] == 0 && d > kCostTol) dir = 1;
                else if (state_[k] == 1 && d < -kCostTol) dir = -1;
                if (!dir) continue;
                if (bland) { enter = k; enter_dir = dir; break; }
                if (std::abs(d) > best) { best = std::abs(d); enter = k; enter_dir = dir; }
            }
            if (enter < 0) {
                if (phase1) return Status::Infeasible;
                cleanup();
                return Status::Optimal;
            }

            Eigen::VectorXd w = ftran(enter);
            const double sigma = enter_dir;

            // Ratio test: first breakpoint of any basic variable, or the
            // entering variable's own bound flip.
            double t = vub(enter) - vlb(enter);
            int leave_pos = -1;
            double leave_bound = 0.0;
            for (int i = 0; i < m_; ++i) {
                const double delta = -sigma * w[i];
                if (std::abs(delta) <= kPivotTol) continue;
                const int k = basis_[i];
                double limit = kInf;
                double bound = 0.0;
                if (phase1 && x_[k] < vlb(k) - kFeasTol) {
                    if (delta > 0) { limit = (vlb(k) - x_[k]) / delta; bound = vlb(k); }
                } else if (phase1 && x_[k] > vub(k) + kFeasTol) {
                    if (delta < 0) { limit = (vub(k) - x_[k]) / delta; bound = vub(k); }
                } else if (delta > 0) {
                    if (vub(k) >= kInf) continue;
                    limit = (vub(k) - x_[k]) / delta;
                    bound = vub(k);
                } else {
                    if (vlb(k) <= -kInf) continue;
                    limit = (vlb(k) - x_[k]) / delta;
                    bound = vlb(k);
                }
                limit = std::max(limit, 0.0);
                bool better = false;
                if (limit < t - 1e-9) {
                    better = true;
                } else if (limit < t + 1e-9) {
                    if (leave_pos < 0) better = true;
                    else if (bland) better = basis_[i] < basis_[leave_pos];
                    else better = std::abs(w[i]) > std::abs(w[leave_pos]);
                }
                if (better) {
                    t = limit;
                    leave_pos = i;
                    leave_bound = bound;
                }
            }
            if (t >= kInf / 2) return Status::Numerical;  // bounded models never hit this
            if (leave_pos >= 0 && std::abs(w[leave_pos]) < kPivotTol) {
                if (!refactor()) return Status::Numerical;
                continue;  // retry the iteration with a fresh factorization
            }

            // Apply the step.
            for (int i = 0; i < m_; ++i) x_[basis_[i]] -= sigma * t * w[i];
            x_[enter] += sigma * t;

            if (leave_pos < 0) {
                state_[enter] = state_[enter] == 0 ? 1 : 0;  // bound flip
                x_[enter] = state_[enter] == 0 ? vlb(enter) : vub(enter);
                continue;
            }
            const int leave = basis_[leave_pos];
            x_[leave] = leave_bound;
            state_[leave] = std::abs(leave_bound - vlb(leave)) < std::abs(leave_bound - vub(leave)) ? 0 : 1;
            basis_[leave_pos] = enter;
            state_[enter] = 2;
            etas_.push_back({leave_pos, w});
            if (static_cast<int>(etas_.size()) >= kRefactorEvery) {
                if (!refactor()) return Status::Numerical;
            }
        }
        return Status::Numerical;
    }

    double structural(int j) const { return x_[j]; }
    int rows() const { return m_; }
    // Rows the basis leans on (logical variable pushed to a bound).
    bool row_used(int i) const { return state_[n_ + i] != 2; }

private:
    struct Eta {
        int r;
        Eigen::VectorXd w;
    };

    double vlb(int k) const { return k < n_ ? lb_[k] : rlo_[k - n_]; }
    double vub(int k) const { return k < n_ ? ub_[k] : rhi_[k - n_]; }
    double vcost(int k) const { return k < n_ ? cost_[k] : 0.0; }

    double total_infeasibility() const {
        double s = 0;
        for (int i = 0; i < m_; ++i) {
            const int k = basis_[i];
            if (x_[k] < vlb(k)) s += vlb(k) - x_[k];
            else if (x_[k] > vub(k)) s += x_[k] - vub(k);
        }
        return s;
    }

    void build_columns() {
        cols_.assign(n_, {});
        for (int i = 0; i < m_; ++i)
            for (auto [j, a] : rowterms_[i]) cols_[j].emplace_back(i, a);
    }

    double col_dot(int k, const Eigen::VectorXd& y) const {
        if (k >= n_) return -y[k - n_];
        double s = 0;
        for (auto [i, a] : cols_[k]) s += a * y[i];
        return s;
    }

    bool refactor() {
        Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m_, m_);
        for (int i = 0; i < m_; ++i) {
            const int k = basis_[i];
            if (k >= n_) B(k - n_, i) = -1.0;
            else
                for (auto [r, a] : cols_[k]) B(r, i) = a;
        }
        lu_.compute(B);
        const auto& diag = lu_.matrixLU().diagonal();
        for (int i = 0; i < m_; ++i)
            if (std::abs(diag[i]) < kPivotTol) return false;
        etas_.clear();
        factored_ = true;
        recompute_basics();
        return true;
    }

    // x_B = -B^-1 (sum of nonbasic columns times their values)
    void recompute_basics() {
        Eigen::VectorXd r = Eigen::VectorXd::Zero(m_);
        for (int j = 0; j < n_; ++j) {
            if (state_[j] == 2 || x_[j] == 0.0) continue;
            for (auto [i, a] : cols_[j]) r[i] += a * x_[j];
        }
        for (int i = 0; i < m_; ++i) {
            const int k = n_ + i;
            if (state_[k] != 2 && x_[k] != 0.0) r[i] -= x_[k];
        }
        Eigen::VectorXd xb = lu_.solve(-r);
        for (const auto& e : etas_) apply_eta(xb, e);
        for (int i = 0; i < m_; ++i) x_[basis_[i]] = xb[i];
    }

    static void apply_eta(Eigen::VectorXd& v, const Eta& e) {
        const double piv = v[e.r] / e.w[e.r];
        v -= piv * e.w;
        v[e.r] = piv;
    }

    Eigen::VectorXd ftran(int k) {
        Eigen::VectorXd col = Eigen::VectorXd::Zero(m_);
        if (k >= n_) col[k - n_] = -1.0;
        else
            for (auto [i, a] : cols_[k]) col[i] = a;
        Eigen::VectorXd v = lu_.solve(col);
        for (const auto& e : etas_) apply_eta(v, e);
        return v;
    }

    Eigen::VectorXd btran(Eigen::VectorXd c) {
        for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
            const double dot = c.dot(it->w);
            c[it->r] = (c[it->r] - (dot - c[it->r] * it->w[it->r])) / it->w[it->r];
        }
        // Solve B0^T y = c with P*B0 = L*U:  U^T (L^T (P y)) = c.
        const auto& LU = lu_.matrixLU();
        Eigen::VectorXd u1 = LU.triangularView<Eigen::Upper>().transpose().solve(c);
        Eigen::VectorXd u2 = LU.triangularView<Eigen::UnitLower>().transpose().solve(u1);
        return lu_.permutationP().inverse() * u2;
    }

    void cleanup() {
        for (int j = 0; j < n_; ++j) {
            if (x_[j] < lb_[j]) x_[j] = lb_[j];
            if (x_[j] > ub_[j]) x_[j] = ub_[j];
        }
    }

    int n_;
    int m_ = 0;
    std::vector<double> lb_, ub_, cost_;
    std::vector<std::vector<std::pair<int, double>>> rowterms_;
    std::vector<double> rlo_, rhi_;
    std::vector<double> x_;
    std::vector<signed char> state_;  // 0 AtLb, 1 AtUb, 2 Basic
    std::vector<int> basis_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    std::vector<Eta> etas_;
    bool factored_ = false;
    std::vector<std::vector<std::pair<int, double>>> cols_;
};

}  // namespace

RelaxationSolver::RelaxationSolver(const IlpModel& model) {
    n_ = model.var_count();
    maximize_ = model.sense() == Sense::Maximize;
    obj_.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j)
        obj_[j] = maximize_ ? static_cast<double>(model.objective()[j])
                            : -static_cast<double>(model.objective()[j]);
    rows_.reserve(model.constraints().size());
    for (const auto& c : model.constraints()) {
        Row r;
        r.terms.reserve(c.terms.size());
        for (auto [v, a] : c.terms) r.terms.emplace_back(v, static_cast<double>(a));
        const double rhs = static_cast<double>(c.rhs);
        r.lo = c.cmp == Cmp::LE ? -kInf : rhs;
        r.hi = c.cmp == Cmp::GE ? kInf : rhs;
        rows_.push_back(std::move(r));
    }
}

double RelaxationSolver::row_value(const Row& r, const std::vector<double>& x) const {
    double v = 0;
    for (auto [j, a] : r.terms) v += a * x[j];
    return v;
}

RelaxationSolver::Result RelaxationSolver::solve(const std::vector<signed char>& fix,
                                                 const std::vector<CutRow>& cuts,
                                                 const std::vector<int>& warm_rows,
                                                 const std::vector<int>& warm_cuts) {
    std::vector<double> lb(n_, 0.0), ub(n_, 1.0);
    for (int j = 0; j < n_; ++j) {
        if (j < static_cast<int>(fix.size()) && fix[j] >= 0) lb[j] = ub[j] = fix[j];
    }

    // Active system: encoded ids (model row i, or rows_.size()+i for cut i).
    std::vector<int> active;
    std::vector<char> is_active(rows_.size() + cuts.size(), 0);
    auto activate = [&](int enc) {
        if (is_active[enc]) return;
        is_active[enc] = 1;
        active.push_back(enc);
    };
    for (int i : warm_rows)
        if (i >= 0 && i < static_cast<int>(rows_.size())) activate(i);
    for (int i : warm_cuts)
        if (i >= 0 && i < static_cast<int>(cuts.size()))
            activate(static_cast<int>(rows_.size()) + i);

    auto append_row = [&](Simplex& sx, int enc) {
        if (enc < static_cast<int>(rows_.size())) {
            sx.add_row(rows_[enc].terms, rows_[enc].lo, rows_[enc].hi);
        } else {
            const auto& cut = cuts[enc - rows_.size()];
            std::vector<std::pair<int, double>> terms;
            terms.reserve(cut.vars.size());
            for (int v : cut.vars) terms.emplace_back(v, 1.0);
            sx.add_row(terms, -kInf, static_cast<double>(cut.rhs));
        }
    };
    auto build = [&]() {
        Simplex sx(n_, lb, ub, obj_);
        for (int enc : active) append_row(sx, enc);
        return sx;
    };
    auto encoded_value = [&](int enc, const std::vector<double>& x) {
        if (enc < static_cast<int>(rows_.size())) return row_value(rows_[enc], x);
        double v = 0;
        for (int var : cuts[enc - rows_.size()].vars) v += x[var];
        return v;
    };

    Simplex sx = build();
    Result res;
    std::vector<double> x(n_, 0.0);
    int purges = 0;
    const std::size_t max_rounds = rows_.size() + cuts.size() + 64;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        const Simplex::Status st = sx.solve();
        if (st == Simplex::Status::Infeasible) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        if (st == Simplex::Status::Numerical) {
            res.status = LpStatus::Numerical;
            return res;
        }
        for (int j = 0; j < n_; ++j) x[j] = sx.structural(j);

        // Activate violated rows, most violated first.
        std::vector<std::pair<double, int>> viol;  // (violation, encoded index)
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (is_active[i]) continue;
            const double v = row_value(rows_[i], x);
            const double over = std::max(rows_[i].lo - v, v - rows_[i].hi);
            if (over > kFeasTol) viol.emplace_back(over, static_cast<int>(i));
        }
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            const int enc = static_cast<int>(rows_.size() + i);
            if (is_active[enc]) continue;
            double v = 0;
            for (int var : cuts[i].vars) v += x[var];
            if (v - static_cast<double>(cuts[i].rhs) > kFeasTol)
                viol.emplace_back(v - static_cast<double>(cuts[i].rhs), enc);
        }
        if (viol.empty()) {
            res.status = LpStatus::Optimal;
            res.x = x;
            res.objective_max = 0;
            for (int j = 0; j < n_; ++j) res.objective_max += obj_[j] * x[j];
            res.max_violation = 0;
            for (const auto& r : rows_) {
                const double v = row_value(r, x);
                res.max_violation = std::max({res.max_violation, r.lo - v, v - r.hi});
            }
            res.max_violation = std::max(res.max_violation, 0.0);
            // Rows the final basis leans on seed descendant solves.
            for (std::size_t k = 0; k < active.size(); ++k) {
                if (!sx.row_used(static_cast<int>(k))) continue;
                const int enc = active[k];
                if (enc < static_cast<int>(rows_.size())) res.active_rows.push_back(enc);
                else res.active_cuts.push_back(enc - static_cast<int>(rows_.size()));
            }
            return res;
        }
        std::sort(viol.begin(), viol.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        const std::size_t take = std::min<std::size_t>(viol.size(), 200);

        // Keep the working system small: drop strictly slack, unused rows
        // before growing it further.
        if (sx.rows() > 2 * n_ + 100 && purges < 30) {
            ++purges;
            std::vector<int> kept;
            for (std::size_t k = 0; k < active.size(); ++k) {
                const int enc = active[k];
                const bool equality = enc < static_cast<int>(rows_.size()) &&
                                      rows_[enc].lo == rows_[enc].hi;
                if (sx.row_used(static_cast<int>(k)) || equality) kept.push_back(enc);
                else is_active[enc] = 0;
            }
            active = std::move(kept);
            for (std::size_t i = 0; i < take; ++i) activate(viol[i].second);
            sx = build();
        } else {
            for (std::size_t i = 0; i < take; ++i) {
                const int enc = viol[i].second;
                if (!is_active[enc]) {
                    is_active[enc] = 1;
                    active.push_back(enc);
                    append_row(sx, enc);
                }
            }
        }
    }
    res.status = LpStatus::Numerical;
    return res;
}

LpOutcome solve_relaxation(const IlpModel& model, const Fixings& fix) {
    for (auto [v, val] : fix) {
        if (v < 0 || v >= model.var_count() || (val != 0 && val != 1))
            throw std::invalid_argument("solve_relaxation: bad fixing");
    }
    RelaxationSolver solver(model);
    std::vector<signed char> f(model.var_count(), -1);
    for (auto [v, val] : fix) f[v] = static_cast<signed char>(val);
    const auto res = solver.solve(f, {});
    LpOutcome out;
    out.status = res.status;
    if (res.status == LpStatus::Optimal) {
        out.primal = res.x;
        out.objective = solver.maximize() ? res.objective_max : -res.objective_max;
        out.max_violation = res.max_violation;
    }
    return out;
}

}  // namespace combip
