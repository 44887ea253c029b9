#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gsd/errors.hpp"

namespace gsd {

enum class LpStatus { optimal, infeasible, unbounded };

enum class PivotRule {
    bland,           // smallest eligible index everywhere; cycle-free
    dantzig_bland,   // steepest reduced cost, falls back to Bland on stalls
};

struct SolverConfig {
    double feas_tol = 1e-9;
    double opt_tol = 1e-9;
    int max_iterations = 200000;
    PivotRule pivot = PivotRule::dantzig_bland;
};

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    double objective = 0.0;
    std::vector<double> u;  // primal point, only meaningful when optimal
};

// min c'x  s.t.  row . x >= rhs for every row,  0 <= x <= 1.
//
// Solved as the dual  max b'y, A'y = c, y >= 0  with a revised simplex whose
// basis has one column per primal variable. The bound rows x_i >= 0 and
// -x_i >= -1 make the dual feasible from a diagonal starting basis, so there
// is no phase-1; an unbounded dual certifies primal infeasibility. The primal
// point is recovered from the simplex multipliers. Everything (pricing, ratio
// ties) breaks ties by lowest index, so runs are bit-reproducible.
class BoxedLp {
public:
    struct Row {
        std::vector<std::pair<int, double>> terms;
        double rhs = 0.0;
    };

    explicit BoxedLp(int num_vars) : n_(num_vars) {}

    void add_ge_row(std::vector<std::pair<int, double>> terms, double rhs) {
        rows_.push_back(Row{std::move(terms), rhs});
    }

    void add_eq_row(const std::vector<std::pair<int, double>>& terms, double rhs) {
        rows_.push_back(Row{terms, rhs});
        Row neg;
        neg.terms.reserve(terms.size());
        for (const auto& [v, c] : terms) neg.terms.emplace_back(v, -c);
        neg.rhs = -rhs;
        rows_.push_back(std::move(neg));
    }

    int num_vars() const { return n_; }
    size_t num_rows() const { return rows_.size(); }

    LpSolution minimize(const std::vector<double>& objective, const SolverConfig& cfg) const;

private:
    int n_;
    std::vector<Row> rows_;
};

inline LpSolution BoxedLp::minimize(const std::vector<double>& objective,
                                    const SolverConfig& cfg) const {
    const int n = n_;
    const int m = static_cast<int>(rows_.size());
    LpSolution sol;
    if (n == 0) {
        // constant problem; feasible iff every (constant) row holds
        for (const auto& r : rows_)
            if (0.0 < r.rhs - cfg.feas_tol) return sol;
        sol.status = LpStatus::optimal;
        sol.objective = 0.0;
        return sol;
    }

    // column j: 0..m-1 constraint rows (payoff rhs), m..m+n-1 lower bounds
    // (payoff 0), m+n..m+2n-1 upper bounds (payoff -1)
    const int ncols = m + 2 * n;
    auto col_payoff = [&](int j) -> double {
        if (j < m) return rows_[j].rhs;
        if (j < m + n) return 0.0;
        return -1.0;
    };

    std::vector<int> basis(n);
    std::vector<double> yb(n);  // dual basic values, >= 0
    for (int i = 0; i < n; ++i) {
        if (objective[i] >= 0.0) {
            basis[i] = m + i;
            yb[i] = objective[i];
        } else {
            basis[i] = m + n + i;
            yb[i] = -objective[i];
        }
    }

    std::vector<double> binv(static_cast<size_t>(n) * n, 0.0);
    auto refactor = [&]() {
        // rebuild the basis inverse and basic values from scratch
        std::vector<double> bmat(static_cast<size_t>(n) * n, 0.0);
        for (int k = 0; k < n; ++k) {
            const int j = basis[k];
            if (j < m) {
                for (const auto& [v, c] : rows_[j].terms) bmat[static_cast<size_t>(v) * n + k] = c;
            } else if (j < m + n) {
                bmat[static_cast<size_t>(j - m) * n + k] = 1.0;
            } else {
                bmat[static_cast<size_t>(j - m - n) * n + k] = -1.0;
            }
        }
        // Gauss-Jordan with partial pivoting
        std::fill(binv.begin(), binv.end(), 0.0);
        for (int i = 0; i < n; ++i) binv[static_cast<size_t>(i) * n + i] = 1.0;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            double best = std::abs(bmat[static_cast<size_t>(col) * n + col]);
            for (int r = col + 1; r < n; ++r) {
                const double v = std::abs(bmat[static_cast<size_t>(r) * n + col]);
                if (v > best) { best = v; piv = r; }
            }
            if (best < 1e-13) throw solver_error("singular LP basis during refactorization");
            if (piv != col) {
                for (int c2 = 0; c2 < n; ++c2) {
                    std::swap(bmat[static_cast<size_t>(piv) * n + c2], bmat[static_cast<size_t>(col) * n + c2]);
                    std::swap(binv[static_cast<size_t>(piv) * n + c2], binv[static_cast<size_t>(col) * n + c2]);
                }
            }
            const double inv = 1.0 / bmat[static_cast<size_t>(col) * n + col];
            for (int c2 = 0; c2 < n; ++c2) {
                bmat[static_cast<size_t>(col) * n + c2] *= inv;
                binv[static_cast<size_t>(col) * n + c2] *= inv;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                const double f = bmat[static_cast<size_t>(r) * n + col];
                if (f == 0.0) continue;
                for (int c2 = 0; c2 < n; ++c2) {
                    bmat[static_cast<size_t>(r) * n + c2] -= f * bmat[static_cast<size_t>(col) * n + c2];
                    binv[static_cast<size_t>(r) * n + c2] -= f * binv[static_cast<size_t>(col) * n + c2];
                }
            }
        }
        // yb solves B yb = objective
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += binv[static_cast<size_t>(i) * n + k] * objective[k];
            yb[i] = s;
        }
    };
    for (int i = 0; i < n; ++i)
        binv[static_cast<size_t>(i) * n + i] = (basis[i] >= m + n) ? -1.0 : 1.0;

    std::vector<double> pi(n), w(n);
    std::vector<char> in_basis(ncols, 0);
    for (int k = 0; k < n; ++k) in_basis[basis[k]] = 1;

    auto column_dot_pi = [&](int j) -> double {
        if (j < m) {
            double s = 0.0;
            for (const auto& [v, c] : rows_[j].terms) s += pi[v] * c;
            return s;
        }
        if (j < m + n) return pi[j - m];
        return -pi[j - m - n];
    };

    int degenerate_streak = 0;
    bool force_bland = (cfg.pivot == PivotRule::bland);
    int since_refactor = 0;

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        // pi' = payoff_B' B^-1
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += col_payoff(basis[k]) * binv[static_cast<size_t>(k) * n + i];
            pi[i] = s;
        }

        // price: reduced cost payoff_j - pi . a_j
        int enter = -1;
        double best_rc = cfg.opt_tol;
        const bool bland_now = force_bland || degenerate_streak > 2 * (n + 4);
        for (int j = 0; j < ncols; ++j) {
            if (in_basis[j]) continue;
            const double rc = col_payoff(j) - column_dot_pi(j);
            if (rc > best_rc + 0.0) {
                if (bland_now) { enter = j; break; }
                best_rc = rc;
                enter = j;
            }
        }
        if (enter < 0) {
            sol.status = LpStatus::optimal;
            double obj = 0.0;
            for (int k = 0; k < n; ++k) obj += col_payoff(basis[k]) * yb[k];
            sol.objective = obj;
            sol.u = pi;
            return sol;
        }

        // w = B^-1 a_enter
        if (enter < m) {
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (const auto& [v, c] : rows_[enter].terms)
                    s += binv[static_cast<size_t>(i) * n + v] * c;
                w[i] = s;
            }
        } else if (enter < m + n) {
            const int v = enter - m;
            for (int i = 0; i < n; ++i) w[i] = binv[static_cast<size_t>(i) * n + v];
        } else {
            const int v = enter - m - n;
            for (int i = 0; i < n; ++i) w[i] = -binv[static_cast<size_t>(i) * n + v];
        }

        // ratio test, Bland tie-break on the leaving column index
        int leave = -1;
        double theta = 0.0;
        for (int k = 0; k < n; ++k) {
            if (w[k] <= 1e-11) continue;
            const double t = yb[k] / w[k];
            if (leave < 0 || t < theta - 1e-12 ||
                (t <= theta + 1e-12 && basis[k] < basis[leave])) {
                leave = k;
                theta = t;
            }
        }
        if (leave < 0) {
            sol.status = LpStatus::infeasible;  // dual unbounded
            return sol;
        }
        degenerate_streak = (theta <= 1e-11) ? degenerate_streak + 1 : 0;

        // pivot: replace basis[leave] by enter
        in_basis[basis[leave]] = 0;
        in_basis[enter] = 1;
        basis[leave] = enter;
        const double wl = w[leave];
        for (int c2 = 0; c2 < n; ++c2) binv[static_cast<size_t>(leave) * n + c2] /= wl;
        for (int k = 0; k < n; ++k) {
            if (k == leave) continue;
            const double f = w[k];
            if (f == 0.0) continue;
            for (int c2 = 0; c2 < n; ++c2)
                binv[static_cast<size_t>(k) * n + c2] -= f * binv[static_cast<size_t>(leave) * n + c2];
        }
        bool drifted = false;
        for (int k = 0; k < n; ++k) {
            if (k == leave) continue;
            yb[k] -= theta * w[k];
            if (yb[k] < 0.0) {
                if (yb[k] < -cfg.feas_tol) drifted = true;
                yb[k] = 0.0;
            }
        }
        yb[leave] = theta;

        if (drifted || ++since_refactor >= 256) {
            refactor();
            since_refactor = 0;
            for (int k = 0; k < n; ++k)
                if (yb[k] < 0.0) yb[k] = 0.0;  // roundoff only; true negatives cannot survive refactor
        }
    }
    throw solver_error("LP iteration limit reached (" + std::to_string(cfg.max_iterations) + ")");
}

}  // namespace gsd
