#include "fitzlab/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fitzlab {

namespace {

constexpr double kPivotTol = 1e-11;

struct Tableau {
    std::size_t rows, cols;     // structural shape
    std::size_t width;          // cols + rows (artificials) + 1 (rhs)
    std::vector<double> t;      // rows x width
    std::vector<double> obj;    // reduced-cost row, width entries (last = -objval)
    std::vector<std::size_t> basis;
    std::vector<char> active;   // redundant rows get retired after phase 1

    double& at(std::size_t i, std::size_t j) { return t[i * width + j]; }
    double at(std::size_t i, std::size_t j) const { return t[i * width + j]; }
    std::size_t rhs_col() const { return width - 1; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double piv = at(pr, pc);
        for (std::size_t j = 0; j < width; ++j) t[pr * width + j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const double f = at(i, pc);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < width; ++j) t[i * width + j] -= f * t[pr * width + j];
            at(i, pc) = 0.0;
        }
        const double f = obj[pc];
        if (f != 0.0) {
            for (std::size_t j = 0; j < width; ++j) obj[j] -= f * t[pr * width + j];
            obj[pc] = 0.0;
        }
        basis[pr] = pc;
    }

    // Lexicographic ratio test: the unique minimizer of the scaled row
    // vector (rhs first, then all columns left to right).
    std::size_t leaving_row(std::size_t pc) const {
        std::size_t best = rows;  // sentinel
        for (std::size_t i = 0; i < rows; ++i) {
            if (!active[i]) continue;
            const double a = at(i, pc);
            if (a <= kPivotTol) continue;
            if (best == rows) {
                best = i;
                continue;
            }
            const double ab = at(best, pc);
            // compare (rhs_i/a) vs (rhs_best/ab), then columns left to right
            const double li = at(i, rhs_col()) / a;
            const double lb = at(best, rhs_col()) / ab;
            if (li < lb) {
                best = i;
                continue;
            }
            if (li > lb) continue;
            for (std::size_t j = 0; j < width - 1; ++j) {
                const double ci = at(i, j) / a;
                const double cb = at(best, j) / ab;
                if (ci < cb) {
                    best = i;
                    break;
                }
                if (ci > cb) break;
            }
        }
        return best;
    }
};

}  // namespace

LpResult solve_equality_lp(std::size_t rows, std::size_t cols, const std::vector<double>& a,
                           const std::vector<double>& b, const std::vector<double>& c,
                           double feas_tol) {
    if (a.size() != rows * cols || b.size() != rows || c.size() != cols)
        throw std::invalid_argument("solve_equality_lp: shape mismatch");

    Tableau tb;
    tb.rows = rows;
    tb.cols = cols;
    tb.width = cols + rows + 1;
    tb.t.assign(rows * tb.width, 0.0);
    tb.obj.assign(tb.width, 0.0);
    tb.basis.resize(rows);
    tb.active.assign(rows, 1);

    for (std::size_t i = 0; i < rows; ++i) {
        const double sign = b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < cols; ++j) tb.at(i, j) = sign * a[i * cols + j];
        tb.at(i, cols + i) = 1.0;
        tb.at(i, tb.rhs_col()) = sign * b[i];
        tb.basis[i] = cols + i;
    }

    // Phase 1: minimize the artificial sum. With the artificial basis the
    // reduced costs are the negated column sums.
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += tb.at(i, j);
        tb.obj[j] = -s;
    }
    double rhs_sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) rhs_sum += tb.at(i, tb.rhs_col());
    tb.obj[tb.rhs_col()] = -rhs_sum;  // obj row rhs holds -objective

    auto run = [&](bool phase1) {
        for (;;) {
            std::size_t enter = tb.width;
            double best = -kPivotTol;
            const std::size_t limit = phase1 ? cols + rows : cols;
            for (std::size_t j = 0; j < limit; ++j) {
                if (tb.obj[j] < best) {
                    best = tb.obj[j];
                    enter = j;
                }
            }
            if (enter == tb.width) return;  // optimal
            const std::size_t leave = tb.leaving_row(enter);
            if (leave == rows) return;  // cannot improve (bounded sets should not get here)
            tb.pivot(leave, enter);
        }
    };

    run(/*phase1=*/true);
    const double infeasibility = -tb.obj[tb.rhs_col()];
    if (infeasibility > feas_tol) return LpResult{};  // Infeasible

    // Drive artificials out of the basis; rows that cannot be pivoted are
    // redundant equalities and get retired.
    for (std::size_t i = 0; i < rows; ++i) {
        if (tb.basis[i] < cols) continue;
        std::size_t j = cols;
        for (std::size_t k = 0; k < cols; ++k) {
            if (std::fabs(tb.at(i, k)) > 1e-9) {
                j = k;
                break;
            }
        }
        if (j < cols)
            tb.pivot(i, j);
        else
            tb.active[i] = 0;
    }

    // Phase 2 objective from scratch over the current basis.
    for (std::size_t j = 0; j < tb.width; ++j) tb.obj[j] = 0.0;
    for (std::size_t j = 0; j < cols; ++j) tb.obj[j] = c[j];
    double objval = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!tb.active[i] || tb.basis[i] >= cols) continue;
        const double cb = c[tb.basis[i]];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j < tb.width - 1; ++j) tb.obj[j] -= cb * tb.at(i, j);
        objval += cb * tb.at(i, tb.rhs_col());
    }
    tb.obj[tb.rhs_col()] = -objval;

    run(/*phase1=*/false);

    LpResult res;
    res.status = LpResult::Status::Optimal;
    res.solution.assign(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!tb.active[i]) continue;
        if (tb.basis[i] < cols) res.solution[tb.basis[i]] = tb.at(i, tb.rhs_col());
    }
    double v = 0.0;
    for (std::size_t j = 0; j < cols; ++j) v += c[j] * res.solution[j];
    res.value = v;
    return res;
}

}  // namespace fitzlab
