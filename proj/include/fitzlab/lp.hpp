#pragma once

#include <cstddef>
#include <vector>

namespace fitzlab {

/// Outcome of min c'x  s.t.  A x = b, x >= 0.
struct LpResult {
    enum class Status { Optimal, Infeasible };
    Status status = Status::Infeasible;
    double value = 0.0;
    std::vector<double> solution;  // empty when infeasible
};

/// Dense two-phase simplex for small equality-form programs.
///
/// Degenerate bases are resolved by lexicographic pivoting, so the solve
/// terminates on every input. The feasible sets used here are bounded
/// (convex-combination programs), hence no unbounded status.
///
/// a is row-major with `rows` x `cols`; b has `rows` entries, c `cols`.
LpResult solve_equality_lp(std::size_t rows, std::size_t cols, const std::vector<double>& a,
                           const std::vector<double>& b, const std::vector<double>& c,
                           double feas_tol = 1e-9);

}  // namespace fitzlab
