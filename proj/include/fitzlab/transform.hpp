#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fitzlab/grid.hpp"

namespace fitzlab {

/// Conjugate values plus, per dual node, whether the maximum was attained
/// only on the boundary of the primal box. Boundary-attained maxima are
/// support-function artifacts of the truncated domain and are not trusted
/// by the condition checkers.
struct ConjugateResult {
    GridFunction values;
    std::vector<std::uint8_t> truncation_suspect;

    std::size_t trusted_count() const;
};

/// Exact discrete Fenchel conjugate: for every dual node s,
/// max over primal nodes z of <z,s> - g(z). The space tag flips.
ConjugateResult conjugate_bruteforce(const GridFunction& g, const GridSpec& dual_spec);

/// Fast engine with the same value contract as conjugate_bruteforce
/// (agreement within 1e-9 on finite values). Factorizes the conjugate into
/// successive one-dimensional transforms; each 1-D pass compresses its line
/// to the finite support, builds the lower convex hull, and walks it against
/// the sorted dual nodes in linear time.
GridFunction conjugate_llt(const GridFunction& g, const GridSpec& dual_spec);

/// Conjugate twice, landing back on g's own grid: the discrete realization
/// of the lsc convex closure. Result is <= g (within rounding) and
/// idempotent.
GridFunction biconjugate(const GridFunction& g, const GridSpec& dual_spec);

/// biconjugate with an automatically derived dual box (slope range of g
/// per axis, widened by `safety`).
GridFunction biconjugate(const GridFunction& g);

GridSpec derived_dual_spec(const GridFunction& g, double safety = 1.25);

/// J h (x, x*) = h*(x*, x): conjugate followed by the swap of the two
/// argument blocks, landing on h's own grid (tag stays Primal). Requires an
/// even axis count; anything else cannot be block-swapped.
ConjugateResult j_transform(const GridFunction& h);

/// Largest second difference over grid lines, floored at 1.0; the C in the
/// grid comparison tolerance C * h^2.
double estimate_curvature_bound(const GridFunction& g);

double grid_tolerance(const GridSpec& spec, double curvature);

/// Suggested primal box radius so that conjugation onto a dual box is free
/// of truncation: the conjugate's Lipschitz bound over the dual box, times
/// a 1.5 safety factor.
double recommended_primal_radius(double conjugate_lipschitz_bound);

// --- benchmark harness ----------------------------------------------------

struct BenchRow {
    std::string engine;
    std::size_t resolution;
    long long wall_time_ns;
    double max_abs_disagreement;  // vs. brute force on the same input
};

/// Times both engines over a family of 1-D grids of increasing resolution
/// (and one 2-D grid), returning one row per engine per size.
std::vector<BenchRow> run_conjugation_benchmark(const std::vector<std::size_t>& resolutions_1d,
                                                std::size_t resolution_2d);

void write_benchmark_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace fitzlab
