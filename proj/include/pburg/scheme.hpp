#ifndef PBURG_SCHEME_HPP
#define PBURG_SCHEME_HPP

#include <functional>

#include "pburg/field.hpp"
#include "pburg/grid.hpp"

namespace pburg {

/// How evolve() treats the two sites per row that the stencil cannot reach.
enum class BoundaryMode {
    shrink,  // leave them absent; each row has two fewer values than the last
    oracle,  // overwrite the two rightmost columns of each new row from an
             // exact solution
};

struct EvolutionConfig {
    BoundaryMode boundary_mode = BoundaryMode::oracle;
    /// Exact solution used to fill boundary columns; required in oracle mode.
    std::function<double(double, double)> oracle;
    int steps = 1;
};

/// Residual of the six-point invariant scheme at (n,m):
///   Dy u - [Dx]^2 u - (Dx u)^2
/// evaluated with the per-cell discrete operators.  Requires the six-point
/// stencil in range; terms with exactly-zero difference coefficients are
/// skipped, so on a lattice with sy = 0 the residual only needs the four
/// values u(n..n+2, m) and u(n, m+1).
double residual(const Grid& g, const Field& f, int n, int m);

/// Solve the scheme residual for u(n, m+1) across the populated prefix of
/// row m and write the results into f.  Only valid on lattices with
/// sy = 0 on rows m and m+1 (throws UnsupportedLatticeError otherwise);
/// the scheme couples three row-(m+1) values when sy != 0 and would need an
/// implicit solve.  A populated prefix of K sites yields K-2 new values.
/// Returns the number of values written.
int step_explicit(const Grid& g, Field& f, int m);

/// March step_explicit for cfg.steps rows starting from a fully populated
/// row 0.  steps must be in [1, num_m-1].
Field evolve(const Grid& g, const Field& initial, const EvolutionConfig& cfg);

/// Largest |residual| over all stencils where it is computable; NaN-valued
/// residuals (absent data) are skipped.  Returns 0 if none are computable.
double max_residual(const Grid& g, const Field& f);

}  // namespace pburg

#endif
