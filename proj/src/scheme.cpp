#include "pburg/scheme.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pburg/calculus.hpp"
#include "pburg/errors.hpp"

namespace pburg {

double residual(const Grid& g, const Field& f, int n, int m) {
    if (n < 0 || m < 0 || n > g.num_n() - 3 || m > g.num_m() - 2)
        throw std::out_of_range("residual: stencil at (" + std::to_string(n) + "," +
                                std::to_string(m) + ") out of range");
    const LatticeDiffs d00 = diffs_at(g, n, m);

    const double ux = cell_dx(d00, f(n, m), f(n + 1, m), f(n, m + 1));
    const double uy = cell_dy(d00, f(n, m), f(n + 1, m), f(n, m + 1));

    // [Dx]^2 u: compose the x-operator; the (n,m+1) branch is only touched
    // when sy != 0, which also requires the full six-point stencil.
    double gx10 = 0.0;
    if (d00.hy != 0.0) {
        const LatticeDiffs d10 = diffs_at(g, n + 1, m);
        gx10 = cell_dx(d10, f(n + 1, m), f(n + 2, m), f(n + 1, m + 1));
    }
    double gx01 = 0.0;
    if (d00.sy != 0.0) {
        if (m > g.num_m() - 3)
            throw std::out_of_range("residual: sy != 0 needs row m+2");
        const LatticeDiffs d01 = diffs_at(g, n, m + 1);
        gx01 = cell_dx(d01, f(n, m + 1), f(n + 1, m + 1), f(n, m + 2));
    }
    const double uxx = cell_dx(d00, ux, gx10, gx01);

    return uy - uxx - ux * ux;
}

int step_explicit(const Grid& g, Field& f, int m) {
    if (m < 0 || m > g.num_m() - 2)
        throw std::out_of_range("step_explicit: no row above m = " + std::to_string(m));
    if (!f.matches(g))
        throw std::invalid_argument("step_explicit: field/grid dimension mismatch");

    // the solve is explicit only because sy vanishes on the rows involved
    for (int mm = m; mm <= m + 1; ++mm) {
        if (mm > g.num_m() - 1) break;
        for (int n = 0; n + 1 < g.num_n(); ++n) {
            const double sy = g.y(n + 1, mm) - g.y(n, mm);
            if (sy != 0.0)
                throw UnsupportedLatticeError(
                    "step_explicit: sy = " + std::to_string(sy) + " at (" +
                    std::to_string(n) + "," + std::to_string(mm) +
                    "); the scheme is implicit on such lattices");
        }
    }

    const int prefix = f.populated_prefix(m);
    if (prefix < 3) return 0;

    int written = 0;
    for (int n = 0; n + 2 < prefix; ++n) {
        const LatticeDiffs d = diffs_at(g, n, m);
        const LatticeDiffs d1 = diffs_at(g, n + 1, m);
        const double du = f(n + 1, m) - f(n, m);
        const double p = du / d.hx;
        const double s = ((f(n + 2, m) - f(n + 1, m)) / d1.hx - p) / d.hx;
        f.set(n, m + 1, f(n, m) + (d.sx / d.hx) * du + d.hy * (s + p * p));
        ++written;
    }
    return written;
}

Field evolve(const Grid& g, const Field& initial, const EvolutionConfig& cfg) {
    if (!initial.matches(g))
        throw std::invalid_argument("evolve: field/grid dimension mismatch");
    if (cfg.steps < 1)
        throw std::invalid_argument("evolve: steps must be >= 1");
    if (cfg.steps > g.num_m() - 1)
        throw std::out_of_range("evolve: steps = " + std::to_string(cfg.steps) +
                                " exceeds num_m - 1");
    if (cfg.boundary_mode == BoundaryMode::oracle && !cfg.oracle)
        throw std::invalid_argument("evolve: oracle mode without an oracle");
    if (initial.populated_prefix(0) != g.num_n())
        throw std::invalid_argument("evolve: initial row not fully populated");

    Field f = initial;
    for (int m = 0; m < cfg.steps; ++m) {
        step_explicit(g, f, m);
        if (cfg.boundary_mode == BoundaryMode::oracle) {
            for (int n = g.num_n() - 2; n < g.num_n(); ++n)
                f.set(n, m + 1, cfg.oracle(g.x(n, m + 1), g.y(n, m + 1)));
        }
    }
    return f;
}

double max_residual(const Grid& g, const Field& f) {
    double worst = 0.0;
    for (int n = 0; n + 2 < g.num_n(); ++n) {
        for (int m = 0; m + 1 < g.num_m(); ++m) {
            double r;
            try {
                r = residual(g, f, n, m);
            } catch (const std::out_of_range&) {
                continue;
            } catch (const DegenerateLatticeError&) {
                continue;
            }
            if (std::isnan(r)) continue;
            worst = std::max(worst, std::abs(r));
        }
    }
    return worst;
}

}  // namespace pburg
