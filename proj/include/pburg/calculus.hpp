#ifndef PBURG_CALCULUS_HPP
#define PBURG_CALCULUS_HPP

#include <array>

#include "pburg/field.hpp"
#include "pburg/grid.hpp"

namespace pburg {

/// u and its discrete derivatives up to second order at one site.  The
/// derivative operators act along the coordinate axes even on skew cells:
///   Dx f = (hy*Dn f - sy*Dm f) / (hx*hy - sx*sy)
///   Dy f = (-sx*Dn f + hx*Dm f) / (hx*hy - sx*sy)
/// with Dn/Dm the forward index shifts.  Second derivatives compose the
/// first-order operators, every application using the local differences of
/// its own cell; the composition needs the six-point stencil
/// (n,m),(n+1,m),(n,m+1),(n+2,m),(n+1,m+1),(n,m+2).
///
/// uxy (Dx Dy u) and uyx (Dy Dx u) differ on a general lattice; uyx is
/// determined by the other entries through cross_identity_rhs, which gives a
/// built-in consistency check.
struct JetValues {
    double u = 0.0;
    double ux = 0.0;
    double uy = 0.0;
    double uxx = 0.0;
    double uyy = 0.0;
    double uxy = 0.0;
    double uyx = 0.0;
};

/// The six correction terms in the closed-form first derivatives of the
/// quadratic monomials: Dx x^2 = 2x + dxx_x, Dx xy = y + dxy_x,
/// Dx y^2 = dyy_x, Dy x^2 = dxx_y, Dy xy = x + dxy_y, Dy y^2 = 2y + dyy_y.
/// All vanish in the continuous limit; on an axis-aligned cell (sx=sy=0)
/// only dxx_x = hx and dyy_y = hy survive.
struct MonomialDeltas {
    double dxx_x = 0.0;
    double dxy_x = 0.0;
    double dyy_x = 0.0;
    double dxx_y = 0.0;
    double dxy_y = 0.0;
    double dyy_y = 0.0;
};

/// One application of the first-order operators on a single cell, given the
/// three values the cell sees at its (0,0), (1,0) and (0,1) corners.  Terms
/// with an exactly-zero difference coefficient are skipped, so a zero
/// coefficient never multiplies an absent (NaN) value.
double cell_dx(const LatticeDiffs& d, double f00, double f10, double f01);
double cell_dy(const LatticeDiffs& d, double f00, double f10, double f01);

/// Discrete x-derivative of f at (n,m).  Requires n <= num_n-2, m <= num_m-2
/// and a nondegenerate cell.
double dx(const Grid& g, const Field& f, int n, int m);

/// Discrete y-derivative, same contract as dx.
double dy(const Grid& g, const Field& f, int n, int m);

/// Full jet at (n,m); requires n <= num_n-3 and m <= num_m-3.
JetValues jet(const Grid& g, const Field& f, int n, int m);

/// Jet from raw six-point data in site order
/// (0,0),(1,0),(0,1),(2,0),(1,1),(0,2) relative to the base corner.
JetValues jet_from_points(const std::array<double, 6>& xs,
                          const std::array<double, 6>& ys,
                          const std::array<double, 6>& us);

/// Right-hand side of the identity expressing Dy Dx u through the jet:
/// needs the cell differences at the base corner plus the shifted
/// hx(n,m+1) and hy(n+1,m).  Throws DegenerateStencilError if the shared
/// denominator vanishes.
double cross_identity_rhs(const JetValues& j, const LatticeDiffs& d00,
                          double hx01, double hy10);

/// Convenience overload evaluating both the jet and the shifted differences
/// from the grid.
double cross_identity_rhs(const Grid& g, const Field& f, int n, int m);

/// Closed-form monomial corrections for one cell.
MonomialDeltas monomial_deltas(const LatticeDiffs& d);

}  // namespace pburg

#endif
