#ifndef PBURG_GRID_HPP
#define PBURG_GRID_HPP

#include <vector>

namespace pburg {

/// The four coordinate increments attached to one lattice cell (n,m):
///   hx = x(n+1,m) - x(n,m)     hy = y(n,m+1) - y(n,m)
///   sx = x(n,m+1) - x(n,m)     sy = y(n+1,m) - y(n,m)
/// hx,hy step along the lattice directions; sx,sy measure the skew of the
/// cell relative to the coordinate axes.
struct LatticeDiffs {
    double hx = 0.0;
    double hy = 0.0;
    double sx = 0.0;
    double sy = 0.0;

    double det() const { return hx * hy - sx * sy; }
    /// Magnitude used for the relative degeneracy test.
    double det_scale() const;
    bool degenerate() const;
};

/// Result of the lattice commutativity diagnostic.  A lattice on which the
/// discrete mixed derivatives commute must have sx independent of n, hx
/// independent of m, sy independent of m and hy independent of n; the four
/// maxima record the worst violation of each condition.
struct SchwarzReport {
    double max_sx_violation = 0.0;  // max |sx(n,m) - sx(n+1,m)|
    double max_hx_violation = 0.0;  // max |hx(n,m) - hx(n,m+1)|
    double max_sy_violation = 0.0;  // max |sy(n,m) - sy(n,m+1)|
    double max_hy_violation = 0.0;  // max |hy(n,m) - hy(n+1,m)|
    bool is_schwarzian = false;     // all four <= tolerance
};

/// A two-index quadrilateral lattice: coordinates (x,y) at integer sites
/// (n,m), 0 <= n < num_n, 0 <= m < num_m.  Immutable after construction;
/// all differences are recomputed from the coordinates on demand.
class Grid {
public:
    Grid(int num_n, int num_m, std::vector<double> x, std::vector<double> y);

    int num_n() const { return n_; }
    int num_m() const { return m_; }

    double x(int n, int m) const { return x_[index(n, m)]; }
    double y(int n, int m) const { return y_[index(n, m)]; }

    bool in_range(int n, int m) const { return n >= 0 && n < n_ && m >= 0 && m < m_; }

private:
    int index(int n, int m) const;

    int n_;
    int m_;
    std::vector<double> x_;
    std::vector<double> y_;
};

/// x = x0 + a*n, y = y0 + b*m.  Requires a,b > 0 and at least 3x3 sites.
Grid build_orthogonal(double a, double b, double x0, double y0, int num_n, int num_m);

/// y = b*m + b0, x = (1+c)^m * (a*n + a0).  The dilation c (> -1) stretches
/// each successive row in x; c = 0 recovers the orthogonal lattice.
Grid build_exponential(double a, double a0, double b, double b0, double c,
                       int num_n, int num_m);

/// The four local differences of cell (n,m).  Requires n <= num_n-2 and
/// m <= num_m-2; throws DegenerateLatticeError if the cell determinant
/// vanishes relative to its scale.
LatticeDiffs diffs_at(const Grid& g, int n, int m);

/// Same as diffs_at without the degeneracy check (bounds still enforced).
LatticeDiffs raw_diffs_at(const Grid& g, int n, int m);

/// Scan all comparable cells and report the worst violation of each
/// commutativity condition.  tol must be positive.
SchwarzReport schwarz_check(const Grid& g, double tol);

}  // namespace pburg

#endif
