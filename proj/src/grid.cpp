#include "pburg/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "pburg/errors.hpp"

namespace pburg {

namespace {
constexpr double kDegeneracyRel = 1e-12;

std::string site_str(int n, int m) {
    return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}
}  // namespace

double LatticeDiffs::det_scale() const {
    return std::abs(hx * hy) + std::abs(sx * sy);
}

bool LatticeDiffs::degenerate() const {
    return std::abs(det()) <= kDegeneracyRel * det_scale();
}

Grid::Grid(int num_n, int num_m, std::vector<double> x, std::vector<double> y)
    : n_(num_n), m_(num_m), x_(std::move(x)), y_(std::move(y)) {
    if (n_ < 3 || m_ < 3)
        throw std::invalid_argument("Grid: need at least 3x3 sites, got " +
                                    std::to_string(n_) + "x" + std::to_string(m_));
    if (x_.size() != static_cast<size_t>(n_) * m_ || x_.size() != y_.size())
        throw std::invalid_argument("Grid: coordinate array size mismatch");
}

int Grid::index(int n, int m) const {
    if (!in_range(n, m))
        throw std::out_of_range("Grid: site " + site_str(n, m) + " outside " +
                                std::to_string(n_) + "x" + std::to_string(m_));
    return n * m_ + m;
}

Grid build_orthogonal(double a, double b, double x0, double y0, int num_n, int num_m) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("build_orthogonal: spacings must be positive");
    if (num_n < 3 || num_m < 3)
        throw std::invalid_argument("build_orthogonal: grid smaller than 3x3");
    std::vector<double> x(static_cast<size_t>(num_n) * num_m);
    std::vector<double> y(x.size());
    for (int n = 0; n < num_n; ++n) {
        for (int m = 0; m < num_m; ++m) {
            x[static_cast<size_t>(n) * num_m + m] = a * n + x0;
            y[static_cast<size_t>(n) * num_m + m] = b * m + y0;
        }
    }
    return Grid(num_n, num_m, std::move(x), std::move(y));
}

Grid build_exponential(double a, double a0, double b, double b0, double c,
                       int num_n, int num_m) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("build_exponential: spacings must be positive");
    if (!(1.0 + c > 0.0))
        throw std::invalid_argument("build_exponential: requires 1 + c > 0");
    if (num_n < 3 || num_m < 3)
        throw std::invalid_argument("build_exponential: grid smaller than 3x3");
    std::vector<double> x(static_cast<size_t>(num_n) * num_m);
    std::vector<double> y(x.size());
    for (int m = 0; m < num_m; ++m) {
        const double dil = std::pow(1.0 + c, m);
        for (int n = 0; n < num_n; ++n) {
            x[static_cast<size_t>(n) * num_m + m] = dil * (a * n + a0);
            y[static_cast<size_t>(n) * num_m + m] = b * m + b0;
        }
    }
    return Grid(num_n, num_m, std::move(x), std::move(y));
}

LatticeDiffs raw_diffs_at(const Grid& g, int n, int m) {
    if (n < 0 || m < 0 || n > g.num_n() - 2 || m > g.num_m() - 2)
        throw std::out_of_range("diffs_at: cell " + site_str(n, m) +
                                " has no forward neighbors");
    LatticeDiffs d;
    d.hx = g.x(n + 1, m) - g.x(n, m);
    d.hy = g.y(n, m + 1) - g.y(n, m);
    d.sx = g.x(n, m + 1) - g.x(n, m);
    d.sy = g.y(n + 1, m) - g.y(n, m);
    return d;
}

LatticeDiffs diffs_at(const Grid& g, int n, int m) {
    LatticeDiffs d = raw_diffs_at(g, n, m);
    if (d.degenerate())
        throw DegenerateLatticeError("degenerate cell at " + site_str(n, m) +
                                     ": det = " + std::to_string(d.det()));
    return d;
}

SchwarzReport schwarz_check(const Grid& g, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("schwarz_check: tolerance must be positive");
    SchwarzReport r;
    for (int n = 0; n + 1 < g.num_n(); ++n) {
        for (int m = 0; m + 1 < g.num_m(); ++m) {
            // compare each difference against its shifted twin where both exist
            const double sx_nm = g.x(n, m + 1) - g.x(n, m);
            const double sx_n1m = g.x(n + 1, m + 1) - g.x(n + 1, m);
            const double hx_nm = g.x(n + 1, m) - g.x(n, m);
            const double hx_nm1 = g.x(n + 1, m + 1) - g.x(n, m + 1);
            const double sy_nm = g.y(n + 1, m) - g.y(n, m);
            const double sy_nm1 = g.y(n + 1, m + 1) - g.y(n, m + 1);
            const double hy_nm = g.y(n, m + 1) - g.y(n, m);
            const double hy_n1m = g.y(n + 1, m + 1) - g.y(n + 1, m);
            r.max_sx_violation = std::max(r.max_sx_violation, std::abs(sx_nm - sx_n1m));
            r.max_hx_violation = std::max(r.max_hx_violation, std::abs(hx_nm - hx_nm1));
            r.max_sy_violation = std::max(r.max_sy_violation, std::abs(sy_nm - sy_nm1));
            r.max_hy_violation = std::max(r.max_hy_violation, std::abs(hy_nm - hy_n1m));
        }
    }
    r.is_schwarzian = r.max_sx_violation <= tol && r.max_hx_violation <= tol &&
                      r.max_sy_violation <= tol && r.max_hy_violation <= tol;
    return r;
}

}  // namespace pburg
