#include "pburg/calculus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pburg/errors.hpp"

namespace pburg {

double cell_dx(const LatticeDiffs& d, double f00, double f10, double f01) {
    double acc = 0.0;
    if (d.hy != 0.0) acc += d.hy * (f10 - f00);
    if (d.sy != 0.0) acc -= d.sy * (f01 - f00);
    return acc / d.det();
}

double cell_dy(const LatticeDiffs& d, double f00, double f10, double f01) {
    double acc = 0.0;
    if (d.sx != 0.0) acc -= d.sx * (f10 - f00);
    if (d.hx != 0.0) acc += d.hx * (f01 - f00);
    return acc / d.det();
}

namespace {

void check_first_order_range(const Grid& g, int n, int m, const char* who) {
    if (n < 0 || m < 0 || n > g.num_n() - 2 || m > g.num_m() - 2)
        throw std::out_of_range(std::string(who) + ": site (" + std::to_string(n) +
                                "," + std::to_string(m) + ") lacks forward neighbors");
}

LatticeDiffs checked(const LatticeDiffs& d, const char* who) {
    if (d.degenerate())
        throw DegenerateLatticeError(std::string(who) + ": degenerate cell, det = " +
                                     std::to_string(d.det()));
    return d;
}

}  // namespace

double dx(const Grid& g, const Field& f, int n, int m) {
    check_first_order_range(g, n, m, "dx");
    const LatticeDiffs d = diffs_at(g, n, m);
    return cell_dx(d, f(n, m), f(n + 1, m), f(n, m + 1));
}

double dy(const Grid& g, const Field& f, int n, int m) {
    check_first_order_range(g, n, m, "dy");
    const LatticeDiffs d = diffs_at(g, n, m);
    return cell_dy(d, f(n, m), f(n + 1, m), f(n, m + 1));
}

JetValues jet_from_points(const std::array<double, 6>& xs,
                          const std::array<double, 6>& ys,
                          const std::array<double, 6>& us) {
    // site order: 0:(0,0) 1:(1,0) 2:(0,1) 3:(2,0) 4:(1,1) 5:(0,2)
    const LatticeDiffs d00 = checked(
        {xs[1] - xs[0], ys[2] - ys[0], xs[2] - xs[0], ys[1] - ys[0]}, "jet");
    const LatticeDiffs d10 = checked(
        {xs[3] - xs[1], ys[4] - ys[1], xs[4] - xs[1], ys[3] - ys[1]}, "jet");
    const LatticeDiffs d01 = checked(
        {xs[4] - xs[2], ys[5] - ys[2], xs[5] - xs[2], ys[4] - ys[2]}, "jet");

    const double gx00 = cell_dx(d00, us[0], us[1], us[2]);
    const double gx10 = cell_dx(d10, us[1], us[3], us[4]);
    const double gx01 = cell_dx(d01, us[2], us[4], us[5]);
    const double gy00 = cell_dy(d00, us[0], us[1], us[2]);
    const double gy10 = cell_dy(d10, us[1], us[3], us[4]);
    const double gy01 = cell_dy(d01, us[2], us[4], us[5]);

    JetValues j;
    j.u = us[0];
    j.ux = gx00;
    j.uy = gy00;
    j.uxx = cell_dx(d00, gx00, gx10, gx01);
    j.uyy = cell_dy(d00, gy00, gy10, gy01);
    j.uxy = cell_dx(d00, gy00, gy10, gy01);
    j.uyx = cell_dy(d00, gx00, gx10, gx01);
    return j;
}

JetValues jet(const Grid& g, const Field& f, int n, int m) {
    if (n < 0 || m < 0 || n > g.num_n() - 3 || m > g.num_m() - 3)
        throw std::out_of_range("jet: six-point stencil at (" + std::to_string(n) +
                                "," + std::to_string(m) + ") out of range");
    std::array<double, 6> xs, ys, us;
    int i = 0;
    for (const auto& s : std::array<std::array<int, 2>, 6>{
             {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}}) {
        xs[i] = g.x(n + s[0], m + s[1]);
        ys[i] = g.y(n + s[0], m + s[1]);
        us[i] = f(n + s[0], m + s[1]);
        ++i;
    }
    return jet_from_points(xs, ys, us);
}

double cross_identity_rhs(const JetValues& j, const LatticeDiffs& d00,
                          double hx01, double hy10) {
    const double q = hx01 * d00.hy + d00.hx * d00.sy - hx01 * d00.sy - d00.sx * d00.sy;
    const double scale = std::abs(hx01 * d00.hy) + std::abs(d00.hx * d00.sy) +
                         std::abs(hx01 * d00.sy) + std::abs(d00.sx * d00.sy);
    if (std::abs(q) <= 1e-12 * scale)
        throw DegenerateStencilError("cross_identity_rhs: zero shared denominator");
    const double cxx = (d00.hx - hx01) * (d00.hx - d00.sx);
    const double cyy = (d00.hy - hy10) * (d00.hy - d00.sy);
    const double cxy = d00.hx * hy10 + d00.hy * d00.sx - hy10 * d00.sx - d00.sx * d00.sy;
    return (-j.uxx * cxx + j.uyy * cyy + j.uxy * cxy) / q;
}

double cross_identity_rhs(const Grid& g, const Field& f, int n, int m) {
    const JetValues j = jet(g, f, n, m);
    const LatticeDiffs d00 = diffs_at(g, n, m);
    const double hx01 = g.x(n + 1, m + 1) - g.x(n, m + 1);
    const double hy10 = g.y(n + 1, m + 1) - g.y(n + 1, m);
    return cross_identity_rhs(j, d00, hx01, hy10);
}

MonomialDeltas monomial_deltas(const LatticeDiffs& d) {
    if (d.degenerate())
        throw DegenerateLatticeError("monomial_deltas: degenerate cell");
    const double det = d.det();
    MonomialDeltas md;
    md.dxx_x = (d.hy * d.hx * d.hx - d.sy * d.sx * d.sx) / det;
    md.dxy_x = d.hy * d.sy * (d.hx - d.sx) / det;
    md.dyy_x = -d.hy * d.sy * (d.hy - d.sy) / det;
    md.dxx_y = -d.hx * d.sx * (d.hx - d.sx) / det;
    md.dxy_y = d.hx * d.sx * (d.hy - d.sy) / det;
    md.dyy_y = (d.hx * d.hy * d.hy - d.sx * d.sy * d.sy) / det;
    return md;
}

}  // namespace pburg
