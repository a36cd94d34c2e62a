#include "pburg/symmetry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pburg/errors.hpp"

namespace pburg {

constexpr std::array<std::array<int, 2>, 6> SchemeData::sites;

const std::array<const char*, 11> InvariantSet::names = {
    "K1", "K2", "K3", "K4", "K5", "K6", "K7", "K8", "K9", "K10", "I1"};

Generator generator_from_name(const std::string& name) {
    if (name == "V1") return Generator::V1;
    if (name == "V2") return Generator::V2;
    if (name == "V3") return Generator::V3;
    if (name == "V4") return Generator::V4;
    if (name == "V5") return Generator::V5;
    if (name == "V6") return Generator::V6;
    throw std::invalid_argument("unknown generator '" + name + "' (expected V1..V6)");
}

std::string generator_name(Generator gen) {
    switch (gen) {
        case Generator::V1: return "V1";
        case Generator::V2: return "V2";
        case Generator::V3: return "V3";
        case Generator::V4: return "V4";
        case Generator::V5: return "V5";
        case Generator::V6: return "V6";
    }
    return "?";
}

Point3 generator_coeffs(Generator gen, double x, double y, double u) {
    (void)u;
    switch (gen) {
        case Generator::V1: return {1.0, 0.0, 0.0};
        case Generator::V2: return {0.0, 1.0, 0.0};
        case Generator::V3: return {0.0, 0.0, 1.0};
        case Generator::V4: return {x, 2.0 * y, 0.0};
        case Generator::V5: return {2.0 * y, 0.0, -x};
        case Generator::V6: return {4.0 * y * x, 4.0 * y * y, -(x * x + 2.0 * y)};
    }
    return {};
}

Point3 apply_flow(const GroupFlow& flow, double x, double y, double u) {
    const double e = flow.epsilon;
    switch (flow.id) {
        case Generator::V1: return {x + e, y, u};
        case Generator::V2: return {x, y + e, u};
        case Generator::V3: return {x, y, u + e};
        case Generator::V4: return {std::exp(e) * x, std::exp(2.0 * e) * y, u};
        case Generator::V5: return {x + 2.0 * e * y, y, u - e * x - e * e * y};
        case Generator::V6: {
            const double w = 1.0 - 4.0 * e * y;
            if (!(w > 0.0))
                throw FlowSingularityError("V6 flow undefined: 1 - 4*eps*y = " +
                                           std::to_string(w));
            return {x / w, y / w, u - e * x * x / w + 0.5 * std::log(w)};
        }
    }
    return {};
}

SchemeData SchemeData::from_grid(const Grid& g, const Field& f, int n, int m) {
    if (n < 0 || m < 0 || n > g.num_n() - 3 || m > g.num_m() - 3)
        throw std::out_of_range("SchemeData: stencil at (" + std::to_string(n) + "," +
                                std::to_string(m) + ") out of range");
    SchemeData s;
    for (size_t i = 0; i < sites.size(); ++i) {
        const int nn = n + sites[i][0];
        const int mm = m + sites[i][1];
        s.x[i] = g.x(nn, mm);
        s.y[i] = g.y(nn, mm);
        s.u[i] = f(nn, mm);
    }
    return s;
}

SchemeData SchemeData::transformed(const GroupFlow& flow) const {
    SchemeData out;
    for (size_t i = 0; i < sites.size(); ++i) {
        const Point3 p = apply_flow(flow, x[i], y[i], u[i]);
        out.x[i] = p.x;
        out.y[i] = p.y;
        out.u[i] = p.u;
    }
    return out;
}

JetValues SchemeData::jet() const { return jet_from_points(x, y, u); }

InvariantSet invariants(const SchemeData& s) {
    // the ten differences of the stencil, indexed by owning cell
    const double hx00 = s.x[1] - s.x[0], hx10 = s.x[3] - s.x[1], hx01 = s.x[4] - s.x[2];
    const double hy00 = s.y[2] - s.y[0], hy10 = s.y[4] - s.y[1], hy01 = s.y[5] - s.y[2];
    const double sx00 = s.x[2] - s.x[0], sx01 = s.x[5] - s.x[2];
    const double sy00 = s.y[1] - s.y[0], sy10 = s.y[3] - s.y[1];

    if (!(hy00 > 0.0))
        throw InvalidStencilError("invariants: needs hy(0,0) > 0, got " +
                                  std::to_string(hy00));

    InvariantSet inv;
    const double hy_12 = std::sqrt(hy00);
    const double hy_32 = hy00 * hy_12;
    inv.k[0] = hy10 / hy00;
    inv.k[1] = hy01 / hy00;
    inv.k[2] = sy00 / hy00;
    inv.k[3] = sy10 / hy00;
    inv.k[4] = (hx00 * hy00 - sx00 * sy00) / hy_32;
    inv.k[5] = (hy01 * sx00 - hy00 * sx01) / hy_32;
    inv.k[6] = (hx00 * (hy10 - hy00) - sy00 * (hx01 - hx00)) / hy_32;
    inv.k[7] = (hx00 * sy10 - hx10 * sy00) / hy_32;

    // jet-dependent members; a vanishing denominator leaves the component
    // undefined instead of raising
    const LatticeDiffs d00{hx00, hy00, sx00, sy00};
    if (!d00.degenerate()) {
        const double ux = cell_dx(d00, s.u[0], s.u[1], s.u[2]);
        const double uy = cell_dy(d00, s.u[0], s.u[1], s.u[2]);
        inv.k[8] = (hx00 + 2.0 * sy00 * ux) / hy_12;
        const double growth = uy - ux * ux;
        try {
            const double uxx = s.jet().uxx;
            if (uxx != 0.0) inv.k[9] = growth / uxx;
            if (growth != 0.0) inv.i1 = uxx / growth;
        } catch (const DegenerateLatticeError&) {
            // shifted cells degenerate: uxx, hence k10 and i1, stay undefined
        }
    }
    return inv;
}

double flow_invariance_test(const SchemeData& s, const GroupFlow& flow) {
    const InvariantSet before = invariants(s);
    const InvariantSet after = invariants(s.transformed(flow));

    auto rel = [](double a, double b) {
        return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
    };
    double worst = 0.0;
    auto compare = [&](const std::optional<double>& a, const std::optional<double>& b) {
        if (!a && !b) return;
        if (!a || !b) {
            worst = std::numeric_limits<double>::infinity();
            return;
        }
        worst = std::max(worst, rel(*a, *b));
    };
    for (size_t i = 0; i < before.k.size(); ++i) compare(before.k[i], after.k[i]);
    compare(before.i1, after.i1);
    return worst;
}

namespace {
void check_wave_range(int n, int m, int num_n, int num_m) {
    if (n < 0 || m < 0 || n > num_n - 2 || m > num_m - 2)
        throw std::out_of_range("wave_residual: site (" + std::to_string(n) + "," +
                                std::to_string(m) + ") lacks forward neighbors");
}
}  // namespace

double wave_residual(const std::function<double(double, double, double)>& coeff,
                     const Grid& g, const Field& f, int n, int m) {
    check_wave_range(n, m, g.num_n(), g.num_m());
    auto at = [&](int i, int j) { return coeff(g.x(i, j), g.y(i, j), f(i, j)); };
    return at(n, m + 1) - at(n, m) - at(n + 1, m + 1) + at(n + 1, m);
}

double wave_residual(const Field& coeff, int n, int m) {
    check_wave_range(n, m, coeff.num_n(), coeff.num_m());
    return coeff(n, m + 1) - coeff(n, m) - coeff(n + 1, m + 1) + coeff(n + 1, m);
}

ProlongationCoeffs prolongation_coeffs(const CoeffFn& xi, const CoeffFn& tau,
                                       const CoeffFn& phi, const Grid& g,
                                       const Field& f, int n, int m) {
    const SchemeData s = SchemeData::from_grid(g, f, n, m);

    std::array<double, 6> xiv, tauv, phiv;
    for (size_t i = 0; i < SchemeData::sites.size(); ++i) {
        xiv[i] = xi(s.x[i], s.y[i], s.u[i]);
        tauv[i] = tau(s.x[i], s.y[i], s.u[i]);
        phiv[i] = phi(s.x[i], s.y[i], s.u[i]);
    }

    ProlongationCoeffs pc;
    // difference coefficients: plain shifts of the sampled xi / tau
    pc.eta_x_00 = xiv[1] - xiv[0];
    pc.eta_x_10 = xiv[3] - xiv[1];
    pc.eta_x_01 = xiv[4] - xiv[2];
    pc.eta_y_00 = tauv[2] - tauv[0];
    pc.eta_y_10 = tauv[4] - tauv[1];
    pc.eta_y_01 = tauv[5] - tauv[2];
    pc.chi_x_00 = xiv[2] - xiv[0];
    pc.chi_x_01 = xiv[5] - xiv[2];
    pc.chi_y_00 = tauv[1] - tauv[0];
    pc.chi_y_10 = tauv[3] - tauv[1];

    // per-cell first derivatives of u, xi, tau, phi on the three cells
    const LatticeDiffs d00{s.x[1] - s.x[0], s.y[2] - s.y[0], s.x[2] - s.x[0],
                           s.y[1] - s.y[0]};
    const LatticeDiffs d10{s.x[3] - s.x[1], s.y[4] - s.y[1], s.x[4] - s.x[1],
                           s.y[3] - s.y[1]};
    const LatticeDiffs d01{s.x[4] - s.x[2], s.y[5] - s.y[2], s.x[5] - s.x[2],
                           s.y[4] - s.y[2]};
    if (d00.degenerate() || d10.degenerate() || d01.degenerate())
        throw DegenerateLatticeError("prolongation_coeffs: degenerate stencil cell");

    struct CellVals {
        double v00, v10, v01;  // the three values a cell sees
    };
    auto cell = [](const std::array<double, 6>& v, int which) -> CellVals {
        switch (which) {
            case 0: return {v[0], v[1], v[2]};   // cell (0,0)
            case 1: return {v[1], v[3], v[4]};   // cell (1,0)
            default: return {v[2], v[4], v[5]};  // cell (0,1)
        }
    };
    const std::array<LatticeDiffs, 3> cd{d00, d10, d01};
    auto dx_of = [&](const std::array<double, 6>& v, int c) {
        const CellVals cv = cell(v, c);
        return cell_dx(cd[c], cv.v00, cv.v10, cv.v01);
    };
    auto dy_of = [&](const std::array<double, 6>& v, int c) {
        const CellVals cv = cell(v, c);
        return cell_dy(cd[c], cv.v00, cv.v10, cv.v01);
    };

    // first-order coefficients on every cell, then compose for second order
    std::array<double, 3> p1x, p1y;
    for (int c = 0; c < 3; ++c) {
        const double ux_c = dx_of(s.u, c);
        const double uy_c = dy_of(s.u, c);
        p1x[c] = dx_of(phiv, c) - ux_c * dx_of(xiv, c) - uy_c * dx_of(tauv, c);
        p1y[c] = dy_of(phiv, c) - ux_c * dy_of(xiv, c) - uy_c * dy_of(tauv, c);
    }
    pc.phi1x = p1x[0];
    pc.phi1y = p1y[0];

    const JetValues j = s.jet();
    const double dxxi = dx_of(xiv, 0), dyxi = dy_of(xiv, 0);
    const double dxtau = dx_of(tauv, 0), dytau = dy_of(tauv, 0);
    pc.phi2xx = cell_dx(d00, p1x[0], p1x[1], p1x[2]) - j.uxx * dxxi - j.uyx * dxtau;
    pc.phi2xy = cell_dx(d00, p1y[0], p1y[1], p1y[2]) - j.uxy * dxxi - j.uyy * dxtau;
    pc.phi2yy = cell_dy(d00, p1y[0], p1y[1], p1y[2]) - j.uxy * dyxi - j.uyy * dytau;
    return pc;
}

Point3 group_commutator(Generator a, Generator b, const Point3& p, double delta) {
    Point3 q = apply_flow({a, delta}, p.x, p.y, p.u);
    q = apply_flow({b, delta}, q.x, q.y, q.u);
    q = apply_flow({a, -delta}, q.x, q.y, q.u);
    q = apply_flow({b, -delta}, q.x, q.y, q.u);
    return {q.x - p.x, q.y - p.y, q.u - p.u};
}

namespace {

// Jacobian of the coefficient vector (xi, tau, phi) with respect to (x, y, u);
// rows are components, columns derivatives.  Only V4..V6 have nonconstant
// coefficients.
std::array<std::array<double, 3>, 3> generator_jacobian(Generator gen, double x,
                                                        double y) {
    std::array<std::array<double, 3>, 3> j{};
    switch (gen) {
        case Generator::V1:
        case Generator::V2:
        case Generator::V3: break;
        case Generator::V4:
            j[0][0] = 1.0;
            j[1][1] = 2.0;
            break;
        case Generator::V5:
            j[0][1] = 2.0;
            j[2][0] = -1.0;
            break;
        case Generator::V6:
            j[0][0] = 4.0 * y;
            j[0][1] = 4.0 * x;
            j[1][1] = 8.0 * y;
            j[2][0] = -2.0 * x;
            j[2][1] = -2.0;
            break;
    }
    return j;
}

Point3 apply_jacobian(const std::array<std::array<double, 3>, 3>& j, const Point3& v) {
    return {j[0][0] * v.x + j[0][1] * v.y + j[0][2] * v.u,
            j[1][0] * v.x + j[1][1] * v.y + j[1][2] * v.u,
            j[2][0] * v.x + j[2][1] * v.y + j[2][2] * v.u};
}

}  // namespace

Point3 lie_bracket(Generator a, Generator b, const Point3& p) {
    const Point3 va = generator_coeffs(a, p.x, p.y, p.u);
    const Point3 vb = generator_coeffs(b, p.x, p.y, p.u);
    const Point3 dba = apply_jacobian(generator_jacobian(b, p.x, p.y), va);
    const Point3 dab = apply_jacobian(generator_jacobian(a, p.x, p.y), vb);
    return {dba.x - dab.x, dba.y - dab.y, dba.u - dab.u};
}

CommutatorTest commutator_flow_test(Generator a, Generator b, const Point3& p,
                                    double delta) {
    CommutatorTest t;
    t.displacement = group_commutator(a, b, p, delta);
    const Point3 br = lie_bracket(a, b, p);
    t.expected = {delta * delta * br.x, delta * delta * br.y, delta * delta * br.u};
    t.max_abs_error = std::max({std::abs(t.displacement.x - t.expected.x),
                                std::abs(t.displacement.y - t.expected.y),
                                std::abs(t.displacement.u - t.expected.u)});
    return t;
}

}  // namespace pburg
