#ifndef PBURG_SYMMETRY_HPP
#define PBURG_SYMMETRY_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "pburg/calculus.hpp"
#include "pburg/field.hpp"
#include "pburg/grid.hpp"

namespace pburg {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double u = 0.0;
};

/// The six point-symmetry generators of the potential Burgers equation:
///   V1 = d/dx                 V2 = d/dy              V3 = d/du
///   V4 = x d/dx + 2y d/dy     V5 = 2y d/dx - x d/du
///   V6 = 4xy d/dx + 4y^2 d/dy - (x^2 + 2y) d/du
/// V6 fails the lattice compatibility constraint and is excluded from the
/// preserved algebra; its flow is provided to demonstrate the failure.
enum class Generator { V1, V2, V3, V4, V5, V6 };

Generator generator_from_name(const std::string& name);
std::string generator_name(Generator gen);

/// One exact one-parameter point transformation.
struct GroupFlow {
    Generator id = Generator::V1;
    double epsilon = 0.0;
};

/// Coefficients (xi, tau, phi) of a generator at a point, packed as Point3.
Point3 generator_coeffs(Generator gen, double x, double y, double u);

/// Exact flow of the generator.  V6 requires 1 - 4*eps*y > 0 and throws
/// FlowSingularityError outside that domain.
Point3 apply_flow(const GroupFlow& flow, double x, double y, double u);

/// The 18 data of one six-point stencil: coordinates and u at
/// (0,0),(1,0),(0,1),(2,0),(1,1),(0,2) relative to the base corner.
struct SchemeData {
    std::array<double, 6> x{};
    std::array<double, 6> y{};
    std::array<double, 6> u{};

    static constexpr std::array<std::array<int, 2>, 6> sites = {
        {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};

    static SchemeData from_grid(const Grid& g, const Field& f, int n, int m);
    SchemeData transformed(const GroupFlow& flow) const;
    JetValues jet() const;
};

/// The ten lattice/field invariants of the preserved algebra plus the
/// first-order scheme invariant i1 = uxx / (uy - ux^2).  k10 is the
/// reciprocal of i1.  A component whose denominator vanishes is reported
/// as std::nullopt rather than a thrown error.
struct InvariantSet {
    std::array<std::optional<double>, 10> k{};  // k[0] = K1 ... k[9] = K10
    std::optional<double> i1;

    static const std::array<const char*, 11> names;
};

/// Evaluate all invariants from the stencil's own differences.  Requires
/// hy(0,0) > 0 (fractional powers); throws InvalidStencilError otherwise.
InvariantSet invariants(const SchemeData& s);

/// Apply the exact flow to all 18 data, recompute the invariants and return
/// the maximum relative change, where relative means |a-b|/max(|a|,|b|,1)
/// (the unit floor keeps exactly-zero invariants from amplifying roundoff).
/// Components undefined on both sides are skipped; a component defined on
/// only one side yields +infinity.
double flow_invariance_test(const SchemeData& s, const GroupFlow& flow);

/// Residual of the discrete wave constraint for a symmetry coefficient
/// sampled at site data:  c(n,m+1) - c(n,m) - c(n+1,m+1) + c(n+1,m).
/// Vanishes identically iff the sampled values split as f(n) + g(m).
double wave_residual(const std::function<double(double, double, double)>& coeff,
                     const Grid& g, const Field& f, int n, int m);

/// Same residual for an explicitly tabulated coefficient field.
double wave_residual(const Field& coeff, int n, int m);

/// Infinitesimal action of a vector field (xi, tau, phi) on the stencil
/// coordinates: derivatives of the ten cell differences and of the five jet
/// coordinates with respect to the group parameter at eps = 0.  The
/// difference coefficients are indexed by the cells that own them:
/// eta_x_*, eta_y_* at (0,0),(1,0),(0,1); chi_x_* at (0,0),(0,1);
/// chi_y_* at (0,0),(1,0).
struct ProlongationCoeffs {
    double eta_x_00 = 0.0, eta_x_10 = 0.0, eta_x_01 = 0.0;  // d(hx)/d(eps)
    double eta_y_00 = 0.0, eta_y_10 = 0.0, eta_y_01 = 0.0;  // d(hy)/d(eps)
    double chi_x_00 = 0.0, chi_x_01 = 0.0;                  // d(sx)/d(eps)
    double chi_y_00 = 0.0, chi_y_10 = 0.0;                  // d(sy)/d(eps)
    double phi1x = 0.0;   // d(Dx u)/d(eps)
    double phi1y = 0.0;   // d(Dy u)/d(eps)
    double phi2xx = 0.0;  // d(Dx Dx u)/d(eps)
    double phi2xy = 0.0;  // d(Dx Dy u)/d(eps)
    double phi2yy = 0.0;  // d(Dy Dy u)/d(eps)
};

using CoeffFn = std::function<double(double, double, double)>;

/// Prolongation coefficients for the vector field with components
/// (xi, tau, phi), all sampled on the grid and differentiated with the
/// discrete operators.  Requires the six-point stencil in range.
ProlongationCoeffs prolongation_coeffs(const CoeffFn& xi, const CoeffFn& tau,
                                       const CoeffFn& phi, const Grid& g,
                                       const Field& f, int n, int m);

/// Displacement produced by the group commutator
/// flow_B(-delta) o flow_A(-delta) o flow_B(delta) o flow_A(delta) at p.
/// To leading order this equals delta^2 * [A,B](p).
Point3 group_commutator(Generator a, Generator b, const Point3& p, double delta);

/// The Lie bracket [a, b] evaluated at a point, computed from the generator
/// coefficient functions and their exact derivatives (independent of the
/// flows, so it can cross-check them).
Point3 lie_bracket(Generator a, Generator b, const Point3& p);

struct CommutatorTest {
    Point3 displacement;     // group-commutator displacement at the point
    Point3 expected;         // delta^2 * [a,b](p) from the analytic bracket
    double max_abs_error = 0.0;  // largest component difference
};

/// Run the order-delta^2 commutator check: the two routes must agree to
/// O(delta^3).
CommutatorTest commutator_flow_test(Generator a, Generator b, const Point3& p,
                                    double delta);

}  // namespace pburg

#endif
