#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pburg/errors.hpp"
#include "pburg/scheme.hpp"
#include "pburg/solutions.hpp"
#include "pburg/symmetry.hpp"
#include "test_oracles.hpp"

using namespace pburg;

TEST_CASE("exact flows: spot values") {
    Point3 p = apply_flow({Generator::V1, 0.3}, 1, 2, 5);
    CHECK(p.x == doctest::Approx(1.3).epsilon(1e-15));
    CHECK(p.y == 2.0);
    CHECK(p.u == 5.0);

    // V5 integrates dx/de = 2y, du/de = -x
    p = apply_flow({Generator::V5, 0.1}, 1, 2, 0);
    CHECK(p.x == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(p.y == 2.0);
    CHECK(p.u == doctest::Approx(-0.12).epsilon(1e-15));

    p = apply_flow({Generator::V4, 0.0}, 0.7, -0.3, 2.5);
    CHECK(p.x == 0.7);
    CHECK(p.y == -0.3);
    CHECK(p.u == 2.5);
}

TEST_CASE("V6 flow: domain boundary") {
    CHECK_THROWS_AS(apply_flow({Generator::V6, 0.5}, 1.0, 1.0, 0.0),
                    FlowSingularityError);
    CHECK_THROWS_AS(apply_flow({Generator::V6, 0.25}, 1.0, 1.0, 0.0),
                    FlowSingularityError);
    CHECK_NOTHROW(apply_flow({Generator::V6, 0.2}, 1.0, 1.0, 0.0));
}

TEST_CASE("flows satisfy the one-parameter group law") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> eps(-0.5, 0.5);
    for (const Generator gen : {Generator::V1, Generator::V2, Generator::V3,
                                Generator::V4, Generator::V5, Generator::V6}) {
        for (int trial = 0; trial < 200; ++trial) {
            const double x = coord(rng), y = coord(rng), u = coord(rng);
            const double e1 = eps(rng), e2 = eps(rng);
            if (gen == Generator::V6) {
                // keep both partial applications and the sum inside the domain
                if (1 - 4 * e1 * y <= 0.1 || 1 - 4 * (e1 + e2) * y <= 0.1) continue;
                const Point3 mid = apply_flow({gen, e1}, x, y, u);
                if (1 - 4 * e2 * mid.y <= 0.1) continue;
            }
            const Point3 mid = apply_flow({gen, e1}, x, y, u);
            const Point3 two = apply_flow({gen, e2}, mid.x, mid.y, mid.u);
            const Point3 one = apply_flow({gen, e1 + e2}, x, y, u);
            CHECK(two.x == doctest::Approx(one.x).epsilon(1e-12));
            CHECK(two.y == doctest::Approx(one.y).epsilon(1e-12));
            CHECK(two.u == doctest::Approx(one.u).epsilon(1e-12));
        }
    }
}

TEST_CASE("invariants on the orthogonal lattice") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 8, 8);
    const Field f = sample_field(g, [](double x, double y) { return f1(x, y); });
    const InvariantSet inv = invariants(SchemeData::from_grid(g, f, 2, 2));
    const double a_over_sqrt_b = 0.1 / std::sqrt(0.1);
    CHECK(*inv.k[0] == 1.0);  // hy does not depend on n, bit-exact ratio
    CHECK(*inv.k[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(*inv.k[2] == 0.0);
    CHECK(*inv.k[3] == 0.0);
    CHECK(*inv.k[4] == doctest::Approx(a_over_sqrt_b).epsilon(1e-14));
    CHECK(*inv.k[4] == doctest::Approx(0.316228).epsilon(1e-5));
    CHECK(*inv.k[5] == 0.0);
    CHECK(*inv.k[6] == 0.0);
    CHECK(*inv.k[7] == 0.0);
    CHECK(*inv.k[8] == doctest::Approx(a_over_sqrt_b).epsilon(1e-14));
    REQUIRE(inv.k[9].has_value());
    REQUIRE(inv.i1.has_value());
    CHECK(*inv.k[9] * *inv.i1 == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("invariants vary across the dilated lattice") {
    const Grid g = build_exponential(0.1, 0.0, 0.1, 0.1, 0.15, 8, 8);
    const Field f = sample_field(g, [](double x, double y) { return f1(x, y); });
    const InvariantSet a = invariants(SchemeData::from_grid(g, f, 1, 1));
    const InvariantSet b = invariants(SchemeData::from_grid(g, f, 1, 2));
    CHECK(std::abs(*a.k[4] - *b.k[4]) > 1e-6);  // K5 depends on m
    CHECK(std::abs(*a.k[8] - *b.k[8]) > 1e-6);  // K9 likewise
    CHECK(std::abs(*a.k[5]) > 1e-12);           // K6 nonzero off the axis lattice
}

TEST_CASE("invariants: undefined components on affine data") {
    // dyadic spacings keep the affine samples exact, so the growth and
    // curvature denominators vanish bit-exactly
    const Grid g = build_orthogonal(0.25, 0.25, 0.0, 0.25, 6, 6);
    const Field f = sample_field(g, [](double x, double y) { return x + y; });
    const InvariantSet inv = invariants(SchemeData::from_grid(g, f, 1, 1));
    CHECK_FALSE(inv.i1.has_value());     // uy - ux^2 = 0
    CHECK_FALSE(inv.k[9].has_value());   // uxx = 0
    CHECK(inv.k[8].has_value());
}

TEST_CASE("invariants: only the jet-dependent members need the shifted cells") {
    // cell (1,0) collapsed (hx10 = 0, sy10 = 0): uxx is unavailable but the
    // base-cell members survive
    const SchemeData s = test::stencil_from_diffs(
        {1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0},
        {0.3, 0.7, 0.4, 0.9, 0.6, 0.2});
    const InvariantSet inv = invariants(s);
    CHECK(inv.k[8].has_value());
    CHECK_FALSE(inv.k[9].has_value());
    CHECK_FALSE(inv.i1.has_value());
    CHECK(*inv.k[4] == 1.0);
}

TEST_CASE("invariants: hy <= 0 is rejected") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 6, 6);
    const Field f = sample_field(g, [](double x, double y) { return f1(x, y); });
    SchemeData s = SchemeData::from_grid(g, f, 1, 1);
    for (auto& y : s.y) y = -y;  // flips hy
    CHECK_THROWS_AS(invariants(s), InvalidStencilError);
}

TEST_CASE("k10 is the reciprocal of i1 whenever both are defined") {
    std::mt19937_64 rng(29);
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SchemeData s = test::random_stencil(rng);
        if (!(s.y[2] - s.y[0] > 0.0)) continue;
        const InvariantSet inv = invariants(s);
        if (!inv.k[9] || !inv.i1) continue;
        CHECK(*inv.k[9] * *inv.i1 == doctest::Approx(1.0).epsilon(1e-12));
        ++compared;
    }
    CHECK(compared > 50);
}

TEST_CASE("flow invariance on stencils from both benchmark lattices") {
    const Grid lattices[] = {
        build_orthogonal(0.1, 0.1, 0.0, 0.1, 8, 8),
        build_exponential(0.1, 0.0, 0.1, 0.1, 0.15, 8, 8),
    };
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> eps_draw(-0.5, 0.5);
    for (const Grid& g : lattices) {
        for (const char* sol : {"f1", "f2"}) {
            const Field f = sample_field(g, solution_by_name(sol).evaluate);
            for (const auto [n, m] : {std::pair{0, 0}, {2, 2}, {4, 3}}) {
                const SchemeData s = SchemeData::from_grid(g, f, n, m);
                for (const Generator gen : {Generator::V1, Generator::V2, Generator::V3,
                                            Generator::V4, Generator::V5}) {
                    for (const double eps : {0.1, -0.1, 0.5, -0.5})
                        CHECK(flow_invariance_test(s, {gen, eps}) <= 1e-9);
                    for (int trial = 0; trial < 10; ++trial)
                        CHECK(flow_invariance_test(s, {gen, eps_draw(rng)}) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("flow invariance: spot checks") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 8, 8);
    const Field f = sample_field(g, [](double x, double y) { return f1(x, y); });
    const SchemeData s = SchemeData::from_grid(g, f, 2, 2);

    // u-translation leaves every invariant fixed up to re-rounding of u + eps
    CHECK(flow_invariance_test(s, {Generator::V3, 0.7}) <= 1e-12);
    CHECK(flow_invariance_test(s, {Generator::V5, 0.2}) <= 1e-10);
    // V6 is outside the preserved algebra
    CHECK(flow_invariance_test(s, {Generator::V6, 0.01}) > 1e-3);
}

TEST_CASE("scheme solutions stay on the i1 = 1 manifold under the flows") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 8, 8);
    Field f(g);
    sample_row(g, f, 0, [](double x, double y) { return f1(x, y); });
    step_explicit(g, f, 0);
    step_explicit(g, f, 1);
    const SchemeData s = SchemeData::from_grid(g, f, 0, 0);
    REQUIRE(invariants(s).i1.has_value());
    CHECK(*invariants(s).i1 == doctest::Approx(1.0).epsilon(1e-12));
    for (const Generator gen : {Generator::V1, Generator::V2, Generator::V3,
                                Generator::V4, Generator::V5}) {
        const SchemeData t = s.transformed({gen, 0.3});
        REQUIRE(invariants(t).i1.has_value());
        CHECK(std::abs(*invariants(t).i1 - 1.0) <= 1e-9);
    }
}

TEST_CASE("wave residual: constants and index-split fields vanish") {
    const Grid g = test::build_skew(0.13, 0.11, 0.04, 0.03, 0.2, 0.3, 7, 7);
    const Field f = sample_field(g, [](double x, double y) { return f1(x, y); });
    for (int n = 0; n < 6; ++n)
        for (int m = 0; m < 6; ++m)
            CHECK(wave_residual([](double, double, double) { return 1.0; }, g, f, n,
                                m) == 0.0);

    // any field of the form p(n) + q(m) solves the constraint identically
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    Field split(g.num_n(), g.num_m());
    std::vector<double> p(g.num_n()), q(g.num_m());
    for (auto& v : p) v = val(rng);
    for (auto& v : q) v = val(rng);
    for (int n = 0; n < g.num_n(); ++n)
        for (int m = 0; m < g.num_m(); ++m) split.set(n, m, p[n] + q[m]);
    for (int n = 0; n < 6; ++n)
        for (int m = 0; m < 6; ++m)
            CHECK(wave_residual(split, n, m) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("wave residual of the V6 coefficients") {
    auto xi6 = [](double x, double y, double) { return 4.0 * y * x; };
    auto tau6 = [](double, double y, double) { return 4.0 * y * y; };

    SUBCASE("orthogonal lattice") {
        const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.0, 8, 8);
        const Field f = sample_field(g, [](double x, double y) { return f1(x, y); });
        for (int n = 0; n < 3; ++n)
            for (int m = 0; m < 3; ++m) {
                CHECK(wave_residual(xi6, g, f, n, m) ==
                      doctest::Approx(-0.04).epsilon(1e-13));
                CHECK(wave_residual(tau6, g, f, n, m) == 0.0);
            }
    }
    SUBCASE("constant-skew lattice: closed forms in the cell differences") {
        // on lattices meeting the commutativity constraints the residuals are
        // -4(hx hy + sx sy) for xi and -8 hy sy for tau
        const Grid g = test::build_skew(0.13, 0.11, 0.04, 0.03, 0.2, 0.3, 7, 7);
        const Field f = sample_field(g, [](double x, double y) { return f1(x, y); });
        for (int n = 0; n < 5; ++n)
            for (int m = 0; m < 5; ++m) {
                const LatticeDiffs d = diffs_at(g, n, m);
                CHECK(wave_residual(xi6, g, f, n, m) ==
                      doctest::Approx(-4.0 * (d.hx * d.hy + d.sx * d.sy))
                          .epsilon(1e-12));
                CHECK(wave_residual(tau6, g, f, n, m) ==
                      doctest::Approx(-8.0 * d.hy * d.sy).epsilon(1e-12));
            }
    }
}

TEST_CASE("prolongation coefficients: constants annihilate everything") {
    const Grid g = test::build_skew(0.13, 0.11, 0.04, 0.03, 0.2, 0.3, 6, 6);
    std::mt19937_64 rng(7);
    const Field f = sample_field(g, test::random_smooth_fn(rng));
    auto one = [](double, double, double) { return 1.0; };
    const ProlongationCoeffs pc = prolongation_coeffs(one, one, one, g, f, 1, 1);
    CHECK(pc.eta_x_00 == 0.0);
    CHECK(pc.eta_x_10 == 0.0);
    CHECK(pc.eta_x_01 == 0.0);
    CHECK(pc.eta_y_00 == 0.0);
    CHECK(pc.eta_y_10 == 0.0);
    CHECK(pc.eta_y_01 == 0.0);
    CHECK(pc.chi_x_00 == 0.0);
    CHECK(pc.chi_x_01 == 0.0);
    CHECK(pc.chi_y_00 == 0.0);
    CHECK(pc.chi_y_10 == 0.0);
    CHECK(pc.phi1x == 0.0);
    CHECK(pc.phi1y == 0.0);
    CHECK(pc.phi2xx == 0.0);
    CHECK(pc.phi2xy == 0.0);
    CHECK(pc.phi2yy == 0.0);
}

TEST_CASE("prolongation coefficients of the scaling field on the orthogonal lattice") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 6, 6);
    const Field f = sample_field(g, [](double x, double y) { return f1(x, y); });
    auto xi = [](double x, double, double) { return x; };
    auto tau = [](double, double y, double) { return 2.0 * y; };
    auto zero = [](double, double, double) { return 0.0; };
    const ProlongationCoeffs pc = prolongation_coeffs(xi, tau, zero, g, f, 1, 1);
    const LatticeDiffs d = diffs_at(g, 1, 1);
    CHECK(pc.eta_x_00 == doctest::Approx(d.hx).epsilon(1e-14));
    CHECK(pc.phi1x == doctest::Approx(-dx(g, f, 1, 1)).epsilon(1e-13));
}

TEST_CASE("prolongation coefficients agree with the flow derivative") {
    // central eps-difference of the transformed stencil quantities is the
    // independent oracle for every coefficient
    const Grid g = test::build_skew(0.13, 0.11, 0.04, 0.03, 0.4, 0.6, 6, 6);
    std::mt19937_64 rng(57);
    const Field f = sample_field(g, test::random_smooth_fn(rng));
    const int n = 1, m = 1;
    const SchemeData s = SchemeData::from_grid(g, f, n, m);
    const double de = 1e-5;

    for (const Generator gen :
         {Generator::V1, Generator::V2, Generator::V3, Generator::V4, Generator::V5,
          Generator::V6}) {
        auto xi = [gen](double x, double y, double u) {
            return generator_coeffs(gen, x, y, u).x;
        };
        auto tau = [gen](double x, double y, double u) {
            return generator_coeffs(gen, x, y, u).y;
        };
        auto phi = [gen](double x, double y, double u) {
            return generator_coeffs(gen, x, y, u).u;
        };
        const ProlongationCoeffs pc = prolongation_coeffs(xi, tau, phi, g, f, n, m);

        const SchemeData sp = s.transformed({gen, de});
        const SchemeData sm = s.transformed({gen, -de});
        auto diff_rate = [&](auto&& quantity) {
            return (quantity(sp) - quantity(sm)) / (2 * de);
        };
        auto close = [](double a, double b) {
            return std::abs(a - b) <= 1e-6 * (1.0 + std::max(std::abs(a), std::abs(b)));
        };

        CHECK(close(pc.eta_x_00, diff_rate([](const SchemeData& t) {
                  return t.x[1] - t.x[0];
              })));
        CHECK(close(pc.eta_x_10, diff_rate([](const SchemeData& t) {
                  return t.x[3] - t.x[1];
              })));
        CHECK(close(pc.eta_x_01, diff_rate([](const SchemeData& t) {
                  return t.x[4] - t.x[2];
              })));
        CHECK(close(pc.eta_y_00, diff_rate([](const SchemeData& t) {
                  return t.y[2] - t.y[0];
              })));
        CHECK(close(pc.eta_y_10, diff_rate([](const SchemeData& t) {
                  return t.y[4] - t.y[1];
              })));
        CHECK(close(pc.eta_y_01, diff_rate([](const SchemeData& t) {
                  return t.y[5] - t.y[2];
              })));
        CHECK(close(pc.chi_x_00, diff_rate([](const SchemeData& t) {
                  return t.x[2] - t.x[0];
              })));
        CHECK(close(pc.chi_x_01, diff_rate([](const SchemeData& t) {
                  return t.x[5] - t.x[2];
              })));
        CHECK(close(pc.chi_y_00, diff_rate([](const SchemeData& t) {
                  return t.y[1] - t.y[0];
              })));
        CHECK(close(pc.chi_y_10, diff_rate([](const SchemeData& t) {
                  return t.y[3] - t.y[1];
              })));
        CHECK(close(pc.phi1x,
                    diff_rate([](const SchemeData& t) { return t.jet().ux; })));
        CHECK(close(pc.phi1y,
                    diff_rate([](const SchemeData& t) { return t.jet().uy; })));
        CHECK(close(pc.phi2xx,
                    diff_rate([](const SchemeData& t) { return t.jet().uxx; })));
        CHECK(close(pc.phi2xy,
                    diff_rate([](const SchemeData& t) { return t.jet().uxy; })));
        CHECK(close(pc.phi2yy,
                    diff_rate([](const SchemeData& t) { return t.jet().uyy; })));
    }
}

namespace {

// reference bracket table for the preserved algebra, rows/cols V1..V5:
// [V1,V4] = V1, [V1,V5] = -V3, [V2,V4] = 2 V2, [V2,V5] = 2 V1, [V4,V5] = V5
struct Bracket {
    int gen;  // 0 = zero bracket, else 1..5
    double coef;
};

Bracket bracket_table(int a, int b) {
    if (a == 1 && b == 4) return {1, 1.0};
    if (a == 1 && b == 5) return {3, -1.0};
    if (a == 2 && b == 4) return {2, 2.0};
    if (a == 2 && b == 5) return {1, 2.0};
    if (a == 4 && b == 5) return {5, 1.0};
    return {0, 0.0};
}

Generator gen_of(int i) { return static_cast<Generator>(i - 1); }

}  // namespace

TEST_CASE("the analytic bracket matches the reference table") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Point3 p{coord(rng), coord(rng), coord(rng)};
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b) {
                const Point3 br = lie_bracket(gen_of(a), gen_of(b), p);
                const Bracket e = bracket_table(a, b);
                Point3 want{0.0, 0.0, 0.0};
                if (e.gen != 0) {
                    want = generator_coeffs(gen_of(e.gen), p.x, p.y, p.u);
                    want = {e.coef * want.x, e.coef * want.y, e.coef * want.u};
                }
                CHECK(br.x == doctest::Approx(want.x).epsilon(1e-14));
                CHECK(br.y == doctest::Approx(want.y).epsilon(1e-14));
                CHECK(br.u == doctest::Approx(want.u).epsilon(1e-14));
            }
    }
}

TEST_CASE("flow commutators agree with the analytic bracket at order delta^2") {
    const Point3 p{0.7, 1.3, 0.4};
    const double delta = 1e-3;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            const CommutatorTest t =
                commutator_flow_test(gen_of(a), gen_of(b), p, delta);
            // two independent routes: flows vs coefficient derivatives
            CHECK(t.max_abs_error <= 50.0 * delta * delta * delta);
        }
}

TEST_CASE("group commutators reproduce the bracket table") {
    const Point3 p{0.7, 1.3, 0.4};
    const double delta = 1e-3;
    for (int a = 1; a <= 5; ++a) {
        for (int b = a + 1; b <= 5; ++b) {
            const Point3 disp = group_commutator(gen_of(a), gen_of(b), p, delta);
            const Bracket br = bracket_table(a, b);
            if (br.gen == 0) {
                CHECK(std::abs(disp.x) <= 1e-2 * delta * delta);
                CHECK(std::abs(disp.y) <= 1e-2 * delta * delta);
                CHECK(std::abs(disp.u) <= 1e-2 * delta * delta);
            } else {
                const Point3 v = generator_coeffs(gen_of(br.gen), p.x, p.y, p.u);
                const double scale =
                    delta * delta *
                    std::max({std::abs(br.coef * v.x), std::abs(br.coef * v.y),
                              std::abs(br.coef * v.u)});
                CHECK(std::abs(disp.x - delta * delta * br.coef * v.x) <= 1e-2 * scale);
                CHECK(std::abs(disp.y - delta * delta * br.coef * v.y) <= 1e-2 * scale);
                CHECK(std::abs(disp.u - delta * delta * br.coef * v.u) <= 1e-2 * scale);
            }
        }
    }
}

TEST_CASE("commutator spot checks") {
    const double d = 1e-3;
    // [V1,V4] = V1 at (1,1,0)
    Point3 disp = group_commutator(Generator::V1, Generator::V4, {1, 1, 0}, d);
    CHECK(disp.x == doctest::Approx(d * d).epsilon(1e-2));
    CHECK(std::abs(disp.y) <= 1e-2 * d * d);
    // [V1,V2] = 0: translations commute up to re-rounding of x + delta
    disp = group_commutator(Generator::V1, Generator::V2, {1, 1, 0}, d);
    CHECK(std::abs(disp.x) <= 1e-15);
    CHECK(std::abs(disp.y) <= 1e-15);
    CHECK(std::abs(disp.u) <= 1e-15);
    // [V2,V5] = 2 V1 at (0,1,0)
    disp = group_commutator(Generator::V2, Generator::V5, {0, 1, 0}, d);
    CHECK(disp.x == doctest::Approx(2 * d * d).epsilon(1e-2));
}
