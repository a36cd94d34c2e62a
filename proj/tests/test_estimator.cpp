#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pburg/errors.hpp"
#include "pburg/estimator.hpp"
#include "test_oracles.hpp"

using namespace pburg;

TEST_CASE("chi: zero iff the fields agree everywhere") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 6, 6);
    const ExactSolution sol = solution_f1();
    Field numeric = sample_field(g, sol.evaluate);
    ChiReport r = chi(g, numeric, sol);
    CHECK(r.chi == 0.0);
    CHECK(r.num_sites == 36);
    CHECK(r.excluded_sites == 0);

    numeric.set(3, 3, numeric(3, 3) + 1e-3);
    CHECK(chi(g, numeric, sol).chi > 0.0);
}

TEST_CASE("chi: zero field against a nonzero reference gives exactly one") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 6, 6);
    const Field zeros = sample_field(g, [](double, double) { return 0.0; });
    CHECK(chi(g, zeros, solution_f1()).chi == 1.0);
}

TEST_CASE("chi: absent and out-of-domain sites are excluded and counted") {
    // y spans negative rows, putting part of the grid outside the f2 domain
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, -0.15, 6, 6);
    const ExactSolution sol = solution_f2();
    Field numeric(g);
    for (int n = 0; n < 6; ++n)
        for (int m = 0; m < 6; ++m)
            if (g.y(n, m) > 0.0 && n < 5) numeric.set(n, m, sol.evaluate(g.x(n, m), g.y(n, m)));
    const ChiReport r = chi(g, numeric, sol);
    CHECK(r.num_sites == 5 * 4);       // rows m = 2..5 are in-domain, column 5 absent
    CHECK(r.excluded_sites == 36 - 20);
    CHECK(r.chi == 0.0);
}

TEST_CASE("chi: empty comparison and zero reference norm") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 4, 4);
    const Field empty(g);
    CHECK_THROWS_AS(chi(g, empty, solution_f1()), EmptyComparisonError);

    const ExactSolution zero = cole_hopf([](double, double) { return 1.0; });
    const Field zeros = sample_field(g, [](double, double) { return 0.0; });
    CHECK_THROWS_AS(chi(g, zeros, zero), UndefinedEstimatorError);
}

TEST_CASE("chi: invariant under common scaling of both fields") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 6, 6);
    std::mt19937_64 rng(3);
    const auto fn = test::random_smooth_fn(rng);
    const ExactSolution base{"fn", fn, [](double, double) { return true; }};
    const double lambda = 37.5;
    const ExactSolution scaled{
        "scaled", [fn, lambda](double x, double y) { return lambda * fn(x, y); },
        [](double, double) { return true; }};

    Field numeric = sample_field(g, [&](double x, double y) { return fn(x, y) + 0.01; });
    Field numeric_scaled = sample_field(
        g, [&](double x, double y) { return lambda * (fn(x, y) + 0.01); });
    CHECK(chi(g, numeric_scaled, scaled).chi ==
          doctest::Approx(chi(g, numeric, base).chi).epsilon(1e-13));
}

TEST_CASE("chi: scaling the error scales the estimate linearly") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 6, 6);
    const ExactSolution sol = solution_f1();
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> noise(-1e-2, 1e-2);

    Field base = sample_field(g, sol.evaluate);
    Field doubled = base;
    for (int n = 0; n < 6; ++n)
        for (int m = 0; m < 6; ++m) {
            const double e = noise(rng);
            base.set(n, m, base(n, m) + e);
            doubled.set(n, m, doubled(n, m) + 2.0 * e);
        }
    CHECK(chi(g, doubled, sol).chi ==
          doctest::Approx(2.0 * chi(g, base, sol).chi).epsilon(1e-12));
}

TEST_CASE("chi: nonnegative on random data") {
    const Grid g = build_orthogonal(0.1, 0.1, 0.0, 0.1, 5, 5);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const Field numeric = sample_field(g, test::random_smooth_fn(rng));
        const ChiReport r = chi(g, numeric, solution_f1());
        CHECK(r.chi >= 0.0);
        CHECK(std::isfinite(r.chi));
    }
}
