#include "pburg/solutions.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pburg {

namespace {
// log(1 + e^t) without overflow for large |t|.
double softplus(double t) {
    return std::max(t, 0.0) + std::log1p(std::exp(-std::abs(t)));
}
}  // namespace

double f1(double x, double y) { return softplus(y - x); }

double f2(double x, double y) {
    if (!(y > 0.0))
        throw std::domain_error("f2: requires y > 0");
    // log(1 + e^{-x^2/(4y)} / sqrt(y)) = softplus(-x^2/(4y) - log(y)/2)
    return softplus(-x * x / (4.0 * y) - 0.5 * std::log(y));
}

ExactSolution cole_hopf(std::function<double(double, double)> alpha, std::string id) {
    ExactSolution s;
    s.id = std::move(id);
    s.evaluate = [alpha](double x, double y) {
        const double a = alpha(x, y);
        if (!(a > 0.0))
            throw std::domain_error("cole_hopf: alpha <= 0 at evaluation point");
        return std::log(a);
    };
    s.in_domain = [alpha](double x, double y) {
        const double a = alpha(x, y);
        return std::isfinite(a) && a > 0.0;
    };
    return s;
}

ExactSolution solution_f1() {
    return {"f1", [](double x, double y) { return f1(x, y); },
            [](double, double) { return true; }};
}

ExactSolution solution_f2() {
    return {"f2", [](double x, double y) { return f2(x, y); },
            [](double, double y) { return y > 0.0; }};
}

ExactSolution solution_affine() {
    return {"affine", [](double x, double y) { return x + y; },
            [](double, double) { return true; }};
}

ExactSolution solution_by_name(const std::string& name) {
    if (name == "f1") return solution_f1();
    if (name == "f2") return solution_f2();
    if (name == "affine") return solution_affine();
    throw std::invalid_argument("unknown solution '" + name +
                                "' (expected f1, f2 or affine)");
}

}  // namespace pburg
