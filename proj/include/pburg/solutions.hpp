#ifndef PBURG_SOLUTIONS_HPP
#define PBURG_SOLUTIONS_HPP

#include <functional>
#include <string>

namespace pburg {

/// A closed-form solution of u_y = u_xx + u_x^2 with its validity domain.
struct ExactSolution {
    std::string id;
    std::function<double(double, double)> evaluate;
    std::function<bool(double, double)> in_domain;
};

/// log(1 + e^{-(x-y)}): the traveling-wave solution.  Evaluated in the
/// overflow-safe form max(0, y-x) + log1p(e^{-|x-y|}).
double f1(double x, double y);

/// log(1 + e^{-x^2/(4y)} / sqrt(y)): the fundamental-solution image.
/// Defined for y > 0; throws std::domain_error otherwise.
double f2(double x, double y);

/// Lift a positive heat-equation solution alpha to a potential Burgers
/// solution u = log(alpha).  Evaluation throws std::domain_error where
/// alpha <= 0.
ExactSolution cole_hopf(std::function<double(double, double)> alpha,
                        std::string id = "cole_hopf");

ExactSolution solution_f1();
ExactSolution solution_f2();
ExactSolution solution_affine();  // u = x + y

/// Lookup by id "f1" | "f2" | "affine"; throws std::invalid_argument.
ExactSolution solution_by_name(const std::string& name);

}  // namespace pburg

#endif
