#ifndef PBURG_ERRORS_HPP
#define PBURG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pburg {

// Error classes follow the failure taxonomy used throughout the library.
// Argument/precondition failures use std::invalid_argument / std::out_of_range
// / std::domain_error directly.

/// A lattice cell whose difference determinant hx*hy - sx*sy is (numerically) zero.
struct DegenerateLatticeError : std::runtime_error {
    explicit DegenerateLatticeError(const std::string& what) : std::runtime_error(what) {}
};

/// The shared denominator of the cross-derivative identity vanished.
struct DegenerateStencilError : std::runtime_error {
    explicit DegenerateStencilError(const std::string& what) : std::runtime_error(what) {}
};

/// A one-parameter group flow was evaluated outside its domain.
struct FlowSingularityError : std::runtime_error {
    explicit FlowSingularityError(const std::string& what) : std::runtime_error(what) {}
};

/// Stencil data violating the requirements of the invariant set (h^y <= 0).
struct InvalidStencilError : std::runtime_error {
    explicit InvalidStencilError(const std::string& what) : std::runtime_error(what) {}
};

/// Explicit marching was requested on a lattice it does not support (sigma^y != 0).
struct UnsupportedLatticeError : std::runtime_error {
    explicit UnsupportedLatticeError(const std::string& what) : std::runtime_error(what) {}
};

/// The chi estimator's reference norm is zero.
struct UndefinedEstimatorError : std::runtime_error {
    explicit UndefinedEstimatorError(const std::string& what) : std::runtime_error(what) {}
};

/// No site qualified for the chi comparison.
struct EmptyComparisonError : std::runtime_error {
    explicit EmptyComparisonError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pburg

#endif
