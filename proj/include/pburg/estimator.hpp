#ifndef PBURG_ESTIMATOR_HPP
#define PBURG_ESTIMATOR_HPP

#include "pburg/field.hpp"
#include "pburg/grid.hpp"
#include "pburg/solutions.hpp"

namespace pburg {

/// Relative discrete-L2 distance between a numeric field and an exact
/// solution:  chi = sqrt( sum (numeric - exact)^2 / sum exact^2 ), the sums
/// running over sites where the numeric value is populated and the exact
/// solution is in domain.
struct ChiReport {
    double chi = 0.0;
    long num_sites = 0;       // sites included in the sums
    long excluded_sites = 0;  // absent or out-of-domain sites skipped
};

/// Throws UndefinedEstimatorError when the reference norm is zero and
/// EmptyComparisonError when no site qualifies.
ChiReport chi(const Grid& g, const Field& numeric, const ExactSolution& exact);

}  // namespace pburg

#endif
