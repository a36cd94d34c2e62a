#include "pburg/estimator.hpp"

#include <cmath>

#include "pburg/errors.hpp"

namespace pburg {

ChiReport chi(const Grid& g, const Field& numeric, const ExactSolution& exact) {
    ChiReport r;
    double num = 0.0;
    double den = 0.0;
    for (int n = 0; n < g.num_n(); ++n) {
        for (int m = 0; m < g.num_m(); ++m) {
            if (!numeric.has(n, m) || !exact.in_domain(g.x(n, m), g.y(n, m))) {
                ++r.excluded_sites;
                continue;
            }
            const double e = exact.evaluate(g.x(n, m), g.y(n, m));
            const double d = numeric(n, m) - e;
            num += d * d;
            den += e * e;
            ++r.num_sites;
        }
    }
    if (r.num_sites == 0)
        throw EmptyComparisonError("chi: every site absent or out of domain");
    if (den == 0.0)
        throw UndefinedEstimatorError("chi: reference norm is zero");
    r.chi = std::sqrt(num / den);
    return r;
}

}  // namespace pburg
