#include "pburg/field.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace pburg {

Field::Field(int num_n, int num_m)
    : n_(num_n), m_(num_m),
      u_(static_cast<size_t>(num_n) * num_m,
         std::numeric_limits<double>::quiet_NaN()) {
    if (n_ < 1 || m_ < 1) throw std::invalid_argument("Field: empty dimensions");
}

int Field::index(int n, int m) const {
    if (n < 0 || n >= n_ || m < 0 || m >= m_)
        throw std::out_of_range("Field: site (" + std::to_string(n) + "," +
                                std::to_string(m) + ") outside " +
                                std::to_string(n_) + "x" + std::to_string(m_));
    return n * m_ + m;
}

int Field::populated_prefix(int m) const {
    int k = 0;
    while (k < n_ && has(k, m)) ++k;
    return k;
}

Field sample_field(const Grid& g, const std::function<double(double, double)>& f) {
    Field out(g);
    for (int n = 0; n < g.num_n(); ++n)
        for (int m = 0; m < g.num_m(); ++m)
            out.set(n, m, f(g.x(n, m), g.y(n, m)));
    return out;
}

void sample_row(const Grid& g, Field& out, int m,
                const std::function<double(double, double)>& f) {
    for (int n = 0; n < g.num_n(); ++n)
        out.set(n, m, f(g.x(n, m), g.y(n, m)));
}

}  // namespace pburg
