#ifndef PBURG_FIELD_HPP
#define PBURG_FIELD_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "pburg/grid.hpp"

namespace pburg {

/// Dependent-variable values u over the sites of a grid.  Sites never
/// assigned hold NaN and report has() == false; evolution in shrink mode
/// leaves such sites absent.
class Field {
public:
    Field(int num_n, int num_m);
    explicit Field(const Grid& g) : Field(g.num_n(), g.num_m()) {}

    int num_n() const { return n_; }
    int num_m() const { return m_; }

    double operator()(int n, int m) const { return u_[index(n, m)]; }
    void set(int n, int m, double v) { u_[index(n, m)] = v; }
    bool has(int n, int m) const { return !std::isnan(u_[index(n, m)]); }

    /// Number of contiguous populated sites n = 0,1,... in row m.
    int populated_prefix(int m) const;

    bool matches(const Grid& g) const { return n_ == g.num_n() && m_ == g.num_m(); }

private:
    int index(int n, int m) const;

    int n_;
    int m_;
    std::vector<double> u_;
};

/// Materialize f(x,y) at every site of the grid.
Field sample_field(const Grid& g, const std::function<double(double, double)>& f);

/// Materialize f(x,y) on row m only.
void sample_row(const Grid& g, Field& out, int m,
                const std::function<double(double, double)>& f);

}  // namespace pburg

#endif
