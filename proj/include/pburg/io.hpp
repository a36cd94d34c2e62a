#ifndef PBURG_IO_HPP
#define PBURG_IO_HPP

#include <iosfwd>
#include <string>

#include "pburg/field.hpp"
#include "pburg/grid.hpp"

namespace pburg {

/// Shortest decimal string that round-trips the double (17 significant digits).
std::string fmt17(double v);

// Plain-text site tables, one line per site, space separated, full decimal
// precision.  Grid lines are "n m x y"; field lines are "n m u".  Absent
// field sites are written as nan.  Blank lines and lines starting with '#'
// are ignored on input.

void write_grid_table(std::ostream& os, const Grid& g);
void write_grid_table(const std::string& path, const Grid& g);
Grid read_grid_table(std::istream& is);
Grid read_grid_table(const std::string& path);

void write_field_table(std::ostream& os, const Field& f);
void write_field_table(const std::string& path, const Field& f);
Field read_field_table(std::istream& is);
Field read_field_table(const std::string& path);

}  // namespace pburg

#endif
