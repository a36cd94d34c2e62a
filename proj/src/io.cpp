#include "pburg/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pburg {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

bool skip_line(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

struct SiteRows {
    int num_n = 0;
    int num_m = 0;
    std::map<std::pair<int, int>, std::vector<double>> rows;
};

SiteRows parse_site_table(std::istream& is, size_t values_per_site, const char* what) {
    SiteRows out;
    std::string line;
    while (std::getline(is, line)) {
        if (skip_line(line)) continue;
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (tokens.size() != values_per_site + 2)
            throw std::runtime_error(std::string(what) + ": malformed line '" + line +
                                     "'");
        try {
            const int n = std::stoi(tokens[0]);
            const int m = std::stoi(tokens[1]);
            if (n < 0 || m < 0)
                throw std::runtime_error(std::string(what) + ": negative site index");
            std::vector<double> vals(values_per_site);
            // std::stod also accepts nan (absent sites) and inf
            for (size_t i = 0; i < values_per_site; ++i)
                vals[i] = std::stod(tokens[i + 2]);
            out.rows[{n, m}] = vals;
            out.num_n = std::max(out.num_n, n + 1);
            out.num_m = std::max(out.num_m, m + 1);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error(std::string(what) + ": malformed line '" + line +
                                     "'");
        }
    }
    return out;
}

}  // namespace

void write_grid_table(std::ostream& os, const Grid& g) {
    for (int n = 0; n < g.num_n(); ++n)
        for (int m = 0; m < g.num_m(); ++m)
            os << n << ' ' << m << ' ' << fmt17(g.x(n, m)) << ' ' << fmt17(g.y(n, m))
               << '\n';
}

void write_grid_table(const std::string& path, const Grid& g) {
    auto os = open_out(path);
    write_grid_table(os, g);
}

Grid read_grid_table(std::istream& is) {
    const SiteRows t = parse_site_table(is, 2, "grid table");
    const size_t total = static_cast<size_t>(t.num_n) * t.num_m;
    if (t.rows.size() != total)
        throw std::runtime_error("grid table: missing sites");
    std::vector<double> x(total), y(total);
    for (const auto& [site, vals] : t.rows) {
        const size_t idx = static_cast<size_t>(site.first) * t.num_m + site.second;
        x[idx] = vals[0];
        y[idx] = vals[1];
    }
    return Grid(t.num_n, t.num_m, std::move(x), std::move(y));
}

Grid read_grid_table(const std::string& path) {
    auto is = open_in(path);
    return read_grid_table(is);
}

void write_field_table(std::ostream& os, const Field& f) {
    for (int n = 0; n < f.num_n(); ++n)
        for (int m = 0; m < f.num_m(); ++m)
            os << n << ' ' << m << ' ' << fmt17(f(n, m)) << '\n';
}

void write_field_table(const std::string& path, const Field& f) {
    auto os = open_out(path);
    write_field_table(os, f);
}

Field read_field_table(std::istream& is) {
    const SiteRows t = parse_site_table(is, 1, "field table");
    Field f(t.num_n, t.num_m);
    for (const auto& [site, vals] : t.rows) f.set(site.first, site.second, vals[0]);
    return f;
}

Field read_field_table(const std::string& path) {
    auto is = open_in(path);
    return read_field_table(is);
}

}  // namespace pburg
