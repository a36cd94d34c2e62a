// pburg: lattices, skew difference operators, symmetry flows and the
// six-point invariant marching for the potential Burgers equation.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "pburg/calculus.hpp"
#include "pburg/errors.hpp"
#include "pburg/estimator.hpp"
#include "pburg/experiment.hpp"
#include "pburg/io.hpp"
#include "pburg/scheme.hpp"
#include "pburg/solutions.hpp"
#include "pburg/symmetry.hpp"

using namespace pburg;

namespace {

struct LatticeOpts {
    std::string kind = "orthogonal";
    double a = 0.1;
    double b = 0.1;
    double c = 0.15;
    double x0 = 0.0;
    double y0 = 1.0;
    int num_n = 8;
    int num_m = 8;
};

// Per-subcommand config files: one key=value per line, '#' comments,
// command-line flags win over file values.
struct ConfigOpt {
    std::string path;
};

void add_config_opt(CLI::App* sub, ConfigOpt& cfg) {
    sub->add_option("--config", cfg.path,
                    "key=value file; command-line flags win");
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

void apply_config(CLI::App* sub, const ConfigOpt& cfg) {
    if (cfg.path.empty()) return;
    std::ifstream is(cfg.path);
    if (!is) throw std::runtime_error("cannot open config file: " + cfg.path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(cfg.path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        const std::string key = trimmed(t.substr(0, eq));
        const std::string value = trimmed(t.substr(eq + 1));
        CLI::Option* op = sub->get_option_no_throw("--" + key);
        if (op == nullptr)
            throw std::runtime_error(cfg.path + ":" + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
        if (op->count() > 0) continue;  // set on the command line already
        op->add_result(value);
        op->run_callback();
    }
}

void add_lattice_opts(CLI::App* sub, LatticeOpts& o) {
    sub->add_option("--kind", o.kind, "lattice kind: orthogonal | exponential")
        ->check(CLI::IsMember({"orthogonal", "exponential"}))
        ->capture_default_str();
    sub->add_option("--a", o.a, "x spacing")->capture_default_str();
    sub->add_option("--b", o.b, "y spacing")->capture_default_str();
    sub->add_option("--c", o.c, "dilation of the exponential lattice")
        ->capture_default_str();
    sub->add_option("--x0", o.x0, "x origin (a0 of the exponential lattice)")
        ->capture_default_str();
    sub->add_option("--y0", o.y0, "y origin (b0 of the exponential lattice)")
        ->capture_default_str();
    sub->add_option("--N", o.num_n, "sites in n")->capture_default_str();
    sub->add_option("--M", o.num_m, "sites in m")->capture_default_str();
}

Grid make_grid(const LatticeOpts& o) {
    if (o.kind == "orthogonal")
        return build_orthogonal(o.a, o.b, o.x0, o.y0, o.num_n, o.num_m);
    return build_exponential(o.a, o.x0, o.b, o.y0, o.c, o.num_n, o.num_m);
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return file;
}

Field load_or_sample(const Grid& g, const std::string& field_path,
                     const std::string& solution) {
    if (!field_path.empty()) {
        Field f = read_field_table(field_path);
        if (!f.matches(g))
            throw std::runtime_error("field table dimensions do not match the lattice");
        return f;
    }
    return sample_field(g, solution_by_name(solution).evaluate);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant discretization of the potential Burgers equation on "
                 "quadrilateral lattices"};
    app.require_subcommand(1);

    // --- lattice ---------------------------------------------------------
    LatticeOpts lat_o;
    ConfigOpt lat_cfg;
    std::string lat_out;
    auto* lat = app.add_subcommand("lattice", "emit a lattice as an 'n m x y' table");
    add_lattice_opts(lat, lat_o);
    add_config_opt(lat, lat_cfg);
    lat->add_option("--out", lat_out, "output file (default stdout)");

    // --- check-schwarz ----------------------------------------------------
    LatticeOpts sch_o;
    ConfigOpt sch_cfg;
    double sch_tol = 1e-12;
    auto* sch = app.add_subcommand(
        "check-schwarz", "diagnose the lattice commutativity constraints");
    add_lattice_opts(sch, sch_o);
    add_config_opt(sch, sch_cfg);
    sch->add_option("--tol", sch_tol, "violation tolerance")->capture_default_str();

    // --- invariants --------------------------------------------------------
    LatticeOpts inv_o;
    ConfigOpt inv_cfg;
    std::string inv_field, inv_solution = "f1", inv_out;
    auto* inv = app.add_subcommand(
        "invariants", "per-site invariants K1..K10 and I1 of the scheme data");
    add_lattice_opts(inv, inv_o);
    add_config_opt(inv, inv_cfg);
    inv->add_option("--field", inv_field, "field table 'n m u' (overrides --solution)");
    inv->add_option("--solution", inv_solution, "sample this solution: f1 | f2 | affine")
        ->capture_default_str();
    inv->add_option("--out", inv_out, "output file (default stdout)");

    // --- evolve -------------------------------------------------------------
    LatticeOpts evo_o;
    ConfigOpt evo_cfg;
    std::string evo_solution = "f1", evo_boundary = "oracle", evo_out;
    int evo_steps = -1;
    auto* evo = app.add_subcommand(
        "evolve", "march the six-point scheme from row 0 of an exact solution");
    add_lattice_opts(evo, evo_o);
    add_config_opt(evo, evo_cfg);
    evo->add_option("--solution", evo_solution, "initial condition: f1 | f2 | affine")
        ->capture_default_str();
    evo->add_option("--boundary", evo_boundary, "shrink | oracle")
        ->check(CLI::IsMember({"shrink", "oracle"}))
        ->capture_default_str();
    evo->add_option("--steps", evo_steps, "rows to advance (default M-1)");
    evo->add_option("--out", evo_out, "output file (default stdout)");

    // --- chi -----------------------------------------------------------------
    LatticeOpts chi_o;
    ConfigOpt chi_cfg;
    std::string chi_field, chi_solution = "f1";
    auto* chis = app.add_subcommand(
        "chi", "relative L2 distance between a field table and an exact solution");
    add_lattice_opts(chis, chi_o);
    add_config_opt(chis, chi_cfg);
    chis->add_option("--field", chi_field, "numeric field table 'n m u'")->required();
    chis->add_option("--solution", chi_solution, "reference: f1 | f2 | affine")
        ->capture_default_str();

    // --- table2 ----------------------------------------------------------------
    ConfigOpt t2_cfg;
    double t2_x0 = 0.0, t2_y0 = 1.0;
    std::string t2_boundary = "extend", t2_out = "table2_out";
    bool t2_sweep = false;
    auto* t2 = app.add_subcommand(
        "table2", "chi comparison over the five benchmark lattices");
    t2->add_option("--x0", t2_x0, "x origin")->capture_default_str();
    t2->add_option("--y0", t2_y0, "y origin")->capture_default_str();
    t2->add_option("--boundary", t2_boundary, "extend | oracle | shrink")
        ->check(CLI::IsMember({"extend", "oracle", "shrink"}))
        ->capture_default_str();
    t2->add_option("--out", t2_out, "output directory")->capture_default_str();
    t2->add_flag("--sweep", t2_sweep,
                 "re-run over a grid of origins and log the closest match per "
                 "reference value");
    add_config_opt(t2, t2_cfg);

    // --- flow-test ----------------------------------------------------------
    LatticeOpts fl_o;
    ConfigOpt fl_cfg;
    std::string fl_generator = "V5", fl_solution = "f1", fl_commutator;
    double fl_eps = 0.1, fl_delta = 1e-3;
    std::vector<double> fl_point;
    std::vector<int> fl_site{2, 2};
    auto* fl = app.add_subcommand(
        "flow-test", "invariance of the scheme invariants under a flow, or a "
                     "flow-commutator displacement");
    add_lattice_opts(fl, fl_o);
    add_config_opt(fl, fl_cfg);
    fl->add_option("--generator", fl_generator, "V1..V6")->capture_default_str();
    fl->add_option("--epsilon", fl_eps, "group parameter")->capture_default_str();
    fl->add_option("--solution", fl_solution, "field sampled on the lattice")
        ->capture_default_str();
    fl->add_option("--site", fl_site, "stencil base site n m")->expected(2);
    fl->add_option("--commutator", fl_commutator,
                   "second generator: report the group-commutator displacement "
                   "instead of invariance");
    fl->add_option("--delta", fl_delta, "commutator step")->capture_default_str();
    fl->add_option("--point", fl_point, "commutator base point x y u")->expected(3);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*lat) {
            apply_config(lat, lat_cfg);
            std::ofstream file;
            write_grid_table(open_sink(file, lat_out), make_grid(lat_o));
        } else if (*sch) {
            apply_config(sch, sch_cfg);
            const SchwarzReport r = schwarz_check(make_grid(sch_o), sch_tol);
            std::cout << "max_sx_violation=" << fmt17(r.max_sx_violation) << '\n'
                      << "max_hx_violation=" << fmt17(r.max_hx_violation) << '\n'
                      << "max_sy_violation=" << fmt17(r.max_sy_violation) << '\n'
                      << "max_hy_violation=" << fmt17(r.max_hy_violation) << '\n'
                      << "is_schwarzian=" << (r.is_schwarzian ? "true" : "false")
                      << '\n';
        } else if (*inv) {
            apply_config(inv, inv_cfg);
            const Grid g = make_grid(inv_o);
            const Field f = load_or_sample(g, inv_field, inv_solution);
            std::ofstream file;
            std::ostream& os = open_sink(file, inv_out);
            os << "n m";
            for (const char* name : InvariantSet::names) os << ' ' << name;
            os << '\n';
            for (int n = 0; n + 2 < g.num_n(); ++n)
                for (int m = 0; m + 2 < g.num_m(); ++m) {
                    const InvariantSet iv = invariants(SchemeData::from_grid(g, f, n, m));
                    os << n << ' ' << m;
                    for (const auto& k : iv.k)
                        os << ' ' << (k ? fmt17(*k) : "nan");
                    os << ' ' << (iv.i1 ? fmt17(*iv.i1) : "nan") << '\n';
                }
        } else if (*evo) {
            apply_config(evo, evo_cfg);
            const Grid g = make_grid(evo_o);
            const ExactSolution sol = solution_by_name(evo_solution);
            Field init(g);
            sample_row(g, init, 0, sol.evaluate);
            EvolutionConfig cfg;
            cfg.boundary_mode = evo_boundary == "oracle" ? BoundaryMode::oracle
                                                         : BoundaryMode::shrink;
            cfg.oracle = sol.evaluate;
            cfg.steps = evo_steps < 0 ? g.num_m() - 1 : evo_steps;
            const Field out = evolve(g, init, cfg);
            std::ofstream file;
            std::ostream& os = open_sink(file, evo_out);
            write_field_table(os, out);
            os << "max_residual=" << fmt17(max_residual(g, out)) << '\n';
        } else if (*chis) {
            apply_config(chis, chi_cfg);
            const Grid g = make_grid(chi_o);
            const Field f = read_field_table(chi_field);
            const ChiReport r = chi(g, f, solution_by_name(chi_solution));
            std::cout << "chi=" << fmt17(r.chi) << " sites=" << r.num_sites
                      << " excluded=" << r.excluded_sites << '\n';
        } else if (*t2) {
            apply_config(t2, t2_cfg);
            const Treatment treatment = treatment_from_name(t2_boundary);
            const Table2Result res = run_table2(t2_x0, t2_y0, treatment, t2_out);
            std::cout << res.summary;
            if (t2_sweep) {
                const SweepResult sw = sweep_origins(default_sweep_origins(), treatment);
                std::cout << '\n' << sw.log;
                if (!t2_out.empty()) {
                    std::ofstream log(t2_out + "/sweep.txt");
                    log << sw.log;
                }
            }
        } else if (*fl) {
            apply_config(fl, fl_cfg);
            if (!fl_commutator.empty()) {
                const Point3 p = fl_point.size() == 3
                                     ? Point3{fl_point[0], fl_point[1], fl_point[2]}
                                     : Point3{0.7, 1.3, 0.4};
                const CommutatorTest t =
                    commutator_flow_test(generator_from_name(fl_generator),
                                         generator_from_name(fl_commutator), p,
                                         fl_delta);
                std::cout << "displacement=" << fmt17(t.displacement.x) << ' '
                          << fmt17(t.displacement.y) << ' ' << fmt17(t.displacement.u)
                          << '\n';
                const double d2 = fl_delta * fl_delta;
                std::cout << "displacement/delta^2=" << fmt17(t.displacement.x / d2)
                          << ' ' << fmt17(t.displacement.y / d2) << ' '
                          << fmt17(t.displacement.u / d2) << '\n';
                std::cout << "bracket=" << fmt17(t.expected.x / d2) << ' '
                          << fmt17(t.expected.y / d2) << ' ' << fmt17(t.expected.u / d2)
                          << '\n';
                std::cout << "max_abs_error=" << fmt17(t.max_abs_error) << '\n';
            } else {
                const Grid g = make_grid(fl_o);
                const Field f =
                    sample_field(g, solution_by_name(fl_solution).evaluate);
                const SchemeData s =
                    SchemeData::from_grid(g, f, fl_site[0], fl_site[1]);
                const double change = flow_invariance_test(
                    s, {generator_from_name(fl_generator), fl_eps});
                std::cout << "max_invariant_change=" << fmt17(change) << '\n';
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
