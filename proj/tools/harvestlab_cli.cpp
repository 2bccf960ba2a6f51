// Command-line front end: single-point evaluation, parameter sweeps,
// optimal-gap searches and curves, figure presets, and oracle certification.
// Inputs are the dimensionless ratios the formulas run on (omega_a*sigma,
// delta_omega/omega_a, L/sigma, dz/sigma); all outputs are per lambda^2
// except the measures, which honor --lambda.
//
// Exit codes: 0 success, 1 parameter error, 2 numerical failure,
// 3 certification failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "harvestlab/io.hpp"
#include "harvestlab/measures.hpp"
#include "harvestlab/optimize.hpp"
#include "harvestlab/pv_oracle.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace harvestlab;

namespace {

struct ParamFlags {
    std::string alignment = "parallel";
    double omega_a = 0.1;
    std::optional<double> delta_omega_ratio;
    std::optional<double> delta_omega_abs;
    double separation = 0.5;
    double dz = 1.0;
    double lambda = 1.0;
};

struct QuadFlags {
    std::optional<double> rel_tol, abs_tol, pv_window;
    std::optional<int> max_subdivisions;
};

void add_param_flags(CLI::App* cmd, ParamFlags& p, bool with_lambda = true)
{
    cmd->add_option("--alignment", p.alignment, "parallel | vertical | boundaryless")
        ->check(CLI::IsMember({"parallel", "vertical", "boundaryless"}));
    cmd->add_option("--omega-a", p.omega_a, "energy gap Omega_A * sigma");
    cmd->add_option("--delta-omega-ratio", p.delta_omega_ratio,
                    "gap difference as a ratio of omega-a");
    cmd->add_option("--delta-omega", p.delta_omega_abs,
                    "gap difference in units of 1/sigma");
    cmd->add_option("--l", p.separation, "interdetector separation L / sigma");
    cmd->add_option("--dz", p.dz, "detector-to-boundary distance dz / sigma");
    if (with_lambda)
        cmd->add_option("--lambda", p.lambda,
                        "coupling applied to the correlation measures");
}

void add_quad_flags(CLI::App* cmd, QuadFlags& q)
{
    cmd->add_option("--quad-rel-tol", q.rel_tol, "oracle integrator relative tolerance");
    cmd->add_option("--quad-abs-tol", q.abs_tol, "oracle integrator absolute tolerance");
    cmd->add_option("--pv-window", q.pv_window, "principal-value pole window half-width");
    cmd->add_option("--max-subdivisions", q.max_subdivisions,
                    "adaptive subdivision budget");
}

QuadratureSpec resolve_quad(const QuadFlags& q)
{
    QuadratureSpec spec;
    if (q.rel_tol) spec.rel_tol = *q.rel_tol;
    if (q.abs_tol) spec.abs_tol = *q.abs_tol;
    if (q.pv_window) spec.pv_window = *q.pv_window;
    if (q.max_subdivisions) spec.max_subdivisions = *q.max_subdivisions;
    spec.validate();
    return spec;
}

Alignment parse_alignment(const std::string& s)
{
    if (s == "parallel") return Alignment::Parallel;
    if (s == "vertical") return Alignment::Vertical;
    if (s == "boundaryless") return Alignment::Boundaryless;
    throw std::invalid_argument("unknown alignment '" + s + "'");
}

double resolve_delta_omega(const ParamFlags& p)
{
    if (p.delta_omega_ratio && p.delta_omega_abs)
        throw std::invalid_argument(
            "--delta-omega-ratio and --delta-omega are mutually exclusive");
    if (p.delta_omega_abs)
        return *p.delta_omega_abs;
    if (p.delta_omega_ratio)
        return *p.delta_omega_ratio * p.omega_a;
    return 0.0;
}

Quantity parse_quantity(const std::string& s)
{
    if (s == "concurrence") return Quantity::Concurrence;
    if (s == "mutual-info" || s == "mutual_info") return Quantity::MutualInfo;
    if (s == "p-a" || s == "p_a") return Quantity::PA;
    if (s == "p-b" || s == "p_b") return Quantity::PB;
    if (s == "abs-c" || s == "abs_c") return Quantity::AbsC;
    if (s == "abs-x" || s == "abs_x") return Quantity::AbsX;
    throw std::invalid_argument("unknown quantity '" + s + "'");
}

const char* alignment_name(Alignment a)
{
    switch (a) {
    case Alignment::Parallel: return "parallel";
    case Alignment::Vertical: return "vertical";
    case Alignment::Boundaryless: return "boundaryless";
    }
    return "?";
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    os << text;
}

json param_echo(const ParamFlags& p, double d_omega)
{
    return json{{"alignment", p.alignment},
                {"omega_a", p.omega_a},
                {"delta_omega", d_omega},
                {"separation", p.separation},
                {"dz", p.dz},
                {"lambda", p.lambda}};
}

// sanitize strings for a comma-separated error column
std::string csv_safe(std::string s)
{
    for (char& c : s)
        if (c == ',' || c == '\n')
            c = ';';
    return s;
}

// Flat key=value run file mirroring the flags; explicit flags win.  The
// file is folded into the argument list before parsing: keys already given
// on the command line are skipped.
std::vector<std::string> apply_config_file(std::vector<std::string> args)
{
    std::string path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + i);
        } else {
            ++i;
        }
    }
    if (path.empty())
        return args;
    std::ifstream is(path);
    if (!is)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            continue;
        std::string flag = "--" + key;
        bool given = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0)
                given = true;
        if (!given) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

int cmd_point(const ParamFlags& p, const std::string& format,
              const std::string& out_path)
{
    double d_omega = resolve_delta_omega(p);
    DetectorPair pair{p.omega_a, p.omega_a + d_omega, p.lambda, 1.0};
    Geometry geom{parse_alignment(p.alignment), p.separation, p.dz};
    TwoDetectorState st = evaluate(pair, geom);
    CorrelationReport rep = rescale_report(make_report(st), p.lambda);

    if (format == "csv") {
        std::ostringstream os;
        os << "# command=point\n";
        os << "# alignment=" << p.alignment << " omega_a=" << format_double(p.omega_a)
           << " delta_omega=" << format_double(d_omega)
           << " l=" << format_double(p.separation) << " dz=" << format_double(p.dz)
           << " lambda=" << format_double(p.lambda) << "\n";
        os << "p_a,p_b,abs_c,abs_x,concurrence,mutual_info,perturbative_ok\n";
        os << format_double(st.p_a) << ',' << format_double(st.p_b) << ','
           << format_double(std::abs(st.c)) << ',' << format_double(std::abs(st.x))
           << ',' << format_double(rep.concurrence) << ','
           << format_double(rep.mutual_info) << ','
           << (rep.perturbative_ok ? 1 : 0) << "\n";
        emit(os.str(), out_path);
        return 0;
    }

    json j;
    j["command"] = "point";
    j["params"] = param_echo(p, d_omega);
    j["p_a"] = st.p_a;
    j["p_b"] = st.p_b;
    j["abs_c"] = std::abs(st.c);
    j["abs_x"] = std::abs(st.x);
    j["concurrence"] = rep.concurrence;
    j["mutual_info"] = rep.mutual_info;
    j["l_plus"] = rep.l_plus;
    j["l_minus"] = rep.l_minus;
    j["perturbative_ok"] = rep.perturbative_ok;
    emit(j.dump(2) + "\n", out_path);
    return 0;
}

int cmd_sweep(const ParamFlags& p, const std::string& variable, double from,
              double to, int points, const std::string& spacing,
              const std::string& quantities_csv, const std::string& out_path)
{
    SweepSpec spec;
    if (variable == "l") spec.variable = SweepVariable::Separation;
    else if (variable == "dz") spec.variable = SweepVariable::Dz;
    else if (variable == "delta-omega") spec.variable = SweepVariable::DeltaOmega;
    else if (variable == "omega-a") spec.variable = SweepVariable::OmegaA;
    else throw std::invalid_argument("unknown sweep variable '" + variable + "'");
    spec.lo = from;
    spec.hi = to;
    spec.n_points = points;
    spec.spacing = spacing == "log" ? GridSpacing::Log : GridSpacing::Linear;
    double d_omega = resolve_delta_omega(p);
    spec.fixed_pair = {p.omega_a, p.omega_a + d_omega, p.lambda, 1.0};
    spec.fixed_geometry = {parse_alignment(p.alignment), p.separation, p.dz};

    spec.quantities.clear();
    std::stringstream ss(quantities_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        spec.quantities.push_back(parse_quantity(item));

    auto rows = sweep(spec);

    std::ostringstream os;
    os << "# command=sweep\n";
    os << "# variable=" << variable << " from=" << format_double(from)
       << " to=" << format_double(to) << " points=" << points
       << " spacing=" << spacing << "\n";
    os << "# alignment=" << p.alignment << " omega_a=" << format_double(p.omega_a)
       << " delta_omega=" << format_double(d_omega)
       << " l=" << format_double(p.separation) << " dz=" << format_double(p.dz)
       << "\n";
    os << variable;
    for (Quantity q : spec.quantities)
        os << ',' << quantity_name(q);
    os << ",error\n";
    for (const auto& row : rows) {
        os << format_double(row.x);
        for (double v : row.values)
            os << ',' << format_double(v);
        os << ',' << (row.error ? csv_safe(*row.error) : "") << "\n";
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_optimize_gap(const ParamFlags& p, const std::string& quantity,
                     double bound, const std::string& out_path)
{
    Geometry geom{parse_alignment(p.alignment), p.separation, p.dz};
    OptimizeResult r = optimal_gap(p.omega_a, geom, parse_quantity(quantity), bound);

    json j;
    j["command"] = "optimize-gap";
    j["params"] = {{"alignment", p.alignment},
                   {"omega_a", p.omega_a},
                   {"separation", p.separation},
                   {"dz", p.dz},
                   {"quantity", quantity},
                   {"bound", bound}};
    j["delta_omega_star"] = r.delta_omega_star;
    j["delta_omega_star_over_omega_a"] =
        p.omega_a > 0.0 ? r.delta_omega_star / p.omega_a : 0.0;
    j["value_at_star"] = r.value_at_star;
    j["at_lower_bound"] = r.at_lower_bound;
    j["flat_objective"] = r.flat_objective;
    j["bracket"] = {r.bracket_lo, r.bracket_hi};
    emit(j.dump(2) + "\n", out_path);
    return 0;
}

int cmd_gap_curve(const ParamFlags& p, const std::string& quantity,
                  double dz_from, double dz_to, int dz_points,
                  const std::string& out_path)
{
    if (dz_points < 2 || !(dz_from < dz_to))
        throw std::invalid_argument("gap-curve: need dz-from < dz-to and >= 2 points");
    std::vector<double> grid(dz_points);
    for (int i = 0; i < dz_points; ++i)
        grid[i] = dz_from + (dz_to - dz_from) * double(i) / (dz_points - 1);
    auto rows = optimal_gap_curve(p.omega_a, p.separation, grid,
                                  parse_alignment(p.alignment),
                                  parse_quantity(quantity));

    std::ostringstream os;
    os << "# command=gap-curve\n";
    os << "# alignment=" << p.alignment << " omega_a=" << format_double(p.omega_a)
       << " l=" << format_double(p.separation) << " quantity=" << quantity << "\n";
    os << "dz,delta_omega_star,value_at_star,at_lower_bound,flat_objective,error\n";
    for (const auto& row : rows) {
        os << format_double(row.dz) << ','
           << format_double(row.result.delta_omega_star) << ','
           << format_double(row.result.value_at_star) << ','
           << (row.result.at_lower_bound ? 1 : 0) << ','
           << (row.result.flat_objective ? 1 : 0) << ','
           << (row.error ? csv_safe(*row.error) : "") << "\n";
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_reproduce(const std::string& figure_id, const std::string& out_path)
{
    Table t = make_figure(figure_id);
    std::ostringstream os;
    write_csv(t, os);
    emit(os.str(), out_path);
    return 0;
}

int cmd_validate(double rel_tol, const QuadratureSpec& quad,
                 const std::string& grid_file, const std::string& out_path)
{
    std::vector<CertificationPoint> grid;
    if (grid_file.empty()) {
        grid = default_certification_grid();
    } else {
        std::ifstream is(grid_file);
        if (!is)
            throw std::invalid_argument("cannot open grid file '" + grid_file + "'");
        json spec = json::parse(is);
        if (!spec.is_array())
            throw std::invalid_argument("grid file must hold a JSON array");
        for (const auto& row : spec)
            grid.push_back({row.at("omega_a").get<double>(),
                            row.at("delta_omega").get<double>(),
                            row.at("separation").get<double>(),
                            row.at("dz").get<double>(),
                            parse_alignment(row.at("alignment").get<std::string>())});
        if (grid.empty())
            throw std::invalid_argument("empty grid");
    }

    auto rows = run_certification(grid, quad, rel_tol, 0);

    int failures = 0;
    std::size_t worst_idx = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].pass)
            ++failures;
        if (rows[i].worst > rows[worst_idx].worst)
            worst_idx = i;
    }

    auto row_json = [](const CertificationRow& r) {
        return json{{"omega_a", r.point.omega_a},
                    {"delta_omega", r.point.delta_omega},
                    {"separation", r.point.separation},
                    {"dz", r.point.dz},
                    {"alignment", alignment_name(r.point.alignment)},
                    {"err_p_a", r.err_p_a},
                    {"err_p_b", r.err_p_b},
                    {"err_c", r.err_c},
                    {"err_x", r.err_x},
                    {"worst", r.worst},
                    {"pass", r.pass}};
    };

    json j;
    j["command"] = "validate";
    j["rel_tol"] = rel_tol;
    j["points"] = rows.size();
    j["failures"] = failures;
    j["pass"] = failures == 0;
    j["worst"] = row_json(rows[worst_idx]);
    json jrows = json::array();
    for (const auto& r : rows)
        jrows.push_back(row_json(r));
    j["rows"] = std::move(jrows);
    emit(j.dump(2) + "\n", out_path);
    return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Vacuum correlation harvesting near a reflecting boundary"};
    app.require_subcommand(1);

    ParamFlags point_p, sweep_p, opt_p, curve_p;
    QuadFlags quad_f;
    std::string out_point, out_sweep, out_opt, out_curve, out_repr, out_val;
    std::string format = "json";

    CLI::App* point = app.add_subcommand("point", "evaluate one parameter set");
    add_param_flags(point, point_p);
    point->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    point->add_option("--output", out_point, "write to file instead of stdout");

    CLI::App* sw = app.add_subcommand("sweep", "grid scan over one variable");
    add_param_flags(sw, sweep_p);
    std::string sw_var = "dz", sw_spacing = "linear";
    std::string sw_quant = "concurrence,mutual_info";
    double sw_from = 0.1, sw_to = 3.0;
    int sw_points = 64;
    sw->add_option("--variable", sw_var, "l | dz | delta-omega | omega-a");
    sw->add_option("--from", sw_from, "grid start");
    sw->add_option("--to", sw_to, "grid end");
    sw->add_option("--points", sw_points, "grid size");
    sw->add_option("--spacing", sw_spacing, "linear | log")
        ->check(CLI::IsMember({"linear", "log"}));
    sw->add_option("--quantities", sw_quant, "comma list of output quantities");
    sw->add_option("--output", out_sweep, "write to file instead of stdout");

    CLI::App* opt = app.add_subcommand("optimize-gap",
                                       "locate the optimal gap difference");
    add_param_flags(opt, opt_p, false);
    std::string opt_quant = "concurrence";
    double opt_bound = 20.0;
    opt->add_option("--quantity", opt_quant, "concurrence | mutual-info");
    opt->add_option("--bound", opt_bound, "upper end of the search interval");
    opt->add_option("--output", out_opt, "write to file instead of stdout");

    CLI::App* curve = app.add_subcommand("gap-curve",
                                         "optimal gap difference along a dz grid");
    add_param_flags(curve, curve_p, false);
    std::string curve_quant = "concurrence";
    double dz_from = 0.25, dz_to = 3.0;
    int dz_points = 32;
    curve->add_option("--quantity", curve_quant, "concurrence | mutual-info");
    curve->add_option("--dz-from", dz_from, "dz grid start");
    curve->add_option("--dz-to", dz_to, "dz grid end");
    curve->add_option("--dz-points", dz_points, "dz grid size");
    curve->add_option("--output", out_curve, "write to file instead of stdout");

    CLI::App* repr = app.add_subcommand("reproduce", "emit a preset figure table");
    std::string figure_id;
    repr->add_option("figure", figure_id, "figure id, e.g. fig3a")->required();
    repr->add_option("--output", out_repr, "write to file instead of stdout");

    CLI::App* val = app.add_subcommand("validate",
                                       "certify closed forms against the oracle");
    double val_tol = 1e-6;
    std::string grid_file;
    val->add_option("--rel-tol", val_tol, "pass threshold on relative error");
    val->add_option("--grid-file", grid_file, "JSON array of grid points");
    val->add_option("--output", out_val, "write report to file instead of stdout");
    add_quad_flags(val, quad_f);

    std::string config_help;
    for (CLI::App* sub : {point, sw, opt, curve, repr, val})
        sub->add_option("--config", config_help,
                        "flat key=value run file mirroring the flags")
            ->configurable(false);

    try {
        std::vector<std::string> args =
            apply_config_file({argv + 1, argv + argc});
        // CLI11 consumes the vector overload back to front
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }

    try {
        if (point->parsed())
            return cmd_point(point_p, format, out_point);
        if (sw->parsed())
            return cmd_sweep(sweep_p, sw_var, sw_from, sw_to, sw_points, sw_spacing,
                             sw_quant, out_sweep);
        if (opt->parsed())
            return cmd_optimize_gap(opt_p, opt_quant, opt_bound, out_opt);
        if (curve->parsed())
            return cmd_gap_curve(curve_p, curve_quant, dz_from, dz_to, dz_points,
                                 out_curve);
        if (repr->parsed())
            return cmd_reproduce(figure_id, out_repr);
        if (val->parsed())
            return cmd_validate(val_tol, resolve_quad(quad_f), grid_file, out_val);
    } catch (const numerical_error& e) {
        std::cerr << json{{"error", e.what()},
                          {"achieved_error", e.achieved_error()}}
                         .dump()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 1;
}
